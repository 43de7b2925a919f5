#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramcalc/grammar.hpp"
#include "gramcalc/polynomial.hpp"

namespace gramcalc {

// Expansion of a symmetric, xy-divisible, homogeneous p(x, y) of degree n+1
// in the basis (xy)^k (x+y)^{n+1-2k}, 1 <= k <= floor((n+1)/2).
struct GammaExpansion {
    int n = 0;
    std::map<int, BigInt> coefficients;  // k -> gamma_k, zeros omitted
    bool positive = false;               // every stored coefficient > 0

    friend bool operator==(const GammaExpansion&, const GammaExpansion&) = default;
};

// Expansion of a symmetric homogeneous p(x, y, z) of odd degree 2n+1 in
// monomials u^i v^j w^k of the elementary symmetric polynomials
// u = x+y+z, v = xy+xz+yz, w = xyz; the support satisfies i+2j+3k = 2n+1.
struct EExpansion {
    int n = 0;
    std::map<std::array<int, 3>, BigInt> coefficients;  // (i,j,k) -> coeff
    bool positive = false;

    friend bool operator==(const EExpansion&, const EExpansion&) = default;
};

namespace symexp_detail {

inline void require_variables_within(const Polynomial& p, const std::vector<std::string>& allowed,
                                     const char* what) {
    for (const auto& v : p.variables())
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
            throw std::domain_error(std::string(what) + ": unexpected variable '" + v + "'");
}

}  // namespace symexp_detail

// Peels gamma coefficients off the leading term: the basis element
// (xy)^k (x+y)^{n+1-2k} has lex-leading term x^{n+1-k} y^k, so the leading
// term of the remainder pins down k and gamma_k at each step.  A leading
// term that fits no basis element means the preconditions were violated.
inline GammaExpansion gamma_expand(const Polynomial& p) {
    static const std::vector<std::string> xy = {"x", "y"};
    if (p.is_zero()) throw std::domain_error("gamma_expand: zero polynomial");
    symexp_detail::require_variables_within(p, xy, "gamma_expand");
    if (!p.is_symmetric(xy))
        throw std::domain_error("gamma_expand: polynomial is not symmetric in x, y");
    auto deg = p.homogeneous_degree();
    if (!deg) throw std::domain_error("gamma_expand: polynomial is not homogeneous");
    const int n = *deg - 1;
    if (n < 1) throw std::domain_error("gamma_expand: degree must be at least 2");
    for (const auto& [m, c] : p.terms())
        if (m.exponent("x") < 1 || m.exponent("y") < 1)
            throw std::domain_error("gamma_expand: polynomial is not divisible by x*y");

    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    const Polynomial xy_prod = x * y;
    const Polynomial x_plus_y = x + y;

    GammaExpansion out;
    out.n = n;
    Polynomial r = p;
    while (!r.is_zero()) {
        auto [m, c] = r.leading_term(xy);
        const int a = m.exponent("x");
        const int k = m.exponent("y");
        if (k < 1 || a < k || a + k != n + 1)
            throw std::domain_error("gamma_expand: nonzero remainder off the basis support");
        out.coefficients[k] = c;
        r -= Polynomial::constant(c) * xy_prod.pow(k) * x_plus_y.pow(n + 1 - 2 * k);
    }
    out.positive = true;
    for (const auto& [k, c] : out.coefficients)
        if (c <= 0) out.positive = false;
    return out;
}

// Reads the same table off the transformed grammar u -> uv, v -> 2u:
// gamma_{n,k} is the coefficient of u^k v^{n+1-2k} in D^{n-1}(u).
inline GammaExpansion gamma_table_via_grammar(int n) {
    if (n < 1) throw std::domain_error("gamma_table_via_grammar: n must be >= 1");
    Polynomial q = gamma_eulerian_grammar().iterate(Polynomial::variable("u"), n - 1);
    GammaExpansion out;
    out.n = n;
    for (const auto& [m, c] : q.terms()) {
        const int k = m.exponent("u");
        const int j = m.exponent("v");
        if (k < 1 || j != n + 1 - 2 * k)
            throw std::logic_error("gamma_table_via_grammar: exponent off the basis support");
        out.coefficients[k] = c;
    }
    out.positive = true;
    for (const auto& [k, c] : out.coefficients)
        if (c <= 0) out.positive = false;
    return out;
}

inline Polynomial gamma_reconstruct(const GammaExpansion& t) {
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    const Polynomial xy_prod = x * y;
    const Polynomial x_plus_y = x + y;
    Polynomial out;
    for (const auto& [k, c] : t.coefficients) {
        if (k < 1 || t.n + 1 - 2 * k < 0)
            throw std::domain_error("gamma_reconstruct: index outside the basis support");
        out += Polynomial::constant(c) * xy_prod.pow(k) * x_plus_y.pow(t.n + 1 - 2 * k);
    }
    return out.with_variable_order({"x", "y"});
}

// Classical reduction into elementary symmetric polynomials: the leading
// term x^a y^b z^c of a symmetric polynomial has a >= b >= c, and matches
// the leading term of u^{a-b} v^{b-c} w^c exactly.
inline EExpansion e_expand(const Polynomial& p) {
    static const std::vector<std::string> xyz = {"x", "y", "z"};
    if (p.is_zero()) throw std::domain_error("e_expand: zero polynomial");
    symexp_detail::require_variables_within(p, xyz, "e_expand");
    if (!p.is_symmetric(xyz))
        throw std::domain_error("e_expand: polynomial is not symmetric in x, y, z");
    auto deg = p.homogeneous_degree();
    if (!deg) throw std::domain_error("e_expand: polynomial is not homogeneous");
    if (*deg < 3 || *deg % 2 == 0)
        throw std::domain_error("e_expand: expected odd homogeneous degree 2n+1 with n >= 1");
    const int n = (*deg - 1) / 2;

    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    const Polynomial z = Polynomial::variable("z");
    const Polynomial e1 = x + y + z;
    const Polynomial e2 = x * y + x * z + y * z;
    const Polynomial e3 = x * y * z;

    EExpansion out;
    out.n = n;
    Polynomial r = p;
    while (!r.is_zero()) {
        auto [m, c] = r.leading_term(xyz);
        const int a = m.exponent("x");
        const int b = m.exponent("y");
        const int e = m.exponent("z");
        if (!(a >= b && b >= e && e >= 0))
            throw std::domain_error("e_expand: nonzero remainder off the basis support");
        const std::array<int, 3> idx = {a - b, b - e, e};
        out.coefficients[idx] += c;
        r -= Polynomial::constant(c) * e1.pow(idx[0]) * e2.pow(idx[1]) * e3.pow(idx[2]);
    }
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
        it = (it->second == 0) ? out.coefficients.erase(it) : std::next(it);
    out.positive = true;
    for (const auto& [idx, c] : out.coefficients)
        if (c <= 0) out.positive = false;
    return out;
}

// Reads the table off the transformed grammar u -> 3w, v -> 2uw, w -> vw:
// the coefficient of u^i v^j w^k in D^{n-1}(w).
inline EExpansion e_table_via_grammar(int n) {
    if (n < 1) throw std::domain_error("e_table_via_grammar: n must be >= 1");
    Polynomial q = e_trivariate_grammar().iterate(Polynomial::variable("w"), n - 1);
    EExpansion out;
    out.n = n;
    for (const auto& [m, c] : q.terms()) {
        const std::array<int, 3> idx = {m.exponent("u"), m.exponent("v"), m.exponent("w")};
        if (idx[0] + 2 * idx[1] + 3 * idx[2] != 2 * n + 1)
            throw std::logic_error("e_table_via_grammar: exponent off the basis support");
        out.coefficients[idx] = c;
    }
    out.positive = true;
    for (const auto& [idx, c] : out.coefficients)
        if (c <= 0) out.positive = false;
    return out;
}

// Bottom-up table: starting from the single entry (0,0,1) at n = 1, each
// step pulls from the previous row with
//   gamma_{n,i,j,k} = 3(i+1) gamma_{n-1,i+1,j,k-1}
//                   + 2(j+1) gamma_{n-1,i-1,j+1,k-1}
//                   +  k     gamma_{n-1,i,j-1,k}.
inline EExpansion e_table_via_recurrence(int n) {
    if (n < 1) throw std::domain_error("e_table_via_recurrence: n must be >= 1");
    std::map<std::array<int, 3>, BigInt> row = {{{0, 0, 1}, 1}};
    auto get = [](const std::map<std::array<int, 3>, BigInt>& r, int i, int j, int k) -> BigInt {
        if (i < 0 || j < 0 || k < 0) return 0;
        auto it = r.find({i, j, k});
        return it == r.end() ? BigInt(0) : it->second;
    };
    for (int m = 2; m <= n; ++m) {
        std::map<std::array<int, 3>, BigInt> next;
        for (int k = 0; 3 * k <= 2 * m + 1; ++k) {
            for (int j = 0; 3 * k + 2 * j <= 2 * m + 1; ++j) {
                const int i = 2 * m + 1 - 3 * k - 2 * j;
                BigInt value = 3 * BigInt(i + 1) * get(row, i + 1, j, k - 1) +
                               2 * BigInt(j + 1) * get(row, i - 1, j + 1, k - 1) +
                               BigInt(k) * get(row, i, j - 1, k);
                if (value != 0) next[{i, j, k}] = std::move(value);
            }
        }
        row = std::move(next);
    }
    EExpansion out;
    out.n = n;
    out.coefficients = std::move(row);
    out.positive = true;
    for (const auto& [idx, c] : out.coefficients)
        if (c <= 0) out.positive = false;
    return out;
}

inline Polynomial e_reconstruct(const EExpansion& t) {
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    const Polynomial z = Polynomial::variable("z");
    const Polynomial e1 = x + y + z;
    const Polynomial e2 = x * y + x * z + y * z;
    const Polynomial e3 = x * y * z;
    Polynomial out;
    for (const auto& [idx, c] : t.coefficients) {
        if (idx[0] < 0 || idx[1] < 0 || idx[2] < 0)
            throw std::domain_error("e_reconstruct: negative index");
        out += Polynomial::constant(c) * e1.pow(idx[0]) * e2.pow(idx[1]) * e3.pow(idx[2]);
    }
    return out.with_variable_order({"x", "y", "z"});
}

}  // namespace gramcalc
