#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gramcalc/bigint.hpp"

namespace gramcalc {

// A power product over named variables.  Exponents are signed (Laurent);
// entries are kept sorted by variable name with zero exponents dropped, so
// representation equality is value equality.  The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::string name, int exponent = 1) {
        Monomial m;
        if (exponent != 0) m.exps_.emplace_back(std::move(name), exponent);
        return m;
    }

    // Builds from (name, exponent) pairs; duplicates accumulate additively.
    static Monomial from_exponents(const std::vector<std::pair<std::string, int>>& exps) {
        std::map<std::string, int> acc;
        for (const auto& [name, e] : exps) acc[name] += e;
        Monomial m;
        for (auto& [name, e] : acc)
            if (e != 0) m.exps_.emplace_back(name, e);
        return m;
    }

    bool is_unit() const { return exps_.empty(); }

    int exponent(std::string_view var) const {
        for (const auto& [name, e] : exps_)
            if (name == var) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [name, e] : exps_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& rhs) const {
        Monomial out;
        auto a = exps_.begin();
        auto b = rhs.exps_.begin();
        while (a != exps_.end() || b != rhs.exps_.end()) {
            if (b == rhs.exps_.end() || (a != exps_.end() && a->first < b->first)) {
                out.exps_.push_back(*a++);
            } else if (a == exps_.end() || b->first < a->first) {
                out.exps_.push_back(*b++);
            } else {
                int e = a->second + b->second;
                if (e != 0) out.exps_.emplace_back(a->first, e);
                ++a;
                ++b;
            }
        }
        return out;
    }

    // Componentwise exponent scaling: (x^a y^b)^k = x^{ak} y^{bk}.
    Monomial pow(int k) const {
        Monomial m;
        if (k == 0) return m;
        m.exps_ = exps_;
        for (auto& [name, e] : m.exps_) e *= k;
        if (k < 0) std::sort(m.exps_.begin(), m.exps_.end());
        return m;
    }

    // Applies a variable renaming; unmapped names pass through, and images
    // that collide accumulate exponents.
    Monomial rename(const std::map<std::string, std::string>& names) const {
        std::vector<std::pair<std::string, int>> out;
        out.reserve(exps_.size());
        for (const auto& [name, e] : exps_) {
            auto it = names.find(name);
            out.emplace_back(it == names.end() ? name : it->second, e);
        }
        return from_exponents(out);
    }

    const std::vector<std::pair<std::string, int>>& exponents() const { return exps_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<std::string, int>> exps_;
};

// Three-way lexicographic comparison of exponent vectors, reading variables
// in the given significance order (earlier entries are more significant).
// Variables of either monomial that are missing from `vars` are compared
// last, in name order, so the comparison is total.
inline std::strong_ordering lex_exponent_compare(const Monomial& a, const Monomial& b,
                                                 const std::vector<std::string>& vars) {
    for (const auto& v : vars) {
        int ea = a.exponent(v);
        int eb = b.exponent(v);
        if (ea != eb) return ea <=> eb;
    }
    std::vector<std::string> rest;
    for (const auto* m : {&a, &b})
        for (const auto& [name, e] : m->exponents())
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) rest.push_back(name);
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    for (const auto& v : rest) {
        int ea = a.exponent(v);
        int eb = b.exponent(v);
        if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
}

// Left list first, then unseen entries of the right list in their order.
inline std::vector<std::string> merge_variable_orders(const std::vector<std::string>& a,
                                                      const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

// Sparse multivariate Laurent polynomial with exact BigInt coefficients.
// Invariant: no stored zero coefficients.  Each value also carries a declared
// variable order, used only for printing; equality ignores it.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(BigInt value) {
        Polynomial p;
        if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
        return p;
    }

    static Polynomial variable(std::string name) {
        Polynomial p;
        p.var_order_.push_back(name);
        p.terms_.emplace(Monomial::variable(std::move(name)), 1);
        return p;
    }

    static Polynomial term(Monomial m, BigInt coeff) {
        Polynomial p;
        if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
        return p;
    }

    static Polynomial from_terms(std::map<Monomial, BigInt> terms,
                                 std::vector<std::string> variable_order = {}) {
        Polynomial p;
        p.terms_ = std::move(terms);
        p.var_order_ = std::move(variable_order);
        p.prune();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }

    BigInt coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const std::vector<std::string>& declared_variable_order() const { return var_order_; }

    Polynomial with_variable_order(std::vector<std::string> order) const {
        Polynomial p = *this;
        p.var_order_.clear();
        for (auto& v : order)
            if (std::find(p.var_order_.begin(), p.var_order_.end(), v) == p.var_order_.end())
                p.var_order_.push_back(std::move(v));
        return p;
    }

    // Variable names occurring in some term, sorted by name.
    std::vector<std::string> variables() const {
        std::vector<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [name, e] : m.exponents()) out.push_back(name);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Declared order first, then any remaining term variables alphabetically.
    std::vector<std::string> print_variable_order() const {
        return merge_variable_orders(var_order_, variables());
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        for (const auto& [m, c] : rhs.terms_) {
            auto [it, inserted] = terms_.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        var_order_ = merge_variable_orders(var_order_, rhs.var_order_);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        for (const auto& [m, c] : rhs.terms_) {
            auto [it, inserted] = terms_.emplace(m, -c);
            if (!inserted) {
                it->second -= c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        var_order_ = merge_variable_orders(var_order_, rhs.var_order_);
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        std::map<Monomial, BigInt> out;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : rhs.terms_) {
                BigInt c = ca * cb;
                auto [it, inserted] = out.emplace(ma * mb, std::move(c));
                if (!inserted) {
                    it->second += ca * cb;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
        terms_ = std::move(out);
        var_order_ = merge_variable_orders(var_order_, rhs.var_order_);
        return *this;
    }

    Polynomial& operator*=(const BigInt& k) {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= k;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const BigInt& k) { return lhs *= k; }
    friend Polynomial operator*(const BigInt& k, Polynomial rhs) { return rhs *= k; }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& [m, c] : p.terms_) c = -c;
        return p;
    }

    bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

    // p^e.  Negative exponents require a single-term base whose coefficient
    // is +1 or -1 (the only units of the integer Laurent ring); p^0 = 1.
    Polynomial pow(int exponent) const {
        if (exponent == 0) return constant(1).with_variable_order(var_order_);
        if (exponent < 0) {
            if (terms_.size() != 1)
                throw std::domain_error("negative power of non-monomial base");
            const auto& [m, c] = *terms_.begin();
            if (c != 1 && c != -1)
                throw std::domain_error("negative power of monomial with non-unit coefficient");
            BigInt coeff = (c < 0 && exponent % 2 != 0) ? -1 : 1;
            return term(m.pow(exponent), coeff).with_variable_order(var_order_);
        }
        Polynomial out = constant(1);
        Polynomial base = *this;
        int e = exponent;
        while (e > 0) {
            if (e & 1) out *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return out.with_variable_order(var_order_);
    }

    // Formal partial derivative; x^{-k} differentiates to -k x^{-k-1}.
    Polynomial derivative(std::string_view var) const {
        Polynomial out;
        out.var_order_ = var_order_;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(var);
            if (e == 0) continue;
            Monomial dm = m * Monomial::variable(std::string(var), -1);
            auto [it, inserted] = out.terms_.emplace(std::move(dm), c * e);
            if (!inserted) it->second += c * e;
        }
        out.prune();
        return out;
    }

    // Simultaneous substitution.  Unbound variables stay put.  A variable
    // that occurs with a negative exponent may only be bound to a single-term
    // polynomial with coefficient +-1, so the result stays in the ring.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const {
        if (bindings.empty()) return *this;
        for (const auto& [v, b] : bindings) {
            if (!has_negative_exponent(v)) continue;
            if (b.term_count() != 1) {
                throw std::domain_error("variable '" + v +
                                        "' occurs with a negative exponent and must be bound "
                                        "to a single-term monomial");
            }
            const BigInt& c = b.terms_.begin()->second;
            if (c != 1 && c != -1)
                throw std::domain_error("variable '" + v +
                                        "' occurs with a negative exponent and must be bound "
                                        "to a monomial with unit coefficient");
        }
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial prod = constant(c);
            for (const auto& [name, e] : m.exponents()) {
                auto it = bindings.find(name);
                if (it == bindings.end()) {
                    prod *= term(Monomial::variable(name, e), 1);
                } else {
                    prod *= it->second.pow(e);
                }
            }
            out += prod;
        }
        std::vector<std::string> order;
        for (const auto& v : print_variable_order()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                order = merge_variable_orders(order, {v});
            } else {
                order = merge_variable_orders(order, it->second.print_variable_order());
            }
        }
        return out.with_variable_order(std::move(order));
    }

    // Exact integer evaluation.  Negative exponents are handled by clearing
    // denominators: the value must come out integral, else this throws.
    BigInt evaluate(const std::map<std::string, BigInt>& point) const {
        std::map<std::string, int> shift;
        for (const auto& v : variables()) {
            auto it = point.find(v);
            if (it == point.end()) throw std::domain_error("unbound variable '" + v + "'");
            int lo = 0;
            for (const auto& [m, c] : terms_) lo = std::min(lo, m.exponent(v));
            if (lo < 0) {
                if (it->second == 0)
                    throw std::domain_error("zero raised to a negative power ('" + v + "')");
                shift[v] = -lo;
            }
        }
        BigInt numerator = 0;
        for (const auto& [m, c] : terms_) {
            BigInt val = c;
            for (const auto& v : variables()) {
                int e = m.exponent(v);
                auto s = shift.find(v);
                if (s != shift.end()) e += s->second;
                if (e != 0) val *= big_pow(point.at(v), e);
            }
            numerator += val;
        }
        BigInt denominator = 1;
        for (const auto& [v, s] : shift) denominator *= big_pow(point.at(v), s);
        if (numerator % denominator != 0)
            throw std::domain_error("evaluation does not yield an integer");
        return numerator / denominator;
    }

    bool has_negative_exponent(std::string_view var) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(var) < 0) return true;
        return false;
    }

    // Invariance under every transposition of adjacent listed variables,
    // which generates the full symmetric group on them.
    bool is_symmetric(const std::vector<std::string>& vars) const {
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
            std::map<std::string, std::string> swap_names{{vars[i], vars[i + 1]},
                                                          {vars[i + 1], vars[i]}};
            std::map<Monomial, BigInt> swapped;
            for (const auto& [m, c] : terms_) swapped[m.rename(swap_names)] += c;
            Polynomial q = from_terms(std::move(swapped));
            if (!(q == *this)) return false;
        }
        return true;
    }

    // Common total degree of all terms, or nullopt if terms differ in degree
    // or the polynomial is zero.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first.total_degree();
        for (const auto& [m, c] : terms_)
            if (m.total_degree() != d) return std::nullopt;
        return d;
    }

    // Largest term under descending lexicographic order on `vars`.
    std::pair<Monomial, BigInt> leading_term(const std::vector<std::string>& vars) const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
        std::vector<std::string> full = merge_variable_orders(vars, variables());
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (lex_exponent_compare(it->first, best->first, full) > 0) best = it;
        return *best;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    std::map<Monomial, BigInt> terms_;
    std::vector<std::string> var_order_;
};

}  // namespace gramcalc
