#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gramcalc/grammar.hpp"
#include "gramcalc/polynomial.hpp"

namespace gramcalc {

// Truncated exponential generating function: coeff(n) is the exact
// polynomial coefficient of t^n/n!, for 0 <= n <= order.  Working against
// the t^n/n! basis keeps every operation inside the integer Laurent ring;
// in particular multiplication is binomial convolution.
class EgfSeries {
public:
    explicit EgfSeries(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("EgfSeries: empty coefficient list");
    }

    static EgfSeries zero(int order) {
        if (order < 0) throw std::domain_error("EgfSeries: negative order");
        return EgfSeries(std::vector<Polynomial>(order + 1));
    }

    static EgfSeries unit(int order) {
        EgfSeries s = zero(order);
        s.coeffs_[0] = Polynomial::constant(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Polynomial& coeff(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("EgfSeries: coefficient index");
        return coeffs_[static_cast<std::size_t>(n)];
    }

    const std::vector<Polynomial>& coeffs() const { return coeffs_; }

    EgfSeries operator+(const EgfSeries& rhs) const {
        require_same_order(rhs);
        EgfSeries out = *this;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
        return out;
    }

    EgfSeries operator-(const EgfSeries& rhs) const {
        require_same_order(rhs);
        EgfSeries out = *this;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
        return out;
    }

    bool operator==(const EgfSeries& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    void require_same_order(const EgfSeries& rhs) const {
        if (coeffs_.size() != rhs.coeffs_.size())
            throw std::domain_error("EgfSeries: truncation order mismatch");
    }

    std::vector<Polynomial> coeffs_;
};

// Sum over D^n(f) t^n/n! up to the truncation order.
inline EgfSeries gen(const Grammar& g, const Polynomial& f, int order) {
    if (order < 0) throw std::domain_error("gen: negative order");
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    coeffs.push_back(f);
    for (int n = 1; n <= order; ++n) coeffs.push_back(g.derive(coeffs.back()));
    return EgfSeries(std::move(coeffs));
}

// (a * b)_n = sum_k binomial(n, k) a_k b_{n-k}; the Pascal triangle is small
// and rebuilt per call.
inline EgfSeries series_mul(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) throw std::domain_error("series_mul: order mismatch");
    const int N = a.order();
    std::vector<std::vector<BigInt>> binom(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        binom[n].assign(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    std::vector<Polynomial> out(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k)
            out[n] += binom[n][k] * (a.coeff(k) * b.coeff(n - k));
    return EgfSeries(std::move(out));
}

// e^{pt} truncated: the coefficient of t^n/n! is p^n.
inline EgfSeries exp_series(const Polynomial& p, int order) {
    if (order < 0) throw std::domain_error("exp_series: negative order");
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    coeffs.push_back(Polynomial::constant(1));
    for (int n = 1; n <= order; ++n) coeffs.push_back(coeffs.back() * p);
    return EgfSeries(std::move(coeffs));
}

inline EgfSeries scale(const EgfSeries& a, const Polynomial& p) {
    std::vector<Polynomial> coeffs;
    coeffs.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) coeffs.push_back(c * p);
    return EgfSeries(std::move(coeffs));
}

// Closed form of the bivariate Eulerian EGF, checked division-free in two
// cross-multiplied shapes with Gen(s, t) = sum_n D^n(s) t^n/n! under the
// grammar x -> xy, y -> xy:
//   (y - x) * Gen(y^{-1}, t) == 1 - x y^{-1} e^{(y-x)t}
//   Gen(y, t) * Gen(y^{-1}, t) == 1
inline bool eulerian_egf_identity_holds(int order) {
    const Grammar& g = dumont_eulerian_grammar();
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    const Polynomial y_inv = Polynomial::term(Monomial::variable("y", -1), 1);
    const Polynomial x_over_y = x * y_inv;

    const EgfSeries gen_y = gen(g, y, order);
    const EgfSeries gen_y_inv = gen(g, y_inv, order);

    const EgfSeries lhs = scale(gen_y_inv, y - x);
    const EgfSeries rhs = EgfSeries::unit(order) - scale(exp_series(y - x, order), x_over_y);
    if (!(lhs == rhs)) return false;
    return series_mul(gen_y, gen_y_inv) == EgfSeries::unit(order);
}

// Carlitz-Scoville closed form for the same family, cross-multiplied:
//   (Gen(y, t) - y) * (x e^{yt} - y e^{xt}) == x y (e^{xt} - e^{yt})
inline bool carlitz_scoville_identity_holds(int order) {
    const Grammar& g = dumont_eulerian_grammar();
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");

    const EgfSeries lhs_series = gen(g, y, order) - scale(EgfSeries::unit(order), y);
    const EgfSeries lhs_factor = scale(exp_series(y, order), x) - scale(exp_series(x, order), y);
    const EgfSeries rhs = scale(exp_series(x, order) - exp_series(y, order), x * y);
    return series_mul(lhs_series, lhs_factor) == rhs;
}

}  // namespace gramcalc
