#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gramcalc/egf.hpp"
#include "gramcalc/expr.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/random.hpp"

using namespace gramcalc;

TEST_CASE("gen lists the derivation orbit as t^n/n! coefficients") {
    EgfSeries s = gen(dumont_eulerian_grammar(), Polynomial::variable("y"), 3);
    REQUIRE(s.order() == 3);
    REQUIRE(s.coeff(0) == expr::parse("y"));
    REQUIRE(s.coeff(1) == expr::parse("x*y"));
    REQUIRE(s.coeff(2) == eulerian(2));
    REQUIRE(s.coeff(3) == eulerian(3));
    REQUIRE_THROWS_AS(s.coeff(4), std::out_of_range);
    REQUIRE_THROWS_AS(s.coeff(-1), std::out_of_range);
    REQUIRE_THROWS_AS(gen(dumont_eulerian_grammar(), Polynomial::variable("y"), -1),
                      std::domain_error);
}

TEST_CASE("series multiplication is binomial convolution") {
    const int order = 6;
    EgfSeries ex = exp_series(expr::parse("x"), order);
    EgfSeries ey = exp_series(expr::parse("y"), order);
    // e^{xt} e^{yt} = e^{(x+y)t} is the binomial theorem in this basis
    REQUIRE(series_mul(ex, ey) == exp_series(expr::parse("x + y"), order));
    REQUIRE(series_mul(ex, EgfSeries::unit(order)) == ex);
    REQUIRE(series_mul(ex, EgfSeries::zero(order)) == EgfSeries::zero(order));
    REQUIRE_THROWS_AS(series_mul(ex, EgfSeries::unit(3)), std::domain_error);
}

TEST_CASE("exp_series powers its argument") {
    EgfSeries s = exp_series(expr::parse("x*y^-1"), 3);
    REQUIRE(s.coeff(0) == Polynomial::constant(1));
    REQUIRE(s.coeff(2) == expr::parse("x^2*y^-2"));
    REQUIRE(exp_series(Polynomial{}, 4) == EgfSeries::unit(4));
}

TEST_CASE("series addition and subtraction are coefficientwise") {
    EgfSeries a = exp_series(expr::parse("x"), 4);
    EgfSeries b = exp_series(expr::parse("-x"), 4);
    EgfSeries sum = a + b;
    REQUIRE(sum.coeff(0) == Polynomial::constant(2));
    REQUIRE(sum.coeff(1).is_zero());
    REQUIRE(sum.coeff(2) == expr::parse("2*x^2"));
    REQUIRE((a - a) == EgfSeries::zero(4));
    REQUIRE_THROWS_AS(a + EgfSeries::unit(2), std::domain_error);
    REQUIRE_THROWS_AS(EgfSeries(std::vector<Polynomial>{}), std::invalid_argument);
}

TEST_CASE("gen is multiplicative over products of seeds") {
    const Grammar& g = dumont_trivariate_grammar();
    std::mt19937_64 rng(2024);
    RandomPolyOptions opt;
    opt.max_terms = 3;
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_polynomial(rng, {"x", "y", "z"}, opt);
        Polynomial h = random_polynomial(rng, {"x", "y", "z"}, opt);
        REQUIRE(gen(g, f * h, 4) == series_mul(gen(g, f, 4), gen(g, h, 4)));
    }
}

TEST_CASE("derivation orbit of x*y^-1 stays on a closed form") {
    const Grammar& g = dumont_eulerian_grammar();
    Polynomial f = expr::parse("x*y^-1");
    const Polynomial y_minus_x = expr::parse("y - x");
    for (int n = 0; n <= 8; ++n)
        REQUIRE(g.iterate(f, n) == expr::parse("x*y^-1") * y_minus_x.pow(n));
}

TEST_CASE("the bivariate Eulerian closed form holds through order 10") {
    REQUIRE(eulerian_egf_identity_holds(10));
}

TEST_CASE("the Carlitz-Scoville closed form holds through order 10") {
    REQUIRE(carlitz_scoville_identity_holds(10));
}
