#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gramcalc/expr.hpp"
#include "gramcalc/polynomial.hpp"
#include "gramcalc/random.hpp"

using namespace gramcalc;

TEST_CASE("monomials are canonical exponent maps") {
    REQUIRE(Monomial::variable("x", 0).is_unit());
    REQUIRE(Monomial::from_exponents({{"x", 1}, {"x", 2}}) == Monomial::variable("x", 3));
    REQUIRE(Monomial::from_exponents({{"x", 1}, {"x", -1}}).is_unit());
    REQUIRE(Monomial::variable("x") * Monomial::variable("x", -1) == Monomial{});
    REQUIRE(Monomial::variable("x", 2).pow(-2) == Monomial::variable("x", -4));
    REQUIRE(Monomial::from_exponents({{"x", 2}, {"y", -1}}).total_degree() == 1);
    REQUIRE(Monomial::variable("x").rename({{"x", "y"}}) == Monomial::variable("y"));
    // renaming may merge exponents
    REQUIRE(Monomial::from_exponents({{"x", 1}, {"y", 2}}).rename({{"x", "y"}}) ==
            Monomial::variable("y", 3));
}

TEST_CASE("polynomial equality ignores the declared variable order") {
    Polynomial a = expr::parse("x + y");
    Polynomial b = expr::parse("y + x");
    REQUIRE(a == b);
    REQUIRE(a.print_variable_order() != b.print_variable_order());
}

TEST_CASE("ring axioms hold on random Laurent polynomials") {
    std::mt19937_64 rng(97);
    RandomPolyOptions opt;
    opt.min_exponent = -2;
    opt.max_exponent = 3;
    const std::vector<std::string> vars = {"x", "y"};
    for (int i = 0; i < 250; ++i) {
        Polynomial f = random_polynomial(rng, vars, opt);
        Polynomial g = random_polynomial(rng, vars, opt);
        Polynomial h = random_polynomial(rng, vars, opt);
        REQUIRE((f + g) + h == f + (g + h));
        REQUIRE(f + g == g + f);
        REQUIRE(f * g == g * f);
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f * (g + h) == f * g + f * h);
        REQUIRE(f + (-f) == Polynomial());
        REQUIRE(f * Polynomial::constant(1) == f);
        REQUIRE((f * Polynomial()).is_zero());
    }
}

TEST_CASE("pow matches repeated multiplication and inverts unit monomials") {
    Polynomial s = expr::parse("x + y");
    REQUIRE(s.pow(0) == Polynomial::constant(1));
    REQUIRE(s.pow(3) == s * s * s);
    REQUIRE(expr::parse("x*y").pow(-2) == expr::parse("x^-2*y^-2"));
    REQUIRE(expr::parse("-x").pow(-1) == expr::parse("-x^-1"));
    REQUIRE(expr::parse("-x").pow(-2) == expr::parse("x^-2"));
    REQUIRE(expr::parse("-x").pow(-1) * expr::parse("-x") == Polynomial::constant(1));
    REQUIRE_THROWS_AS(s.pow(-1), std::domain_error);
    REQUIRE_THROWS_AS(expr::parse("2*x").pow(-1), std::domain_error);
}

TEST_CASE("formal derivatives follow the calculus rules") {
    REQUIRE(expr::parse("x^3*y").derivative("x") == expr::parse("3*x^2*y"));
    REQUIRE(expr::parse("y").derivative("x").is_zero());
    REQUIRE(expr::parse("x^-2").derivative("x") == expr::parse("-2*x^-3"));
    REQUIRE(expr::parse("x^-1").derivative("x") == expr::parse("-x^-2"));
    REQUIRE(expr::parse("7").derivative("x").is_zero());

    std::mt19937_64 rng(1729);
    RandomPolyOptions opt;
    opt.min_exponent = -2;
    for (int i = 0; i < 100; ++i) {
        Polynomial f = random_polynomial(rng, {"x", "y"}, opt);
        Polynomial g = random_polynomial(rng, {"x", "y"}, opt);
        REQUIRE((f + g).derivative("x") == f.derivative("x") + g.derivative("x"));
        REQUIRE((f * g).derivative("x") ==
                f.derivative("x") * g + f * g.derivative("x"));
        // mixed partials commute
        REQUIRE(f.derivative("x").derivative("y") == f.derivative("y").derivative("x"));
    }
}

TEST_CASE("substitution is simultaneous and leaves unbound variables alone") {
    Polynomial p = expr::parse("u*v^2 + 2*u^2");
    Polynomial image = p.substitute({{"u", expr::parse("x*y")}, {"v", expr::parse("x + y")}});
    REQUIRE(image == expr::parse("x^3*y + 4*x^2*y^2 + x*y^3"));

    REQUIRE(expr::parse("x + q").substitute({{"x", Polynomial::constant(1)}}) ==
            expr::parse("1 + q"));
    // swapping via substitution is simultaneous, not sequential
    REQUIRE(expr::parse("x^2*y").substitute(
                {{"x", Polynomial::variable("y")}, {"y", Polynomial::variable("x")}}) ==
            expr::parse("y^2*x"));
    REQUIRE(expr::parse("x").substitute({}) == expr::parse("x"));
}

TEST_CASE("substituting into a negative exponent needs a unit monomial") {
    Polynomial p = expr::parse("x*y^-1");
    REQUIRE(p.substitute({{"y", expr::parse("-z")}}) == expr::parse("-x*z^-1"));
    REQUIRE(p.substitute({{"y", expr::parse("z^2")}}) == expr::parse("x*z^-2"));
    REQUIRE_THROWS_AS(p.substitute({{"y", expr::parse("2*x")}}), std::domain_error);
    REQUIRE_THROWS_AS(p.substitute({{"y", expr::parse("x + z")}}), std::domain_error);
    // binding only the positive-exponent variable is fine
    REQUIRE(p.substitute({{"x", expr::parse("2*z")}}) == expr::parse("2*z*y^-1"));
}

TEST_CASE("evaluation is exact and guards the Laurent corner cases") {
    REQUIRE(expr::parse("x^4*y + 11*x^3*y^2 + 11*x^2*y^3 + x*y^4")
                .evaluate({{"x", 1}, {"y", 1}}) == BigInt(24));
    REQUIRE(expr::parse("x*y^-1").evaluate({{"x", 6}, {"y", 3}}) == BigInt(2));
    REQUIRE(expr::parse("(x-y)*(x+y)").evaluate({{"x", 7}, {"y", 5}}) == BigInt(24));
    REQUIRE(expr::parse("x^-2").evaluate({{"x", -1}}) == BigInt(1));
    REQUIRE(expr::parse("4*x^-2").evaluate({{"x", 2}}) == BigInt(1));
    REQUIRE_THROWS_AS(expr::parse("x*y^-1").evaluate({{"x", 5}, {"y", 3}}),
                      std::domain_error);  // 5/3 is not an integer
    REQUIRE_THROWS_AS(expr::parse("x^-1").evaluate({{"x", 0}}), std::domain_error);
    REQUIRE_THROWS_AS(expr::parse("x + y").evaluate({{"x", 1}}), std::domain_error);
    // zero base with positive exponents is fine
    REQUIRE(expr::parse("x^2 + 3").evaluate({{"x", 0}}) == BigInt(3));
}

TEST_CASE("symmetry and homogeneity predicates") {
    REQUIRE(expr::parse("x^2*y + x*y^2").is_symmetric({"x", "y"}));
    REQUIRE_FALSE(expr::parse("x^2*y").is_symmetric({"x", "y"}));
    REQUIRE(expr::parse("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2").is_symmetric({"x", "y", "z"}));
    REQUIRE_FALSE(expr::parse("x*y^2*z^2 + x^2*y*z^2").is_symmetric({"x", "y", "z"}));

    REQUIRE(expr::parse("x^5*y + x*y^5").homogeneous_degree() == 6);
    REQUIRE_FALSE(expr::parse("x + x^2").homogeneous_degree().has_value());
    REQUIRE_FALSE(Polynomial().homogeneous_degree().has_value());
    REQUIRE(Polynomial::constant(4).homogeneous_degree() == 0);
    REQUIRE(expr::parse("x*y^-1").homogeneous_degree() == 0);
}

TEST_CASE("leading terms follow the requested variable significance") {
    Polynomial a3 = expr::parse("x^3*y + 4*x^2*y^2 + x*y^3");
    auto [mx, cx] = a3.leading_term({"x", "y"});
    REQUIRE(mx == Monomial::from_exponents({{"x", 3}, {"y", 1}}));
    REQUIRE(cx == BigInt(1));
    auto [my, cy] = a3.leading_term({"y", "x"});
    REQUIRE(my == Monomial::from_exponents({{"x", 1}, {"y", 3}}));
    REQUIRE_THROWS_AS(Polynomial().leading_term({"x"}), std::domain_error);
}

TEST_CASE("from_terms prunes zero coefficients") {
    std::map<Monomial, BigInt> terms;
    terms[Monomial::variable("x")] = 0;
    terms[Monomial::variable("y")] = 2;
    Polynomial p = Polynomial::from_terms(std::move(terms));
    REQUIRE(p.term_count() == 1);
    REQUIRE(p.coefficient(Monomial::variable("x")) == BigInt(0));
}
