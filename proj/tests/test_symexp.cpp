#include <catch2/catch_amalgamated.hpp>

#include "gramcalc/expr.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/symexp.hpp"

using namespace gramcalc;

namespace {
std::map<int, BigInt> gamma_row(std::initializer_list<std::pair<int, int>> entries) {
    std::map<int, BigInt> row;
    for (auto [k, c] : entries) row[k] = c;
    return row;
}
}  // namespace

TEST_CASE("gamma expansion of the small Eulerian polynomials") {
    REQUIRE(gamma_expand(eulerian(1)).coefficients == gamma_row({{1, 1}}));
    REQUIRE(gamma_expand(eulerian(3)).coefficients == gamma_row({{1, 1}, {2, 2}}));
    REQUIRE(gamma_expand(eulerian(4)).coefficients == gamma_row({{1, 1}, {2, 8}}));
    REQUIRE(gamma_expand(eulerian(5)).coefficients ==
            gamma_row({{1, 1}, {2, 22}, {3, 16}}));
    REQUIRE(gamma_expand(eulerian(6)).coefficients ==
            gamma_row({{1, 1}, {2, 52}, {3, 136}}));
    GammaExpansion g5 = gamma_expand(eulerian(5));
    REQUIRE(g5.n == 5);
    REQUIRE(g5.positive);
}

TEST_CASE("gamma expansion handles any symmetric polynomial in the basis span") {
    GammaExpansion cube = gamma_expand(expr::parse("x^3*y^3"));
    REQUIRE(cube.n == 5);
    REQUIRE(cube.coefficients == gamma_row({{3, 1}}));

    GammaExpansion spread = gamma_expand(expr::parse("x^3*y + 2*x^2*y^2 + x*y^3"));
    REQUIRE(spread.coefficients == gamma_row({{1, 1}}));

    // mixed signs are representable; the positivity flag records them
    GammaExpansion mixed = gamma_expand(expr::parse("x^3*y - x^2*y^2 + x*y^3"));
    REQUIRE(mixed.coefficients == gamma_row({{1, 1}, {2, -3}}));
    REQUIRE_FALSE(mixed.positive);
}

TEST_CASE("gamma expansion rejects inputs outside its domain") {
    REQUIRE_THROWS_AS(gamma_expand(Polynomial{}), std::domain_error);
    REQUIRE_THROWS_AS(gamma_expand(expr::parse("x^2*y")), std::domain_error);
    REQUIRE_THROWS_AS(gamma_expand(expr::parse("x*y + x^2*y^2")), std::domain_error);
    REQUIRE_THROWS_AS(gamma_expand(expr::parse("x^2 + y^2")), std::domain_error);
    REQUIRE_THROWS_AS(gamma_expand(expr::parse("x*y*z + x*z*y")), std::domain_error);
    REQUIRE_THROWS_AS(gamma_expand(expr::parse("x + y")), std::domain_error);
}

TEST_CASE("the transformed grammar tabulates the same gamma coefficients") {
    for (int n = 1; n <= 8; ++n)
        REQUIRE(gamma_table_via_grammar(n).coefficients ==
                gamma_expand(eulerian(n)).coefficients);
}

TEST_CASE("gamma reconstruction inverts the expansion") {
    for (int n = 1; n <= 8; ++n) {
        Polynomial a = eulerian(n);
        REQUIRE(gamma_reconstruct(gamma_expand(a)) == a);
    }
    REQUIRE(gamma_reconstruct(gamma_table_via_grammar(6)) == eulerian(6));
}

TEST_CASE("elementary expansion of the small trivariate polynomials") {
    EExpansion e2 = e_expand(second_order(2));
    REQUIRE(e2.n == 2);
    REQUIRE(e2.coefficients ==
            std::map<std::array<int, 3>, BigInt>{{{0, 1, 1}, 1}});

    EExpansion e3 = e_expand(second_order(3));
    REQUIRE(e3.coefficients ==
            std::map<std::array<int, 3>, BigInt>{{{0, 2, 1}, 1}, {{1, 0, 2}, 2}});

    EExpansion e4 = e_expand(second_order(4));
    REQUIRE(e4.coefficients ==
            std::map<std::array<int, 3>, BigInt>{
                {{0, 0, 3}, 6}, {{0, 3, 1}, 1}, {{1, 1, 2}, 8}});
    REQUIRE(e4.positive);
}

TEST_CASE("elementary expansion handles generic symmetric odd inputs") {
    EExpansion cube = e_expand(expr::parse("(x + y + z)^3"));
    REQUIRE(cube.n == 1);
    REQUIRE(cube.coefficients ==
            std::map<std::array<int, 3>, BigInt>{{{3, 0, 0}, 1}});

    EExpansion unit = e_expand(expr::parse("x*y*z"));
    REQUIRE(unit.coefficients ==
            std::map<std::array<int, 3>, BigInt>{{{0, 0, 1}, 1}});
}

TEST_CASE("elementary expansion rejects inputs outside its domain") {
    REQUIRE_THROWS_AS(e_expand(Polynomial{}), std::domain_error);
    REQUIRE_THROWS_AS(e_expand(expr::parse("(x + y + z)^2")), std::domain_error);
    REQUIRE_THROWS_AS(e_expand(expr::parse("x^2*y*z + x*y*z")), std::domain_error);
    REQUIRE_THROWS_AS(e_expand(expr::parse("x^3 + y^3 + 2*z^3")), std::domain_error);
    REQUIRE_THROWS_AS(e_expand(expr::parse("x*y*z*w")), std::domain_error);
}

TEST_CASE("the three elementary-coefficient routes agree") {
    for (int n = 1; n <= 6; ++n) {
        auto direct = e_expand(second_order(n)).coefficients;
        REQUIRE(e_table_via_grammar(n).coefficients == direct);
        REQUIRE(e_table_via_recurrence(n).coefficients == direct);
    }
}

TEST_CASE("the elementary recurrence starts from its seed row") {
    EExpansion seed = e_table_via_recurrence(1);
    REQUIRE(seed.coefficients ==
            std::map<std::array<int, 3>, BigInt>{{{0, 0, 1}, 1}});
}

TEST_CASE("elementary coefficients live on the weight line i + 2j + 3k = 2n + 1") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& [idx, c] : e_table_via_recurrence(n).coefficients) {
            REQUIRE(idx[0] + 2 * idx[1] + 3 * idx[2] == 2 * n + 1);
            REQUIRE(c > 0);
        }
}

TEST_CASE("elementary reconstruction inverts the expansion") {
    for (int n = 1; n <= 6; ++n) {
        Polynomial c = second_order(n);
        REQUIRE(e_reconstruct(e_expand(c)) == c);
        REQUIRE(e_reconstruct(e_table_via_recurrence(n)) == c);
    }
}
