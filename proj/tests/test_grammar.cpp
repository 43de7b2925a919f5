#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "gramcalc/expr.hpp"
#include "gramcalc/grammar.hpp"

using namespace gramcalc;

namespace {
const std::filesystem::path kDataDir = GRAMCALC_DATA_DIR;
}

TEST_CASE("the Eulerian derivation reproduces the classical table") {
    const std::vector<std::string> table = {
        "x*y",
        "x^2*y + x*y^2",
        "x^3*y + 4*x^2*y^2 + x*y^3",
        "x^4*y + 11*x^3*y^2 + 11*x^2*y^3 + x*y^4",
        "x^5*y + 26*x^4*y^2 + 66*x^3*y^3 + 26*x^2*y^4 + x*y^5",
        "x^6*y + 57*x^5*y^2 + 302*x^4*y^3 + 302*x^3*y^4 + 57*x^2*y^5 + x*y^6",
    };
    for (std::size_t i = 0; i < table.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        REQUIRE(expr::print(eulerian(n)) == table[i]);
        REQUIRE(eulerian(n).evaluate({{"x", 1}, {"y", 1}}) == factorial(n));
    }
    REQUIRE_THROWS_AS(eulerian(0), std::domain_error);
}

TEST_CASE("derive applies the Leibniz derivation once") {
    const Grammar& g = dumont_eulerian_grammar();
    REQUIRE(g.derive(Polynomial::variable("x")) == expr::parse("x*y"));
    REQUIRE(g.derive(expr::parse("5")).is_zero());
    REQUIRE(g.derive(expr::parse("x - y")).is_zero());
    // unruled variables ride along as constants
    REQUIRE(g.derive(expr::parse("q*x")) == expr::parse("q*x*y"));
    REQUIRE(g.derive(expr::parse("y^-1")) == expr::parse("-x*y^-1"));
    REQUIRE(g.iterate(expr::parse("x"), 0) == expr::parse("x"));
    REQUIRE_THROWS_AS(g.iterate(expr::parse("x"), -1), std::domain_error);
}

TEST_CASE("the trivariate derivation gives second-order Eulerian polynomials") {
    REQUIRE(expr::print(second_order(1)) == "x*y*z");
    REQUIRE(expr::print(second_order(2)) == "x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2");
    REQUIRE(second_order(2).evaluate({{"x", 1}, {"y", 1}, {"z", 1}}) == BigInt(3));
    REQUIRE(second_order(3).evaluate({{"x", 1}, {"y", 1}, {"z", 1}}) == BigInt(15));
    REQUIRE(second_order(5).is_symmetric({"x", "y", "z"}));
    REQUIRE_THROWS_AS(second_order(0), std::domain_error);
}

TEST_CASE("the Andre derivation gives zigzag-counting polynomials") {
    REQUIRE(expr::print(andre(1)) == "x");
    REQUIRE(expr::print(andre(2)) == "x*y");
    REQUIRE(expr::print(andre(3)) == "x^2 + x*y^2");
    REQUIRE(expr::print(andre(4)) == "4*x^2*y + x*y^3");
    const std::vector<int> zigzag = {1, 1, 2, 5, 16, 61, 272, 1385};
    for (std::size_t i = 0; i < zigzag.size(); ++i)
        REQUIRE(andre(static_cast<int>(i) + 1).evaluate({{"x", 1}, {"y", 1}}) ==
                BigInt(zigzag[i]));
    REQUIRE_THROWS_AS(andre(0), std::domain_error);
}

TEST_CASE("transformed presets iterate in the image variables") {
    const Grammar& h = gamma_eulerian_grammar();
    REQUIRE(h.iterate(Polynomial::variable("u"), 2) == expr::parse("u*v^2 + 2*u^2"));
    const Grammar& e = e_trivariate_grammar();
    REQUIRE(e.derive(Polynomial::variable("w")) == expr::parse("v*w"));
    REQUIRE(e.iterate(Polynomial::variable("w"), 2) == expr::parse("2*u*w^2 + v^2*w"));
}

TEST_CASE("preset lookup is by kebab-case name") {
    for (const auto& name : preset_grammar_names()) {
        const Grammar* g = find_grammar_preset(name);
        REQUIRE(g != nullptr);
        REQUIRE(g->name() == name);
    }
    REQUIRE(find_grammar_preset("no-such-grammar") == nullptr);
    REQUIRE(preset_grammar_names().size() == 5);
}

TEST_CASE("grammar text parses with comments, blanks and tight spacing") {
    Grammar g = parse_grammar(
        "# comment line\n"
        "\n"
        "x->x*y   # trailing comment\n"
        "y -> x*y\n");
    REQUIRE(g == dumont_eulerian_grammar());
    REQUIRE(g.variable_order() == std::vector<std::string>{"x", "y"});
    REQUIRE(g.has_rule("x"));
    REQUIRE_FALSE(g.has_rule("z"));
    REQUIRE(g.rule("y") == expr::parse("x*y"));
    REQUIRE_THROWS_AS(g.rule("z"), std::domain_error);
}

TEST_CASE("the file variable order is declaration order, then right-hand sides") {
    Grammar g = parse_grammar("b -> a\na -> b\n");
    REQUIRE(g.variable_order() == std::vector<std::string>{"b", "a"});
    Grammar h = parse_grammar("a -> b + c\n");
    REQUIRE(h.variable_order() == std::vector<std::string>{"a", "b", "c"});
    // rule polynomials print in the file order
    REQUIRE(expr::print(h.rule("a")) == "b + c");
}

TEST_CASE("grammar parse errors carry line information") {
    auto message_of = [](const std::string& text, bool strict = false) {
        try {
            parse_grammar(text, strict);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        FAIL("expected a parse error");
        return std::string();
    };
    REQUIRE(message_of("x -> x*y\nx -> y\n").find("duplicate rule for 'x'") !=
            std::string::npos);
    REQUIRE(message_of("x => y\n").find("line 1") != std::string::npos);
    REQUIRE(message_of("2x -> y\n").find("not an identifier") != std::string::npos);
    REQUIRE(message_of("x -> y +\n").find("line 1") != std::string::npos);
    // strict mode rejects right-hand sides that mention unruled variables
    REQUIRE(message_of("x -> a*x\n", true).find("unknown identifier 'a'") !=
            std::string::npos);
    REQUIRE_NOTHROW(parse_grammar("x -> a*x\n"));
}

TEST_CASE("grammar files on disk load and match the presets") {
    for (const auto& name : preset_grammar_names()) {
        Grammar g = load_grammar_file(kDataDir / "grammars" / (name + ".grammar"));
        REQUIRE(g == *find_grammar_preset(name));
    }
    Grammar k = load_grammar_file(kDataDir / "grammars" / "k-stirling-3.grammar");
    REQUIRE(k.variable_order() ==
            std::vector<std::string>{"x1", "x2", "x3", "x4"});
    Polynomial d = k.derive(Polynomial::variable("x1"));
    REQUIRE(d == expr::parse("x1*x2*x3*x4"));
    REQUIRE_THROWS_AS(load_grammar_file(kDataDir / "grammars" / "missing.grammar"),
                      std::runtime_error);
}

TEST_CASE("grammar equality compares rule sets only") {
    Grammar a = parse_grammar("x -> x*y\ny -> x*y\n");
    Grammar b = parse_grammar("y -> x*y\nx -> x*y\n");
    REQUIRE(a == b);
    Grammar c = parse_grammar("x -> x*y\n");
    REQUIRE_FALSE(a == c);
}
