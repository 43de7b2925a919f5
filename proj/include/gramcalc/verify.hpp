#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramcalc/egf.hpp"
#include "gramcalc/expr.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/oracle.hpp"
#include "gramcalc/random.hpp"
#include "gramcalc/symexp.hpp"

namespace gramcalc {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string input;
    bool pass = true;
    std::string expected;  // filled only on failure
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    int max_n = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace verify_detail {

inline std::string histogram_string(const std::map<int, BigInt>& h) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, c] : h) {
        if (!first) os << ", ";
        first = false;
        os << k << ":" << c.str();
    }
    os << "}";
    return os.str();
}

inline std::string histogram_string(const std::map<std::array<int, 3>, BigInt>& h) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [idx, c] : h) {
        if (!first) os << ", ";
        first = false;
        os << "(" << idx[0] << "," << idx[1] << "," << idx[2] << "):" << c.str();
    }
    os << "}";
    return os.str();
}

inline void push_check(SuiteReport& r, std::string suite, std::string name, std::string input,
                       bool pass, std::string expected = "", std::string actual = "") {
    CheckResult c;
    c.suite = std::move(suite);
    c.name = std::move(name);
    c.input = std::move(input);
    c.pass = pass;
    if (!pass) {
        c.expected = std::move(expected);
        c.actual = std::move(actual);
    }
    r.checks.push_back(std::move(c));
}

// Leibniz rule, series multiplicativity on seeded random pairs, and the
// closed Laurent power chain D^n(x y^{-1}) = x y^{-1} (y - x)^n.
inline void run_leibniz(SuiteReport& r, int max_n, std::uint64_t seed) {
    const int pairs = 100;
    const int order = 5;
    std::uint64_t salt = 0x9e3779b97f4a7c15ULL;
    for (std::size_t gi = 0; gi < preset_grammar_names().size(); ++gi) {
        const std::string& gname = preset_grammar_names()[gi];
        const Grammar& g = *find_grammar_preset(gname);
        std::mt19937_64 rng(seed ^ (salt * (gi + 1)));
        bool product_ok = true;
        bool series_ok = true;
        std::string product_detail, series_detail;
        for (int i = 0; i < pairs; ++i) {
            RandomPolyOptions opt;
            if (i % 3 == 2) opt.min_exponent = -2;  // exercise the Laurent range
            Polynomial f = random_polynomial(rng, g.variable_order(), opt);
            Polynomial h = random_polynomial(rng, g.variable_order(), opt);
            Polynomial lhs = g.derive(f * h);
            Polynomial rhs = g.derive(f) * h + f * g.derive(h);
            if (product_ok && !(lhs == rhs)) {
                product_ok = false;
                product_detail = "f=" + expr::print(f) + " g=" + expr::print(h);
            }
            EgfSeries prod = gen(g, f * h, order);
            EgfSeries split = series_mul(gen(g, f, order), gen(g, h, order));
            if (series_ok && !(prod == split)) {
                series_ok = false;
                series_detail = "f=" + expr::print(f) + " g=" + expr::print(h);
            }
        }
        push_check(r, "leibniz", "product-rule",
                   "grammar=" + gname + " pairs=" + std::to_string(pairs), product_ok,
                   "D(fg) == D(f)g + fD(g)", product_detail);
        push_check(r, "leibniz", "series-multiplicativity",
                   "grammar=" + gname + " pairs=" + std::to_string(pairs) +
                       " order=" + std::to_string(order),
                   series_ok, "Gen(fg) == Gen(f)*Gen(g)", series_detail);
    }

    const Grammar& g = dumont_eulerian_grammar();
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    const Polynomial base = Polynomial::term(
        Monomial::from_exponents({{"x", 1}, {"y", -1}}), 1);
    Polynomial cur = base;
    bool chain_ok = true;
    std::string chain_expected, chain_actual;
    for (int n = 1; n <= max_n && chain_ok; ++n) {
        cur = g.derive(cur);
        Polynomial want = base * (y - x).pow(n);
        if (!(cur == want)) {
            chain_ok = false;
            chain_expected = expr::print(want);
            chain_actual = expr::print(cur) + " (n=" + std::to_string(n) + ")";
        }
    }
    push_check(r, "leibniz", "laurent-power-chain", "n<=" + std::to_string(max_n), chain_ok,
               chain_expected, chain_actual);
}

inline void run_eulerian_oracle(SuiteReport& r, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        Polynomial oracle = permutation_distribution(n);
        Polynomial alg = eulerian(n);
        push_check(r, "eulerian-oracle", "matches-permutation-statistics",
                   "n=" + std::to_string(n), oracle == alg, expr::print(oracle),
                   expr::print(alg));
        BigInt total = alg.evaluate({{"x", 1}, {"y", 1}});
        push_check(r, "eulerian-oracle", "total-count", "n=" + std::to_string(n),
                   total == factorial(n), factorial(n).str(), total.str());
    }
}

inline void run_stirling_oracle(SuiteReport& r, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        Polynomial oracle = stirling_distribution(n);
        Polynomial alg = second_order(n);
        push_check(r, "stirling-oracle", "matches-stirling-statistics",
                   "n=" + std::to_string(n), oracle == alg, expr::print(oracle),
                   expr::print(alg));
        push_check(r, "stirling-oracle", "symmetric-in-all-variables",
                   "n=" + std::to_string(n), alg.is_symmetric({"x", "y", "z"}),
                   "invariant under permutations of x, y, z", expr::print(alg));
        BigInt total = alg.evaluate({{"x", 1}, {"y", 1}, {"z", 1}});
        push_check(r, "stirling-oracle", "total-count", "n=" + std::to_string(n),
                   total == odd_double_factorial(n), odd_double_factorial(n).str(),
                   total.str());
        Polynomial from_hist;
        for (const auto& [k, c] : second_order_numbers(n))
            from_hist += Polynomial::term(Monomial::variable("x", k), c);
        Polynomial marginal =
            alg.substitute({{"y", Polynomial::constant(1)}, {"z", Polynomial::constant(1)}});
        push_check(r, "stirling-oracle", "descent-marginal", "n=" + std::to_string(n),
                   from_hist == marginal, expr::print(from_hist), expr::print(marginal));
    }
}

inline void run_gamma_trees(SuiteReport& r, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        Polynomial a = eulerian(n);
        GammaExpansion direct = gamma_expand(a);
        GammaExpansion table = gamma_table_via_grammar(n);
        std::map<int, BigInt> trees = tree_leaf_histogram(n, 2, true);
        push_check(r, "gamma-trees", "direct-vs-transformed-grammar", "n=" + std::to_string(n),
                   direct == table, histogram_string(direct.coefficients),
                   histogram_string(table.coefficients));
        push_check(r, "gamma-trees", "table-vs-tree-leaf-counts", "n=" + std::to_string(n),
                   table.coefficients == trees, histogram_string(table.coefficients),
                   histogram_string(trees));
        push_check(r, "gamma-trees", "reconstructs-input", "n=" + std::to_string(n),
                   gamma_reconstruct(direct) == a, expr::print(a),
                   expr::print(gamma_reconstruct(direct)));
        push_check(r, "gamma-trees", "all-coefficients-positive", "n=" + std::to_string(n),
                   direct.positive, "positive == true", histogram_string(direct.coefficients));
        BigInt weighted = 0;
        for (const auto& [k, c] : direct.coefficients)
            weighted += c * big_pow(2, n + 1 - 2 * k);
        push_check(r, "gamma-trees", "weighted-total-is-factorial", "n=" + std::to_string(n),
                   weighted == factorial(n), factorial(n).str(), weighted.str());
        Polynomial partition;
        for_each_tree(n, 2, true,
                      [&](const PlaneTree& t) { partition += class_weight_sum(t); });
        push_check(r, "gamma-trees", "tree-weight-partition", "n=" + std::to_string(n),
                   partition == a, expr::print(a), expr::print(partition));
    }
}

inline void run_e_trees(SuiteReport& r, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        Polynomial c = second_order(n);
        EExpansion direct = e_expand(c);
        EExpansion table = e_table_via_grammar(n);
        EExpansion recur = e_table_via_recurrence(n);
        std::map<std::array<int, 3>, BigInt> trees = tree_profile_histogram(n);
        push_check(r, "e-trees", "direct-vs-transformed-grammar", "n=" + std::to_string(n),
                   direct == table, histogram_string(direct.coefficients),
                   histogram_string(table.coefficients));
        push_check(r, "e-trees", "grammar-vs-recurrence", "n=" + std::to_string(n),
                   table == recur, histogram_string(table.coefficients),
                   histogram_string(recur.coefficients));
        push_check(r, "e-trees", "table-vs-tree-profiles", "n=" + std::to_string(n),
                   table.coefficients == trees, histogram_string(table.coefficients),
                   histogram_string(trees));
        push_check(r, "e-trees", "reconstructs-input", "n=" + std::to_string(n),
                   e_reconstruct(direct) == c, expr::print(c),
                   expr::print(e_reconstruct(direct)));
        push_check(r, "e-trees", "all-coefficients-positive", "n=" + std::to_string(n),
                   direct.positive, "positive == true", histogram_string(direct.coefficients));
        bool support_ok = true;
        for (const auto& [idx, coeff] : direct.coefficients)
            if (idx[0] + 2 * idx[1] + 3 * idx[2] != 2 * n + 1) support_ok = false;
        push_check(r, "e-trees", "support-on-weight-line", "n=" + std::to_string(n), support_ok,
                   "i + 2j + 3k == 2n + 1", histogram_string(direct.coefficients));
    }
}

inline void run_no_double_descent(SuiteReport& r, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::map<int, BigInt> counts = no_double_descent_counts(n);
        std::map<int, BigInt> table = gamma_table_via_grammar(n).coefficients;
        push_check(r, "no-double-descent", "descent-histogram-is-gamma",
                   "n=" + std::to_string(n), counts == table, histogram_string(table),
                   histogram_string(counts));
    }
}

inline void run_egf_closed_forms(SuiteReport& r, int max_n) {
    const int order = max_n;
    push_check(r, "egf-closed-forms", "eulerian-egf-closed-form",
               "order=" + std::to_string(order), eulerian_egf_identity_holds(order),
               "cross-multiplied identity holds", "series differ");
    push_check(r, "egf-closed-forms", "carlitz-scoville-closed-form",
               "order=" + std::to_string(order), carlitz_scoville_identity_holds(order),
               "cross-multiplied identity holds", "series differ");
    EgfSeries s = gen(dumont_eulerian_grammar(), Polynomial::variable("y"), order);
    bool coeffs_ok = true;
    std::string detail;
    for (int n = 1; n <= order; ++n) {
        if (!(s.coeff(n) == eulerian(n))) {
            coeffs_ok = false;
            detail = "n=" + std::to_string(n);
            break;
        }
    }
    push_check(r, "egf-closed-forms", "gen-coefficients-match-eulerian",
               "order=" + std::to_string(order), coeffs_ok, "Gen coefficient == A_n", detail);
}

inline void run_tree_ratio(SuiteReport& r, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::map<int, BigInt> plane = tree_leaf_histogram(n, 2, true);
        std::map<int, BigInt> nonplane = tree_leaf_histogram(n, 2, false);
        bool ratio_ok = plane.size() == nonplane.size();
        if (ratio_ok)
            for (const auto& [k, s] : nonplane)
                if (plane.count(k) == 0 || plane.at(k) != big_pow(2, k - 1) * s) ratio_ok = false;
        push_check(r, "tree-ratio", "plane-is-power-of-two-times-nonplane",
                   "n=" + std::to_string(n), ratio_ok,
                   "t(n,k) == 2^(k-1) s(n,k); s=" + histogram_string(nonplane),
                   "t=" + histogram_string(plane));
        bool excess_ok = true;
        for_each_tree(n, 2, true, [&](const PlaneTree& t) {
            auto p = t.degree_profile();
            if (p[0] != p[2] - 1) excess_ok = false;
        });
        push_check(r, "tree-ratio", "degree-two-count-is-leaves-minus-one",
                   "n=" + std::to_string(n), excess_ok, "f2 == f0 - 1", "violated");
        Polynomial oracle = andre_distribution(n);
        Polynomial alg = andre(n);
        push_check(r, "tree-ratio", "andre-tree-sum", "n=" + std::to_string(n), oracle == alg,
                   expr::print(oracle), expr::print(alg));
    }
}

inline void run_recurrence(SuiteReport& r, int max_n) {
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    const Polynomial z = Polynomial::variable("z");
    for (int n = 1; n <= max_n; ++n) {
        Polynomial a = eulerian(n);
        Polynomial ladder = x * y * (a.derivative("x") + a.derivative("y"));
        push_check(r, "recurrence", "eulerian-ladder", "n=" + std::to_string(n),
                   ladder == eulerian(n + 1), expr::print(eulerian(n + 1)),
                   expr::print(ladder));
        Polynomial c = second_order(n);
        Polynomial ladder3 =
            x * y * z * (c.derivative("x") + c.derivative("y") + c.derivative("z"));
        push_check(r, "recurrence", "second-order-ladder", "n=" + std::to_string(n),
                   ladder3 == second_order(n + 1), expr::print(second_order(n + 1)),
                   expr::print(ladder3));
    }
    push_check(r, "recurrence", "derivation-kernel", "x - y",
               dumont_eulerian_grammar().derive(x - y).is_zero() &&
                   dumont_trivariate_grammar().derive(x - y).is_zero() &&
                   dumont_trivariate_grammar().derive(y - z).is_zero(),
               "0", "nonzero");
}

}  // namespace verify_detail

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "leibniz",          "eulerian-oracle", "stirling-oracle",
        "gamma-trees",      "e-trees",         "no-double-descent",
        "egf-closed-forms", "tree-ratio",      "recurrence",
        "all"};
    return names;
}

inline SuiteReport run_suite(const std::string& suite, int max_n, std::uint64_t seed) {
    if (std::find(verify_suite_names().begin(), verify_suite_names().end(), suite) ==
        verify_suite_names().end())
        throw std::domain_error("unknown verify suite '" + suite + "'");
    SuiteReport r;
    r.suite = suite;
    r.max_n = max_n;
    r.seed = seed;
    if (suite == "leibniz" || suite == "all") verify_detail::run_leibniz(r, max_n, seed);
    if (suite == "eulerian-oracle" || suite == "all") verify_detail::run_eulerian_oracle(r, max_n);
    if (suite == "stirling-oracle" || suite == "all") verify_detail::run_stirling_oracle(r, max_n);
    if (suite == "gamma-trees" || suite == "all") verify_detail::run_gamma_trees(r, max_n);
    if (suite == "e-trees" || suite == "all") verify_detail::run_e_trees(r, max_n);
    if (suite == "no-double-descent" || suite == "all")
        verify_detail::run_no_double_descent(r, max_n);
    if (suite == "egf-closed-forms" || suite == "all")
        verify_detail::run_egf_closed_forms(r, max_n);
    if (suite == "tree-ratio" || suite == "all") verify_detail::run_tree_ratio(r, max_n);
    if (suite == "recurrence" || suite == "all") verify_detail::run_recurrence(r, max_n);
    return r;
}

}  // namespace gramcalc
