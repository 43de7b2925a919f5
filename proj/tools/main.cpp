// Command-line front end: evaluates grammar derivations, the Eulerian-family
// polynomial tables and expansions, tree enumerations, and the verification
// suites.  Exit codes: 0 success, 1 verification failure, 2 usage or domain
// error.  Output is deterministic: identical invocations print identical
// bytes.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gramcalc/egf.hpp"
#include "gramcalc/expr.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/json_io.hpp"
#include "gramcalc/oracle.hpp"
#include "gramcalc/symexp.hpp"
#include "gramcalc/verify.hpp"

namespace {

using namespace gramcalc;

Grammar resolve_grammar(const std::string& name_or_path) {
    if (const Grammar* preset = find_grammar_preset(name_or_path)) return *preset;
    if (std::filesystem::exists(name_or_path)) return load_grammar_file(name_or_path);
    std::string names;
    for (const auto& n : preset_grammar_names()) names += (names.empty() ? "" : ", ") + n;
    throw std::domain_error("unknown grammar '" + name_or_path + "': not a preset (" + names +
                            ") and no such file");
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void emit_poly(const Polynomial& p, const std::string& out) {
    if (out == "json")
        emit_json(json_of(p));
    else
        std::cout << expr::print(p) << "\n";
}

void emit_gamma(const GammaExpansion& t, const std::string& out) {
    if (out == "json") {
        emit_json(json_of(t));
        return;
    }
    std::cout << "n: " << t.n << "\nbasis: gamma\n";
    for (const auto& [k, c] : t.coefficients) std::cout << "[" << k << "] " << c.str() << "\n";
    std::cout << "positive: " << (t.positive ? "true" : "false") << "\n";
}

void emit_e(const EExpansion& t, const std::string& out) {
    if (out == "json") {
        emit_json(json_of(t));
        return;
    }
    std::cout << "n: " << t.n << "\nbasis: elementary\n";
    for (const auto& [idx, c] : t.coefficients)
        std::cout << "[" << idx[0] << "," << idx[1] << "," << idx[2] << "] " << c.str() << "\n";
    std::cout << "positive: " << (t.positive ? "true" : "false") << "\n";
}

std::string tree_to_string(const PlaneTree& t, int v) {
    std::string s = std::to_string(v);
    if (t.degree(v) > 0) {
        s += "(";
        bool first = true;
        for (int c : t.children(v)) {
            if (!first) s += ",";
            first = false;
            s += tree_to_string(t, c);
        }
        s += ")";
    }
    return s;
}

struct DeriveOpts {
    std::string grammar;
    std::string start;
    int steps = 0;
    std::string out = "text";
};

int run_derive(const DeriveOpts& o) {
    Grammar g = resolve_grammar(o.grammar);
    Polynomial f = expr::parse(o.start);
    emit_poly(g.iterate(f, o.steps), o.out);
    return 0;
}

struct EulerianOpts {
    int n = 1;
    std::string expand;
    std::string out = "text";
};

int run_eulerian(const EulerianOpts& o) {
    if (o.expand == "gamma") {
        emit_gamma(gamma_expand(eulerian(o.n)), o.out);
    } else {
        emit_poly(eulerian(o.n), o.out);
    }
    return 0;
}

int run_second_order(const EulerianOpts& o) {
    if (o.expand == "elementary") {
        emit_e(e_expand(second_order(o.n)), o.out);
    } else {
        emit_poly(second_order(o.n), o.out);
    }
    return 0;
}

struct AndreOpts {
    int n = 1;
    std::string out = "text";
};

int run_andre(const AndreOpts& o) {
    emit_poly(andre(o.n), o.out);
    return 0;
}

struct TreesOpts {
    int n = 1;
    int max_degree = 2;
    bool plane = false;
    std::string count_by = "leaves";
    bool force = false;
    std::string out = "text";
};

int run_trees(const TreesOpts& o) {
    if (o.n > 9 && !o.force) {
        std::cerr << "error: tree enumeration with --n > 9 grows factorially; "
                     "pass --force to proceed\n";
        return 2;
    }
    if (o.count_by == "leaves") {
        auto hist = tree_leaf_histogram(o.n, o.max_degree, o.plane);
        if (o.out == "json") {
            emit_json(json_of_histogram(hist));
        } else {
            for (const auto& [k, c] : hist) std::cout << "[" << k << "] " << c.str() << "\n";
        }
    } else if (o.count_by == "profile") {
        std::map<std::array<int, 3>, BigInt> hist;
        for_each_tree(o.n, o.max_degree, o.plane,
                      [&](const PlaneTree& t) { hist[t.degree_profile()] += 1; });
        if (o.out == "json") {
            emit_json(json_of_histogram(hist));
        } else {
            for (const auto& [idx, c] : hist)
                std::cout << "[" << idx[0] << "," << idx[1] << "," << idx[2] << "] " << c.str()
                          << "\n";
        }
    } else {  // list
        if (o.out == "json") {
            Json arr = Json::array();
            for_each_tree(o.n, o.max_degree, o.plane,
                          [&](const PlaneTree& t) { arr.push_back(json_of(t)); });
            emit_json(arr);
        } else {
            for_each_tree(o.n, o.max_degree, o.plane, [&](const PlaneTree& t) {
                std::cout << tree_to_string(t, 1) << "\n";
            });
        }
    }
    return 0;
}

struct VerifyOpts {
    std::string suite;
    int max_n = 6;
    std::uint64_t seed = 0;
    bool force = false;
    std::string out = "text";
};

// Soft enumeration limits: beyond these the exhaustive oracles stop being
// desk-scale (permutations past 10!, Stirling words past 13!!, trees past
// roughly two million); --force overrides.
int verify_suite_cap(const std::string& suite) {
    if (suite == "eulerian-oracle" || suite == "no-double-descent") return 10;
    if (suite == "stirling-oracle") return 7;
    if (suite == "gamma-trees" || suite == "e-trees" || suite == "tree-ratio") return 9;
    if (suite == "all") return 7;
    return std::numeric_limits<int>::max();
}

int run_verify(const VerifyOpts& o) {
    int cap = verify_suite_cap(o.suite);
    if (o.max_n > cap && !o.force) {
        std::cerr << "error: suite '" << o.suite << "' enumerates exhaustively; --max-n above "
                  << cap << " needs --force\n";
        return 2;
    }
    SuiteReport rep = run_suite(o.suite, o.max_n, o.seed);
    if (o.out == "json") {
        emit_json(json_of(rep));
    } else {
        int passed = 0;
        for (const auto& c : rep.checks) {
            if (c.pass) {
                ++passed;
                std::cout << "ok   " << c.suite << "/" << c.name << "  " << c.input << "\n";
            } else {
                std::cout << "FAIL " << c.suite << "/" << c.name << "  " << c.input << "\n";
                std::cout << "  expected: " << c.expected << "\n";
                std::cout << "  actual:   " << c.actual << "\n";
            }
        }
        std::cout << "passed " << passed << "/" << rep.checks.size() << " checks\n";
    }
    return rep.all_pass() ? 0 : 1;
}

struct EgfOpts {
    std::string grammar;
    std::string start;
    int order = 0;
    std::string out = "text";
};

int run_egf(const EgfOpts& o) {
    Grammar g = resolve_grammar(o.grammar);
    Polynomial f = expr::parse(o.start);
    EgfSeries s = gen(g, f, o.order);
    if (o.out == "json") {
        emit_json(json_of(s));
    } else {
        for (int n = 0; n <= s.order(); ++n)
            std::cout << "t^" << n << "/" << n << "!: " << expr::print(s.coeff(n)) << "\n";
    }
    return 0;
}

void add_out_option(CLI::App* cmd, std::string& out) {
    cmd->add_option("--out", out, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grammar-driven calculus for Eulerian-family polynomials"};
    app.require_subcommand(1);
    int exit_code = 0;

    DeriveOpts derive_opts;
    auto* derive_cmd = app.add_subcommand("derive", "apply a grammar derivation repeatedly");
    derive_cmd->add_option("--grammar", derive_opts.grammar, "preset name or grammar file")
        ->required();
    derive_cmd->add_option("--start", derive_opts.start, "start polynomial expression")
        ->required();
    derive_cmd->add_option("--steps", derive_opts.steps, "number of derivation steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_out_option(derive_cmd, derive_opts.out);
    derive_cmd->callback([&]() { exit_code = run_derive(derive_opts); });

    EulerianOpts eulerian_opts;
    auto* eulerian_cmd = app.add_subcommand("eulerian", "bivariate Eulerian polynomial A_n");
    eulerian_cmd->add_option("--n", eulerian_opts.n, "index n")->required()->check(
        CLI::PositiveNumber);
    eulerian_cmd->add_option("--expand", eulerian_opts.expand, "expansion basis")
        ->check(CLI::IsMember({"gamma"}));
    add_out_option(eulerian_cmd, eulerian_opts.out);
    eulerian_cmd->callback([&]() { exit_code = run_eulerian(eulerian_opts); });

    EulerianOpts second_opts;
    auto* second_cmd =
        app.add_subcommand("second-order", "trivariate second-order Eulerian polynomial C_n");
    second_cmd->add_option("--n", second_opts.n, "index n")->required()->check(
        CLI::PositiveNumber);
    second_cmd->add_option("--expand", second_opts.expand, "expansion basis")
        ->check(CLI::IsMember({"elementary"}));
    add_out_option(second_cmd, second_opts.out);
    second_cmd->callback([&]() { exit_code = run_second_order(second_opts); });

    AndreOpts andre_opts;
    auto* andre_cmd = app.add_subcommand("andre", "Andre polynomial E_n");
    andre_cmd->add_option("--n", andre_opts.n, "index n")->required()->check(
        CLI::PositiveNumber);
    add_out_option(andre_cmd, andre_opts.out);
    andre_cmd->callback([&]() { exit_code = run_andre(andre_opts); });

    TreesOpts trees_opts;
    auto* trees_cmd = app.add_subcommand("trees", "enumerate bounded-degree increasing trees");
    trees_cmd->add_option("--n", trees_opts.n, "number of vertices")->required()->check(
        CLI::PositiveNumber);
    trees_cmd->add_option("--max-degree", trees_opts.max_degree, "out-degree bound")
        ->check(CLI::IsMember({2, 3}))
        ->capture_default_str();
    trees_cmd->add_flag("--plane", trees_opts.plane, "respect child order");
    trees_cmd->add_option("--count-by", trees_opts.count_by, "aggregation")
        ->check(CLI::IsMember({"leaves", "profile", "list"}))
        ->capture_default_str();
    trees_cmd->add_flag("--force", trees_opts.force, "override the enumeration size guard");
    add_out_option(trees_cmd, trees_opts.out);
    trees_cmd->callback([&]() { exit_code = run_trees(trees_opts); });

    VerifyOpts verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "run a cross-verification suite");
    verify_cmd->add_option("--suite", verify_opts.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(verify_suite_names()));
    verify_cmd->add_option("--max-n", verify_opts.max_n, "largest index checked")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_opts.seed, "seed for randomized checks")
        ->capture_default_str();
    verify_cmd->add_flag("--force", verify_opts.force, "override the enumeration size guard");
    add_out_option(verify_cmd, verify_opts.out);
    verify_cmd->callback([&]() { exit_code = run_verify(verify_opts); });

    EgfOpts egf_opts;
    auto* egf_cmd =
        app.add_subcommand("egf", "truncated exponential generating function of a derivation");
    egf_cmd->add_option("--grammar", egf_opts.grammar, "preset name or grammar file")
        ->required();
    egf_cmd->add_option("--start", egf_opts.start, "start polynomial expression")->required();
    egf_cmd->add_option("--order", egf_opts.order, "truncation order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_out_option(egf_cmd, egf_opts.out);
    egf_cmd->callback([&]() { exit_code = run_egf(egf_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const gramcalc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
