#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gramcalc/expr.hpp"
#include "gramcalc/polynomial.hpp"

namespace gramcalc {

// A context-free grammar in the sense of formal calculus: a substitution map
// v -> rule(v) acting on polynomials as the derivation
//     D(f) = sum_v rule(v) * df/dv,
// which satisfies the Leibniz rule by construction.  Variables without a rule
// are treated as constants (their partial is taken but contributes nothing
// unless some ruled variable appears).
class Grammar {
public:
    Grammar() = default;

    explicit Grammar(std::vector<std::pair<std::string, Polynomial>> rules,
                     std::vector<std::string> variable_order = {},
                     std::optional<std::string> name = std::nullopt)
        : rules_(std::move(rules)), var_order_(std::move(variable_order)), name_(std::move(name)) {
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            const std::string& v = rules_[i].first;
            if (index_.count(v)) throw std::invalid_argument("duplicate rule for '" + v + "'");
            index_.emplace(v, i);
        }
        if (var_order_.empty()) {
            for (const auto& [v, rhs] : rules_) var_order_ = merge_variable_orders(var_order_, {v});
            for (const auto& [v, rhs] : rules_)
                var_order_ = merge_variable_orders(var_order_, rhs.print_variable_order());
        }
        for (auto& [v, rhs] : rules_) rhs = rhs.with_variable_order(var_order_);
    }

    const std::optional<std::string>& name() const { return name_; }
    const std::vector<std::pair<std::string, Polynomial>>& rules() const { return rules_; }
    const std::vector<std::string>& variable_order() const { return var_order_; }

    bool has_rule(std::string_view var) const { return index_.count(std::string(var)) > 0; }

    const Polynomial& rule(std::string_view var) const {
        auto it = index_.find(std::string(var));
        if (it == index_.end())
            throw std::domain_error("no rule for variable '" + std::string(var) + "'");
        return rules_[it->second].second;
    }

    // One application of the derivation D.
    Polynomial derive(const Polynomial& f) const {
        Polynomial out;
        for (const auto& [v, rhs] : rules_) {
            Polynomial d = f.derivative(v);
            if (!d.is_zero()) out += rhs * d;
        }
        return out.with_variable_order(
            merge_variable_orders(var_order_, f.print_variable_order()));
    }

    // D^steps(f); steps = 0 returns f unchanged.
    Polynomial iterate(Polynomial f, int steps) const {
        if (steps < 0) throw std::domain_error("iterate: negative step count");
        for (int i = 0; i < steps; ++i) f = derive(f);
        return f;
    }

    // Equality of rule sets, ignoring declaration order and names.
    bool operator==(const Grammar& rhs) const {
        std::map<std::string, Polynomial> a, b;
        for (const auto& [v, r] : rules_) a.emplace(v, r);
        for (const auto& [v, r] : rhs.rules_) b.emplace(v, r);
        return a == b;
    }

private:
    std::vector<std::pair<std::string, Polynomial>> rules_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::string> var_order_;
    std::optional<std::string> name_;
};

// Grammar file format: one rule per line, "<variable> -> <expression>"; '#'
// starts a comment; blank lines are skipped.  The declared variable order of
// every rule polynomial is the order of first appearance in the file
// (left-hand sides first).  In strict mode every identifier on a right-hand
// side must itself have a rule.
inline Grammar parse_grammar(std::string_view text, bool strict = false) {
    struct RawRule {
        std::string lhs;
        std::string rhs;
        std::size_t line_no;
        std::size_t offset;  // byte offset of the line start in `text`
    };
    auto is_identifier = [](std::string_view s) {
        if (s.empty()) return false;
        if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        return true;
    };
    auto trim = [](std::string_view s) {
        std::size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        return std::string(s.substr(b, e - b));
    };

    std::vector<RawRule> raw;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t eol = text.find('\n', offset);
        std::string_view line = text.substr(offset, eol == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : eol - offset);
        ++line_no;
        std::size_t line_start = offset;
        offset = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        std::string_view body = line.substr(0, std::min(line.find('#'), line.size()));
        std::string stripped = trim(body);
        if (stripped.empty()) continue;

        std::size_t arrow = stripped.find("->");
        if (arrow == std::string::npos)
            throw ParseError("grammar line " + std::to_string(line_no) +
                                 ": expected '<variable> -> <expression>'",
                             line_start);
        std::string lhs = trim(std::string_view(stripped).substr(0, arrow));
        std::string rhs = trim(std::string_view(stripped).substr(arrow + 2));
        if (!is_identifier(lhs))
            throw ParseError("grammar line " + std::to_string(line_no) +
                                 ": left-hand side '" + lhs + "' is not an identifier",
                             line_start);
        for (const auto& r : raw)
            if (r.lhs == lhs)
                throw ParseError("grammar line " + std::to_string(line_no) +
                                     ": duplicate rule for '" + lhs + "'",
                                 line_start);
        raw.push_back({std::move(lhs), std::move(rhs), line_no, line_start});
    }

    std::vector<std::string> ruled;
    ruled.reserve(raw.size());
    for (const auto& r : raw) ruled.push_back(r.lhs);

    std::vector<std::pair<std::string, Polynomial>> rules;
    std::vector<std::string> order = ruled;
    for (const auto& r : raw) {
        Polynomial p;
        try {
            p = strict ? expr::parse(r.rhs, ruled) : expr::parse(r.rhs);
        } catch (const ParseError& e) {
            throw ParseError("grammar line " + std::to_string(r.line_no) + ": " + e.what(),
                             r.offset);
        }
        order = merge_variable_orders(order, p.print_variable_order());
        rules.emplace_back(r.lhs, std::move(p));
    }
    return Grammar(std::move(rules), std::move(order));
}

inline Grammar load_grammar_file(const std::filesystem::path& path, bool strict = false) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open grammar file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grammar(buf.str(), strict);
}

namespace grammar_detail {
inline Grammar make_preset(std::string name, std::string_view text) {
    Grammar g = parse_grammar(text);
    return Grammar(g.rules(), g.variable_order(), std::move(name));
}
}  // namespace grammar_detail

// x -> xy, y -> xy.  D^n(x) is the bivariate Eulerian polynomial A_n(x, y),
// which counts permutations of [n] by (descents, ascents) under padded
// boundary zeros.
inline const Grammar& dumont_eulerian_grammar() {
    static const Grammar g = grammar_detail::make_preset("dumont-eulerian",
                                                         "x -> x*y\n"
                                                         "y -> x*y\n");
    return g;
}

// The image of the Eulerian system under u = xy, v = x + y:
// u -> uv, v -> 2u.  Iterating from u produces the gamma coefficients of A_n.
inline const Grammar& gamma_eulerian_grammar() {
    static const Grammar g = grammar_detail::make_preset("gamma-eulerian",
                                                         "u -> u*v\n"
                                                         "v -> 2*u\n");
    return g;
}

// x -> xy, y -> x.  D^{n-1}(x) is the Andre polynomial E_n(x, y), summing
// x^{leaves} y^{degree-one vertices} over increasing non-plane 0-1-2 trees;
// E_n(1, 1) is the Euler (zigzag) number.
inline const Grammar& andre_grammar() {
    static const Grammar g = grammar_detail::make_preset("andre",
                                                         "x -> x*y\n"
                                                         "y -> x\n");
    return g;
}

// x -> xyz, y -> xyz, z -> xyz.  D^n(x) is the trivariate second-order
// Eulerian polynomial C_n(x, y, z), counting Stirling permutations of [n]_2
// by (descents, ascents, plateaux).
inline const Grammar& dumont_trivariate_grammar() {
    static const Grammar g = grammar_detail::make_preset("dumont-trivariate",
                                                         "x -> x*y*z\n"
                                                         "y -> x*y*z\n"
                                                         "z -> x*y*z\n");
    return g;
}

// The image of the trivariate system under the elementary symmetric
// polynomials u = x+y+z, v = xy+xz+yz, w = xyz:
// u -> 3w, v -> 2uw, w -> vw.  Iterating from w produces the e-expansion
// coefficients of C_n.
inline const Grammar& e_trivariate_grammar() {
    static const Grammar g = grammar_detail::make_preset("e-trivariate",
                                                         "u -> 3*w\n"
                                                         "v -> 2*u*w\n"
                                                         "w -> v*w\n");
    return g;
}

inline const std::vector<std::string>& preset_grammar_names() {
    static const std::vector<std::string> names = {
        "dumont-eulerian", "gamma-eulerian", "andre", "dumont-trivariate", "e-trivariate"};
    return names;
}

inline const Grammar* find_grammar_preset(std::string_view name) {
    if (name == "dumont-eulerian") return &dumont_eulerian_grammar();
    if (name == "gamma-eulerian") return &gamma_eulerian_grammar();
    if (name == "andre") return &andre_grammar();
    if (name == "dumont-trivariate") return &dumont_trivariate_grammar();
    if (name == "e-trivariate") return &e_trivariate_grammar();
    return nullptr;
}

// A_n(x, y) = D^n(x) under the Dumont Eulerian grammar, n >= 1.
inline Polynomial eulerian(int n) {
    if (n < 1) throw std::domain_error("eulerian: n must be >= 1");
    return dumont_eulerian_grammar().iterate(Polynomial::variable("x"), n);
}

// C_n(x, y, z) = D^n(x) under the trivariate grammar, n >= 1.
inline Polynomial second_order(int n) {
    if (n < 1) throw std::domain_error("second_order: n must be >= 1");
    return dumont_trivariate_grammar().iterate(Polynomial::variable("x"), n);
}

// E_n(x, y) = D^{n-1}(x) under the Andre grammar, n >= 1.
inline Polynomial andre(int n) {
    if (n < 1) throw std::domain_error("andre: n must be >= 1");
    return andre_grammar().iterate(Polynomial::variable("x"), n - 1);
}

}  // namespace gramcalc
