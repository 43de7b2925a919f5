#pragma once

#include <array>
#include <map>
#include <string>

#include <json.hpp>

#include "gramcalc/egf.hpp"
#include "gramcalc/expr.hpp"
#include "gramcalc/oracle.hpp"
#include "gramcalc/polynomial.hpp"
#include "gramcalc/symexp.hpp"
#include "gramcalc/verify.hpp"

namespace gramcalc {

// Coefficients and counts are serialized as decimal strings so arbitrary
// precision survives any JSON reader; exponents and indices are small and
// stay plain integers.  ordered_json keeps field and term order stable, so
// identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

inline Json json_of(const Polynomial& p) {
    const std::vector<std::string> order = p.print_variable_order();
    std::vector<const std::pair<const Monomial, BigInt>*> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&order](const auto* a, const auto* b) {
        return lex_exponent_compare(a->first, b->first, order) > 0;
    });
    Json out = Json::array();
    for (const auto* t : terms) {
        Json mono = Json::object();
        for (const auto& v : order) {
            int e = t->first.exponent(v);
            if (e != 0) mono[v] = e;
        }
        out.push_back({{"monomial", std::move(mono)}, {"coeff", t->second.str()}});
    }
    return out;
}

inline Json json_of(const GammaExpansion& t) {
    Json entries = Json::array();
    for (const auto& [k, c] : t.coefficients)
        entries.push_back({{"index", Json::array({k})}, {"coeff", c.str()}});
    return Json{{"n", t.n}, {"basis", "gamma"}, {"entries", std::move(entries)},
                {"positive", t.positive}};
}

inline Json json_of(const EExpansion& t) {
    Json entries = Json::array();
    for (const auto& [idx, c] : t.coefficients)
        entries.push_back(
            {{"index", Json::array({idx[0], idx[1], idx[2]})}, {"coeff", c.str()}});
    return Json{{"n", t.n}, {"basis", "elementary"}, {"entries", std::move(entries)},
                {"positive", t.positive}};
}

inline Json json_of(const EgfSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(json_of(c));
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline Json json_of_histogram(const std::map<int, BigInt>& h) {
    Json out = Json::array();
    for (const auto& [k, c] : h)
        out.push_back({{"index", Json::array({k})}, {"count", c.str()}});
    return out;
}

inline Json json_of_histogram(const std::map<std::array<int, 3>, BigInt>& h) {
    Json out = Json::array();
    for (const auto& [idx, c] : h)
        out.push_back({{"index", Json::array({idx[0], idx[1], idx[2]})}, {"count", c.str()}});
    return out;
}

inline Json json_of_subtree(const PlaneTree& t, int v) {
    Json kids = Json::array();
    for (int c : t.children(v)) kids.push_back(json_of_subtree(t, c));
    return Json{{"label", v}, {"children", std::move(kids)}};
}

inline Json json_of(const PlaneTree& t) { return json_of_subtree(t, 1); }

inline Json json_of(const CheckResult& c) {
    Json out{{"suite", c.suite}, {"name", c.name}, {"input", c.input}, {"pass", c.pass}};
    if (!c.pass) {
        out["expected"] = c.expected;
        out["actual"] = c.actual;
    }
    return out;
}

inline Json json_of(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(json_of(c));
    return Json{{"suite", r.suite},
                {"max_n", r.max_n},
                {"seed", r.seed},
                {"pass", r.all_pass()},
                {"checks", std::move(checks)}};
}

}  // namespace gramcalc
