#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gramcalc/polynomial.hpp"

namespace gramcalc {

struct RandomPolyOptions {
    int max_terms = 4;      // terms drawn before cancellation, at least 1
    int min_exponent = 0;   // per-variable exponent range, inclusive
    int max_exponent = 3;
    int max_abs_coeff = 9;  // nonzero coefficients in [-max_abs_coeff, max_abs_coeff]
};

// Seeded random Laurent polynomial over the given variables.  Draws with
// plain modulo so a fixed seed reproduces the same polynomial on any
// standard library; cancellation may shrink or zero the result.
inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                    const RandomPolyOptions& opt = {}) {
    auto pick = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int nterms = pick(1, opt.max_terms < 1 ? 1 : opt.max_terms);
    std::map<Monomial, BigInt> terms;
    for (int t = 0; t < nterms; ++t) {
        std::vector<std::pair<std::string, int>> exps;
        for (const auto& v : vars) {
            int e = pick(opt.min_exponent, opt.max_exponent);
            if (e != 0) exps.emplace_back(v, e);
        }
        int c = 0;
        while (c == 0) c = pick(-opt.max_abs_coeff, opt.max_abs_coeff);
        terms[Monomial::from_exponents(exps)] += c;
    }
    return Polynomial::from_terms(std::move(terms), vars);
}

}  // namespace gramcalc
