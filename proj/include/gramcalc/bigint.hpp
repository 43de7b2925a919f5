#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace gramcalc {

// All coefficient arithmetic is exact, arbitrary precision, and header-only.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, int exponent) {
    if (exponent < 0) throw std::domain_error("big_pow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// 1 * 3 * 5 * ... * (2n-1), the number of Stirling permutations of [n]_2.
inline BigInt odd_double_factorial(int n) {
    if (n < 0) throw std::domain_error("odd_double_factorial: negative argument");
    BigInt r = 1;
    for (int i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

}  // namespace gramcalc
