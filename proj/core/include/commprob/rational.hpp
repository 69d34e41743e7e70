#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace commprob {

// Exact arithmetic. Probabilities of direct products multiply up to eight
// fractions with five-digit denominators, which overflows any fixed-width
// integer, so both types are arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(BigInt num, BigInt den) { return Rational(std::move(num), std::move(den)); }

// Always "num/den" with den >= 1 and gcd(num, den) == 1, e.g. "5/8", "1/1", "-3/4".
std::string rational_str(const Rational& r);

// Accepts "num/den" or a bare integer "num". Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

double rational_double(const Rational& r);

// r^e for e >= 0.
Rational rational_pow(const Rational& r, unsigned e);

}  // namespace commprob
