#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace rf {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Renders "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with optional leading sign.
Rational parse_rational(const std::string& text);

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long p, long q) { return Rational(p) / Rational(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace rf
