#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fcrs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
BigInt ipow(std::int64_t base, int exp);
Rational rpow(const Rational& base, int exp);

double to_double(const Rational& r);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_fraction(const Rational& r);

/// Decimal rendering with `significant` significant digits (printf %.*g).
std::string to_decimal(const Rational& r, int significant = 12);
std::string to_decimal(double v, int significant = 12);

/// Parses "p", "p/q" or a finite decimal such as "0.25" exactly.
Rational parse_rational(const std::string& text);

}  // namespace fcrs
