#include "fcrs/rational.hpp"

#include "fcrs/errors.hpp"

#include <cctype>
#include <cstdio>

namespace fcrs {

BigInt floor_of(const Rational& r) {
  BigInt num = numerator_of(r);
  BigInt den = denominator_of(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

BigInt ipow(std::int64_t base, int exp) {
  BigInt result = 1;
  BigInt b = base;
  for (int i = 0; i < exp; ++i) result *= b;
  return result;
}

Rational rpow(const Rational& base, int exp) {
  Rational result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction(const Rational& r) {
  BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

std::string to_decimal(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

std::string to_decimal(const Rational& r, int significant) {
  return to_decimal(to_double(r), significant);
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return ParameterError("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw bad();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-' || text[pos] == '+') negative = text[pos++] == '-';
  BigInt digits = 0;
  BigInt scale = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      digits = digits * 10 + (c - '0');
      if (seen_point) scale *= 10;
    } else {
      throw bad();
    }
  }
  if (!seen_digit) throw bad();
  Rational value(digits, scale);
  return negative ? Rational(-value) : value;
}

}  // namespace fcrs
