#include "pgc/decimal.hpp"

#include <cstdlib>

namespace pgc {

Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& msg, std::size_t pos) -> Rational {
    throw ParseError("bad decimal literal '" + std::string(text) + "': " + msg, pos);
  };

  if (n == 0) return fail("empty", 0);

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }

  Int mantissa = 0;
  std::size_t int_digits = 0;
  while (i < n && text[i] >= '0' && text[i] <= '9') {
    mantissa = mantissa * 10 + (text[i] - '0');
    ++int_digits;
    ++i;
  }

  std::size_t frac_digits = 0;
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
      mantissa = mantissa * 10 + (text[i] - '0');
      ++frac_digits;
      ++i;
    }
    if (frac_digits == 0) return fail("missing digits after '.'", i);
  }
  if (int_digits == 0 && frac_digits == 0) return fail("missing digits", i);

  long exponent = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    std::size_t exp_digits = 0;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
      exponent = exponent * 10 + (text[i] - '0');
      ++exp_digits;
      ++i;
    }
    if (exp_digits == 0) return fail("missing exponent digits", i);
    if (exp_negative) exponent = -exponent;
  }
  if (i != n) return fail(std::string("unexpected character '") + text[i] + "'", i);

  if (negative) mantissa = -mantissa;
  long scale = exponent - static_cast<long>(frac_digits);
  if (scale >= 0) return Rational(mantissa * pow10(static_cast<unsigned>(scale)));
  return Rational(mantissa, pow10(static_cast<unsigned>(-scale)));
}

std::string to_decimal_string(const Rational& r, unsigned frac_digits) {
  Int scaled_num = r.num() * pow10(frac_digits);
  if (scaled_num % r.den() != 0)
    throw DomainError("rational " + r.str() + " has no exact " +
                      std::to_string(frac_digits) + "-digit decimal expansion");
  Int v = scaled_num / r.den();
  bool negative = v < 0;
  std::string digits = (negative ? Int(-v) : v).str();
  if (digits.size() <= frac_digits)
    digits.insert(0, frac_digits + 1 - digits.size(), '0');
  std::string out;
  if (negative) out += '-';
  out += digits.substr(0, digits.size() - frac_digits);
  if (frac_digits > 0) {
    out += '.';
    out += digits.substr(digits.size() - frac_digits);
  }
  return out;
}

Rational decimal_floor(const Rational& r, unsigned digits) {
  Int scale = pow10(digits);
  return Rational(floor_div(r.num() * scale, r.den()), scale);
}

Rational decimal_ceil(const Rational& r, unsigned digits) {
  Int scale = pow10(digits);
  return Rational(ceil_div(r.num() * scale, r.den()), scale);
}

}  // namespace pgc
