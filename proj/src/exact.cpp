#include "bvgamma/exact.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bvgamma {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool seen_digit = false;
  bool in_fraction = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (in_fraction) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !in_fraction) {
      in_fraction = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("not a number: " + std::string(s));
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("not a number: " + std::string(s));
    ++pos;
    bool exp_negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      exp_negative = s[pos] == '-';
      ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("not a number: " + std::string(s));
    for (; pos < s.size(); ++pos) {
      const char c = s[pos];
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("not a number: " + std::string(s));
      exponent = exponent * 10 + (c - '0');
      if (exponent > 4000) throw std::invalid_argument("exponent out of range: " + std::string(s));
    }
    if (exp_negative) exponent = -exponent;
  }
  exponent -= frac_digits;
  Rational r = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                             : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-r) : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);
  const Rational num = parse_decimal(trim(s.substr(0, slash)));
  const Rational den = parse_decimal(trim(s.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  return num / den;
}

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  return Rational(x);
}

Rational harmonic(unsigned n) {
  Rational h = 0;
  for (unsigned k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

double harmonic_double(unsigned long n) {
  long double h = 0.0L;
  for (unsigned long k = n; k >= 1; --k) h += 1.0L / static_cast<long double>(k);
  return static_cast<double>(h);
}

}  // namespace bvgamma
