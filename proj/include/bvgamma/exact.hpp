#pragma once

// Exact rational arithmetic for weight lists and harmonic-type scale factors.

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bvgamma {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-2/7", "0.125", "1e-3" or "2.5E+2" into an exact rational.
/// Decimal input is read digit by digit, so "0.1" becomes exactly 1/10.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Exact rational value of a finite double (every double is dyadic).
Rational from_double(double x);

/// H_n = 1 + 1/2 + ... + 1/n, exact.
Rational harmonic(unsigned n);

/// H_n in floating point, summed from the small terms up.
double harmonic_double(unsigned long n);

}  // namespace bvgamma
