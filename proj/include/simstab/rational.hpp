#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace simstab {

/// Exact rational number. GMP keeps mpq values canonical (reduced, positive
/// denominator) as long as they are built through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws InvalidArgument when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "p/q", or a finite decimal such as "-0.4655" or "1e-7".
/// The conversion is exact; anything else raises ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Exact value of a finite double.
Rational from_double(double value);

double to_double(const Rational& value);

Rational abs(const Rational& value);

/// base^exponent for exponent >= 0; negative exponents invert the base.
Rational pow(const Rational& base, long exponent);

/// Best rational approximation of x with denominator at most max_den,
/// via continued-fraction convergents and semiconvergents.
Rational best_rational_approximation(const Rational& x, const Integer& max_den);

}  // namespace simstab
