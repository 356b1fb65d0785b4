#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simstab/interval.hpp"
#include "simstab/rational.hpp"

namespace simstab {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree order. The coefficient list never ends in a zero, so the
/// zero polynomial is the empty list and degree() is -1 for it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);
  /// Constant polynomial.
  static Poly constant(const Rational& c);
  /// c * x^k.
  static Poly monomial(const Rational& c, int k);
  /// a*x + b.
  static Poly linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(int k) const;
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Multiplication by x^k.
  Poly shift(int k) const;
  Poly derivative() const;
  Poly pow(int exponent) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Poly monic() const;
  /// Coefficients restricted to degrees [0, max_degree].
  Poly truncated(int max_degree) const;

  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> z) const;
  Interval operator()(const Interval& x) const;

  /// Positive rational c with c * p having coprime integer coefficients
  /// (sign preserved). Throws for the zero polynomial.
  Rational primitive_scale() const;
  /// Integer coefficients of primitive_scale() * p.
  std::vector<Integer> primitive_integer_coeffs() const;

  /// Human-readable rendering with the given variable name.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b over the rationals. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor by the Euclidean algorithm. Throws when
/// both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// (c*x + d)^n * p((a*x + b)/(c*x + d)) with n = deg p. Requires ad - bc != 0.
Poly mobius_substitute(const Poly& p, const Rational& a, const Rational& b,
                       const Rational& c, const Rational& d);

/// Polynomial with the coefficient order reversed: x^n p(1/x).
Poly reversed(const Poly& p);

}  // namespace simstab
