#pragma once

#include <string>
#include <string_view>

#include "simstab/poly.hpp"

namespace simstab {

/// Time domain of a plant or controller: continuous (variable s, Hurwitz
/// stability) or discrete (variable z, roots outside the closed unit disk).
enum class Domain { Continuous, Discrete };

std::string_view domain_tag(Domain d);        // "s" or "z"
Domain parse_domain(std::string_view tag);    // accepts "s"/"z" and long names
std::string_view domain_variable(Domain d);

/// SISO rational transfer function num/den, always held in reduced form:
/// coprime, monic denominator, zero function stored as 0/1.
class TransferFunction {
 public:
  TransferFunction() : TransferFunction(Poly{}, Poly::constant(1), Domain::Continuous) {}
  /// Reduces on construction; throws InvalidArgument on a zero denominator.
  TransferFunction(Poly num, Poly den, Domain domain);
  static TransferFunction constant(const Rational& c, Domain domain);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  Domain domain() const { return domain_; }
  bool is_zero() const { return num_.is_zero(); }
  /// deg num <= deg den.
  bool is_proper() const { return num_.degree() <= den_.degree(); }
  /// max(deg num, deg den).
  int order() const;

  TransferFunction scaled(const Rational& k) const;

  friend bool operator==(const TransferFunction&, const TransferFunction&) = default;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
  Domain domain_;
};

/// Canonical representative of num/den. Equality of transfer functions is
/// equality of their reduced forms.
TransferFunction reduce(const TransferFunction& tf);

}  // namespace simstab
