#pragma once

#include <span>
#include <vector>

#include "simstab/interval.hpp"
#include "simstab/poly.hpp"

namespace simstab {

/// Polynomial with interval coefficients (ascending degree). Represents the
/// set of all point polynomials obtained by picking one value per interval.
class IntervalPoly {
 public:
  IntervalPoly() = default;
  explicit IntervalPoly(std::vector<Interval> coeffs) : coeffs_(std::move(coeffs)) {}
  static IntervalPoly enclose(const Poly& p);

  /// Number of stored coefficients minus one; the true degree of a member
  /// may be lower when top intervals contain zero.
  int size_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Interval coeff(int k) const;
  std::span<const Interval> coeffs() const { return coeffs_; }

  friend IntervalPoly operator+(const IntervalPoly& a, const IntervalPoly& b);
  friend IntervalPoly operator*(const IntervalPoly& a, const IntervalPoly& b);

  Interval operator()(const Interval& x) const;

  /// Containment check for a point polynomial.
  bool contains(const Poly& p) const;

 private:
  std::vector<Interval> coeffs_;
};

/// Interval counterpart of mobius_substitute for integer-valued maps.
IntervalPoly mobius_substitute(const IntervalPoly& p, int a, int b, int c, int d);

}  // namespace simstab
