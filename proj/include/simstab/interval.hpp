#pragma once

#include <iosfwd>

#include "simstab/rational.hpp"

namespace simstab {

/// Closed floating-point interval [lo, hi]. Every operation widens its
/// result outward by one ulp per endpoint, so the exact real result of the
/// operation on any points of the operands is always enclosed.
class Interval {
 public:
  Interval() = default;
  explicit Interval(double point) : Interval(point, point) {}
  Interval(double lo, double hi);

  /// Tightest-ish double enclosure of an exact rational.
  static Interval enclose(const Rational& value);
  /// Enclosure of [lo, hi] with rational endpoints.
  static Interval enclose(const Rational& lo, const Rational& hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double mid() const { return lo_ / 2 + hi_ / 2; }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& x) const;
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool certainly_positive() const { return lo_ > 0.0; }
  bool certainly_negative() const { return hi_ < 0.0; }
  bool is_zero() const { return lo_ == 0.0 && hi_ == 0.0; }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws InvalidArgument when the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Interval& iv);

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

}  // namespace simstab
