#include "simstab/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "simstab/errors.hpp"

namespace simstab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return x == 0.0 ? -std::numeric_limits<double>::denorm_min() : std::nextafter(x, -kInf); }
double up(double x) { return x == 0.0 ? std::numeric_limits<double>::denorm_min() : std::nextafter(x, kInf); }

// Products of infinities with zero are taken as zero, which is the right
// limit for interval multiplication.
double mul0(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi)
    throw InvalidArgument("interval endpoints out of order");
}

Interval Interval::enclose(const Rational& value) {
  double d = value.get_d();  // truncates toward zero: within one ulp
  if (from_double(d) == value) return Interval(d);
  return Interval(std::nextafter(d, -kInf), std::nextafter(d, kInf));
}

Interval Interval::enclose(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw InvalidArgument("interval endpoints out of order");
  return Interval(enclose(lo).lo(), enclose(hi).hi());
}

bool Interval::contains(const Rational& x) const {
  if (std::isfinite(lo_) && x < from_double(lo_)) return false;
  if (std::isfinite(hi_) && x > from_double(hi_)) return false;
  return true;
}

Interval operator+(const Interval& a, const Interval& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Interval(down(a.lo_ + b.lo_), up(a.hi_ + b.hi_));
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_zero() || b.is_zero()) return Interval(0.0);
  const double p[4] = {mul0(a.lo_, b.lo_), mul0(a.lo_, b.hi_), mul0(a.hi_, b.lo_),
                       mul0(a.hi_, b.hi_)};
  const auto [mn, mx] = std::minmax_element(p, p + 4);
  return Interval(down(*mn), up(*mx));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw InvalidArgument("interval division by an interval containing zero");
  const double q[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
  const auto [mn, mx] = std::minmax_element(q, q + 4);
  return Interval(down(*mn), up(*mx));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.lo_ << ", " << iv.hi_ << ']';
}

}  // namespace simstab
