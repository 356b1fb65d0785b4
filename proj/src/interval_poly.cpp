#include "simstab/interval_poly.hpp"

#include "simstab/errors.hpp"

namespace simstab {

IntervalPoly IntervalPoly::enclose(const Poly& p) {
  std::vector<Interval> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(Interval::enclose(c));
  return IntervalPoly(std::move(v));
}

Interval IntervalPoly::coeff(int k) const {
  if (k < 0 || k > size_degree()) return Interval(0.0);
  return coeffs_[static_cast<std::size_t>(k)];
}

IntervalPoly operator+(const IntervalPoly& a, const IntervalPoly& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Interval> r(n, Interval(0.0));
  for (std::size_t i = 0; i < n; ++i)
    r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntervalPoly(std::move(r));
}

IntervalPoly operator*(const IntervalPoly& a, const IntervalPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Interval> r(a.coeffs_.size() + b.coeffs_.size() - 1, Interval(0.0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntervalPoly(std::move(r));
}

Interval IntervalPoly::operator()(const Interval& x) const {
  Interval acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IntervalPoly::contains(const Poly& p) const {
  const int n = std::max(size_degree(), p.degree());
  for (int k = 0; k <= n; ++k)
    if (!coeff(k).contains(p.coeff(k))) return false;
  return true;
}

IntervalPoly mobius_substitute(const IntervalPoly& p, int a, int b, int c, int d) {
  if (a * d - b * c == 0) throw InvalidArgument("degenerate Mobius map (ad - bc = 0)");
  const int n = p.size_degree();
  if (n <= 0) return p;
  auto times_linear = [](const std::vector<Interval>& v, int lin, int con) {
    std::vector<Interval> r(v.size() + 1, Interval(0.0));
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i] += Interval(static_cast<double>(con)) * v[i];
      r[i + 1] += Interval(static_cast<double>(lin)) * v[i];
    }
    return r;
  };
  std::vector<Interval> acc{p.coeff(n)};
  std::vector<Interval> denom_pow{Interval(1.0)};
  for (int k = n - 1; k >= 0; --k) {
    denom_pow = times_linear(denom_pow, c, d);
    acc = times_linear(acc, a, b);
    const Interval pk = p.coeff(k);
    for (std::size_t i = 0; i < denom_pow.size(); ++i) acc[i] += pk * denom_pow[i];
  }
  return IntervalPoly(std::move(acc));
}

}  // namespace simstab
