#include "simstab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "simstab/errors.hpp"

namespace simstab {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw InvalidArgument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& a, const Rational& b) { return Poly({b, a}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
  const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
  std::vector<Rational> r = big;
  for (std::size_t i = 0; i < small.size(); ++i) r[i] += small[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c == 0) return {};
  Poly r = p;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Poly Poly::shift(int k) const {
  if (k < 0) throw InvalidArgument("negative shift");
  if (is_zero()) return {};
  std::vector<Rational> r(static_cast<std::size_t>(k));
  r.insert(r.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(r));
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) throw InvalidArgument("negative polynomial power");
  Poly result = constant(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return (Rational(1) / leading()) * *this;
}

Poly Poly::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  if (max_degree >= degree()) return *this;
  return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

Interval Poly::operator()(const Interval& x) const {
  Interval acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval::enclose(*it);
  return acc;
}

Rational Poly::primitive_scale() const {
  if (is_zero()) throw InvalidArgument("zero polynomial has no primitive form");
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  return make_rational(den_lcm, num_gcd);
}

std::vector<Integer> Poly::primitive_integer_coeffs() const {
  const Rational scale = primitive_scale();
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Rational v = c * scale;
    out.push_back(v.get_num());
  }
  return out;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) {
      if (mag.get_den() != 1 && k > 0)
        os << '(' << simstab::to_string(mag) << ')';
      else
        os << simstab::to_string(mag);
    }
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv_lead = Rational(1) / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  // Work on primitive multiples to keep coefficient growth in check.
  Poly x = a.is_zero() ? a : a.primitive_scale() * a;
  Poly y = b.is_zero() ? b : b.primitive_scale() * b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_scale() * r;
  }
  return x.monic();
}

Poly mobius_substitute(const Poly& p, const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d) {
  if (a * d - b * c == 0) throw InvalidArgument("degenerate Mobius map (ad - bc = 0)");
  if (p.degree() <= 0) return p;
  // Homogeneous Horner: sum_k p_k (ax+b)^k (cx+d)^(n-k).
  const int n = p.degree();
  auto times_linear = [](const std::vector<Rational>& v, const Rational& lin, const Rational& con) {
    std::vector<Rational> r(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (con != 0) r[i] += con * v[i];
      if (lin != 0) r[i + 1] += lin * v[i];
    }
    return r;
  };
  std::vector<Rational> acc{p.coeff(n)};
  std::vector<Rational> denom_pow{Rational(1)};
  for (int k = n - 1; k >= 0; --k) {
    denom_pow = times_linear(denom_pow, c, d);
    acc = times_linear(acc, a, b);
    const Rational pk = p.coeff(k);
    if (pk != 0)
      for (std::size_t i = 0; i < denom_pow.size(); ++i) acc[i] += pk * denom_pow[i];
  }
  return Poly(std::move(acc));
}

Poly reversed(const Poly& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  std::reverse(v.begin(), v.end());
  return Poly(std::move(v));
}

}  // namespace simstab
