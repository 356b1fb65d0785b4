#include "simstab/transfer_function.hpp"

#include <optional>

#include "simstab/errors.hpp"

namespace simstab {

std::string_view domain_tag(Domain d) { return d == Domain::Continuous ? "s" : "z"; }

std::string_view domain_variable(Domain d) { return domain_tag(d); }

Domain parse_domain(std::string_view tag) {
  if (tag == "s" || tag == "continuous" || tag == "Continuous") return Domain::Continuous;
  if (tag == "z" || tag == "discrete" || tag == "Discrete") return Domain::Discrete;
  throw ParseError("unknown domain '" + std::string(tag) + "' (expected \"s\" or \"z\")");
}

namespace {

// If p = c (x - r)^k with k >= 1, returns r.
std::optional<Rational> pure_power_root(const Poly& p) {
  const int k = p.degree();
  if (k < 1) return std::nullopt;
  const Rational r = -p.coeff(k - 1) / (p.leading() * k);
  if (k == 1) return r;
  if (p.leading() * Poly::linear(1, -r).pow(k) != p) return std::nullopt;
  return r;
}

// Largest power of (x - r) dividing p, as a polynomial.
Poly linear_power_gcd(const Poly& p, const Rational& r) {
  Poly rest = p;
  int mult = 0;
  const Poly factor = Poly::linear(1, -r);
  while (!rest.is_zero() && rest(r) == 0) {
    rest = divmod(rest, factor).first;
    ++mult;
  }
  return factor.pow(mult);
}

// Large controllers (e.g. q((s-1)/(s+1)) (s+1)^d) have a pure-power
// denominator; skip the Euclidean algorithm for them.
Poly reduced_gcd(const Poly& num, const Poly& den) {
  if (num.degree() == 0 || den.degree() == 0) return Poly::constant(1);
  if (auto r = pure_power_root(den)) {
    Poly g = linear_power_gcd(num, *r);
    return g.degree() > den.degree() ? Poly::linear(1, -*r).pow(den.degree()) : g;
  }
  if (auto r = pure_power_root(num)) {
    Poly g = linear_power_gcd(den, *r);
    return g.degree() > num.degree() ? Poly::linear(1, -*r).pow(num.degree()) : g;
  }
  return gcd(num, den);
}

}  // namespace

TransferFunction::TransferFunction(Poly num, Poly den, Domain domain)
    : num_(std::move(num)), den_(std::move(den)), domain_(domain) {
  if (den_.is_zero()) throw InvalidArgument("transfer function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = reduced_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

TransferFunction TransferFunction::constant(const Rational& c, Domain domain) {
  return TransferFunction(Poly::constant(c), Poly::constant(1), domain);
}

int TransferFunction::order() const { return std::max(num_.degree(), den_.degree()); }

TransferFunction TransferFunction::scaled(const Rational& k) const {
  return TransferFunction(k * num_, den_, domain_);
}

std::string TransferFunction::to_string() const {
  const std::string var(domain_variable(domain_));
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

TransferFunction reduce(const TransferFunction& tf) {
  return TransferFunction(tf.num(), tf.den(), tf.domain());
}

}  // namespace simstab
