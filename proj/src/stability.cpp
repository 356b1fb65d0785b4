#include "simstab/stability.hpp"

#include <algorithm>

#include "simstab/errors.hpp"

namespace simstab {

std::string_view to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Stable: return "Stable";
    case StabilityStatus::Marginal: return "Marginal";
    case StabilityStatus::Unstable: return "Unstable";
  }
  return "?";
}

StabilityStatus parse_stability_status(std::string_view text) {
  if (text == "Stable") return StabilityStatus::Stable;
  if (text == "Marginal") return StabilityStatus::Marginal;
  if (text == "Unstable") return StabilityStatus::Unstable;
  throw ParseError("unknown stability status '" + std::string(text) + "'");
}

std::string_view to_string(StabilityWitness::Kind k) {
  switch (k) {
    case StabilityWitness::Kind::CoefficientSign: return "coefficient_sign";
    case StabilityWitness::Kind::HurwitzMinor: return "hurwitz_minor";
    case StabilityWitness::Kind::BoundaryRoot: return "boundary_root";
    case StabilityWitness::Kind::RootAtOne: return "root_at_one";
  }
  return "?";
}

StabilityWitness::Kind parse_witness_kind(std::string_view text) {
  for (auto k : {StabilityWitness::Kind::CoefficientSign, StabilityWitness::Kind::HurwitzMinor,
                 StabilityWitness::Kind::BoundaryRoot, StabilityWitness::Kind::RootAtOne})
    if (to_string(k) == text) return k;
  throw ParseError("unknown witness kind '" + std::string(text) + "'");
}

std::string_view to_string(IntervalProof p) {
  switch (p) {
    case IntervalProof::Proved: return "Proved";
    case IntervalProof::Disproved: return "Disproved";
    case IntervalProof::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

// Determinant by Gaussian elimination with row pivoting over the rationals.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Polynomial made of the coefficients with index parity `parity`.
Poly parity_part(const Poly& p, int parity) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (static_cast<int>(i % 2) != parity) v[i] = 0;
  return Poly(std::move(v));
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Number of distinct positive real roots of a squarefree polynomial s with
// s(0) != 0, by a Sturm sequence.
int positive_real_roots(const Poly& s) {
  std::vector<Poly> seq{s, s.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  std::vector<int> at_zero, at_inf;
  for (const auto& q : seq) {
    if (q.is_zero()) continue;
    at_zero.push_back(sgn(q.coeff(0)));
    at_inf.push_back(sgn(q.leading()));
  }
  return sign_changes(at_zero) - sign_changes(at_inf);
}

// g satisfies g(-s) = +-g(s). True when every root of g is on the imaginary
// axis.
bool roots_on_imaginary_axis(const Poly& g) {
  int low = 0;
  while (g.coeff(low) == 0) ++low;
  // g = s^low * G(s^2); H(u) = G(-u) must have only real positive roots.
  std::vector<Rational> h;
  for (int k = low, i = 0; k <= g.degree(); k += 2, ++i) h.push_back(i % 2 == 0 ? g.coeff(k) : Rational(-g.coeff(k)));
  const Poly H(std::move(h));
  if (H.degree() <= 0) return true;
  const Poly sq = divmod(H, gcd(H, H.derivative())).first;
  return positive_real_roots(sq) == sq.degree();
}

StabilityVerdict classify_unstable_hurwitz(const Poly& p, StabilityWitness first_failure) {
  const Poly even = parity_part(p, 0), odd = parity_part(p, 1);
  const Poly g = gcd(even, odd);
  if (g.degree() <= 0) return {StabilityStatus::Unstable, first_failure};
  const Poly rest = divmod(p, g).first;
  if (rest.degree() > 0 && !is_hurwitz(rest).stable()) return {StabilityStatus::Unstable, first_failure};
  if (roots_on_imaginary_axis(g))
    return {StabilityStatus::Marginal, StabilityWitness{StabilityWitness::Kind::BoundaryRoot, -1}};
  return {StabilityStatus::Unstable, first_failure};
}

}  // namespace

std::vector<Rational> hurwitz_minors(const Poly& p) {
  if (p.degree() < 1) throw InvalidArgument("Hurwitz minors need a polynomial of degree >= 1");
  const int n = p.degree();
  // Descending coefficients b_k = coefficient of s^(n-k); H[i][j] = b_{2j-i+1}.
  auto b = [&](int k) { return (k < 0 || k > n) ? Rational(0) : p.coeff(n - k); };
  std::vector<Rational> minors;
  for (int size = 1; size <= n; ++size) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b(2 * j - i + 1);
    minors.push_back(determinant(std::move(m)));
  }
  return minors;
}

std::vector<Integer> routh_minors(const Poly& p) {
  if (p.degree() < 1) throw InvalidArgument("Hurwitz minors need a polynomial of degree >= 1");
  std::vector<Integer> a = p.primitive_integer_coeffs();
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  const int n = p.degree();
  const std::size_t width = static_cast<std::size_t>(n) / 2 + 2;
  // Row k holds Delta_{k-1} times the k-th classical Routh row.
  std::vector<std::vector<Integer>> rows(2, std::vector<Integer>(width));
  for (int k = 0; k <= n; ++k) rows[static_cast<std::size_t>(k % 2)][static_cast<std::size_t>(k / 2)] = a[static_cast<std::size_t>(n - k)];
  std::vector<Integer> minors{rows[1][0]};
  if (minors.back() == 0) return minors;
  Integer divisor, tmp;
  for (int i = 2; i <= n; ++i) {
    const auto& A = rows[rows.size() - 2];
    const auto& B = rows.back();
    // Row i is exactly divisible by Delta_{i-3}.
    divisor = i >= 4 ? rows[static_cast<std::size_t>(i - 3)][0] : Integer(1);
    std::vector<Integer> next(width);
    for (std::size_t j = 0; j + 1 < width; ++j) {
      next[j] = B[0] * A[j + 1];
      tmp = A[0] * B[j + 1];
      next[j] -= tmp;
      if (divisor != 1) mpz_divexact(next[j].get_mpz_t(), next[j].get_mpz_t(), divisor.get_mpz_t());
    }
    rows.push_back(std::move(next));
    // Only the leading entry of older rows is needed from here on.
    if (i >= 3) rows[static_cast<std::size_t>(i - 3)].resize(1);
    minors.push_back(rows.back()[0]);
    if (minors.back() == 0) break;
  }
  return minors;
}

StabilityVerdict is_hurwitz(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("stability of the zero polynomial is undefined");
  if (p.degree() == 0) return {StabilityStatus::Stable, std::nullopt};
  const int sign = sgn(p.leading());
  std::optional<StabilityWitness> failure;
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(p.coeff(k)) != sign) {
      failure = StabilityWitness{StabilityWitness::Kind::CoefficientSign, k};
      break;
    }
  }
  if (!failure) {
    const auto minors = routh_minors(p);
    for (std::size_t i = 0; i < minors.size(); ++i) {
      if (minors[i] <= 0) {
        failure = StabilityWitness{StabilityWitness::Kind::HurwitzMinor, static_cast<int>(i) + 1};
        break;
      }
    }
    if (!failure) return {StabilityStatus::Stable, std::nullopt};
  }
  return classify_unstable_hurwitz(p, *failure);
}

StabilityVerdict is_schur(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("stability of the zero polynomial is undefined");
  if (p.degree() == 0) return {StabilityStatus::Stable, std::nullopt};
  if (p(Rational(1)) == 0) {
    Poly rest = p;
    const Poly factor = Poly::linear(1, -1);
    while (rest(Rational(1)) == 0) rest = divmod(rest, factor).first;
    if (is_schur(rest).status == StabilityStatus::Unstable) {
      return {StabilityStatus::Unstable, StabilityWitness{StabilityWitness::Kind::RootAtOne, -1}};
    }
    return {StabilityStatus::Marginal, StabilityWitness{StabilityWitness::Kind::RootAtOne, -1}};
  }
  const Poly integral = p.primitive_scale() * p;
  return is_hurwitz(mobius_substitute(integral, 1, -1, 1, 1));
}

StabilityVerdict is_stable(const Poly& p, Domain domain) {
  return domain == Domain::Continuous ? is_hurwitz(p) : is_schur(p);
}

bool is_unit(const TransferFunction& c) {
  if (c.domain() != Domain::Discrete) throw DomainMismatch("unit controllers are defined for the discrete domain");
  if (c.num().is_zero()) return false;
  return is_schur(c.num()).stable() && is_schur(c.den()).stable();
}

Rational lemma3_constant() { return make_rational(4655, 10000); }

bool lemma3_sufficient(const Poly& p) {
  const int n = p.degree();
  if (n < 3) throw InvalidArgument("the sufficient Hurwitz condition needs degree >= 3");
  for (int i = 0; i <= n; ++i)
    if (p.coeff(i) <= 0) return false;
  const Rational k = lemma3_constant();
  for (int i = 1; i <= n - 2; ++i)
    if (p.coeff(i - 1) * p.coeff(i + 2) > k * p.coeff(i) * p.coeff(i + 1)) return false;
  return true;
}

IntervalProof interval_hurwitz(const IntervalPoly& p) {
  const auto cs = p.coeffs();
  const int n = p.size_degree();
  if (n < 0) return IntervalProof::Disproved;
  bool any_pos = false, any_neg = false, all_zero = true;
  int top_nonzero = -1;
  for (int k = 0; k <= n; ++k) {
    const Interval& c = cs[static_cast<std::size_t>(k)];
    any_pos |= c.certainly_positive();
    any_neg |= c.certainly_negative();
    all_zero &= c.is_zero();
    if (!c.contains_zero()) top_nonzero = k;
  }
  if (all_zero) return IntervalProof::Disproved;
  if (any_pos && any_neg) return IntervalProof::Disproved;
  for (int k = 0; k < top_nonzero; ++k)
    if (cs[static_cast<std::size_t>(k)].is_zero()) return IntervalProof::Disproved;

  for (const auto& c : cs)
    if (c.contains_zero()) return IntervalProof::Unknown;
  std::vector<Interval> a(cs.begin(), cs.end());
  if (any_neg)
    for (auto& c : a) c = -c;
  if (n <= 2) return IntervalProof::Proved;

  const Interval k = Interval::enclose(lemma3_constant());
  bool ratio_ok = true;
  for (int i = 1; i <= n - 2 && ratio_ok; ++i) {
    const auto u = static_cast<std::size_t>(i);
    ratio_ok = (a[u - 1] * a[u + 2]).hi() <= (k * a[u] * a[u + 1]).lo();
  }
  if (ratio_ok) return IntervalProof::Proved;

  // Interval Routh array on descending coefficients.
  const std::size_t width = static_cast<std::size_t>(n) / 2 + 2;
  std::vector<Interval> prev(width, Interval(0.0)), cur(width, Interval(0.0));
  for (int j = 0; j <= n; ++j) (j % 2 == 0 ? prev : cur)[static_cast<std::size_t>(j / 2)] = a[static_cast<std::size_t>(n - j)];
  // A certainly negative entry after positive ones means a negative minor.
  for (int row = 2; row <= n; ++row) {
    if (cur[0].certainly_negative()) return IntervalProof::Disproved;
    if (!cur[0].certainly_positive()) return IntervalProof::Unknown;
    const Interval ratio = prev[0] / cur[0];
    std::vector<Interval> next(width, Interval(0.0));
    for (std::size_t j = 0; j + 1 < width; ++j) next[j] = prev[j + 1] - ratio * cur[j + 1];
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (cur[0].certainly_negative()) return IntervalProof::Disproved;
  return cur[0].certainly_positive() ? IntervalProof::Proved : IntervalProof::Unknown;
}

IntervalProof interval_schur(const IntervalPoly& p) {
  if (p.size_degree() <= 0) return interval_hurwitz(p);
  return interval_hurwitz(mobius_substitute(p, 1, -1, 1, 1));
}

}  // namespace simstab
