#include "simstab/proof_construction.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "simstab/champagne.hpp"
#include "simstab/errors.hpp"
#include "simstab/synthesis.hpp"

namespace simstab {

Rational SeriesPoly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(k)] : Rational(0);
}

std::complex<double> SeriesPoly::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

namespace {

using Coeffs = std::vector<Rational>;

// Product truncated to degree k, skipping zero terms of the sparser side.
Coeffs mul_trunc(const Coeffs& a, const Coeffs& b, int k) {
  Coeffs out(static_cast<std::size_t>(k + 1));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= k; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

SeriesPoly extremal_series(int product_terms, int max_degree) {
  if (product_terms < 1 || max_degree < 1) throw InvalidArgument("extremal_series needs N, K >= 1");
  const int k = max_degree - 1;  // the leading z factor is applied last
  Coeffs prod(static_cast<std::size_t>(k + 1));
  prod[0] = 1;
  for (int n = 1; n <= product_terms; ++n) {
    const int odd = 2 * n - 1, even = 2 * n;
    if (odd > k) break;
    // (1 + z^even) * sum_j (-z^odd)^j
    Coeffs factor(static_cast<std::size_t>(k + 1));
    for (int j = 0, sign = 1; j * odd <= k; ++j, sign = -sign) {
      factor[static_cast<std::size_t>(j * odd)] += sign;
      if (j * odd + even <= k) factor[static_cast<std::size_t>(j * odd + even)] += sign;
    }
    prod = mul_trunc(prod, factor, k);
  }
  for (int i = 0; i < 3; ++i) prod = mul_trunc(prod, prod, k);
  SeriesPoly f;
  f.coeffs.reserve(static_cast<std::size_t>(max_degree + 1));
  f.coeffs.emplace_back(0);
  f.coeffs.insert(f.coeffs.end(), prod.begin(), prod.end());
  return f;
}

namespace {

// Largest radius (capped at 0.95) where the upper half of the series has
// coefficients contributing less than tol.
double trusted_radius(const SeriesPoly& f, double tol) {
  double r = 0.95;
  const int n = f.order();
  for (int k = n / 2 + 1; k <= n; ++k) {
    const double c = std::abs(to_double(f.coeffs[static_cast<std::size_t>(k)]));
    if (c == 0) continue;
    r = std::min(r, std::exp((std::log(tol) - std::log(c)) / k));
  }
  return r;
}

int winding(const SeriesPoly& f, std::complex<double> w, double r, int samples) {
  double total = 0;
  std::complex<double> prev = f(std::polar(r, 0.0)) - w;
  for (int j = 1; j <= samples; ++j) {
    const std::complex<double> cur = f(std::polar(r, 2 * std::numbers::pi * j / samples)) - w;
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

}  // namespace

OmittedValue omitted_value_check(const SeriesPoly& f, int samples) {
  if (samples < 8) throw InvalidArgument("omitted_value_check needs at least 8 samples");
  OmittedValue out;
  out.radius = trusted_radius(f, 1e-9);
  out.winding_plus = winding(f, 1.0 / 16, out.radius, samples);
  out.winding_minus = winding(f, -1.0 / 16, out.radius, samples);
  const bool plus_free = out.winding_plus == 0;
  const bool minus_free = out.winding_minus == 0;
  if (plus_free == minus_free)
    throw NumericalFailure(plus_free ? "both +1/16 and -1/16 avoided on the trusted disk; raise the truncation degree"
                                     : "neither +1/16 nor -1/16 is avoided; raise N or K");
  out.sigma = plus_free ? 1 : -1;
  const std::complex<double> w = out.sigma / 16.0;
  const int rings = std::max(8, samples / 8);
  out.clearance = std::abs(f(0) - w);
  for (int i = 1; i <= rings; ++i)
    for (int j = 0; j < samples; ++j)
      out.clearance = std::min(
          out.clearance, std::abs(f(std::polar(out.radius * i / rings, 2 * std::numbers::pi * j / samples)) - w));
  return out;
}

SeriesPoly normalize_omitted(const SeriesPoly& f, int sigma) {
  if (sigma != 1 && sigma != -1) throw InvalidArgument("sigma must be +1 or -1");
  SeriesPoly out = f;
  if (sigma == -1)
    for (std::size_t k = 0; k < out.coeffs.size(); k += 2) out.coeffs[k] = -out.coeffs[k];
  return out;
}

std::pair<SeriesPoly, SeriesPoly> build_g_h(const SeriesPoly& f, const Rational& delta) {
  if (abs(delta) <= make_rational(1, 16)) throw InvalidArgument("build_g_h needs |delta| > 1/16");
  if (f.coeff(0) != 0 || f.coeff(1) != 1) throw InvalidArgument("series must start 0 + z + ...");
  const Rational scale = -16 * delta;
  const Rational ratio = Rational(-1) / (16 * delta);
  SeriesPoly g, h;
  g.coeffs.resize(f.coeffs.size());
  Rational power = 1;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    g.coeffs[k] = scale * power * f.coeffs[k];
    power *= ratio;
  }
  for (std::size_t k = 2; k < g.coeffs.size(); ++k) h.coeffs.push_back(g.coeffs[k] / (2 * delta));
  return {std::move(g), std::move(h)};
}

double mu_estimate(const SeriesPoly& g, const Rational& delta, int samples) {
  if (samples < 1) throw InvalidArgument("mu_estimate needs at least one sample");
  const double d = to_double(delta);
  double noise = std::abs(d);
  for (const auto& c : g.coeffs) noise += std::abs(to_double(c));
  noise *= 4 * static_cast<double>(g.coeffs.size() + 1) * std::numeric_limits<double>::epsilon();
  double mu = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j)
    mu = std::min(mu, std::abs(g(std::polar(1.0, 2 * std::numbers::pi * j / samples)) + d));
  if (mu <= noise) throw NumericalFailure("mu estimate is below rounding noise");
  return mu;
}

Poly proof_u1(const Poly& q, const Rational& delta) { return Poly::constant(1) + (2 * delta * q).shift(1); }

Poly proof_u2(const Poly& q, const Rational& delta) {
  return Poly::linear(1, delta) + (2 * delta * q).shift(2);
}

namespace {

// |p(0)| > |leading| is necessary for every root to lie outside the disk.
bool schur_unit(const Poly& p) {
  if (abs(p.coeff(0)) <= abs(p.leading())) return false;
  return is_schur(p).stable();
}

std::pair<bool, bool> unit_pair(const Poly& u1, const Poly& u2, unsigned threads) {
  if (threads > 1) {
    auto second = std::async(std::launch::async, [&] { return schur_unit(u2); });
    const bool first = schur_unit(u1);
    return {first, second.get()};
  }
  return {schur_unit(u1), schur_unit(u2)};
}

}  // namespace

ProofController construct_controller(const ProofSynthConfig& cfg) {
  const Rational& delta = cfg.delta;
  if (abs(delta) <= make_rational(1, 16))
    throw InvalidArgument("a controller exists only for |delta| > 1/16 (got " + to_string(delta) + ")");
  if (cfg.product_terms < 1 || cfg.taylor_degree < 1 || cfg.boundary_samples < 8)
    throw InvalidArgument("proof configuration needs N, d >= 1 and at least 8 samples");
  const unsigned threads = effective_threads(cfg.threads);

  ProofDiagnostics diag;
  const OmittedValue ov = omitted_value_check(extremal_series(cfg.product_terms, 64), cfg.boundary_samples);
  diag.sigma = ov.sigma;
  diag.clearance = ov.clearance;

  const PlantSet plants = gcp_plants({delta, GcpVariant::Theorem1, Domain::Discrete});
  for (int d = cfg.taylor_degree;; d *= 2) {
    d = std::min(d, cfg.max_taylor_degree);
    // Factor n only reaches degree 2n-1, so this N gives exact coefficients
    // up to degree d + 2 while it stays under the cap.
    const int n = std::min(cfg.max_product_terms, std::max(cfg.product_terms, (d + 4) / 2));
    const SeriesPoly f = normalize_omitted(extremal_series(n, d + 2), ov.sigma);
    const auto [g, h] = build_g_h(f, delta);
    const Poly exact_q = h.to_poly().truncated(d);

    std::vector<Poly> trials;
    if (cfg.rationalize_denominator_bound > 0) {
      std::vector<Rational> rounded;
      for (const auto& c : exact_q.coeffs())
        rounded.push_back(best_rational_approximation(c, Integer(cfg.rationalize_denominator_bound)));
      trials.emplace_back(std::move(rounded));
    }
    trials.push_back(exact_q);

    for (const Poly& q : trials) {
      const auto [u1_ok, u2_ok] = unit_pair(proof_u1(q, delta), proof_u2(q, delta), threads);
      diag.attempts.push_back({d, n, u1_ok, u2_ok});
      if (!u1_ok || !u2_ok) continue;
      Certificate cert = simultaneously_stabilizes(plants, TransferFunction(q, Poly::constant(1), Domain::Discrete));
      if (!cert.overall) throw Error("unit polynomials certified but the plant certificate failed");
      diag.product_terms = n;
      diag.taylor_degree = d;
      try {
        diag.mu = mu_estimate(g, delta, cfg.boundary_samples);
      } catch (const NumericalFailure&) {
      }
      return ProofController{q, std::move(cert), std::move(diag)};
    }
    if (d >= cfg.max_taylor_degree) break;
  }
  throw BudgetExhausted("no certified controller for delta = " + to_string(delta) + " up to Taylor degree " +
                        std::to_string(cfg.max_taylor_degree) + " and " + std::to_string(cfg.max_product_terms) +
                        " product terms; delta is too close to 1/16 for this budget");
}

ContinuousController to_continuous(const Poly& q, const Rational& delta) {
  const TransferFunction c = bilinear_plant(TransferFunction(q, Poly::constant(1), Domain::Discrete),
                                            Domain::Continuous);
  Certificate cert = simultaneously_stabilizes(gcp_plants({delta, GcpVariant::Theorem1, Domain::Continuous}), c);
  if (!cert.overall) throw Error("continuous image of the controller failed certification");
  return {c, std::move(cert)};
}

}  // namespace simstab
