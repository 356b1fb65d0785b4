#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "simstab/feedback.hpp"
#include "simstab/poly.hpp"

namespace simstab {

/// Truncated power series about 0 with exact coefficients.
struct SeriesPoly {
  std::vector<Rational> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational coeff(int k) const;
  Poly to_poly() const { return Poly(coeffs); }
  std::complex<double> operator()(std::complex<double> z) const;
  friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;
};

/// Coefficients of z * prod_{n=1..N} ((1 + z^(2n)) / (1 + z^(2n-1)))^8 up
/// to degree K, exactly.
SeriesPoly extremal_series(int product_terms, int max_degree);

struct OmittedValue {
  int sigma = 0;          // +1 or -1: sigma/16 is the omitted value
  double clearance = 0;   // min |f - sigma/16| over the sampled disk
  double radius = 0;      // radius of the sampled disk
  int winding_plus = 0;   // zeros of f - 1/16 inside the sampled circle
  int winding_minus = 0;  // zeros of f + 1/16 inside the sampled circle
};

/// Decides which of +1/16 and -1/16 the truncated series avoids, using
/// winding numbers on a circle of M samples and a polar grid for the
/// clearance. The radius is capped where the tail coefficients stop being
/// negligible. Throws NumericalFailure unless exactly one value is avoided.
OmittedValue omitted_value_check(const SeriesPoly& f, int samples);

/// sigma * f(sigma * z): moves the omitted value to +1/16 when sigma = -1.
SeriesPoly normalize_omitted(const SeriesPoly& f, int sigma);

/// g(z) = -16 delta f(-z/(16 delta)) and h(z) = (g(z) - z)/(2 delta z^2),
/// coefficientwise. Requires |delta| > 1/16, f_0 = 0 and f_1 = 1.
std::pair<SeriesPoly, SeriesPoly> build_g_h(const SeriesPoly& f, const Rational& delta);

/// min |g(z) + delta| over M points of the unit circle. Throws
/// NumericalFailure when the minimum is below the rounding noise bound.
double mu_estimate(const SeriesPoly& g, const Rational& delta, int samples);

struct ProofSynthConfig {
  Rational delta;
  int product_terms = 16;    // initial N
  int taylor_degree = 8;     // initial d
  int boundary_samples = 1024;
  /// When positive, coefficients of q are first rounded to this denominator
  /// bound; the unrounded truncation is tried if that fails.
  long rationalize_denominator_bound = 0;
  int max_taylor_degree = 256;
  int max_product_terms = 64;
  unsigned threads = 0;
};

struct ProofAttempt {
  int taylor_degree = 0;
  int product_terms = 0;
  bool u1_unit = false;
  bool u2_unit = false;
};

struct ProofDiagnostics {
  int sigma = 0;
  double clearance = 0;
  std::optional<double> mu;
  int product_terms = 0;
  int taylor_degree = 0;
  std::vector<ProofAttempt> attempts;
};

struct ProofController {
  Poly q;  // discrete controller q(z)/1
  Certificate certificate;
  ProofDiagnostics diagnostics;
};

/// 1 + 2 delta z q(z).
Poly proof_u1(const Poly& q, const Rational& delta);
/// delta + z + 2 delta z^2 q(z).
Poly proof_u2(const Poly& q, const Rational& delta);

/// Taylor sections q of h with doubling degree, each certified exactly by
/// the two unit tests. Throws InvalidArgument for |delta| <= 1/16 and
/// BudgetExhausted when the caps are reached.
ProofController construct_controller(const ProofSynthConfig& cfg);

struct ContinuousController {
  TransferFunction controller;
  Certificate certificate;
};

/// Maps q(z) through z = (s-1)/(s+1) and certifies the result against the
/// continuous plants. Throws Error if the certificate fails.
ContinuousController to_continuous(const Poly& q, const Rational& delta);

}  // namespace simstab
