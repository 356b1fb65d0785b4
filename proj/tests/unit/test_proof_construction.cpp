#include <cmath>

#include "doctest.h"
#include "simstab/errors.hpp"
#include "simstab/proof_construction.hpp"
#include "support.hpp"

using namespace simstab;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }

// z * prod ((1+z^2n)/(1+z^(2n-1)))^8 by per-factor multiply/divide recurrences
// and eight plain multiplications.
std::vector<Rational> series_oracle(int n_terms, int k) {
  std::vector<Rational> base(static_cast<std::size_t>(k + 1));
  base[0] = 1;
  for (int n = 1; n <= n_terms; ++n) {
    const int even = 2 * n, odd = 2 * n - 1;
    for (int i = k; i >= even; --i) base[i] += base[i - even];
    for (int i = odd; i <= k; ++i) base[i] -= base[i - odd];
  }
  std::vector<Rational> power(static_cast<std::size_t>(k + 1));
  power[0] = 1;
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<Rational> next(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; i + j <= k; ++j) next[i + j] += power[i] * base[j];
    power = next;
  }
  std::vector<Rational> f{0};
  f.insert(f.end(), power.begin(), power.end() - 1);
  return f;
}

ProofSynthConfig config(const Rational& delta, unsigned threads = 1) {
  ProofSynthConfig cfg;
  cfg.delta = delta;
  cfg.threads = threads;
  return cfg;
}
}  // namespace

TEST_SUITE("proof_construction") {
  TEST_CASE("leading series coefficients") {
    const SeriesPoly f = extremal_series(8, 12);
    const std::vector<long> expected{0, 1, -8, 44, -192, 718, -2400, 7352, -20992, 56549, -145008, 356388, -844032};
    REQUIRE(f.order() == 12);
    for (int k = 0; k <= 12; ++k) CHECK(f.coeff(k) == expected[static_cast<std::size_t>(k)]);
    CHECK_THROWS_AS(extremal_series(0, 4), InvalidArgument);
    CHECK_THROWS_AS(extremal_series(4, 0), InvalidArgument);
  }

  TEST_CASE("series matches the recurrence oracle") {
    for (auto [n, k] : {std::pair{1, 10}, {3, 20}, {8, 40}, {20, 64}}) {
      const SeriesPoly f = extremal_series(n, k);
      CHECK(f.coeffs == series_oracle(n, k));
    }
  }

  TEST_CASE("extra product terms do not move converged coefficients") {
    for (int n = 1; n <= 12; ++n) {
      const int k = 2 * n;
      CHECK(extremal_series(n, k) == extremal_series(n + 1, k));
      CHECK(extremal_series(n, k) == extremal_series(n + 5, k));
    }
  }

  TEST_CASE("omitted value") {
    const SeriesPoly f = extremal_series(8, 64);
    const OmittedValue ov = omitted_value_check(f, 720);
    CHECK((ov.sigma == 1 || ov.sigma == -1));
    CHECK(ov.clearance > 0);
    CHECK(ov.radius > 0);
    CHECK(ov.radius <= 0.95);

    const SeriesPoly normalized = normalize_omitted(f, ov.sigma);
    CHECK(omitted_value_check(normalized, 720).sigma == 1);
    CHECK(normalize_omitted(normalize_omitted(f, -1), -1) == f);

    const SeriesPoly identity{{0, 1}};
    CHECK_THROWS_AS(omitted_value_check(identity, 720), NumericalFailure);
    CHECK_THROWS_AS(normalize_omitted(f, 0), InvalidArgument);
  }

  TEST_CASE("g and h coefficient maps") {
    const SeriesPoly f = extremal_series(8, 20);
    for (const Rational& delta : {q(1, 8), q(1, 2), q(-1, 3), q(10)}) {
      const auto [g, h] = build_g_h(f, delta);
      CHECK(g.coeff(0) == 0);
      CHECK(g.coeff(1) == 1);
      CHECK(h.coeff(0) == g.coeff(2) / (2 * delta));
      for (int k = 0; k <= f.order(); ++k) CHECK(g.coeff(k) == -16 * delta * pow(-1 / (16 * delta), k) * f.coeff(k));
      // g(z) = z + 2 delta z^2 h(z) term by term.
      for (int k = 2; k <= f.order(); ++k) CHECK(g.coeff(k) == 2 * delta * h.coeff(k - 2));
    }
    const auto [g8, h8] = build_g_h(f, q(1, 8));
    CHECK(g8.coeff(2) == -f.coeff(2) / 2);
    CHECK_THROWS_AS(build_g_h(f, q(1, 17)), InvalidArgument);
    CHECK_THROWS_AS(build_g_h(SeriesPoly{{0, 2, 1}}, q(1, 8)), InvalidArgument);
  }

  TEST_CASE("mu estimate") {
    const SeriesPoly identity{{0, 1}};
    CHECK(mu_estimate(identity, 2, 64) == doctest::Approx(1.0).epsilon(1e-12));
    const SeriesPoly f = normalize_omitted(extremal_series(8, 64), omitted_value_check(extremal_series(8, 64), 720).sigma);
    const auto g = build_g_h(f, q(1, 8)).first;
    const double mu = mu_estimate(g, q(1, 8), 2048);
    CHECK(mu > 0);
    CHECK(mu_estimate(g, q(1, 8), 4096) <= mu);
    CHECK_THROWS_AS(mu_estimate(SeriesPoly{{q(-1, 2), 0}}, q(1, 2), 64), NumericalFailure);
  }

  TEST_CASE("controller at delta 1/8") {
    const Rational delta = q(1, 8);
    const ProofController pc = construct_controller(config(delta));
    CHECK(pc.certificate.overall);
    CHECK(pc.certificate.domain == Domain::Discrete);
    const Poly u1 = proof_u1(pc.q, delta), u2 = proof_u2(pc.q, delta);
    CHECK(is_schur(u1).stable());
    CHECK(is_schur(u2).stable());
    CHECK(is_unit(TransferFunction(u1, Poly{1}, Domain::Discrete)));
    CHECK(Poly::monomial(1, 1) * u1 == Poly{0, 1} + (2 * delta * pc.q).shift(2));
    CHECK(pc.diagnostics.sigma != 0);
    CHECK(pc.diagnostics.taylor_degree >= pc.q.degree());
    REQUIRE_FALSE(pc.diagnostics.attempts.empty());
    CHECK(pc.diagnostics.attempts.back().u1_unit);
    CHECK(pc.diagnostics.attempts.back().u2_unit);

    const ContinuousController cc = to_continuous(pc.q, delta);
    CHECK(cc.certificate.overall == pc.certificate.overall);
    CHECK(cc.controller.domain() == Domain::Continuous);
  }

  TEST_CASE("large and negative delta") {
    const ProofController big = construct_controller(config(10));
    CHECK(big.certificate.overall);
    CHECK(big.diagnostics.taylor_degree <= 16);
    const ProofController neg = construct_controller(config(q(-1, 2)));
    CHECK(neg.certificate.overall);
  }

  TEST_CASE("controller construction is thread independent") {
    const auto a = construct_controller(config(q(1, 4), 1));
    const auto b = construct_controller(config(q(1, 4), 3));
    CHECK(a.q == b.q);
    CHECK(a.diagnostics.attempts.size() == b.diagnostics.attempts.size());
  }

  TEST_CASE("rationalized trial") {
    ProofSynthConfig cfg = config(q(1, 2));
    cfg.rationalize_denominator_bound = 1000;
    const auto pc = construct_controller(cfg);
    CHECK(pc.certificate.overall);
  }

  TEST_CASE("construction refuses the impossibility region") {
    CHECK_THROWS_AS(construct_controller(config(q(1, 17))), InvalidArgument);
    CHECK_THROWS_AS(construct_controller(config(q(1, 16))), InvalidArgument);
    CHECK_THROWS_AS(construct_controller(config(0)), InvalidArgument);
  }

  TEST_CASE("constant controllers pass through the transform") {
    const ContinuousController cc = to_continuous(Poly{q(1, 3)}, q(3, 4));
    CHECK(cc.controller == TransferFunction(Poly{q(1, 3)}, Poly{1}, Domain::Continuous));
    CHECK(cc.certificate.overall);
  }
}
