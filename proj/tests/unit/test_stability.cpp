#include <random>

#include "doctest.h"
#include "simstab/errors.hpp"
#include "simstab/stability.hpp"
#include "support.hpp"

using namespace simstab;
using simstab::testing::hurwitz_matrix_minors;
using simstab::testing::numeric_roots;
using simstab::testing::random_poly;
using simstab::testing::random_positive_poly;

namespace {
const Poly s = Poly::monomial(1, 1);
Rational q(long n, long d = 1) { return make_rational(n, d); }
using Status = StabilityStatus;
}  // namespace

TEST_SUITE("stability") {
  TEST_CASE("hurwitz minors of small examples") {
    CHECK(hurwitz_minors(Poly{2, 3, 1}) == std::vector<Rational>{3, 6});
    CHECK(hurwitz_minors(Poly{1, 1, 1}) == std::vector<Rational>{1, 1});
    CHECK(hurwitz_minors(Poly{1, -1, 1}) == std::vector<Rational>{-1, -1});
    CHECK_THROWS_AS(hurwitz_minors(Poly::constant(3)), InvalidArgument);
  }

  TEST_CASE("hurwitz minors agree with Hurwitz matrix determinants") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
      const Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 8));
      CHECK(hurwitz_minors(p) == hurwitz_matrix_minors(p));
    }
  }

  TEST_CASE("routh minors scale like Hurwitz minors") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 8));
      // Integer form with a positive leading coefficient.
      const Rational c = p.leading() > 0 ? p.primitive_scale() : Rational(-p.primitive_scale());
      const auto exact = hurwitz_minors(p);
      const auto ints = routh_minors(p);
      REQUIRE(ints.size() <= exact.size());
      if (ints.size() < exact.size()) CHECK(ints.back() == 0);
      Rational ck = 1;
      for (std::size_t k = 0; k < ints.size(); ++k) {
        ck *= c;
        CHECK(Rational(ints[k]) == ck * exact[k]);
      }
    }
  }

  TEST_CASE("is_hurwitz examples") {
    CHECK(is_hurwitz(s + Poly::constant(1)).status == Status::Stable);
    CHECK(is_hurwitz(Poly{1, 0, 1}).status == Status::Marginal);
    CHECK(is_hurwitz(Poly{q(1, 4), q(1, 2), q(9, 4)}).status == Status::Stable);
    CHECK(is_hurwitz(Poly::constant(-2)).status == Status::Stable);
    CHECK(is_hurwitz(Poly{1, 1, 1, 1}).status == Status::Marginal);
    CHECK(is_hurwitz(Poly{0, 1, 1}).status == Status::Marginal);
    CHECK(is_hurwitz(Poly{-1, 0, 1}).status == Status::Unstable);
    CHECK(is_hurwitz(Poly{-1, 1, -1, 1}).status == Status::Unstable);  // (s^2+1)(s-1)
    CHECK(is_hurwitz(Poly{-1, -3, -3, -1}).status == Status::Stable);
    CHECK_THROWS_AS(is_hurwitz(Poly{}), InvalidArgument);
    const auto bad = is_hurwitz(Poly{1, -1, 1});
    REQUIRE(bad.witness);
    CHECK(bad.witness->kind == StabilityWitness::Kind::CoefficientSign);
  }

  TEST_CASE("is_schur examples") {
    CHECK(is_schur(Poly{-2, 1}).status == Status::Stable);
    CHECK(is_schur(Poly{0, 1}).status == Status::Unstable);
    CHECK(is_schur(Poly{q(1, 10), 1}).status == Status::Unstable);
    CHECK(is_schur(Poly{-1, 1}).status == Status::Marginal);
    CHECK(is_schur(Poly{q(1, 2), q(-3, 2), 1}).status == Status::Unstable);  // (z-1)(z-1/2)
    CHECK(is_schur(Poly{1, 0, 1}).status == Status::Marginal);
    CHECK(is_schur(Poly::constant(5)).status == Status::Stable);
    CHECK_THROWS_AS(is_schur(Poly{}), InvalidArgument);
    const auto at_one = is_schur(Poly{-1, 1});
    REQUIRE(at_one.witness);
    CHECK(at_one.witness->kind == StabilityWitness::Kind::RootAtOne);
  }

  TEST_CASE("is_schur on z - a over a rational grid") {
    for (int k = -12; k <= 12; ++k) {
      const Rational a = q(k, 4);
      if (abs(a) == 1) continue;
      CHECK(is_schur(Poly{-a, 1}).stable() == (abs(a) > 1));
    }
  }

  TEST_CASE("is_unit") {
    const auto tf = [](Poly n, Poly d) { return TransferFunction(std::move(n), std::move(d), Domain::Discrete); };
    CHECK(is_unit(tf(Poly{-2, 1}, Poly{-3, 1})));
    CHECK_FALSE(is_unit(tf(Poly{0, 1}, Poly{-2, 1})));
    CHECK_THROWS_AS(is_unit(TransferFunction(Poly{1}, Poly{1, 1}, Domain::Continuous)), DomainMismatch);
  }

  TEST_CASE("numeric root oracle agrees outside the guard band") {
    std::mt19937_64 rng(29);
    int hurwitz_checked = 0, schur_checked = 0;
    for (int trial = 0; trial < 1500 && (hurwitz_checked < 300 || schur_checked < 300); ++trial) {
      const Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 8));
      const auto roots = numeric_roots(p);
      bool hurwitz_clear = true, schur_clear = true, in_left = true, outside = true;
      for (const auto& r : roots) {
        hurwitz_clear = hurwitz_clear && std::abs(r.real()) > 1e-3;
        schur_clear = schur_clear && std::abs(std::abs(r) - 1) > 1e-3;
        in_left = in_left && r.real() < 0;
        outside = outside && std::abs(r) > 1;
      }
      if (hurwitz_clear) {
        CHECK(is_hurwitz(p).stable() == in_left);
        ++hurwitz_checked;
      }
      if (schur_clear) {
        CHECK(is_schur(p).stable() == outside);
        ++schur_checked;
      }
    }
    CHECK(hurwitz_checked >= 300);
    CHECK(schur_checked >= 300);
  }

  TEST_CASE("schur test is conjugate to the hurwitz test") {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 500) {
      const Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 7));
      if (p(Rational(1)) == 0) continue;
      const Poly image = mobius_substitute(p, 1, -1, 1, 1);
      CHECK(is_schur(p).status == is_hurwitz(image).status);
      ++checked;
    }
  }

  TEST_CASE("coefficient-ratio condition examples") {
    CHECK(lemma3_constant() == q(4655, 10000));
    CHECK(lemma3_sufficient(Poly{1, 3, 3, 1}));
    CHECK_FALSE(lemma3_sufficient(Poly{1, 1, 1, 1}));
    CHECK_FALSE(lemma3_sufficient(Poly{1, 1, -1, 1}));
    CHECK_THROWS_AS(lemma3_sufficient(Poly{1, 2, 1}), InvalidArgument);
  }

  TEST_CASE("coefficient-ratio condition implies stability on a small grid") {
    // All coefficient vectors in {1..4}^4 for cubics.
    int hits = 0;
    for (int a0 = 1; a0 <= 4; ++a0)
      for (int a1 = 1; a1 <= 4; ++a1)
        for (int a2 = 1; a2 <= 4; ++a2)
          for (int a3 = 1; a3 <= 4; ++a3) {
            const Poly p{a0, a1, a2, a3};
            if (!lemma3_sufficient(p)) continue;
            ++hits;
            CHECK(is_hurwitz(p).stable());
          }
    CHECK(hits > 0);
  }

  TEST_CASE("interval hurwitz examples") {
    const auto pt = [](long v) { return Interval(static_cast<double>(v)); };
    CHECK(interval_hurwitz(IntervalPoly({pt(1), pt(3), pt(3), pt(1)})) == IntervalProof::Proved);
    CHECK(interval_hurwitz(IntervalPoly({Interval(-2, -1), pt(3), pt(3), pt(1)})) == IntervalProof::Disproved);
    CHECK(interval_hurwitz(IntervalPoly({Interval(-1, 1), pt(3), pt(3), pt(1)})) == IntervalProof::Unknown);
  }

  TEST_CASE("interval verdicts hold at random member points") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unit(0, 1);
    int proved = 0, disproved = 0;
    for (int trial = 0; trial < 4000 && (proved < 20 || disproved < 20); ++trial) {
      const int n = 1 + static_cast<int>(rng() % 5);
      std::vector<Interval> coeffs;
      for (int i = 0; i <= n; ++i) {
        const double lo = std::round((unit(rng) * 6 - 1) * 8) / 8;
        coeffs.emplace_back(lo, lo + std::round(unit(rng) * 4) / 8);
      }
      const IntervalPoly ip(coeffs);
      const IntervalProof proof = interval_hurwitz(ip);
      if (proof == IntervalProof::Unknown) continue;
      (proof == IntervalProof::Proved ? proved : disproved)++;
      for (int k = 0; k < 100; ++k) {
        std::vector<Rational> point;
        for (const auto& c : coeffs) point.push_back(from_double(c.lo() + (c.hi() - c.lo()) * unit(rng)));
        const Poly p(point);
        if (p.is_zero() || p.degree() < n) continue;
        CHECK(is_hurwitz(p).stable() == (proof == IntervalProof::Proved));
      }
    }
    CHECK(proved >= 20);
    CHECK(disproved >= 20);
  }

  TEST_CASE("interval schur verdicts hold at the point") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
      const Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 5));
      const IntervalProof proof = interval_schur(IntervalPoly::enclose(p));
      if (proof == IntervalProof::Proved) CHECK(is_schur(p).stable());
      if (proof == IntervalProof::Disproved) CHECK_FALSE(is_schur(p).stable());
    }
  }

  TEST_CASE("status and witness strings round trip") {
    for (auto st : {Status::Stable, Status::Marginal, Status::Unstable})
      CHECK(parse_stability_status(to_string(st)) == st);
    using K = StabilityWitness::Kind;
    for (auto k : {K::CoefficientSign, K::HurwitzMinor, K::BoundaryRoot, K::RootAtOne})
      CHECK(parse_witness_kind(to_string(k)) == k);
  }
}
