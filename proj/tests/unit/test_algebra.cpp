#include <random>

#include "doctest.h"
#include "simstab/errors.hpp"
#include "simstab/interval_poly.hpp"
#include "simstab/transfer_function.hpp"
#include "support.hpp"

using namespace simstab;
using simstab::testing::random_poly;
using simstab::testing::random_rational;

namespace {
const Poly s = Poly::monomial(1, 1);
const Poly one = Poly::constant(1);
Rational q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1/3") == q(-1, 3));
    CHECK(parse_rational("4/6") == q(2, 3));
    CHECK(parse_rational("-0.4655") == q(-4655, 10000));
    CHECK(parse_rational("1e-7") == q(1, 10000000));
    CHECK(parse_rational("2.5E2") == 250);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.1.2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(to_string(q(6, -4)) == "-3/2");
    CHECK(to_string(q(8, 4)) == "2");
    CHECK(from_double(0.375) == q(3, 8));
    CHECK(pow(q(2, 3), -2) == q(9, 4));
  }

  TEST_CASE("best rational approximation matches brute force") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const Rational x = random_rational(rng, 3, 1000);
      const int bound = 1 + static_cast<int>(rng() % 40);
      const Rational got = best_rational_approximation(x, bound);
      CHECK(got.get_den() <= bound);
      Rational best_err = abs(got - x);
      for (int d = 1; d <= bound; ++d) {
        const Rational xd = x * d;
        const Integer n = xd.get_num() / xd.get_den();
        for (int off = -1; off <= 1; ++off) CHECK(abs(make_rational(n + off, d) - x) >= best_err);
      }
    }
  }

  TEST_CASE("polynomial arithmetic") {
    CHECK((s + one) * (s - one) == Poly{-1, 0, 1});
    CHECK(Poly{1, 2} + Poly{0, -2} == one);
    CHECK(((s + one) * Poly{}).is_zero());
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly{1, 2, 0, 0}.degree() == 1);
    CHECK((s + one).pow(3) == Poly{1, 3, 3, 1});
    CHECK(Poly{1, 2, 3}.derivative() == Poly{2, 6});
    CHECK(reversed(Poly{1, 2, 3}) == Poly{3, 2, 1});
  }

  TEST_CASE("gcd") {
    CHECK(gcd(Poly{-1, 0, 1}, s - one) == s - one);
    CHECK(gcd(s + one, s + Poly::constant(2)) == one);
    const Poly a = (s - one).pow(2);
    const Poly b = Poly{-8, 9} * (s + one);
    CHECK(gcd(a, b) == one);
    CHECK(gcd(Poly{}, Poly{2, 4}) == Poly{q(1, 2), 1});
    CHECK_THROWS_AS(gcd(Poly{}, Poly{}), InvalidArgument);
  }

  TEST_CASE("divmod reconstructs the dividend") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const Poly a = random_poly(rng, static_cast<int>(rng() % 7));
      const Poly b = random_poly(rng, static_cast<int>(rng() % 4));
      const auto [quot, rem] = divmod(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }

  TEST_CASE("mobius substitution") {
    // s = (1+z)/(1-z): a=1, b=1, c=-1, d=1
    CHECK(mobius_substitute(s - one, 1, 1, -1, 1) == Poly{0, 2});
    CHECK(mobius_substitute(Poly::constant(7), 1, 1, -1, 1) == Poly::constant(7));
    // z = (s-1)/(s+1)
    CHECK(mobius_substitute(s + one, 1, -1, 1, 1) == Poly{0, 2});
    CHECK_THROWS_AS(mobius_substitute(s, 1, 2, 2, 4), InvalidArgument);
  }

  TEST_CASE("mobius round trip returns a constant multiple") {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Poly p = random_poly(rng, 1 + static_cast<int>(rng() % 6));
      const Poly image = mobius_substitute(p, 1, -1, 1, 1);
      if (image.degree() != p.degree()) continue;
      const Poly back = mobius_substitute(image, 1, 1, -1, 1);
      const Rational k = back.leading() / p.leading();
      CHECK(k != 0);
      CHECK(back == k * p);
      ++checked;
    }
    CHECK(checked > 150);
  }

  TEST_CASE("evaluation") {
    CHECK(Poly{-1, 0, 1}(Rational(1)) == 0);
    CHECK(Poly{1, 2}(q(-1, 2)) == 0);
    const auto z = Poly{1, 0, 1}(std::complex<double>(0, 1));
    CHECK(std::abs(z) < 1e-15);
  }

  TEST_CASE("primitive integer form") {
    const Poly p{q(1, 2), q(-3, 4), q(3, 2)};
    CHECK(p.primitive_scale() == 4);
    const auto ints = p.primitive_integer_coeffs();
    REQUIRE(ints.size() == 3);
    CHECK(ints[0] == 2);
    CHECK(ints[1] == -3);
    CHECK(ints[2] == 6);
    CHECK_THROWS(Poly{}.primitive_scale());
  }

  TEST_CASE("transfer function reduction") {
    using TF = TransferFunction;
    CHECK(TF(Poly{-1, 0, 1}, s - one, Domain::Continuous) == TF(s + one, one, Domain::Continuous));
    const TF zero(Poly{}, s + Poly::constant(5), Domain::Continuous);
    CHECK(zero.is_zero());
    CHECK(zero.den() == one);
    const TF neg(2 * (s - one), -(s + one), Domain::Continuous);
    CHECK(neg.num() == -2 * (s - one));
    CHECK(neg.den() == s + one);
    CHECK_THROWS_AS(TF(one, Poly{}, Domain::Continuous), InvalidArgument);
    CHECK(reduce(neg) == neg);
  }

  TEST_CASE("reduction is invariant under common factors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const Poly a = random_poly(rng, static_cast<int>(rng() % 4));
      const Poly b = random_poly(rng, static_cast<int>(rng() % 4));
      const Poly c = random_poly(rng, 1 + static_cast<int>(rng() % 3));
      CHECK(TransferFunction(a * c, b * c, Domain::Discrete) == TransferFunction(a, b, Domain::Discrete));
    }
  }

  TEST_CASE("domain tags") {
    CHECK(domain_tag(Domain::Continuous) == "s");
    CHECK(parse_domain("z") == Domain::Discrete);
    CHECK(parse_domain("continuous") == Domain::Continuous);
    CHECK_THROWS(parse_domain("w"));
  }

  TEST_CASE("interval arithmetic encloses exact evaluation") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
      const Poly p = random_poly(rng, static_cast<int>(rng() % 9), 10, 1000);
      const Rational x = random_rational(rng, 3, 1000);
      const Interval value = p(Interval::enclose(x));
      CHECK(value.contains(p(x)));
    }
    CHECK_THROWS_AS(Interval(1, 2) / Interval(-1, 1), InvalidArgument);
    const Interval third = Interval::enclose(q(1, 3));
    CHECK(third.contains(q(1, 3)));
    CHECK(third.lo() < third.hi());
  }

  TEST_CASE("interval polynomials contain their points") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const Poly a = random_poly(rng, 3), b = random_poly(rng, 2);
      const IntervalPoly ia = IntervalPoly::enclose(a), ib = IntervalPoly::enclose(b);
      CHECK((ia * ib).contains(a * b));
      CHECK((ia + ib).contains(a + b));
      CHECK(mobius_substitute(ia, 1, -1, 1, 1).contains(mobius_substitute(a, 1, -1, 1, 1)));
    }
  }
}
