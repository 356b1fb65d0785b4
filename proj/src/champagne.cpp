#include "simstab/champagne.hpp"

#include <algorithm>
#include <array>

#include "simstab/errors.hpp"

namespace simstab {

std::string_view to_string(GcpVariant v) { return v == GcpVariant::Theorem1 ? "theorem1" : "theorem2"; }

GcpVariant parse_variant(std::string_view text) {
  if (text == "theorem1" || text == "1" || text == "Theorem1") return GcpVariant::Theorem1;
  if (text == "theorem2" || text == "2" || text == "Theorem2") return GcpVariant::Theorem2;
  throw ParseError("unknown variant '" + std::string(text) + "' (expected theorem1 or theorem2)");
}

PlantSet gcp_plants(const GcpInstance& inst) {
  const Rational& d = inst.delta;
  const Rational one = 1;
  std::vector<TransferFunction> out;
  if (inst.domain == Domain::Continuous) {
    const Poly sm1 = Poly::linear(1, -1);
    const Poly sp1 = Poly::linear(1, 1);
    if (inst.variant == GcpVariant::Theorem1) {
      out.emplace_back(2 * d * sm1, sp1, inst.domain);
      out.emplace_back(2 * d * sm1 * sm1, Poly::linear(one + d, -(one - d)) * sp1, inst.domain);
    } else {
      out.emplace_back(sm1, sp1, inst.domain);
      out.emplace_back(sm1 * sm1, Poly{-(one + d), -2 * d, one - d}, inst.domain);
    }
  } else {
    const Poly z = Poly::monomial(1, 1);
    const Poly z2 = Poly::monomial(1, 2);
    if (inst.variant == GcpVariant::Theorem1) {
      out.emplace_back(2 * d * z, Poly::constant(1), inst.domain);
      out.emplace_back(2 * d * z2, Poly::linear(1, d), inst.domain);
    } else {
      out.emplace_back(z, Poly::constant(1), inst.domain);
      out.emplace_back(z2, Poly::linear(1, -d), inst.domain);
    }
  }
  out.emplace_back(Poly{}, Poly::constant(1), inst.domain);
  return PlantSet(std::move(out));
}

TransferFunction bilinear_plant(const TransferFunction& p, Domain target) {
  if (p.domain() == target) return p;
  if (p.is_zero()) return TransferFunction(Poly{}, Poly::constant(1), target);
  const bool to_z = target == Domain::Discrete;
  // s = (z+1)/(-z+1) clears with (1-z); z = (s-1)/(s+1) clears with (s+1).
  const Poly factor = to_z ? Poly{1, -1} : Poly{1, 1};
  auto image = [&](const Poly& q) {
    return to_z ? mobius_substitute(q, 1, 1, -1, 1) : mobius_substitute(q, 1, -1, 1, 1);
  };
  const int m = std::max(p.num().degree(), p.den().degree());
  Poly num = image(p.num()) * factor.pow(m - p.num().degree());
  Poly den = image(p.den()) * factor.pow(m - p.den().degree());
  return TransferFunction(std::move(num), std::move(den), target);
}

bool verdict(const Rational& delta, GcpVariant) {
  return delta == 0 || abs(delta) > make_rational(1, 16);
}

namespace {

TransferFunction tf(std::vector<Rational> num, std::vector<Rational> den) {
  return TransferFunction(Poly(std::move(num)), Poly(std::move(den)), Domain::Continuous);
}

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

}  // namespace

std::vector<CatalogEntry> example_catalog() {
  std::vector<CatalogEntry> cat;

  cat.push_back({"champagne", q(1, 17), {tf({1}, {1})}, false, std::nullopt, std::nullopt,
                 "delta = 1/17 lies in the impossibility region; the unit gain fails"});

  cat.push_back({"ex1", q(3, 4), {tf({q(1, 3)}, {1})}, true, Structure{0, 0}, OpenRange{q(1, 6), q(1, 2)},
                 "constant controllers stabilize exactly for 1/6 < y0 < 1/2"});
  cat.push_back({"ex1-endpoints", q(3, 4), {tf({q(1, 6)}, {1}), tf({q(1, 2)}, {1})}, false, Structure{0, 0},
                 std::nullopt, "the open range excludes its endpoints"});
  cat.push_back({"ex1-threshold", q(1, 2), {}, false, Structure{0, 0}, std::nullopt,
                 "no constant controller exists for delta <= 1/2"});

  cat.push_back({"ex2", q(3, 4), {tf({1}, {3, 1})}, true, Structure{0, 1}, std::nullopt,
                 "controller y0/(s+x0) with y0 = 1, x0 = 3"});
  cat.push_back({"ex2-threshold", q(1, 2), {}, false, Structure{0, 1}, std::nullopt,
                 "no controller y0/(s+x0) exists for delta <= 1/2"});

  const std::vector<std::pair<Rational, Rational>> ex3 = {
      {q(1, 10), q(51, 100)}, {q(3, 5), q(3, 5)}, {q(4, 5), q(3, 5)}};
  CatalogEntry e3{"ex3", q(1, 2), {}, true, Structure{1, 0}, std::nullopt, "controllers y1*s + y0"};
  CatalogEntry e3p{"ex3-proper", q(1, 2), {}, true, Structure{1, 1}, std::nullopt,
                   "(y1*s + y0)/(eps*s + 1) with eps = 1/10"};
  for (const auto& [y1, y0] : ex3) {
    e3.controllers.push_back(tf({y0, y1}, {1}));
    e3p.controllers.push_back(tf({y0, y1}, {1, q(1, 10)}));
  }
  cat.push_back(std::move(e3));
  cat.push_back(std::move(e3p));
  cat.push_back({"ex3-threshold", q(1, 4), {}, false, Structure{1, 0}, std::nullopt,
                 "no controller y1*s + y0 exists for delta <= 1/4"});

  CatalogEntry e4{"ex4", q(1, 3), {}, true, Structure{1, 1}, std::nullopt, "controllers (y1*s + y0)/(s + x0)"};
  const std::vector<std::array<Rational, 3>> ex4 = {
      {q(2), q(31, 10), q(201, 100)}, {q(3), q(41, 10), q(301, 100)}, {q(6), q(8), q(61, 10)}};
  for (const auto& [x0, y1, y0] : ex4) e4.controllers.push_back(tf({y0, y1}, {x0, 1}));
  cat.push_back(std::move(e4));
  cat.push_back({"ex4-threshold", q(1, 4), {}, false, Structure{1, 1}, std::nullopt,
                 "no controller (y1*s + y0)/(s + x0) exists for delta <= 1/4"});

  const Rational eps = q(1, 10000000);
  const std::vector<std::array<Rational, 3>> ex5 = {
      {q(191, 100), q(39001, 10000), q(2450001, 1000000)},
      {q(191, 100), q(390019, 100000), q(2450003, 1000000)},
      {q(97, 50), q(39001, 10000), q(245001, 100000)},
      {q(97, 50), q(19501, 5000), q(245001, 100000)},
      {q(19501, 10000), q(39003, 10000), q(4900299, 2000000)}};
  CatalogEntry e5{"ex5", q(10, 59), {}, true, Structure{2, 0}, std::nullopt, "controllers y2*s^2 + y1*s + y0"};
  CatalogEntry e5p{"ex5-proper", q(10, 59), {}, true, Structure{2, 2}, std::nullopt,
                   "denominator eps*s^2 + eps*s + 1 with eps = 1e-7"};
  for (const auto& [y2, y1, y0] : ex5) {
    e5.controllers.push_back(tf({y0, y1, y2}, {1}));
    e5p.controllers.push_back(tf({y0, y1, y2}, {1, eps, eps}));
  }
  cat.push_back(std::move(e5));
  cat.push_back(std::move(e5p));
  cat.push_back({"ex5-negative", q(1, 6), {}, false, Structure{2, 0}, std::nullopt,
                 "no controller y2*s^2 + y1*s + y0 exists for delta = 1/6"});

  const Rational eps1 = q(1, 1000000000000000);
  const Rational y1 = q(50001, 10000), y0 = q(300001, 100000);
  const std::vector<std::pair<Rational, Rational>> ex6 = {
      {q(1037, 1000), q(30077, 10000)}, {q(26, 25), q(376, 125)},    {q(113, 100), q(378, 125)},
      {q(57029, 50000), q(121, 40)},    {q(11407, 10000), q(121, 40)}, {q(114113, 100000), q(1513, 500)}};
  CatalogEntry e6{"ex6", q(1, 7), {}, true, Structure{3, 0}, std::nullopt,
                  "controllers y3*s^3 + y2*s^2 + y1*s + y0"};
  CatalogEntry e6p{"ex6-proper", q(1, 7), {}, true, Structure{3, 3}, std::nullopt,
                   "denominator eps1*s^3 + eps*s^2 + eps*s + 1 with eps = 1e-7, eps1 = 1e-15"};
  for (const auto& [y3, y2] : ex6) {
    e6.controllers.push_back(tf({y0, y1, y2, y3}, {1}));
    e6p.controllers.push_back(tf({y0, y1, y2, y3}, {1, eps, eps, eps1}));
  }
  cat.push_back(std::move(e6));
  cat.push_back(std::move(e6p));
  return cat;
}

}  // namespace simstab
