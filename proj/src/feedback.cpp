#include "simstab/feedback.hpp"

#include "simstab/errors.hpp"

namespace simstab {

PlantSet::PlantSet(std::vector<TransferFunction> plants) : plants_(std::move(plants)) {
  if (plants_.empty()) throw InvalidArgument("plant set must not be empty");
  for (const auto& p : plants_)
    if (p.domain() != plants_.front().domain()) throw DomainMismatch("plants of a set must share one domain");
}

PlantSet PlantSet::scaled(const Rational& k) const {
  std::vector<TransferFunction> out;
  out.reserve(plants_.size());
  for (const auto& p : plants_) out.push_back(p.scaled(k));
  return PlantSet(std::move(out));
}

Poly closed_loop_char_poly(const TransferFunction& plant, const TransferFunction& controller) {
  if (plant.domain() != controller.domain())
    throw DomainMismatch("plant and controller are in different domains");
  Poly cp = controller.den() * plant.den() + controller.num() * plant.num();
  if (cp.is_zero()) throw IllPosedLoop("closed loop is ill-posed: 1 + p*c vanishes identically");
  return cp;
}

std::pair<Poly, StabilityVerdict> stabilizes(const TransferFunction& plant,
                                             const TransferFunction& controller) {
  Poly cp = closed_loop_char_poly(plant, controller);
  StabilityVerdict v = is_stable(cp, plant.domain());
  return {std::move(cp), std::move(v)};
}

Certificate simultaneously_stabilizes(const PlantSet& plants, const TransferFunction& controller) {
  if (controller.domain() != plants.domain())
    throw DomainMismatch("controller domain does not match the plant set");
  Certificate cert;
  cert.domain = plants.domain();
  cert.overall = true;
  for (const auto& plant : plants) {
    auto [cp, verdict] = stabilizes(plant, controller);
    cert.overall = cert.overall && verdict.stable();
    cert.per_plant.push_back({std::move(cp), std::move(verdict)});
  }
  return cert;
}

Certificate scale_equivalence(const PlantSet& plants, const TransferFunction& controller,
                              const Rational& k) {
  if (k == 0) throw InvalidArgument("scale factor must be nonzero");
  return simultaneously_stabilizes(plants.scaled(k), controller.scaled(Rational(1) / k));
}

}  // namespace simstab
