#pragma once

#include <utility>
#include <vector>

#include "simstab/poly.hpp"
#include "simstab/stability.hpp"
#include "simstab/transfer_function.hpp"

namespace simstab {

/// Nonempty list of reduced plants sharing one domain.
class PlantSet {
 public:
  explicit PlantSet(std::vector<TransferFunction> plants);

  Domain domain() const { return plants_.front().domain(); }
  std::size_t size() const { return plants_.size(); }
  const TransferFunction& operator[](std::size_t i) const { return plants_[i]; }
  const std::vector<TransferFunction>& plants() const { return plants_; }
  auto begin() const { return plants_.begin(); }
  auto end() const { return plants_.end(); }

  /// Every plant multiplied by k.
  PlantSet scaled(const Rational& k) const;

  friend bool operator==(const PlantSet&, const PlantSet&) = default;

 private:
  std::vector<TransferFunction> plants_;
};

struct PlantCertificate {
  Poly char_poly;
  StabilityVerdict verdict;
  friend bool operator==(const PlantCertificate&, const PlantCertificate&) = default;
};

/// Polynomial witness of simultaneous stabilization: one closed-loop
/// characteristic polynomial and verdict per plant. overall holds iff every
/// verdict is Stable.
struct Certificate {
  Domain domain = Domain::Continuous;
  std::vector<PlantCertificate> per_plant;
  bool overall = false;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// x*d + y*n for plant n/d and controller y/x. Throws DomainMismatch, or
/// IllPosedLoop when the result vanishes identically.
Poly closed_loop_char_poly(const TransferFunction& plant, const TransferFunction& controller);

std::pair<Poly, StabilityVerdict> stabilizes(const TransferFunction& plant,
                                             const TransferFunction& controller);

Certificate simultaneously_stabilizes(const PlantSet& plants, const TransferFunction& controller);

/// Certificate for (k * plants, controller / k). Throws InvalidArgument for
/// k = 0.
Certificate scale_equivalence(const PlantSet& plants, const TransferFunction& controller,
                              const Rational& k);

}  // namespace simstab
