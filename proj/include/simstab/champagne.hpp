#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simstab/feedback.hpp"
#include "simstab/transfer_function.hpp"

namespace simstab {

/// The two three-plant families. Theorem1 is the 2*delta*(s-1)/(s+1) family,
/// Theorem2 the (s-1)/(s+1) family; both have the same answer.
enum class GcpVariant { Theorem1, Theorem2 };

std::string_view to_string(GcpVariant v);
GcpVariant parse_variant(std::string_view text);

struct GcpInstance {
  Rational delta;
  GcpVariant variant = GcpVariant::Theorem1;
  Domain domain = Domain::Continuous;
};

/// The three plants of the instance; the third is always zero.
PlantSet gcp_plants(const GcpInstance& inst);

/// Maps p to the other domain through s = (1+z)/(1-z) (to z) or
/// z = (s-1)/(s+1) (to s). A plant already in `target` is returned as is.
TransferFunction bilinear_plant(const TransferFunction& p, Domain target);

/// True iff the family is simultaneously stabilizable: delta = 0 or
/// |delta| > 1/16. Both variants share the condition.
bool verdict(const Rational& delta, GcpVariant variant = GcpVariant::Theorem1);

/// Degree structure of a controller (numerator degree, denominator degree).
struct Structure {
  int num_degree = 0;
  int den_degree = 0;
  friend bool operator==(const Structure&, const Structure&) = default;
};

/// Open parameter interval lo < y0 < hi for a constant controller.
struct OpenRange {
  Rational lo;
  Rational hi;
  friend bool operator==(const OpenRange&, const OpenRange&) = default;
};

/// One published claim about the continuous Theorem1 family at `delta`.
/// Either concrete controllers with an expected certificate outcome, or a
/// structure-level claim (no controllers) that a given degree structure
/// does or does not admit a stabilizing controller.
struct CatalogEntry {
  std::string id;
  Rational delta;
  std::vector<TransferFunction> controllers;
  bool expected = true;
  std::optional<Structure> structure;
  std::optional<OpenRange> range;
  std::string notes;
};

std::vector<CatalogEntry> example_catalog();

}  // namespace simstab
