#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "simstab/interval_poly.hpp"
#include "simstab/poly.hpp"
#include "simstab/transfer_function.hpp"

namespace simstab {

enum class StabilityStatus { Stable, Marginal, Unstable };

std::string_view to_string(StabilityStatus s);
StabilityStatus parse_stability_status(std::string_view text);

/// Why a polynomial is not stable.
struct StabilityWitness {
  enum class Kind {
    CoefficientSign,  // coefficient `index` is zero or has the wrong sign
    HurwitzMinor,     // Hurwitz minor Delta_index is not positive
    BoundaryRoot,     // root on the imaginary axis / unit circle
    RootAtOne,        // discrete: root at z = 1 (degree drop after the transform)
  };
  Kind kind;
  int index = -1;

  friend bool operator==(const StabilityWitness&, const StabilityWitness&) = default;
};

std::string_view to_string(StabilityWitness::Kind k);
StabilityWitness::Kind parse_witness_kind(std::string_view text);

/// Stable: every root strictly inside the stable region (open left half
/// plane, or strictly outside the closed unit disk for z). Marginal: no root
/// in the forbidden open region but at least one on its boundary.
struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Unstable;
  std::optional<StabilityWitness> witness;

  bool stable() const { return status == StabilityStatus::Stable; }
  friend bool operator==(const StabilityVerdict&, const StabilityVerdict&) = default;
};

/// Hurwitz principal minors Delta_1..Delta_n of p (coefficients taken as
/// given, no sign normalization), by exact Gaussian elimination on each
/// leading submatrix. Throws InvalidArgument for constant p.
std::vector<Rational> hurwitz_minors(const Poly& p);

/// Delta_1..Delta_n computed by the fraction-free Routh recurrence on the
/// primitive integer form of p with positive leading coefficient. Stops early
/// (shorter result) after the first zero minor.
std::vector<Integer> routh_minors(const Poly& p);

/// Exact continuous-time test. Nonzero constants are Stable; throws for the
/// zero polynomial.
StabilityVerdict is_hurwitz(const Poly& p);

/// Exact discrete-time test (roots strictly outside the closed unit disk),
/// via the conjugation z = (s-1)/(s+1). Throws for the zero polynomial.
StabilityVerdict is_schur(const Poly& p);

/// Domain-appropriate test.
StabilityVerdict is_stable(const Poly& p, Domain domain);

/// Numerator and denominator both Schur stable. Throws DomainMismatch for a
/// continuous-time argument.
bool is_unit(const TransferFunction& c);

/// Sufficient Hurwitz condition: all a_i > 0 and
/// a_{i-1} a_{i+2} <= 0.4655 a_i a_{i+1} for i = 1..n-2. Requires deg >= 3.
bool lemma3_sufficient(const Poly& p);

/// The constant 0.4655 as an exact rational.
Rational lemma3_constant();

enum class IntervalProof { Proved, Disproved, Unknown };

std::string_view to_string(IntervalProof p);

/// Proved: every member polynomial is Hurwitz stable. Disproved: none is.
/// Unknown is always a valid answer.
IntervalProof interval_hurwitz(const IntervalPoly& p);

/// Same contract for the discrete-time notion of stability.
IntervalProof interval_schur(const IntervalPoly& p);

}  // namespace simstab
