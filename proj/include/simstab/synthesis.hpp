#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "simstab/champagne.hpp"
#include "simstab/feedback.hpp"

namespace simstab {

/// Controller degree structure. Parameters are ordered as the denominator
/// coefficients in ascending degree (the leading one omitted when monic),
/// followed by the numerator coefficients in ascending degree.
struct ControllerTemplate {
  int num_degree = 0;
  int den_degree = 0;
  bool monic_den = true;

  std::size_t parameter_count() const;
  friend bool operator==(const ControllerTemplate&, const ControllerTemplate&) = default;
};

/// Controller y/x for the given parameter vector. Throws InvalidArgument on
/// a size mismatch or a zero denominator.
TransferFunction controller_from_params(const ControllerTemplate& tpl, std::span<const Rational> params,
                                        Domain domain);

struct ParamRange {
  Rational lo;
  Rational hi;
  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

/// Axis-aligned box with exact rational bounds.
struct ParamBox {
  std::vector<ParamRange> ranges;

  static ParamBox uniform(std::size_t dims, const Rational& lo, const Rational& hi);
  std::size_t dims() const { return ranges.size(); }
  friend bool operator==(const ParamBox&, const ParamBox&) = default;
};

enum class SplitStrategy { Widest, RoundRobin };

std::string_view to_string(SplitStrategy s);
SplitStrategy parse_split_strategy(std::string_view text);

struct SearchConfig {
  std::size_t max_boxes = 200000;
  Rational min_width = make_rational(1, 1LL << 40);
  SplitStrategy split = SplitStrategy::Widest;
  std::uint64_t seed = 0;
  /// Worker count; 0 means hardware concurrency capped by STAB_THREADS.
  unsigned threads = 0;
};

struct SearchOutcome {
  enum class Status { Found, NotFoundAtBudget, BoxInfeasible };
  Status status = Status::NotFoundAtBudget;
  std::optional<TransferFunction> controller;
  std::optional<Certificate> certificate;
  std::size_t boxes_explored = 0;
};

std::string_view to_string(SearchOutcome::Status s);
SearchOutcome::Status parse_search_status(std::string_view text);

/// Worker count after applying the STAB_THREADS cap.
unsigned effective_threads(unsigned requested);

/// Branch-and-prune: boxes are discarded when the interval closed loop of
/// some plant is disproved, and accepted only through exact certification of
/// a sample point. Deterministic for a given configuration, whatever the
/// worker count.
SearchOutcome feasibility_search(const PlantSet& plants, const ControllerTemplate& tpl, const ParamBox& box,
                                 const SearchConfig& cfg = {});

/// Interval of the real line with optional infinite ends.
struct RealInterval {
  std::optional<Rational> lo;  // nullopt: -infinity
  std::optional<Rational> hi;  // nullopt: +infinity
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(const Rational& x) const;
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

/// Finite disjoint union of intervals in increasing order.
struct RealSet {
  std::vector<RealInterval> parts;

  bool empty() const { return parts.empty(); }
  bool contains(const Rational& x) const;
  friend bool operator==(const RealSet&, const RealSet&) = default;
};

/// Exact set of y0 for which the constant controller y0 stabilizes the
/// continuous Theorem1 plants at delta.
RealSet exact_range_deg0(const Rational& delta);

struct ThresholdBracket {
  Rational lo;
  Rational hi;
  TransferFunction witness;  // controller found at hi
  int probes = 0;
};

/// Bisection on delta over the continuous Theorem1 family. Each probe runs
/// feasibility_search on `box`. Throws InvalidArgument when no controller is
/// found at hi. The lower end only records a search that came up empty.
ThresholdBracket delta_threshold(const ControllerTemplate& tpl, const Rational& lo, const Rational& hi,
                                 const Rational& tol, const SearchConfig& cfg, const ParamBox& box);

/// Default search box [-10, 10]^k for a template.
ParamBox default_box(const ControllerTemplate& tpl);

struct Properized {
  TransferFunction controller;
  std::vector<Rational> added;  // coefficients of s^(m+1) .. s^n
  int trials = 0;
};

/// Adds eps_i s^i (i = m+1..target_degree, m = deg den) to the denominator,
/// starting from eps0^(i-m) and dividing eps_i by 2^((i-m)^2) per failed trial,
/// until the whole plant set is certified again. Throws BudgetExhausted
/// after max_trials.
Properized properize(const TransferFunction& c, const PlantSet& plants, int target_degree, const Rational& eps0,
                     int max_trials = 200);

/// f + sum eps_i s^i (i = deg f + 1 .. n), Hurwitz stable, adding one term
/// at a time with eps halved from 1 until stable.
Poly hurwitz_augment_exists(const Poly& f, int n);

}  // namespace simstab
