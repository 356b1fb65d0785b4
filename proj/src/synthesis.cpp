#include "simstab/synthesis.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <random>
#include <thread>

#include "simstab/errors.hpp"
#include "simstab/interval_poly.hpp"

namespace simstab {

std::size_t ControllerTemplate::parameter_count() const {
  if (num_degree < 0 || den_degree < 0) throw InvalidArgument("template degrees must be nonnegative");
  return static_cast<std::size_t>(num_degree + 1 + den_degree + (monic_den ? 0 : 1));
}

TransferFunction controller_from_params(const ControllerTemplate& tpl, std::span<const Rational> params,
                                        Domain domain) {
  if (params.size() != tpl.parameter_count())
    throw InvalidArgument("parameter vector has " + std::to_string(params.size()) + " entries, template needs " +
                          std::to_string(tpl.parameter_count()));
  const std::size_t nd = static_cast<std::size_t>(tpl.den_degree + (tpl.monic_den ? 0 : 1));
  std::vector<Rational> den(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(nd));
  if (tpl.monic_den) den.emplace_back(1);
  std::vector<Rational> num(params.begin() + static_cast<std::ptrdiff_t>(nd), params.end());
  return TransferFunction(Poly(std::move(num)), Poly(std::move(den)), domain);
}

ParamBox ParamBox::uniform(std::size_t dims, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidArgument("box bounds must satisfy lo < hi");
  return ParamBox{std::vector<ParamRange>(dims, ParamRange{lo, hi})};
}

std::string_view to_string(SplitStrategy s) { return s == SplitStrategy::Widest ? "widest" : "round-robin"; }

SplitStrategy parse_split_strategy(std::string_view text) {
  if (text == "widest") return SplitStrategy::Widest;
  if (text == "round-robin" || text == "round_robin") return SplitStrategy::RoundRobin;
  throw ParseError("unknown split strategy '" + std::string(text) + "'");
}

std::string_view to_string(SearchOutcome::Status s) {
  switch (s) {
    case SearchOutcome::Status::Found: return "found";
    case SearchOutcome::Status::NotFoundAtBudget: return "not-found-at-budget";
    case SearchOutcome::Status::BoxInfeasible: return "box-infeasible";
  }
  return "?";
}

SearchOutcome::Status parse_search_status(std::string_view text) {
  if (text == "found") return SearchOutcome::Status::Found;
  if (text == "not-found-at-budget") return SearchOutcome::Status::NotFoundAtBudget;
  if (text == "box-infeasible") return SearchOutcome::Status::BoxInfeasible;
  throw ParseError("unknown search status '" + std::string(text) + "'");
}

unsigned effective_threads(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("STAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

namespace {

struct Node {
  ParamBox box;
  std::uint64_t id = 0;
  int depth = 0;
};

struct BoxResult {
  enum class Kind { Disproved, Found, Split, Leaf } kind = Kind::Leaf;
  std::optional<TransferFunction> controller;
  std::optional<Certificate> certificate;
  std::size_t split_dim = 0;
};

class Searcher {
 public:
  Searcher(const PlantSet& plants, const ControllerTemplate& tpl, const SearchConfig& cfg)
      : plants_(plants), tpl_(tpl), cfg_(cfg) {
    for (const auto& p : plants_) {
      nums_.push_back(IntervalPoly::enclose(p.num()));
      dens_.push_back(IntervalPoly::enclose(p.den()));
    }
  }

  BoxResult evaluate(const Node& node) const {
    BoxResult r;
    if (disproved(node.box)) {
      r.kind = BoxResult::Kind::Disproved;
      return r;
    }
    for (const auto& point : candidates(node)) {
      if (auto hit = certify(point)) {
        r.kind = BoxResult::Kind::Found;
        r.controller = std::move(hit->first);
        r.certificate = std::move(hit->second);
        return r;
      }
    }
    const std::size_t dim = split_dimension(node);
    const auto& range = node.box.ranges[dim];
    r.kind = range.hi - range.lo < cfg_.min_width ? BoxResult::Kind::Leaf : BoxResult::Kind::Split;
    r.split_dim = dim;
    return r;
  }

 private:
  bool disproved(const ParamBox& box) const {
    std::vector<Interval> iv;
    iv.reserve(box.dims());
    for (const auto& r : box.ranges) iv.push_back(Interval::enclose(r.lo, r.hi));
    const std::size_t nd = static_cast<std::size_t>(tpl_.den_degree + (tpl_.monic_den ? 0 : 1));
    std::vector<Interval> x(iv.begin(), iv.begin() + static_cast<std::ptrdiff_t>(nd));
    if (tpl_.monic_den) x.emplace_back(1.0);
    const IntervalPoly den(std::move(x));
    const IntervalPoly num(std::vector<Interval>(iv.begin() + static_cast<std::ptrdiff_t>(nd), iv.end()));
    for (std::size_t i = 0; i < plants_.size(); ++i) {
      const IntervalPoly cp = den * dens_[i] + num * nums_[i];
      const IntervalProof proof =
          plants_.domain() == Domain::Continuous ? interval_hurwitz(cp) : interval_schur(cp);
      if (proof == IntervalProof::Disproved) return true;
    }
    return false;
  }

  std::vector<std::vector<Rational>> candidates(const Node& node) const {
    const auto& ranges = node.box.ranges;
    std::vector<Rational> dyadic, rounded, random;
    for (const auto& r : ranges) dyadic.push_back((r.lo + r.hi) / 2);
    bool rounded_inside = true;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      rounded.push_back(best_rational_approximation(dyadic[i], Integer(1000000)));
      rounded_inside &= ranges[i].lo <= rounded.back() && rounded.back() <= ranges[i].hi;
    }
    std::mt19937_64 rng(cfg_.seed ^ (node.id * 0x9E3779B97F4A7C15ULL));
    for (const auto& r : ranges) {
      const Rational t = make_rational(Integer(static_cast<unsigned long>(rng() >> 44)), Integer(1UL << 20));
      random.push_back(r.lo + (r.hi - r.lo) * t);
    }
    std::vector<std::vector<Rational>> out;
    if (rounded_inside) out.push_back(std::move(rounded));
    if (out.empty() || out.front() != dyadic) out.push_back(std::move(dyadic));
    out.push_back(std::move(random));
    return out;
  }

  std::optional<std::pair<TransferFunction, Certificate>> certify(const std::vector<Rational>& point) const {
    try {
      TransferFunction c = controller_from_params(tpl_, point, plants_.domain());
      Certificate cert = simultaneously_stabilizes(plants_, c);
      if (cert.overall) return std::make_pair(std::move(c), std::move(cert));
    } catch (const Error&) {
    }
    return std::nullopt;
  }

  std::size_t split_dimension(const Node& node) const {
    const auto& ranges = node.box.ranges;
    if (cfg_.split == SplitStrategy::RoundRobin) return static_cast<std::size_t>(node.depth) % ranges.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ranges.size(); ++i)
      if (ranges[i].hi - ranges[i].lo > ranges[best].hi - ranges[best].lo) best = i;
    return best;
  }

  const PlantSet& plants_;
  const ControllerTemplate& tpl_;
  const SearchConfig& cfg_;
  std::vector<IntervalPoly> nums_, dens_;
};

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
}

}  // namespace

SearchOutcome feasibility_search(const PlantSet& plants, const ControllerTemplate& tpl, const ParamBox& box,
                                 const SearchConfig& cfg) {
  if (box.dims() != tpl.parameter_count())
    throw InvalidArgument("box has " + std::to_string(box.dims()) + " dimensions, template needs " +
                          std::to_string(tpl.parameter_count()));
  if (cfg.max_boxes == 0) throw InvalidArgument("search budget must be positive");
  if (cfg.min_width <= 0) throw InvalidArgument("min_width must be positive");
  for (const auto& r : box.ranges)
    if (r.hi < r.lo) throw InvalidArgument("box range with hi < lo");

  const Searcher searcher(plants, tpl, cfg);
  const unsigned threads = effective_threads(cfg.threads);
  // Fixed batch size so the outcome does not depend on the worker count.
  constexpr std::size_t batch_size = 64;

  SearchOutcome out;
  std::deque<Node> queue;
  queue.push_back(Node{box, 0, 0});
  std::uint64_t next_id = 1;
  bool leaf_left = false;

  while (!queue.empty() && out.boxes_explored < cfg.max_boxes) {
    const std::size_t take = std::min({queue.size(), batch_size, cfg.max_boxes - out.boxes_explored});
    std::vector<Node> batch(std::make_move_iterator(queue.begin()),
                            std::make_move_iterator(queue.begin() + static_cast<std::ptrdiff_t>(take)));
    queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(take));
    std::vector<BoxResult> results(take);
    parallel_for(take, threads, [&](std::size_t i) { results[i] = searcher.evaluate(batch[i]); });
    out.boxes_explored += take;

    for (std::size_t i = 0; i < take; ++i) {
      auto& r = results[i];
      if (r.kind == BoxResult::Kind::Found) {
        out.status = SearchOutcome::Status::Found;
        out.controller = std::move(r.controller);
        out.certificate = std::move(r.certificate);
        return out;
      }
    }
    for (std::size_t i = 0; i < take; ++i) {
      const auto& r = results[i];
      if (r.kind == BoxResult::Kind::Leaf) leaf_left = true;
      if (r.kind != BoxResult::Kind::Split) continue;
      Node lower{batch[i].box, next_id++, batch[i].depth + 1};
      Node upper{std::move(batch[i].box), next_id++, batch[i].depth + 1};
      auto& lr = lower.box.ranges[r.split_dim];
      auto& ur = upper.box.ranges[r.split_dim];
      const Rational mid = (lr.lo + lr.hi) / 2;
      lr.hi = mid;
      ur.lo = mid;
      queue.push_back(std::move(lower));
      queue.push_back(std::move(upper));
    }
  }
  out.status = queue.empty() && !leaf_left ? SearchOutcome::Status::BoxInfeasible
                                           : SearchOutcome::Status::NotFoundAtBudget;
  return out;
}

bool RealInterval::contains(const Rational& x) const {
  if (lo && (lo_closed ? x < *lo : x <= *lo)) return false;
  if (hi && (hi_closed ? x > *hi : x >= *hi)) return false;
  return true;
}

bool RealSet::contains(const Rational& x) const {
  return std::any_of(parts.begin(), parts.end(), [&](const RealInterval& r) { return r.contains(x); });
}

RealSet exact_range_deg0(const Rational& delta) {
  const PlantSet plants = gcp_plants({delta, GcpVariant::Theorem1, Domain::Continuous});
  // Each closed loop d + y0 n has degree <= 2, so its verdict only changes
  // where one of its coefficients changes sign.
  std::vector<Rational> crit;
  for (const auto& p : plants) {
    const int deg = std::max(p.num().degree(), p.den().degree());
    for (int k = 0; k <= deg; ++k)
      if (p.num().coeff(k) != 0) crit.push_back(-p.den().coeff(k) / p.num().coeff(k));
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  auto stable_at = [&](const Rational& y0) {
    try {
      return simultaneously_stabilizes(plants, TransferFunction::constant(y0, Domain::Continuous)).overall;
    } catch (const IllPosedLoop&) {
      return false;
    }
  };

  // Pieces in order: (-inf, c1), {c1}, (c1, c2), ..., {cn}, (cn, inf).
  struct Piece {
    std::optional<Rational> lo, hi;
    bool point;
    bool ok;
  };
  std::vector<Piece> pieces;
  const std::size_t n = crit.size();
  for (std::size_t i = 0; i <= n; ++i) {
    std::optional<Rational> lo, hi;
    if (i > 0) lo = crit[i - 1];
    if (i < n) hi = crit[i];
    Rational sample = !lo && !hi ? Rational(0) : !lo ? Rational(*hi - 1) : !hi ? Rational(*lo + 1) : Rational((*lo + *hi) / 2);
    pieces.push_back({lo, hi, false, stable_at(sample)});
    if (i < n) pieces.push_back({crit[i], crit[i], true, stable_at(crit[i])});
  }

  RealSet out;
  std::optional<RealInterval> run;
  const Piece* last = nullptr;
  for (const auto& piece : pieces) {
    if (piece.ok && !run) run = RealInterval{piece.lo, std::nullopt, piece.point, false};
    if (!piece.ok && run) {
      run->hi = last->hi;
      run->hi_closed = last->point;
      out.parts.push_back(*run);
      run.reset();
    }
    last = &piece;
  }
  if (run) {
    run->hi = last->hi;
    run->hi_closed = last->point;
    out.parts.push_back(*run);
  }
  return out;
}

ParamBox default_box(const ControllerTemplate& tpl) {
  return ParamBox::uniform(tpl.parameter_count(), Rational(-10), Rational(10));
}

ThresholdBracket delta_threshold(const ControllerTemplate& tpl, const Rational& lo, const Rational& hi,
                                 const Rational& tol, const SearchConfig& cfg, const ParamBox& box) {
  if (!(lo < hi)) throw InvalidArgument("threshold bracket needs lo < hi");
  if (tol <= 0) throw InvalidArgument("threshold tolerance must be positive");
  auto probe = [&](const Rational& delta) {
    return feasibility_search(gcp_plants({delta, GcpVariant::Theorem1, Domain::Continuous}), tpl, box, cfg);
  };
  SearchOutcome top = probe(hi);
  if (top.status != SearchOutcome::Status::Found)
    throw InvalidArgument("no controller found at the upper end delta = " + to_string(hi));
  ThresholdBracket b{lo, hi, *top.controller, 1};
  while (b.hi - b.lo > tol) {
    const Rational mid = (b.lo + b.hi) / 2;
    SearchOutcome o = probe(mid);
    ++b.probes;
    if (o.status == SearchOutcome::Status::Found) {
      b.hi = mid;
      b.witness = *o.controller;
    } else {
      b.lo = mid;
    }
  }
  return b;
}

Properized properize(const TransferFunction& c, const PlantSet& plants, int target_degree, const Rational& eps0,
                     int max_trials) {
  if (c.domain() != Domain::Continuous) throw DomainMismatch("properize expects a continuous-time controller");
  if (target_degree < c.order())
    throw InvalidArgument("target degree " + std::to_string(target_degree) + " is below the controller order " +
                          std::to_string(c.order()));
  if (eps0 <= 0) throw InvalidArgument("eps0 must be positive");
  const int m = c.den().degree();
  if (target_degree == m) return Properized{c, {}, 0};

  std::vector<Rational> eps;
  for (int i = m + 1; i <= target_degree; ++i) eps.push_back(pow(eps0, i - m));
  TransferFunction last = c;
  for (int trial = 1; trial <= max_trials; ++trial) {
    Poly den = c.den();
    for (int i = m + 1; i <= target_degree; ++i) den += Poly::monomial(eps[static_cast<std::size_t>(i - m - 1)], i);
    last = TransferFunction(c.num(), den, Domain::Continuous);
    if (simultaneously_stabilizes(plants, last).overall) return Properized{last, eps, trial};
    // Dividing by 2^(k^2) makes eps_{k-1} eps_{k+2} / (eps_k eps_{k+1}) drop
    // 16-fold per trial; a plain 2^k keeps eps0^k schedules marginal forever.
    for (int i = m + 1; i <= target_degree; ++i)
      eps[static_cast<std::size_t>(i - m - 1)] /= pow(Rational(2), (i - m) * (i - m));
  }
  throw BudgetExhausted("properize: no certified controller after " + std::to_string(max_trials) +
                        " trials; last trial " + last.to_string());
}

Poly hurwitz_augment_exists(const Poly& f, int n) {
  if (f.is_zero()) throw InvalidArgument("augmentation needs a nonzero polynomial");
  for (const auto& a : f.coeffs())
    if (a <= 0) throw InvalidArgument("augmentation needs positive coefficients");
  if (!is_hurwitz(f).stable()) throw InvalidArgument("augmentation needs a Hurwitz stable polynomial");
  if (n <= f.degree()) throw InvalidArgument("target degree must exceed the degree of f");
  Poly g = f;
  for (int k = f.degree() + 1; k <= n; ++k) {
    Rational eps = 1;
    for (int tries = 0;; ++tries) {
      if (tries == 4096) throw BudgetExhausted("augmentation did not converge at degree " + std::to_string(k));
      Poly cand = g + Poly::monomial(eps, k);
      if (is_hurwitz(cand).stable()) {
        g = std::move(cand);
        break;
      }
      eps /= 2;
    }
  }
  return g;
}

}  // namespace simstab
