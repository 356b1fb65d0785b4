// Command-line front end. Exit status: 0 when the requested claim holds,
// 1 when it does not, 2 on usage or tool errors.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "simstab/errors.hpp"
#include "simstab/json_io.hpp"

using namespace simstab;

namespace {

constexpr const char* kVersion = "0.1.0";

Poly parse_poly_list(const std::string& text) {
  std::vector<Rational> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty coefficient in \"" + text + "\"");
    coeffs.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (coeffs.empty()) throw ParseError("no coefficients in \"" + text + "\"");
  return Poly(std::move(coeffs));
}

ControllerTemplate parse_template(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("template must be \"num_degree,den_degree\"");
  try {
    ControllerTemplate t{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    if (t.num_degree < 0 || t.den_degree < 0) throw ParseError("template degrees must be nonnegative");
    return t;
  } catch (const std::logic_error&) {
    throw ParseError("template must be \"num_degree,den_degree\"");
  }
}

struct Output {
  bool json = false;

  int emit(const std::string& command, bool claim, Json result,
           std::chrono::steady_clock::time_point start) const {
    Report r{command, claim, std::move(result),
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), kVersion};
    if (json) {
      std::cout << to_json(r).dump(2) << "\n";
    } else {
      std::cout << render_text(r);
    }
    return claim ? 0 : 1;
  }
};

Json certificate_list(const std::vector<Certificate>& certs) {
  Json out = Json::array();
  for (const auto& c : certs) out.push_back(to_json(c));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simultaneous-stabilization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  Output out;
  app.add_flag("--json", out.json, "Machine-readable JSON output");

  std::function<int()> action;
  auto start = std::chrono::steady_clock::now();

  // check-poly
  std::string poly_text, domain_text = "s";
  auto* check = app.add_subcommand("check-poly", "Stability verdict of a polynomial (ascending coefficients)");
  check->add_option("coefficients", poly_text, "Comma-separated coefficients, constant term first")->required();
  check->add_option("--domain", domain_text, "s (Hurwitz) or z (roots outside the unit disk)");
  check->callback([&] {
    action = [&] {
      const Domain d = parse_domain(domain_text);
      const Poly p = parse_poly_list(poly_text);
      const StabilityVerdict v = is_stable(p, d);
      Json res{{"poly", to_json(p)}, {"domain", domain_tag(d)}, {"verdict", to_json(v)}};
      if (d == Domain::Continuous && p.degree() >= 1) {
        Json minors = Json::array();
        for (const auto& m : hurwitz_minors(p)) minors.push_back(to_json(m));
        res["hurwitz_minors"] = minors;
      }
      return out.emit("check-poly", v.stable(), res, start);
    };
  });

  // verify
  std::string problem_path;
  auto* verify = app.add_subcommand("verify", "Certify every controller of a problem file against its plants");
  verify->add_option("problem", problem_path, "Problem file (JSON)")->required();
  verify->callback([&] {
    action = [&] {
      const ProblemFile pf = parse_problem(read_file(problem_path));
      if (pf.controllers.empty()) throw InvalidArgument("problem file has no controller to verify");
      const PlantSet plants(pf.plants);
      std::vector<Certificate> certs;
      bool all = true;
      for (const auto& c : pf.controllers) {
        certs.push_back(simultaneously_stabilizes(plants, c));
        all = all && certs.back().overall;
      }
      return out.emit("verify", all, Json{{"overall", all}, {"certificates", certificate_list(certs)}}, start);
    };
  });

  // champagne
  auto* champ = app.add_subcommand("champagne", "Generalized Champagne Problem tools");
  champ->require_subcommand(1);
  std::string delta_text, variant_text = "theorem1";

  auto* cverdict = champ->add_subcommand("verdict", "Is the three-plant family simultaneously stabilizable?");
  cverdict->add_option("--delta", delta_text, "delta as p/q or a finite decimal")->required();
  cverdict->add_option("--variant", variant_text, "theorem1 or theorem2");
  cverdict->callback([&] {
    action = [&] {
      const Rational d = parse_rational(delta_text);
      const bool v = verdict(d, parse_variant(variant_text));
      return out.emit("champagne verdict", v,
                      Json{{"delta", to_json(d)}, {"variant", to_string(parse_variant(variant_text))},
                           {"stabilizable", v}},
                      start);
    };
  });

  auto* cexamples = champ->add_subcommand("examples", "Re-certify every catalog controller");
  cexamples->callback([&] {
    action = [&] {
      Json entries = Json::array();
      bool all = true;
      for (const auto& e : example_catalog()) {
        if (e.controllers.empty()) continue;
        const PlantSet plants = gcp_plants({e.delta, GcpVariant::Theorem1, Domain::Continuous});
        bool matches = true;
        for (const auto& c : e.controllers) matches = matches && simultaneously_stabilizes(plants, c).overall == e.expected;
        all = all && matches;
        entries.push_back(Json{{"id", e.id},
                               {"delta", to_json(e.delta)},
                               {"controllers", e.controllers.size()},
                               {"expected", e.expected},
                               {"pass", matches}});
      }
      return out.emit("champagne examples", all, Json{{"all_pass", all}, {"entries", entries}}, start);
    };
  });

  auto* ccatalog = champ->add_subcommand("catalog", "Print the example catalog as JSON problem entries");
  ccatalog->callback([&] {
    action = [&] {
      std::cout << catalog_to_json(example_catalog()).dump(2) << "\n";
      return 0;
    };
  });

  auto* csynth = champ->add_subcommand("synthesize", "Build a certified controller for one delta");
  std::string method = "proof", template_text = "1,0";
  std::size_t budget = SearchConfig{}.max_boxes;
  int max_degree = 256;
  bool continuous = false;
  csynth->add_option("--delta", delta_text, "delta as p/q or a finite decimal")->required();
  csynth->add_option("--method", method, "proof (Taylor sections of the extremal construction) or search")
      ->check(CLI::IsMember({"proof", "search"}));
  csynth->add_option("--template", template_text, "num_degree,den_degree for --method search");
  csynth->add_option("--budget", budget, "Box budget for --method search");
  csynth->add_option("--max-degree", max_degree, "Taylor degree cap for --method proof");
  csynth->add_flag("--continuous", continuous, "Also map the proof controller to continuous time");
  csynth->callback([&] {
    action = [&] {
      const Rational d = parse_rational(delta_text);
      if (method == "search") {
        const ControllerTemplate tpl = parse_template(template_text);
        SearchConfig cfg;
        cfg.max_boxes = budget;
        const SearchOutcome o = feasibility_search(gcp_plants({d}), tpl, default_box(tpl), cfg);
        return out.emit("champagne synthesize", o.status == SearchOutcome::Status::Found, to_json(o), start);
      }
      ProofSynthConfig cfg;
      cfg.delta = d;
      cfg.max_taylor_degree = max_degree;
      const ProofController pc = construct_controller(cfg);
      Json res = to_json(pc);
      if (continuous) {
        const ContinuousController cc = to_continuous(pc.q, d);
        res["continuous"] = Json{{"controller", to_json(cc.controller)}, {"certificate", to_json(cc.certificate)}};
      }
      return out.emit("champagne synthesize", pc.certificate.overall, res, start);
    };
  });

  // threshold
  auto* thr = app.add_subcommand("threshold", "Bisection on delta for a controller structure");
  std::string lo_text = "0", hi_text = "1", tol_text = "1/1000", radius_text = "10";
  thr->add_option("--template", template_text, "num_degree,den_degree")->required();
  thr->add_option("--lo", lo_text, "Lower end of the delta bracket");
  thr->add_option("--hi", hi_text, "Upper end of the delta bracket (must be feasible)");
  thr->add_option("--tol", tol_text, "Bracket width");
  thr->add_option("--budget", budget, "Box budget per probe");
  thr->add_option("--box-radius", radius_text, "Search box [-r, r]^k");
  thr->callback([&] {
    action = [&] {
      const ControllerTemplate tpl = parse_template(template_text);
      SearchConfig cfg;
      cfg.max_boxes = budget;
      const Rational r = parse_rational(radius_text);
      const ThresholdBracket b = delta_threshold(tpl, parse_rational(lo_text), parse_rational(hi_text),
                                                 parse_rational(tol_text), cfg,
                                                 ParamBox::uniform(tpl.parameter_count(), -r, r));
      return out.emit("threshold", true, to_json(b), start);
    };
  });

  // properize
  auto* prop = app.add_subcommand("properize", "Make a controller proper while keeping the certificate");
  std::string num_text, den_text = "1", eps_text = "1/10";
  int target_degree = 0;
  prop->add_option("--problem", problem_path, "Problem file with plants and one controller");
  prop->add_option("--delta", delta_text, "Use the continuous family at this delta as plants");
  prop->add_option("--num", num_text, "Controller numerator (ascending coefficients)");
  prop->add_option("--den", den_text, "Controller denominator (ascending coefficients)");
  prop->add_option("--target-degree", target_degree, "Degree of the new denominator")->required();
  prop->add_option("--eps", eps_text, "Initial perturbation size");
  prop->callback([&] {
    action = [&] {
      std::optional<PlantSet> plants;
      std::optional<TransferFunction> c;
      if (!problem_path.empty()) {
        const ProblemFile pf = parse_problem(read_file(problem_path));
        plants.emplace(pf.plants);
        if (!pf.controllers.empty()) c = pf.controllers.front();
      }
      if (!delta_text.empty()) plants.emplace(gcp_plants({parse_rational(delta_text)}));
      if (!num_text.empty())
        c = TransferFunction(parse_poly_list(num_text), parse_poly_list(den_text), Domain::Continuous);
      if (!plants || !c) throw InvalidArgument("properize needs plants (--problem or --delta) and a controller");
      const Properized p = properize(*c, *plants, target_degree, parse_rational(eps_text));
      return out.emit("properize", true,
                      Json{{"properized", to_json(p)},
                           {"certificate", to_json(simultaneously_stabilizes(*plants, p.controller))}},
                      start);
    };
  });

  // transform
  auto* trans = app.add_subcommand("transform", "Map plants and controllers to the other time domain");
  std::string target_text = "z";
  trans->add_option("--to", target_text, "Target domain: s or z")->required();
  trans->add_option("--problem", problem_path, "Problem file to transform");
  trans->add_option("--delta", delta_text, "Transform the family at this delta instead");
  trans->add_option("--variant", variant_text, "theorem1 or theorem2");
  trans->callback([&] {
    action = [&] {
      const Domain target = parse_domain(target_text);
      ProblemFile pf;
      if (!problem_path.empty()) {
        pf = parse_problem(read_file(problem_path));
      } else if (!delta_text.empty()) {
        const Domain from = target == Domain::Discrete ? Domain::Continuous : Domain::Discrete;
        pf.domain = from;
        pf.delta = parse_rational(delta_text);
        pf.plants = gcp_plants({*pf.delta, parse_variant(variant_text), from}).plants();
      } else {
        throw InvalidArgument("transform needs --problem or --delta");
      }
      ProblemFile mapped = pf;
      mapped.domain = target;
      for (auto& p : mapped.plants) p = bilinear_plant(p, target);
      for (auto& c : mapped.controllers) c = bilinear_plant(c, target);
      return out.emit("transform", true, to_json(mapped), start);
    };
  });

  // range
  auto* range = app.add_subcommand("range", "Exact set of stabilizing constant controllers");
  range->add_option("--delta", delta_text, "delta as p/q or a finite decimal")->required();
  range->callback([&] {
    action = [&] {
      const Rational d = parse_rational(delta_text);
      const RealSet s = exact_range_deg0(d);
      return out.emit("range", !s.empty(), Json{{"delta", to_json(d)}, {"y0", to_json(s)}}, start);
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Branch-and-prune search for a fixed-structure controller");
  std::uint64_t seed = 0;
  search->add_option("--problem", problem_path, "Problem file with plants and optional template/box/search");
  search->add_option("--delta", delta_text, "Search on the continuous family at this delta");
  search->add_option("--template", template_text, "num_degree,den_degree");
  search->add_option("--budget", budget, "Box budget");
  search->add_option("--box-radius", radius_text, "Search box [-r, r]^k");
  search->add_option("--seed", seed, "Random seed for sample points");
  search->callback([&] {
    action = [&] {
      ControllerTemplate tpl = parse_template(template_text);
      std::optional<PlantSet> plants;
      std::optional<ParamBox> box;
      SearchConfig cfg;
      cfg.max_boxes = budget;
      if (!problem_path.empty()) {
        const ProblemFile pf = parse_problem(read_file(problem_path));
        plants.emplace(pf.plants);
        if (pf.tpl) tpl = *pf.tpl;
        box = pf.box;
        if (pf.search) cfg = *pf.search;
      } else if (!delta_text.empty()) {
        plants.emplace(gcp_plants({parse_rational(delta_text)}));
      } else {
        throw InvalidArgument("search needs --problem or --delta");
      }
      if (search->count("--budget")) cfg.max_boxes = budget;
      if (search->count("--seed")) cfg.seed = seed;
      if (!box) {
        const Rational r = parse_rational(radius_text);
        box = ParamBox::uniform(tpl.parameter_count(), -r, r);
      }
      const SearchOutcome o = feasibility_search(*plants, tpl, *box, cfg);
      return out.emit("search", o.status == SearchOutcome::Status::Found, to_json(o), start);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    start = std::chrono::steady_clock::now();
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
