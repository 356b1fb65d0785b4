#include "simstab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "simstab/errors.hpp"

namespace simstab {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError((path.empty() ? "/" : path) + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing member \"") + key + "\"");
  return *it;
}

const Json* optional_member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string str(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool boolean(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

long long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

template <class F>
auto rewrap(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    fail(path, e.what());
  } catch (const InvalidArgument& e) {
    fail(path, e.what());
  }
}

template <class T, class F>
std::vector<T> list(const Json& j, const std::string& path, F&& item) {
  std::vector<T> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(item(j[i], child(path, i)));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return make_rational(static_cast<std::int64_t>(j.get<long long>()));
  if (!j.is_string()) fail(path, "expected a rational as \"p/q\" or a finite decimal string");
  return rewrap(path, [&] { return parse_rational(j.get<std::string>()); });
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const Json& j, const std::string& path) {
  return Poly(list<Rational>(j, path, [](const Json& e, const std::string& p) { return rational_from_json(e, p); }));
}

Json to_json(const TransferFunction& tf) {
  return Json{{"num", to_json(tf.num())}, {"den", to_json(tf.den())}, {"domain", domain_tag(tf.domain())}};
}

TransferFunction tf_from_json(const Json& j, const std::string& path, std::optional<Domain> fallback) {
  Poly num = poly_from_json(member(j, "num", path), child(path, "num"));
  Poly den = poly_from_json(member(j, "den", path), child(path, "den"));
  Domain domain;
  if (const Json* d = optional_member(j, "domain", path)) {
    domain = rewrap(child(path, "domain"), [&] { return parse_domain(str(*d, child(path, "domain"))); });
  } else if (fallback) {
    domain = *fallback;
  } else {
    fail(path, "missing member \"domain\"");
  }
  if (den.is_zero()) fail(child(path, "den"), "denominator must be nonzero");
  return TransferFunction(std::move(num), std::move(den), domain);
}

Json to_json(const StabilityVerdict& v) {
  Json out{{"status", to_string(v.status)}, {"witness", nullptr}};
  if (v.witness) out["witness"] = Json{{"kind", to_string(v.witness->kind)}, {"index", v.witness->index}};
  return out;
}

StabilityVerdict verdict_from_json(const Json& j, const std::string& path) {
  StabilityVerdict v;
  v.status = rewrap(child(path, "status"),
                    [&] { return parse_stability_status(str(member(j, "status", path), child(path, "status"))); });
  if (const Json* w = optional_member(j, "witness", path)) {
    const std::string wp = child(path, "witness");
    StabilityWitness wit{rewrap(child(wp, "kind"),
                                [&] { return parse_witness_kind(str(member(*w, "kind", wp), child(wp, "kind"))); }),
                         static_cast<int>(integer(member(*w, "index", wp), child(wp, "index")))};
    v.witness = wit;
  }
  return v;
}

Json to_json(const Certificate& c) {
  Json per = Json::array();
  for (const auto& p : c.per_plant) per.push_back(Json{{"char_poly", to_json(p.char_poly)}, {"verdict", to_json(p.verdict)}});
  return Json{{"domain", domain_tag(c.domain)}, {"overall", c.overall}, {"per_plant", per}};
}

Certificate certificate_from_json(const Json& j, const std::string& path) {
  Certificate c;
  c.domain = rewrap(child(path, "domain"),
                    [&] { return parse_domain(str(member(j, "domain", path), child(path, "domain"))); });
  c.overall = boolean(member(j, "overall", path), child(path, "overall"));
  c.per_plant = list<PlantCertificate>(member(j, "per_plant", path), child(path, "per_plant"),
                                       [](const Json& e, const std::string& p) {
                                         return PlantCertificate{
                                             poly_from_json(member(e, "char_poly", p), child(p, "char_poly")),
                                             verdict_from_json(member(e, "verdict", p), child(p, "verdict"))};
                                       });
  return c;
}

Json to_json(const ControllerTemplate& t) {
  return Json{{"num_degree", t.num_degree}, {"den_degree", t.den_degree}, {"monic_den", t.monic_den}};
}

ControllerTemplate template_from_json(const Json& j, const std::string& path) {
  ControllerTemplate t;
  t.num_degree = static_cast<int>(integer(member(j, "num_degree", path), child(path, "num_degree")));
  t.den_degree = static_cast<int>(integer(member(j, "den_degree", path), child(path, "den_degree")));
  if (const Json* m = optional_member(j, "monic_den", path)) t.monic_den = boolean(*m, child(path, "monic_den"));
  if (t.num_degree < 0 || t.den_degree < 0) fail(path, "degrees must be nonnegative");
  return t;
}

Json to_json(const ParamBox& b) {
  Json out = Json::array();
  for (const auto& r : b.ranges) out.push_back(Json::array({to_json(r.lo), to_json(r.hi)}));
  return out;
}

ParamBox box_from_json(const Json& j, const std::string& path) {
  return ParamBox{list<ParamRange>(j, path, [](const Json& e, const std::string& p) {
    if (!e.is_array() || e.size() != 2) fail(p, "expected a [lo, hi] pair");
    ParamRange r{rational_from_json(e[0], child(p, 0)), rational_from_json(e[1], child(p, 1))};
    if (r.hi < r.lo) fail(p, "hi < lo");
    return r;
  })};
}

Json to_json(const SearchConfig& c) {
  return Json{{"max_boxes", c.max_boxes},  {"min_width", to_json(c.min_width)}, {"split", to_string(c.split)},
              {"seed", c.seed},            {"threads", c.threads}};
}

SearchConfig search_config_from_json(const Json& j, const std::string& path) {
  SearchConfig c;
  if (const Json* v = optional_member(j, "max_boxes", path)) {
    const long long n = integer(*v, child(path, "max_boxes"));
    if (n <= 0) fail(child(path, "max_boxes"), "must be positive");
    c.max_boxes = static_cast<std::size_t>(n);
  }
  if (const Json* v = optional_member(j, "min_width", path)) {
    c.min_width = rational_from_json(*v, child(path, "min_width"));
    if (c.min_width <= 0) fail(child(path, "min_width"), "must be positive");
  }
  if (const Json* v = optional_member(j, "split", path))
    c.split = rewrap(child(path, "split"), [&] { return parse_split_strategy(str(*v, child(path, "split"))); });
  if (const Json* v = optional_member(j, "seed", path)) c.seed = static_cast<std::uint64_t>(integer(*v, child(path, "seed")));
  if (const Json* v = optional_member(j, "threads", path))
    c.threads = static_cast<unsigned>(integer(*v, child(path, "threads")));
  return c;
}

Json to_json(const SearchOutcome& o) {
  Json out{{"status", to_string(o.status)}, {"boxes_explored", o.boxes_explored}};
  out["controller"] = o.controller ? to_json(*o.controller) : Json(nullptr);
  out["certificate"] = o.certificate ? to_json(*o.certificate) : Json(nullptr);
  return out;
}

SearchOutcome outcome_from_json(const Json& j, const std::string& path) {
  SearchOutcome o;
  o.status = rewrap(child(path, "status"),
                    [&] { return parse_search_status(str(member(j, "status", path), child(path, "status"))); });
  o.boxes_explored = static_cast<std::size_t>(integer(member(j, "boxes_explored", path), child(path, "boxes_explored")));
  if (const Json* c = optional_member(j, "controller", path)) o.controller = tf_from_json(*c, child(path, "controller"));
  if (const Json* c = optional_member(j, "certificate", path))
    o.certificate = certificate_from_json(*c, child(path, "certificate"));
  return o;
}

Json to_json(const RealSet& s) {
  Json parts = Json::array();
  for (const auto& r : s.parts)
    parts.push_back(Json{{"lo", r.lo ? to_json(*r.lo) : Json("-inf")},
                         {"hi", r.hi ? to_json(*r.hi) : Json("inf")},
                         {"lo_closed", r.lo_closed},
                         {"hi_closed", r.hi_closed}});
  return parts;
}

RealSet real_set_from_json(const Json& j, const std::string& path) {
  return RealSet{list<RealInterval>(j, path, [](const Json& e, const std::string& p) {
    RealInterval r;
    const Json& lo = member(e, "lo", p);
    const Json& hi = member(e, "hi", p);
    if (!(lo.is_string() && lo.get<std::string>() == "-inf")) r.lo = rational_from_json(lo, child(p, "lo"));
    if (!(hi.is_string() && hi.get<std::string>() == "inf")) r.hi = rational_from_json(hi, child(p, "hi"));
    r.lo_closed = boolean(member(e, "lo_closed", p), child(p, "lo_closed"));
    r.hi_closed = boolean(member(e, "hi_closed", p), child(p, "hi_closed"));
    return r;
  })};
}

Json to_json(const ThresholdBracket& b) {
  return Json{{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}, {"witness", to_json(b.witness)}, {"probes", b.probes}};
}

ThresholdBracket bracket_from_json(const Json& j, const std::string& path) {
  return ThresholdBracket{rational_from_json(member(j, "lo", path), child(path, "lo")),
                          rational_from_json(member(j, "hi", path), child(path, "hi")),
                          tf_from_json(member(j, "witness", path), child(path, "witness")),
                          static_cast<int>(integer(member(j, "probes", path), child(path, "probes")))};
}

Json to_json(const Properized& p) {
  Json added = Json::array();
  for (const auto& e : p.added) added.push_back(to_json(e));
  return Json{{"controller", to_json(p.controller)}, {"added", added}, {"trials", p.trials}};
}

Properized properized_from_json(const Json& j, const std::string& path) {
  return Properized{tf_from_json(member(j, "controller", path), child(path, "controller")),
                    list<Rational>(member(j, "added", path), child(path, "added"),
                                   [](const Json& e, const std::string& p) { return rational_from_json(e, p); }),
                    static_cast<int>(integer(member(j, "trials", path), child(path, "trials")))};
}

Json to_json(const ProofController& p) {
  const auto& d = p.diagnostics;
  Json attempts = Json::array();
  for (const auto& a : d.attempts)
    attempts.push_back(Json{{"taylor_degree", a.taylor_degree},
                            {"product_terms", a.product_terms},
                            {"u1_unit", a.u1_unit},
                            {"u2_unit", a.u2_unit}});
  return Json{{"q", to_json(p.q)},
              {"certificate", to_json(p.certificate)},
              {"diagnostics",
               Json{{"sigma", d.sigma},
                    {"clearance", d.clearance},
                    {"mu", d.mu ? Json(*d.mu) : Json(nullptr)},
                    {"product_terms", d.product_terms},
                    {"taylor_degree", d.taylor_degree},
                    {"attempts", attempts}}}};
}

ProofController proof_controller_from_json(const Json& j, const std::string& path) {
  ProofController p;
  p.q = poly_from_json(member(j, "q", path), child(path, "q"));
  p.certificate = certificate_from_json(member(j, "certificate", path), child(path, "certificate"));
  const std::string dp = child(path, "diagnostics");
  const Json& d = member(j, "diagnostics", path);
  p.diagnostics.sigma = static_cast<int>(integer(member(d, "sigma", dp), child(dp, "sigma")));
  p.diagnostics.clearance = number(member(d, "clearance", dp), child(dp, "clearance"));
  if (const Json* mu = optional_member(d, "mu", dp)) p.diagnostics.mu = number(*mu, child(dp, "mu"));
  p.diagnostics.product_terms = static_cast<int>(integer(member(d, "product_terms", dp), child(dp, "product_terms")));
  p.diagnostics.taylor_degree = static_cast<int>(integer(member(d, "taylor_degree", dp), child(dp, "taylor_degree")));
  p.diagnostics.attempts = list<ProofAttempt>(member(d, "attempts", dp), child(dp, "attempts"),
                                              [](const Json& e, const std::string& ap) {
                                                return ProofAttempt{
                                                    static_cast<int>(integer(member(e, "taylor_degree", ap), ap)),
                                                    static_cast<int>(integer(member(e, "product_terms", ap), ap)),
                                                    boolean(member(e, "u1_unit", ap), ap),
                                                    boolean(member(e, "u2_unit", ap), ap)};
                                              });
  return p;
}

Json to_json(const ProblemFile& p) {
  Json plants = Json::array();
  for (const auto& tf : p.plants) plants.push_back(to_json(tf));
  Json out{{"domain", domain_tag(p.domain)}};
  if (p.delta) out["delta"] = to_json(*p.delta);
  out["plants"] = plants;
  if (p.controllers.size() == 1) {
    out["controller"] = to_json(p.controllers.front());
  } else if (!p.controllers.empty()) {
    Json cs = Json::array();
    for (const auto& c : p.controllers) cs.push_back(to_json(c));
    out["controllers"] = cs;
  }
  if (p.tpl) out["template"] = to_json(*p.tpl);
  if (p.box) out["box"] = to_json(*p.box);
  if (p.search) out["search"] = to_json(*p.search);
  return out;
}

ProblemFile problem_from_json(const Json& j, const std::string& path) {
  ProblemFile p;
  p.domain = rewrap(child(path, "domain"),
                    [&] { return parse_domain(str(member(j, "domain", path), child(path, "domain"))); });
  auto read_tf = [&](const Json& e, const std::string& ep) {
    TransferFunction tf = tf_from_json(e, ep, p.domain);
    if (tf.domain() != p.domain) fail(ep, "domain differs from the file's domain");
    return tf;
  };
  p.plants = list<TransferFunction>(member(j, "plants", path), child(path, "plants"), read_tf);
  if (p.plants.empty()) fail(child(path, "plants"), "plant list must not be empty");
  if (const Json* c = optional_member(j, "controller", path)) p.controllers.push_back(read_tf(*c, child(path, "controller")));
  if (const Json* cs = optional_member(j, "controllers", path)) {
    auto more = list<TransferFunction>(*cs, child(path, "controllers"), read_tf);
    p.controllers.insert(p.controllers.end(), more.begin(), more.end());
  }
  if (const Json* d = optional_member(j, "delta", path)) p.delta = rational_from_json(*d, child(path, "delta"));
  if (const Json* t = optional_member(j, "template", path)) p.tpl = template_from_json(*t, child(path, "template"));
  if (const Json* b = optional_member(j, "box", path)) p.box = box_from_json(*b, child(path, "box"));
  if (const Json* s = optional_member(j, "search", path)) p.search = search_config_from_json(*s, child(path, "search"));
  if (p.tpl && p.box && p.box->dims() != p.tpl->parameter_count())
    fail(child(path, "box"), "box dimension does not match the template");
  return p;
}

ProblemFile parse_problem(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + " (byte " +
                     std::to_string(e.byte) + "): malformed JSON");
  }
  return problem_from_json(j);
}

Json to_json(const CatalogEntry& e) {
  Json out{{"id", e.id}, {"delta", to_json(e.delta)}, {"expected", e.expected}, {"notes", e.notes}};
  out["structure"] = e.structure ? Json{{"num_degree", e.structure->num_degree}, {"den_degree", e.structure->den_degree}}
                                 : Json(nullptr);
  out["range"] = e.range ? Json{{"lo", to_json(e.range->lo)}, {"hi", to_json(e.range->hi)}} : Json(nullptr);
  ProblemFile pf;
  pf.domain = Domain::Continuous;
  pf.delta = e.delta;
  pf.plants = gcp_plants({e.delta, GcpVariant::Theorem1, Domain::Continuous}).plants();
  pf.controllers = e.controllers;
  out["problem"] = to_json(pf);
  return out;
}

CatalogEntry catalog_entry_from_json(const Json& j, const std::string& path) {
  CatalogEntry e;
  e.id = str(member(j, "id", path), child(path, "id"));
  e.delta = rational_from_json(member(j, "delta", path), child(path, "delta"));
  e.expected = boolean(member(j, "expected", path), child(path, "expected"));
  e.notes = str(member(j, "notes", path), child(path, "notes"));
  if (const Json* s = optional_member(j, "structure", path)) {
    const std::string sp = child(path, "structure");
    e.structure = Structure{static_cast<int>(integer(member(*s, "num_degree", sp), child(sp, "num_degree"))),
                            static_cast<int>(integer(member(*s, "den_degree", sp), child(sp, "den_degree")))};
  }
  if (const Json* r = optional_member(j, "range", path)) {
    const std::string rp = child(path, "range");
    e.range = OpenRange{rational_from_json(member(*r, "lo", rp), child(rp, "lo")),
                        rational_from_json(member(*r, "hi", rp), child(rp, "hi"))};
  }
  e.controllers = problem_from_json(member(j, "problem", path), child(path, "problem")).controllers;
  return e;
}

Json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(to_json(e));
  return out;
}

Json to_json(const Report& r) {
  return Json{{"command", r.command},
              {"claim", r.claim},
              {"result", r.result},
              {"seconds", r.seconds},
              {"version", r.version}};
}

Report report_from_json(const Json& j, const std::string& path) {
  return Report{str(member(j, "command", path), child(path, "command")),
                boolean(member(j, "claim", path), child(path, "claim")), member(j, "result", path),
                number(member(j, "seconds", path), child(path, "seconds")),
                str(member(j, "version", path), child(path, "version"))};
}

namespace {

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_flat_array(value)) {
        os << pad << key << ":\n";
        render(os, value, indent + 1);
      } else if (value.is_array()) {
        os << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
        os << "]\n";
      } else {
        os << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_structured() && !is_flat_array(j[i])) {
        os << pad << "- [" << i << "]\n";
        render(os, j[i], indent + 1);
      } else {
        Json wrapper = Json::object();
        wrapper["[" + std::to_string(i) + "]"] = j[i];
        render(os, wrapper, indent);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "claim: " << (r.claim ? "true" : "false") << "\n";
  os << "result:\n";
  render(os, r.result, 1);
  os << "seconds: " << r.seconds << "\n";
  os << "version: " << r.version << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace simstab
