#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "simstab/champagne.hpp"
#include "simstab/feedback.hpp"
#include "simstab/proof_construction.hpp"
#include "simstab/synthesis.hpp"

namespace simstab {

using Json = nlohmann::ordered_json;

// Every *_from_json throws ParseError whose message starts with the JSON
// pointer of the offending value.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path = "");

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, const std::string& path = "");

Json to_json(const TransferFunction& tf);
/// "domain" may be omitted when a fallback is given.
TransferFunction tf_from_json(const Json& j, const std::string& path = "",
                              std::optional<Domain> fallback = std::nullopt);

Json to_json(const StabilityVerdict& v);
StabilityVerdict verdict_from_json(const Json& j, const std::string& path = "");

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j, const std::string& path = "");

Json to_json(const ControllerTemplate& t);
ControllerTemplate template_from_json(const Json& j, const std::string& path = "");

Json to_json(const ParamBox& b);
ParamBox box_from_json(const Json& j, const std::string& path = "");

Json to_json(const SearchConfig& c);
SearchConfig search_config_from_json(const Json& j, const std::string& path = "");

Json to_json(const SearchOutcome& o);
SearchOutcome outcome_from_json(const Json& j, const std::string& path = "");

Json to_json(const RealSet& s);
RealSet real_set_from_json(const Json& j, const std::string& path = "");

Json to_json(const ThresholdBracket& b);
ThresholdBracket bracket_from_json(const Json& j, const std::string& path = "");

Json to_json(const Properized& p);
Properized properized_from_json(const Json& j, const std::string& path = "");

Json to_json(const ProofController& p);
ProofController proof_controller_from_json(const Json& j, const std::string& path = "");

/// Plants, optional controllers and optional search sections.
struct ProblemFile {
  Domain domain = Domain::Continuous;
  std::vector<TransferFunction> plants;
  std::vector<TransferFunction> controllers;
  std::optional<Rational> delta;
  std::optional<ControllerTemplate> tpl;
  std::optional<ParamBox> box;
  std::optional<SearchConfig> search;
};

Json to_json(const ProblemFile& p);
ProblemFile problem_from_json(const Json& j, const std::string& path = "");
/// Parses text; syntax errors report line, column and byte offset.
ProblemFile parse_problem(std::string_view text);

Json to_json(const CatalogEntry& e);
CatalogEntry catalog_entry_from_json(const Json& j, const std::string& path = "");
Json catalog_to_json(const std::vector<CatalogEntry>& entries);

/// Output of one CLI command.
struct Report {
  std::string command;
  bool claim = false;
  Json result;
  double seconds = 0;
  std::string version;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j, const std::string& path = "");
/// Indented "key: value" rendering of the same content as to_json.
std::string render_text(const Report& r);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace simstab
