#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vanish/chartab.hpp"
#include "vanish/cyclo.hpp"
#include "vanish/factcheck.hpp"
#include "vanish/structure.hpp"
#include "vanish/theorems.hpp"

namespace vanish {

inline constexpr const char* kToolVersion = "0.1.0";

/// Envelope of every JSON document the CLI writes.
struct ReportDoc {
  std::vector<std::string> command;
  std::string tool_version = kToolVersion;
  nlohmann::json payload;
  int exit_code = 0;

  friend bool operator==(const ReportDoc&, const ReportDoc&) = default;
};

nlohmann::json to_json(const ReportDoc& doc);
ReportDoc report_doc_from_json(const nlohmann::json& j);

/// {conductor, coeffs}; coefficients are rational strings in the power
/// basis of Q(zeta_conductor).
nlohmann::json to_json(const Cyc& c);
Cyc cyc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Group& g);
nlohmann::json to_json(const CharTable& t);
nlohmann::json to_json(const Group& g, const ClassData& classes, const VanishingProfile& prof);
nlohmann::json to_json(const StructReport& r);
nlohmann::json to_json(const CoreVerdict& v, const std::optional<CoreWitness>& w);
nlohmann::json to_json(const Permutability& p);

nlohmann::json to_json(const CheckOutcome& o);
CheckOutcome outcome_from_json(const nlohmann::json& j);
nlohmann::json to_json(const HarnessReport& r);
HarnessReport harness_report_from_json(const nlohmann::json& j);

}  // namespace vanish
