#pragma once

// JSON serialization of the library's report types, with a common envelope
// (tool name, version, config echo). Key order is alphabetical and rationals
// render canonically, so identical inputs produce identical bytes.

#include <json.hpp>

#include <string>

#include "pisolab/bp.hpp"
#include "pisolab/check_report.hpp"
#include "pisolab/covariance.hpp"
#include "pisolab/crossed_product.hpp"
#include "pisolab/padic.hpp"

namespace pisolab {

inline constexpr const char* kToolName = "piso-lab";
inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json check_report_json(const CheckReport& report);
nlohmann::json audit_report_json(const AuditReport& audit);

// Sorted term list [{"coeff": "p/q", "u": "<element>"}].
nlohmann::json bp_function_json(const BpFunction& f);
BpFunction bp_function_from_json(const Descriptor& d, const nlohmann::json& j);

nlohmann::json qa_report_json(const QaReport& report);

// One monomial: {"coeff": "p/q", "f": <BpFunction JSON>, "x": .., "y": ..};
// emitted with coeff "1/1" (the scalar lives in f), accepted with any coeff.
nlohmann::json cp_element_json(const CpElement& u);
CpElement cp_element_from_json(const Descriptor& d, const nlohmann::json& j);

nlohmann::json bd_invariants_json(const BdInvariants& inv);
std::string bd_invariants_csv(const BdInvariants& inv);

nlohmann::json ga_element_json(const GaElement& a);

// {"config": <echo>, "results": .., "tool": .., "version": ..}.
nlohmann::json report_envelope(const nlohmann::json& config,
                               const nlohmann::json& results);

}  // namespace pisolab
