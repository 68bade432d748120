#pragma once

#include "sgs/extension.hpp"
#include "sgs/ppfunction.hpp"
#include "sgs/region.hpp"
#include "sgs/report.hpp"
#include "sgs/tess.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <utility>

namespace sgs {

// Key order is part of the wire format, so files diff cleanly.
using Json = nlohmann::ordered_json;

// Rationals travel as reduced "p" or "p/q" strings; round trips are exact.
Json rational_to_json(const Rational&);
Rational rational_from_json(const Json&);

Json pp_to_json(const PPFunction&);
PPFunction pp_from_json(const Json&);  // validates invariants, throws std::invalid_argument

Json region_to_json(const Region&);
Region region_from_json(const Json&);

// Classes are tagged with the model that owns their payload:
//   {"model":"int","n":...,"m":...}, {"model":"trivial","k":...,"m":...},
//   {"model":"pp","order":...,"function":{...}}.
Json ext_to_json(std::string_view model, const ExtElement&);
std::pair<std::string, ExtElement> ext_from_json(const Json&);

Json bar_to_json(std::string_view model, const BarElement&);
std::pair<std::string, BarElement> bar_from_json(const Json&);

Json report_to_json(const AuditReport&);
AuditReport report_from_json(const Json&);

}  // namespace sgs
