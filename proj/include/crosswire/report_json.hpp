#pragma once

// JSON form of a VerificationReport.  Unpopulated numbers serialize as null;
// an inconclusive hypothesis is false in "passed" and explained in "warnings".

#include "crosswire/engine.hpp"
#include "json.hpp"

namespace crosswire {

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  auto number = [](const std::optional<std::int64_t>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  auto pass = [](Verdict v) { return v == Verdict::pass; };
  nlohmann::ordered_json j;
  j["presentation"] = r.presentation;
  j["index_L"] = number(r.index_L);
  j["index_Lp"] = number(r.index_Lp);
  j["intersection_order"] = number(r.intersection_order);
  j["double_cosets"] = number(r.double_cosets);
  j["exhaustion_depth"] = number(r.exhaustion_depth);
  j["truncation"] = r.truncation;
  j["passed"] = {{"finite_index", pass(r.passed.finite_index)},
                 {"exhaustion", pass(r.passed.exhaustion)},
                 {"compact_intersection", pass(r.passed.compact_intersection)},
                 {"finite_double_cosets", pass(r.passed.finite_double_cosets)},
                 {"all", r.all_passed()}};
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace crosswire
