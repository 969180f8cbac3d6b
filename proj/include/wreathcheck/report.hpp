#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wreathcheck/chartab.hpp"
#include "wreathcheck/monomiality.hpp"
#include "wreathcheck/subgroup_lattice.hpp"
#include "wreathcheck/wreath.hpp"

namespace wreathcheck {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const Cyclotomic& value);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
Cyclotomic cyclotomic_from_json(const nlohmann::json& doc);

nlohmann::json group_summary_json(const FiniteGroup& group);
/// {"classes": [sizes], "irreducibles": [[cyclotomic, ...], ...]}
nlohmann::json table_json(const CharacterTable& table);
nlohmann::json classification_json(const GroupClassification& c,
                                   const std::vector<SubgroupClass>& classes);
nlohmann::json hypothesis_json(const HypothesisReport& report);
nlohmann::json survey_json(const SurveyReport& survey, const std::vector<int>& primes);

/// Human-readable table: exact values followed by a numeric rendering.
std::string table_text(const CharacterTable& table);

/// Structural check of a complete report ({"schema": 1, "command": ...}).
/// Returns one message per problem; empty means valid.
std::vector<std::string> validate_report(const nlohmann::json& report);

}  // namespace wreathcheck
