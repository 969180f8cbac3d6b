#pragma once

#include <string>

#include "json.hpp"
#include "wreathcheck/group.hpp"

namespace wreathcheck {

/// {"cayley": [[...]], "name": ...} or {"permutation_generators": [[...]], "name": ...}.
GroupPtr group_from_json(const nlohmann::json& doc, std::size_t order_limit = kDefaultOrderLimit);
/// Always writes the Cayley form, so reading it back reproduces the table exactly.
nlohmann::json group_to_json(const FiniteGroup& group);

GroupPtr read_group_file(const std::string& path, std::size_t order_limit = kDefaultOrderLimit);
void write_group_file(const FiniteGroup& group, const std::string& path);

/// A catalog name, or a path to a group file when the argument ends in ".json".
GroupPtr resolve_group(const std::string& spec, std::size_t order_limit = kDefaultOrderLimit);

}  // namespace wreathcheck
