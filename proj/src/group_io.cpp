#include "wreathcheck/group_io.hpp"

#include <fstream>

#include "wreathcheck/catalog.hpp"
#include "wreathcheck/error.hpp"

namespace wreathcheck {

namespace {

NotAGroup malformed(const std::string& what) {
  return NotAGroup(NotAGroup::Reason::kMalformed, "group file: " + what);
}

}  // namespace

GroupPtr group_from_json(const nlohmann::json& doc, std::size_t order_limit) {
  if (!doc.is_object()) throw malformed("expected an object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw malformed("name must be a string");
    name = doc["name"].get<std::string>();
  }
  const bool has_table = doc.contains("cayley");
  const bool has_gens = doc.contains("permutation_generators");
  if (has_table == has_gens) throw malformed("need exactly one of cayley, permutation_generators");

  if (has_table) {
    const auto& rows = doc["cayley"];
    if (!rows.is_array() || rows.empty()) throw malformed("cayley must be a nonempty array");
    const std::size_t n = rows.size();
    if (n > order_limit) throw OrderLimitExceeded("group file exceeds order limit");
    std::vector<std::vector<ElementId>> table;
    table.reserve(n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw malformed("cayley table is not square");
      auto& out = table.emplace_back();
      for (const auto& x : row) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= static_cast<long long>(n))
          throw malformed("cayley entry out of range");
        out.push_back(x.get<ElementId>());
      }
    }
    return FiniteGroup::from_cayley(table, name);
  }

  const auto& gens = doc["permutation_generators"];
  if (!gens.is_array()) throw malformed("permutation_generators must be an array");
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    if (!g.is_array()) throw malformed("generator must be an array");
    auto& p = perms.emplace_back();
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw malformed("generator entries must be integers");
      p.push_back(x.get<int>());
    }
  }
  return FiniteGroup::from_permutations(perms, name, order_limit);
}

nlohmann::json group_to_json(const FiniteGroup& group) {
  nlohmann::json doc;
  if (!group.name().empty()) doc["name"] = group.name();
  doc["cayley"] = group.cayley_table();
  return doc;
}

GroupPtr read_group_file(const std::string& path, std::size_t order_limit) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed(e.what());
  }
  return group_from_json(doc, order_limit);
}

void write_group_file(const FiniteGroup& group, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << group_to_json(group).dump() << '\n';
}

GroupPtr resolve_group(const std::string& spec, std::size_t order_limit) {
  if (spec.size() > 5 && spec.ends_with(".json")) return read_group_file(spec, order_limit);
  return catalog(spec, order_limit);
}

}  // namespace wreathcheck
