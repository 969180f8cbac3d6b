#include "wreathcheck/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace wreathcheck {

using nlohmann::json;

namespace {

json witness_source_json(const InducedFrom& source) {
  return json{{"subgroup", source.subgroup_key},
              {"subgroup_order", source.subgroup_order},
              {"linear_index", source.linear_index}};
}

json monomial_json(const std::optional<MonomialWitness>& w) {
  if (!w) return nullptr;
  json out = witness_source_json(w->source);
  out["d"] = w->d;
  return out;
}

json separation_json(const std::optional<SeparationWitness>& w) {
  if (!w) return nullptr;
  return witness_source_json(w->source);
}

json optional_bool(const std::optional<bool>& b) {
  if (!b) return nullptr;
  return *b;
}

const char* status_name(SurveyEntry::Status s) {
  switch (s) {
    case SurveyEntry::Status::kChecked: return "checked";
    case SurveyEntry::Status::kFactorNotAlmostMonomial: return "factor_not_almost_monomial";
    case SurveyEntry::Status::kOrderLimit: return "order_limit";
    case SurveyEntry::Status::kBudget: return "subgroup_limit";
  }
  return "unknown";
}

std::string format_complex(std::complex<double> z) {
  char buf[64];
  double re = std::abs(z.real()) < 5e-7 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-7 ? 0.0 : z.imag();
  if (im == 0.0)
    std::snprintf(buf, sizeof buf, "%.4f", re);
  else
    std::snprintf(buf, sizeof buf, "%.4f%+.4fi", re, im);
  return buf;
}

// Validation helpers collect messages with a path prefix.
struct Checker {
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& what) { errors.push_back(path + ": " + what); }

  bool has(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
      fail(path, std::string("missing '") + key + "'");
      return false;
    }
    return true;
  }
  void boolean(const json& obj, const std::string& path, const char* key) {
    if (has(obj, path, key) && !obj[key].is_boolean()) fail(path + "." + key, "expected boolean");
  }
  void nullable_boolean(const json& obj, const std::string& path, const char* key) {
    if (has(obj, path, key) && !obj[key].is_boolean() && !obj[key].is_null())
      fail(path + "." + key, "expected boolean or null");
  }
  void count(const json& obj, const std::string& path, const char* key) {
    if (!has(obj, path, key)) return;
    const json& v = obj[key];
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(path + "." + key, "expected count");
  }
  void cyclotomic(const json& v, const std::string& path) {
    try {
      cyclotomic_from_json(v);
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  void witness(const json& w, const std::string& path, bool with_d) {
    if (w.is_null()) return;
    count(w, path, "subgroup_order");
    count(w, path, "linear_index");
    if (has(w, path, "subgroup") && !w["subgroup"].is_array()) fail(path + ".subgroup", "expected array");
    if (with_d) count(w, path, "d");
  }
  void group(const json& obj, const std::string& path) {
    if (!has(obj, path, "group")) return;
    const json& g = obj["group"];
    count(g, path + ".group", "order");
    count(g, path + ".group", "classes");
    if (has(g, path + ".group", "name") && !g["name"].is_string()) fail(path + ".group.name", "expected string");
  }
  void table(const json& t, const std::string& path) {
    if (!has(t, path, "classes") || !has(t, path, "irreducibles")) return;
    if (!t["classes"].is_array()) return fail(path + ".classes", "expected array");
    const std::size_t k = t["classes"].size();
    if (!t["irreducibles"].is_array() || t["irreducibles"].size() != k)
      return fail(path + ".irreducibles", "expected one row per class");
    for (std::size_t i = 0; i < k; ++i) {
      const json& row = t["irreducibles"][i];
      const std::string rp = path + ".irreducibles[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != k) {
        fail(rp, "expected one value per class");
        continue;
      }
      for (std::size_t c = 0; c < k; ++c) cyclotomic(row[c], rp + "[" + std::to_string(c) + "]");
    }
  }
  void classification(const json& c, const std::string& path) {
    for (const char* flag : {"monomial", "quasi_monomial", "almost_monomial", "normally_almost_monomial", "solvable"})
      boolean(c, path, flag);
    count(c, path, "irreducibles");
    count(c, path, "normal_subgroups");
    if (has(c, path, "subgroup_classes")) count(c["subgroup_classes"], path + ".subgroup_classes", "total");
    for (const char* key : {"monomial_witnesses", "quasi_monomial_witnesses"}) {
      if (!has(c, path, key)) continue;
      if (!c[key].is_array()) {
        fail(path + "." + key, "expected array");
        continue;
      }
      for (std::size_t i = 0; i < c[key].size(); ++i)
        witness(c[key][i], path + "." + key + "[" + std::to_string(i) + "]", true);
    }
    for (const char* key : {"separation", "normal_separation"}) {
      if (!has(c, path, key)) continue;
      if (!c[key].is_array()) {
        fail(path + "." + key, "expected array");
        continue;
      }
      for (std::size_t i = 0; i < c[key].size(); ++i) {
        const json& e = c[key][i];
        const std::string ep = path + "." + key + "[" + std::to_string(i) + "]";
        if (has(e, ep, "pair") && !(e["pair"].is_array() && e["pair"].size() == 2)) fail(ep + ".pair", "expected [i, j]");
        if (has(e, ep, "witness")) witness(e["witness"], ep + ".witness", false);
      }
    }
  }
  void hypothesis(const json& h, const std::string& path) {
    if (has(h, path, "kind") && h["kind"] != "main" && h["kind"] != "bobo") fail(path + ".kind", "unknown kind");
    boolean(h, path, "overall");
    boolean(h, path, "consistent");
    nullable_boolean(h, path, "factor_premise");
    nullable_boolean(h, path, "conclusion");
    if (!has(h, path, "cases")) return;
    if (!h["cases"].is_array()) return fail(path + ".cases", "expected array");
    for (std::size_t i = 0; i < h["cases"].size(); ++i) {
      const json& c = h["cases"][i];
      const std::string cp = path + ".cases[" + std::to_string(i) + "]";
      count(c, cp, "chi");
      count(c, cp, "phi");
      if (has(c, cp, "witness")) witness(c["witness"], cp + ".witness", h["kind"] == "bobo");
    }
  }
};

}  // namespace

json to_json(const Cyclotomic& value) {
  json coeffs = json::array();
  for (const auto& q : value.coeffs()) coeffs.push_back(to_string(q));
  return json{{"conductor", value.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("conductor") || !doc.contains("coeffs"))
    throw std::invalid_argument("cyclotomic needs conductor and coeffs");
  if (!doc["conductor"].is_number_integer() || doc["conductor"].get<long long>() < 1 ||
      doc["conductor"].get<long long>() > 1000000)
    throw std::invalid_argument("bad conductor");
  const int m = doc["conductor"].get<int>();
  const json& coeffs = doc["coeffs"];
  if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(euler_phi(m)))
    throw std::invalid_argument("coeffs must have phi(conductor) entries");
  DenseCyclotomic dense{m, {}};
  for (const auto& c : coeffs) {
    if (!c.is_string()) throw std::invalid_argument("coefficients are strings");
    dense.coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Cyclotomic::from_dense(dense);
}

json group_summary_json(const FiniteGroup& group) {
  return json{{"name", group.name()},
              {"order", group.order()},
              {"classes", group.num_classes()},
              {"exponent", group.exponent()}};
}

json table_json(const CharacterTable& table) {
  json rows = json::array();
  for (const auto& chi : table.irreducibles) {
    json row = json::array();
    for (const auto& v : chi.values()) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return json{{"classes", table.group->class_sizes()}, {"irreducibles", std::move(rows)}};
}

json classification_json(const GroupClassification& c, const std::vector<SubgroupClass>& classes) {
  json by_order = json::object();
  for (const auto& [order, n] : class_counts_by_order(classes)) by_order[std::to_string(order)] = n;
  json out{{"monomial", c.monomial},
           {"quasi_monomial", c.quasi_monomial},
           {"almost_monomial", c.almost_monomial},
           {"normally_almost_monomial", c.normally_almost_monomial},
           {"solvable", c.solvable},
           {"irreducibles", c.irreducibles},
           {"subgroup_classes", {{"total", c.subgroup_classes}, {"by_order", std::move(by_order)}}},
           {"normal_subgroups", c.normal_subgroups}};
  json mono = json::array();
  json quasi = json::array();
  for (std::size_t i = 0; i < c.monomial_witnesses.size(); ++i) {
    mono.push_back(monomial_json(c.monomial_witnesses[i]));
    quasi.push_back(monomial_json(c.quasi_monomial_witnesses[i]));
  }
  out["monomial_witnesses"] = std::move(mono);
  out["quasi_monomial_witnesses"] = std::move(quasi);
  const auto pairs = ordered_pairs(c.irreducibles);
  json sep = json::array();
  json normal = json::array();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    json pair = {pairs[k].first, pairs[k].second};
    sep.push_back({{"pair", pair}, {"witness", separation_json(c.separation[k])}});
    normal.push_back({{"pair", pair}, {"witness", separation_json(c.normal_separation[k])}});
  }
  out["separation"] = std::move(sep);
  out["normal_separation"] = std::move(normal);
  return out;
}

json hypothesis_json(const HypothesisReport& report) {
  const bool main = report.kind == HypothesisReport::Kind::kMain;
  json cases = json::array();
  for (const auto& hc : report.cases) {
    json c{{"chi", hc.chi}, {"phi", hc.phi}};
    if (main) {
      c["beta"] = hc.beta;
      c["target"] = hc.target;
      c["witness"] = separation_json(hc.separation);
    } else {
      c["witness"] = monomial_json(hc.monomial);
    }
    cases.push_back(std::move(c));
  }
  return json{{"kind", main ? "main" : "bobo"},
              {"overall", report.overall},
              {"factor_premise", optional_bool(report.factor_premise)},
              {"conclusion", optional_bool(report.conclusion)},
              {"consistent", report.consistent()},
              {"cases", std::move(cases)}};
}

json survey_json(const SurveyReport& survey, const std::vector<int>& primes) {
  json entries = json::array();
  for (const auto& e : survey.entries)
    entries.push_back({{"factor", e.factor},
                       {"p", e.p},
                       {"order", e.order},
                       {"status", status_name(e.status)},
                       {"wreath_almost_monomial", e.wreath_almost_monomial},
                       {"hypothesis", e.hypothesis},
                       {"counterexample", e.counterexample},
                       {"divergence", e.divergence},
                       {"note", e.note}});
  return json{{"primes", primes},
              {"entries", std::move(entries)},
              {"counterexample_found", survey.counterexample_found}};
}

std::string table_text(const CharacterTable& table) {
  std::ostringstream out;
  const auto& g = *table.group;
  out << "size ";
  for (std::size_t c = 0; c < g.num_classes(); ++c) out << "  " << g.class_size(c);
  out << "\norder";
  for (std::size_t c = 0; c < g.num_classes(); ++c) out << "  " << g.element_order(g.class_rep(c));
  out << "\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "X." << i + 1;
    for (const auto& v : table[i].values()) out << "  " << v.to_string();
    out << "\n";
  }
  out << "numeric\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "X." << i + 1;
    for (const auto& z : table[i].numeric()) out << "  " << format_complex(z);
    out << "\n";
  }
  return out.str();
}

std::vector<std::string> validate_report(const json& report) {
  Checker ck;
  if (!report.is_object()) return {"report: expected object"};
  if (!report.contains("schema") || report["schema"] != kReportSchema) ck.fail("report", "schema must be 1");
  if (!ck.has(report, "report", "command") || !report["command"].is_string()) return ck.errors;
  const std::string cmd = report["command"].get<std::string>();
  if (report.contains("timing_seconds") && !report["timing_seconds"].is_number())
    ck.fail("report.timing_seconds", "expected number");

  if (cmd == "table") {
    ck.group(report, "report");
    if (ck.has(report, "report", "table")) ck.table(report["table"], "report.table");
  } else if (cmd == "analyze") {
    ck.group(report, "report");
    if (ck.has(report, "report", "classification")) ck.classification(report["classification"], "report.classification");
  } else if (cmd == "wreath") {
    ck.group(report, "report");
    ck.count(report, "report", "p");
    if (ck.has(report, "report", "factor") && !report["factor"].is_object()) ck.fail("report.factor", "expected object");
    if (ck.has(report, "report", "census")) {
      for (const char* key : {"labels", "fixed_labels", "orbits", "predicted_irreducibles", "irreducibles"})
        ck.count(report["census"], "report.census", key);
      ck.boolean(report["census"], "report.census", "matches");
    }
    if (ck.has(report, "report", "cases") && !report["cases"].is_array()) ck.fail("report.cases", "expected array");
    for (const char* key : {"main", "bobo"})
      if (report.contains(key)) ck.hypothesis(report[key], std::string("report.") + key);
    if (report.contains("flags")) {
      ck.boolean(report["flags"], "report.flags", "almost_monomial");
      ck.boolean(report["flags"], "report.flags", "normally_almost_monomial");
    }
    if (report.contains("fiber")) {
      const json& f = report["fiber"];
      if (ck.has(f, "report.fiber", "label") && !f["label"].is_array()) ck.fail("report.fiber.label", "expected array");
      if (ck.has(f, "report.fiber", "members") && !f["members"].is_array())
        ck.fail("report.fiber.members", "expected array");
    }
  } else if (cmd == "search") {
    ck.boolean(report, "report", "counterexample_found");
    if (ck.has(report, "report", "entries")) {
      if (!report["entries"].is_array()) {
        ck.fail("report.entries", "expected array");
      } else {
        for (std::size_t i = 0; i < report["entries"].size(); ++i) {
          const json& e = report["entries"][i];
          const std::string ep = "report.entries[" + std::to_string(i) + "]";
          ck.count(e, ep, "p");
          for (const char* key : {"wreath_almost_monomial", "hypothesis", "counterexample", "divergence"})
            ck.boolean(e, ep, key);
          if (ck.has(e, ep, "status") && !e["status"].is_string()) ck.fail(ep + ".status", "expected string");
        }
      }
    }
  } else {
    ck.fail("report.command", "unknown command '" + cmd + "'");
  }
  return ck.errors;
}

}  // namespace wreathcheck
