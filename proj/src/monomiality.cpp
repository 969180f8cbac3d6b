#include "wreathcheck/monomiality.hpp"

#include <algorithm>
#include <map>

#include "wreathcheck/error.hpp"

namespace wreathcheck {

namespace {

InducedFrom source_of(InductionScan& scan, std::size_t k, std::size_t linear_index) {
  const SubgroupClass& cls = scan.subgroup(k);
  return InducedFrom{k, cls.canonical_key, cls.order, linear_index};
}

ClassFunction induced_from(const InducedFrom& source, const GroupPtr& group) {
  SubgroupEmbedding h(Subgroup(group, source.subgroup_key));
  auto linear = linear_characters(h.group);
  if (source.linear_index >= linear.size()) throw Error("witness linear index out of range");
  return induce(linear[source.linear_index], h);
}

bool all_found(const auto& witnesses) {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.has_value(); });
}

bool quasi_monomial(InductionScan& scan) {
  for (std::size_t chi = 0; chi < scan.table().size(); ++chi)
    if (!monomial_witness(chi, scan, MonomialMode::kQuasi)) return false;
  return true;
}

bool almost_monomial(InductionScan& scan) {
  return all_found(separation_witnesses(ordered_pairs(scan.table().size()), scan));
}

}  // namespace

HypothesisReport check_main_hypothesis(const WreathCharacters& wc, InductionScan& w_scan,
                                       const SearchConfig& config) {
  HypothesisReport report;
  report.kind = HypothesisReport::Kind::kMain;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t chi = 0; chi < wc.table.size(); ++chi) {
    CliffordCase cc = clifford_case(chi, wc);
    if (cc.kind != CliffordCase::Kind::kExtension) continue;
    for (std::size_t j = 1; j < wc.outer_linear.size(); ++j) {
      auto target = wc.table.index_of(wc.outer_linear[j] * wc.table[chi]);
      if (!target) throw Error("beta * chi is not irreducible");
      HypothesisCase hc;
      hc.chi = chi;
      hc.phi = cc.phi;
      hc.beta = j;
      hc.target = *target;
      report.cases.push_back(hc);
      pairs.emplace_back(chi, *target);
    }
  }
  auto witnesses = separation_witnesses(pairs, w_scan);
  for (std::size_t i = 0; i < witnesses.size(); ++i) report.cases[i].separation = witnesses[i];
  report.overall = all_found(witnesses);
  if (report.overall) {
    InductionScan a_scan = make_scan(wc.factor_table, config);
    report.factor_premise = almost_monomial(a_scan);
    if (*report.factor_premise) report.conclusion = almost_monomial(w_scan);
  }
  return report;
}

InductionScan make_scan(const CharacterTable& table, const SearchConfig& config) {
  return InductionScan(table, subgroup_classes(table.group, config.subgroup_limit), config.execution);
}

std::optional<MonomialWitness> monomial_witness(std::size_t chi, InductionScan& scan,
                                                MonomialMode mode) {
  const auto degree = static_cast<std::size_t>(scan.table().degrees.at(chi));
  const std::size_t order = scan.group()->order();
  for (std::size_t k = 0; k < scan.size(); ++k) {
    const std::size_t index = order / scan.subgroup(k).order;
    if (mode == MonomialMode::kStrict ? index != degree : index % degree != 0) continue;
    const auto d = static_cast<long long>(index / degree);
    const ScanEntry& entry = scan.entry(k);
    for (std::size_t l = 0; l < entry.decompositions.size(); ++l) {
      const auto& dec = entry.decompositions[l];
      if (dec[chi] != d) continue;
      // degree of lambda^G is the index, so d * chi(1) = index leaves nothing else.
      return MonomialWitness{chi, source_of(scan, k, l), d};
    }
  }
  return std::nullopt;
}

std::vector<std::optional<SeparationWitness>> separation_witnesses(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, InductionScan& scan,
    bool normal_only) {
  std::vector<std::optional<SeparationWitness>> out(pairs.size());
  std::vector<std::size_t> pending(pairs.size());
  for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = i;
  for (std::size_t k = 0; k < scan.size() && !pending.empty(); ++k) {
    if (normal_only && !scan.subgroup(k).is_normal) continue;
    const ScanEntry& entry = scan.entry(k);
    for (std::size_t l = 0; l < entry.decompositions.size() && !pending.empty(); ++l) {
      const auto& dec = entry.decompositions[l];
      std::erase_if(pending, [&](std::size_t idx) {
        const auto [i, j] = pairs[idx];
        if (dec[i] > 0 && dec[j] == 0) {
          out[idx] = SeparationWitness{pairs[idx], source_of(scan, k, l)};
          return true;
        }
        return false;
      });
    }
  }
  return out;
}

bool replay(const MonomialWitness& w, const CharacterTable& table) {
  ClassFunction induced = induced_from(w.source, table.group);
  return induced == table[w.chi] * Rational(static_cast<long>(w.d));
}

bool replay(const SeparationWitness& w, const CharacterTable& table) {
  ClassFunction induced = induced_from(w.source, table.group);
  return inner_product(induced, table[w.pair.first]) > 0 &&
         inner_product(induced, table[w.pair.second]) == 0;
}

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) pairs.emplace_back(i, j);
  return pairs;
}

GroupClassification classify_group(InductionScan& scan, const std::string& name) {
  const CharacterTable& table = scan.table();
  GroupClassification c;
  c.name = name;
  c.order = table.group->order();
  c.irreducibles = table.size();
  c.subgroup_classes = scan.classes().size();
  c.normal_subgroups = normal_subgroups(scan.classes()).size();
  c.solvable = is_solvable(table.group);
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    c.monomial_witnesses.push_back(monomial_witness(chi, scan, MonomialMode::kStrict));
    c.quasi_monomial_witnesses.push_back(monomial_witness(chi, scan, MonomialMode::kQuasi));
  }
  const auto pairs = ordered_pairs(table.size());
  c.separation = separation_witnesses(pairs, scan);
  c.normal_separation = separation_witnesses(pairs, scan, true);
  c.monomial = all_found(c.monomial_witnesses);
  c.quasi_monomial = all_found(c.quasi_monomial_witnesses);
  c.almost_monomial = all_found(c.separation);
  c.normally_almost_monomial = all_found(c.normal_separation);
  return c;
}

GroupClassification classify_group(const GroupPtr& group, const SearchConfig& config) {
  CharacterTable table = character_table(group);
  InductionScan scan = make_scan(table, config);
  return classify_group(scan, group->name());
}

bool is_almost_monomial(const GroupPtr& group, const SearchConfig& config) {
  CharacterTable table = character_table(group);
  InductionScan scan = make_scan(table, config);
  return almost_monomial(scan);
}

HypothesisReport check_bobo_hypothesis(const WreathCharacters& wc, const SearchConfig& config) {
  HypothesisReport report;
  report.kind = HypothesisReport::Kind::kBobo;
  InductionScan a_scan = make_scan(wc.factor_table, config);
  std::map<std::size_t, std::optional<MonomialWitness>> by_phi;
  for (std::size_t chi = 0; chi < wc.table.size(); ++chi) {
    CliffordCase cc = clifford_case(chi, wc);
    if (cc.kind != CliffordCase::Kind::kExtension) continue;
    auto it = by_phi.find(cc.phi);
    if (it == by_phi.end())
      it = by_phi.emplace(cc.phi, monomial_witness(cc.phi, a_scan, MonomialMode::kStrict)).first;
    HypothesisCase hc;
    hc.chi = chi;
    hc.phi = cc.phi;
    hc.monomial = it->second;
    report.cases.push_back(hc);
  }
  report.overall = std::all_of(report.cases.begin(), report.cases.end(),
                               [](const HypothesisCase& hc) { return hc.satisfied(); });
  if (report.overall) {
    report.factor_premise = quasi_monomial(a_scan);
    if (*report.factor_premise) {
      InductionScan w_scan = make_scan(wc.table, config);
      report.conclusion = quasi_monomial(w_scan);
    }
  }
  return report;
}

HypothesisReport check_main_hypothesis(const WreathCharacters& wc, const SearchConfig& config) {
  InductionScan w_scan = make_scan(wc.table, config);
  return check_main_hypothesis(wc, w_scan, config);
}

SurveyReport counterexample_search(const std::vector<std::pair<std::string, GroupPtr>>& catalog,
                                   const std::vector<int>& primes, const SearchConfig& config) {
  SurveyReport survey;
  for (const auto& [name, factor] : catalog) {
    bool factor_ok = false;
    std::string factor_note;
    try {
      factor_ok = is_almost_monomial(factor, config);
    } catch (const SearchBudgetExceeded& e) {
      factor_note = e.what();
    }
    for (int p : primes) {
      SurveyEntry entry;
      entry.factor = name;
      entry.p = p;
      if (!factor_ok) {
        entry.status = factor_note.empty() ? SurveyEntry::Status::kFactorNotAlmostMonomial
                                           : SurveyEntry::Status::kBudget;
        entry.note = factor_note;
        survey.entries.push_back(std::move(entry));
        continue;
      }
      try {
        WreathCharacters wc(wreath_product(factor, p, config.order_limit));
        entry.order = wc.wreath.group->order();
        InductionScan w_scan = make_scan(wc.table, config);
        HypothesisReport main = check_main_hypothesis(wc, w_scan, config);
        entry.hypothesis = main.overall;
        entry.wreath_almost_monomial = main.conclusion.has_value() ? *main.conclusion
                                                                   : almost_monomial(w_scan);
        entry.counterexample = !entry.wreath_almost_monomial;
        entry.divergence = entry.hypothesis && !entry.wreath_almost_monomial;
      } catch (const OrderLimitExceeded& e) {
        entry.status = SurveyEntry::Status::kOrderLimit;
        entry.note = e.what();
      } catch (const SearchBudgetExceeded& e) {
        entry.status = SurveyEntry::Status::kBudget;
        entry.note = e.what();
      }
      survey.counterexample_found = survey.counterexample_found || entry.counterexample;
      survey.entries.push_back(std::move(entry));
    }
  }
  return survey;
}

ComposedWitness compose_product_witness(const MonomialWitness& w1, const CharacterTable& t1,
                                        const MonomialWitness& w2, const CharacterTable& t2,
                                        const DirectProduct& product) {
  if (t1.group != product.first || t2.group != product.second)
    throw ParentMismatch("witness tables do not match the direct product factors");
  const Subgroup h1(product.first, w1.source.subgroup_key);
  const Subgroup h2(product.second, w2.source.subgroup_key);
  const SubgroupEmbedding e1(h1);
  const SubgroupEmbedding e2(h2);
  const ClassFunction lambda1 = linear_characters(e1.group).at(w1.source.linear_index);
  const ClassFunction lambda2 = linear_characters(e2.group).at(w2.source.linear_index);

  std::vector<ElementId> elements;
  for (ElementId a : h1.elements())
    for (ElementId b : h2.elements()) elements.push_back(product.pair(a, b));
  SubgroupEmbedding h(Subgroup(product.group, std::move(elements)));

  auto position = [](const Subgroup& s, ElementId x) {
    auto el = s.elements();
    return static_cast<ElementId>(std::lower_bound(el.begin(), el.end(), x) - el.begin());
  };
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < h.group->num_classes(); ++c) {
    auto [a, b] = product.split(h.subgroup.elements()[h.group->class_rep(c)]);
    values.push_back(lambda1.at_element(position(h1, a)) * lambda2.at_element(position(h2, b)));
  }
  ClassFunction linear(h.group, std::move(values));
  ClassFunction induced = induce(linear, h);
  ClassFunction target = outer_product(t1[w1.chi], t2[w2.chi], product);
  return ComposedWitness{h.subgroup, std::move(linear), std::move(induced), std::move(target),
                         w1.d * w2.d};
}

}  // namespace wreathcheck
