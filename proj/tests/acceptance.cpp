// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <map>
#include <set>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wreathcheck/catalog.hpp"
#include "wreathcheck/error.hpp"
#include "wreathcheck/monomiality.hpp"

using namespace wreathcheck;

namespace {

// Collects failed checks for one criterion.
struct Check {
  std::ostringstream failures;
  int failed = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failed++ < 5) failures << (failed > 1 ? "; " : "") << what;
  }
};

struct Classified {
  CharacterTable table;
  GroupClassification c;
};

Classified classify(const GroupPtr& g) {
  Classified out{character_table(g), {}};
  InductionScan scan = make_scan(out.table);
  out.c = classify_group(scan, g->name());
  return out;
}

bool replay_all(const Classified& k) {
  const auto& c = k.c;
  for (const auto* ws : {&c.monomial_witnesses, &c.quasi_monomial_witnesses})
    for (const auto& w : *ws)
      if (w && !replay(*w, k.table)) return false;
  for (const auto* ws : {&c.separation, &c.normal_separation})
    for (const auto& w : *ws)
      if (w && !replay(*w, k.table)) return false;
  return true;
}

std::vector<std::string> catalog_up_to(std::size_t order) {
  std::vector<std::string> out;
  for (const auto& name : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12", "C16", "C24",
                           "D6", "D8", "D10", "D12", "D14", "D16", "D18", "D20", "D24", "Q8", "A4", "S3", "S4",
                           "SL(2,3)", "A5", "S5", "D40", "D100", "D200", "C60"})
    if (catalog(name)->order() <= order) out.push_back(name);
  return out;
}

const std::vector<std::pair<std::string, int>> kWreathCases{
    {"C2", 2}, {"C2", 3}, {"C3", 2}, {"C3", 3}, {"S3", 2}, {"S3", 3}, {"D10", 2}, {"D10", 3}};

std::vector<std::unique_ptr<WreathCharacters>>& wreaths() {
  static std::vector<std::unique_ptr<WreathCharacters>> cache;
  if (cache.empty())
    for (const auto& [name, p] : kWreathCases)
      cache.push_back(std::make_unique<WreathCharacters>(wreath_product(catalog(name), p)));
  return cache;
}

std::string wreath_name(const WreathCharacters& wc) {
  return wc.wreath.factor->name() + " wr C" + std::to_string(wc.wreath.copies);
}

void criterion1(Check& ck) {
  auto k = classify(catalog("SL(2,3)"));
  ck.expect(!k.c.monomial, "SL(2,3) classified monomial");
  ck.expect(!k.c.quasi_monomial, "SL(2,3) classified quasi-monomial");
  ck.expect(k.c.almost_monomial, "SL(2,3) not almost monomial");
  ck.expect(replay_all(k), "a witness failed replay");
}

void criterion2(Check& ck) {
  auto d10 = classify(catalog("D10"));
  ck.expect(d10.c.normally_almost_monomial, "D10 not normally almost monomial");
  ck.expect(replay_all(d10), "D10 witness failed replay");
  auto w = classify(wreath_product(catalog("D10"), 2).group);
  ck.expect(w.c.order == 200, "wreath order is not 200");
  ck.expect(!w.c.normally_almost_monomial, "D10 wr C2 normally almost monomial");
  ck.expect(w.c.almost_monomial, "D10 wr C2 not almost monomial");
  ck.expect(replay_all(w), "D10 wr C2 witness failed replay");
}

void criterion3(Check& ck) {
  for (const auto& name : {"S3", "S4", "S5"}) {
    auto k = classify(catalog(name));
    ck.expect(k.c.almost_monomial, std::string(name) + " not almost monomial");
    ck.expect(k.c.separation.size() == k.c.irreducibles * (k.c.irreducibles - 1),
              std::string(name) + " separation matrix incomplete");
    ck.expect(replay_all(k), std::string(name) + " witness failed replay");
  }
}

void criterion4(Check& ck) {
  const auto names = catalog_up_to(24);
  std::map<std::string, bool> almost;
  for (const auto& name : names) almost[name] = is_almost_monomial(catalog(name));
  for (const auto& name : names) {
    if (!almost[name]) continue;
    auto g = catalog(name);
    for (const auto& n : normal_subgroups(g))
      ck.expect(is_almost_monomial(quotient(n).group), name + "/N (|N|=" + std::to_string(n.order()) + ") not almost monomial");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i; j < names.size(); ++j) {
      auto g1 = catalog(names[i]), g2 = catalog(names[j]);
      if (g1->order() * g2->order() > 48) continue;
      const bool product = is_almost_monomial(direct_product(g1, g2).group);
      ck.expect(product == (almost[names[i]] && almost[names[j]]), "product law fails for " + names[i] + " x " + names[j]);
    }
}

void criterion5(Check& ck) {
  auto s3 = catalog("S3");
  auto t = character_table(s3);
  auto p = direct_product(s3, s3);
  auto tp = character_table(p.group);
  InductionScan scan = make_scan(t);
  std::set<std::size_t> covered;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      auto w1 = monomial_witness(i, scan, MonomialMode::kQuasi);
      auto w2 = monomial_witness(j, scan, MonomialMode::kQuasi);
      ck.expect(w1 && w2, "S3 irreducible without quasi witness");
      if (!w1 || !w2) continue;
      auto composed = compose_product_witness(*w1, t, *w2, t, p);
      // both sides of the product rule, each from the factors' own inductions
      SubgroupEmbedding h1(Subgroup(s3, w1->source.subgroup_key)), h2(Subgroup(s3, w2->source.subgroup_key));
      auto l1 = linear_characters(h1.group).at(w1->source.linear_index);
      auto l2 = linear_characters(h2.group).at(w2->source.linear_index);
      ck.expect(composed.induced == outer_product(induce(l1, h1), induce(l2, h2), p), "product rule fails");
      ck.expect(composed.induced == composed.target * Rational(static_cast<long>(composed.d)), "composed witness fails replay");
      auto idx = tp.index_of(composed.target);
      ck.expect(idx.has_value(), "outer product not irreducible");
      if (idx) covered.insert(*idx);
    }
  ck.expect(covered.size() == tp.size(), "composed witnesses do not cover Irr(S3 x S3)");
}

void criterion6(Check& ck) {
  for (const auto& wp : wreaths()) {
    const auto& wc = *wp;
    std::size_t ext = 0, ind = 0;
    for (std::size_t chi = 0; chi < wc.table.size(); ++chi) {
      try {
        (clifford_case(chi, wc).kind == CliffordCase::Kind::kExtension ? ext : ind)++;
      } catch (const DichotomyViolation& e) {
        ck.expect(false, wreath_name(wc) + ": " + e.what());
      }
    }
    auto census = wreath_census(wc.factor_table, wc.wreath.copies);
    ck.expect(wc.table.size() == census.orbits + static_cast<std::size_t>(wc.wreath.copies) * census.fixed_labels,
              wreath_name(wc) + ": census identity fails");
    ck.expect(ind == census.orbits && ext == census.fixed_labels * static_cast<std::size_t>(wc.wreath.copies),
              wreath_name(wc) + ": case counts disagree with the census");
  }
}

void criterion7(Check& ck) {
  for (const auto& wp : wreaths()) {
    const auto& wc = *wp;
    SubgroupEmbedding t(closure(wc.wreath.group, std::vector<ElementId>{wc.wreath.shift_generator}));
    const ClassFunction rho = ClassFunction::regular(t.group);
    for (std::size_t phi = 0; phi < wc.factor_table.size(); ++phi) {
      auto fiber = gallagher_fiber(BaseLabel(static_cast<std::size_t>(wc.wreath.copies), phi), wc);
      ClassFunction sum = restrict_to(wc.table[fiber[0]], t);
      for (std::size_t k = 1; k < fiber.size(); ++k) sum += restrict_to(wc.table[fiber[k]], t);
      ck.expect(sum == rho * Rational(static_cast<long>(wc.table.degrees[fiber[0]])),
                wreath_name(wc) + ": T-restriction identity fails");
    }
  }
}

void criterion8(Check& ck) {
  for (const auto& wp : wreaths()) {
    const auto& wc = *wp;
    const auto p = static_cast<std::size_t>(wc.wreath.copies);
    for (std::size_t phi = 0; phi < wc.factor_table.size(); ++phi) {
      BaseLabel label(p, phi);
      auto fiber = gallagher_fiber(label, wc);
      std::set<std::size_t> distinct(fiber.begin(), fiber.end());
      ck.expect(fiber.size() == p && distinct.size() == p, wreath_name(wc) + ": fiber members not distinct");
      const auto& theta = wc.base_irreducibles[wc.label_index(label)].character;
      ClassFunction sum = wc.table[fiber[0]];
      for (std::size_t j = 1; j < p; ++j) sum += wc.table[fiber[j]];
      ck.expect(sum == induce(theta, wc.base), wreath_name(wc) + ": fiber does not sum to theta^W");
      for (std::size_t j = 0; j < p; ++j) {
        ck.expect(wc.table[fiber[j]] == wc.outer_linear[j] * wc.table[fiber[0]], wreath_name(wc) + ": member is not beta_j chi");
        ck.expect(restrict_to(wc.table[fiber[j]], wc.base) == theta, wreath_name(wc) + ": member does not extend theta");
      }
    }
  }
}

void criterion9(Check& ck) {
  std::vector<GroupPtr> groups;
  for (const auto& name : catalog_up_to(200)) groups.push_back(catalog(name));
  for (const auto& [name, p] : kWreathCases) {
    auto w = wreath_product(catalog(name), p);
    if (w.group->order() <= 200) groups.push_back(w.group);
  }
  groups.push_back(direct_product(catalog("S3"), catalog("S3")).group);
  groups.push_back(direct_product(catalog("SL(2,3)"), catalog("C2")).group);
  for (const auto& g : groups) {
    const std::string name = g->name().empty() ? "order " + std::to_string(g->order()) : g->name();
    auto t = character_table(g);
    long long squares = 0;
    for (long long d : t.degrees) squares += d * d;
    ck.expect(squares == static_cast<long long>(g->order()), name + ": sum of squared degrees");
    ck.expect(t.size() == g->num_classes(), name + ": |Irr| != #classes");
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        ck.expect(hermitian_product(t[i], t[j]) == Cyclotomic(i == j ? 1 : 0), name + ": row orthogonality");
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        Cyclotomic s;
        for (std::size_t i = 0; i < t.size(); ++i) s += t[i][a] * t[i][b].conjugate();
        ck.expect(s == Cyclotomic(a == b ? static_cast<long>(g->order() / g->class_size(a)) : 0L),
                  name + ": column orthogonality");
      }
    if (g->order() > 24) continue;

    for (const auto& cls : subgroup_classes(g)) {
      SubgroupEmbedding h(cls.representative);
      for (const auto& lambda : linear_characters(h.group)) {
        auto induced = induce(lambda, h);
        for (std::size_t i = 0; i < t.size(); ++i)
          ck.expect(inner_product(induced, t[i]) == inner_product(lambda, restrict_to(t[i], h)),
                    name + ": Frobenius reciprocity");
      }
    }
    auto rows = oracle::numeric_table(*g);
    auto classes = oracle::conjugacy_classes(*g);
    std::vector<char> used(rows.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto exact = t[i].numeric();
      bool matched = false;
      for (std::size_t r = 0; r < rows.size() && !matched; ++r) {
        if (used[r] || rows[r].size() != classes.size()) continue;
        double err = 0;
        for (std::size_t c = 0; c < classes.size(); ++c)
          err = std::max(err, std::abs(rows[r][c] - exact[g->class_of(classes[c].front())]));
        if (err <= 1e-6) matched = used[r] = 1;
      }
      ck.expect(matched, name + ": row " + std::to_string(i) + " not within 1e-6 of the float oracle");
    }
  }
}

void criterion10(Check& ck) {
  WreathCharacters d10(wreath_product(catalog("D10"), 2));
  auto main = check_main_hypothesis(d10);
  ck.expect(main.overall, "main hypothesis not satisfied on D10 wr C2");
  ck.expect(main.conclusion == true, "D10 wr C2 conclusion not confirmed");
  for (const auto& c : main.cases)
    ck.expect(c.separation && replay(*c.separation, d10.table), "main witness failed replay");

  WreathCharacters s3(wreath_product(catalog("S3"), 2));
  auto bobo = check_bobo_hypothesis(s3);
  ck.expect(bobo.overall, "bobo hypothesis not satisfied on S3 wr C2");
  ck.expect(bobo.conclusion == true, "S3 wr C2 not confirmed quasi-monomial");
  for (const auto& c : bobo.cases)
    ck.expect(c.monomial && replay(*c.monomial, s3.factor_table), "bobo witness failed replay");

  std::vector<std::pair<std::string, GroupPtr>> factors;
  for (const auto& name : {"C2", "C3", "C4", "S3", "D10"}) factors.emplace_back(name, catalog(name));
  auto survey = counterexample_search(factors, {2});
  ck.expect(!survey.counterexample_found, "survey reports a counterexample");
  for (const auto& e : survey.entries) {
    ck.expect(e.status == SurveyEntry::Status::kChecked, e.factor + ": not checked");
    ck.expect(!e.divergence, e.factor + ": hypothesis and conclusion diverge");
  }
}

}  // namespace

int main() {
  apply_thread_env();
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"SL(2,3): not monomial, not quasi-monomial, almost monomial", criterion1},
      {"D10 normally almost monomial; D10 wr C2 almost but not normally almost monomial", criterion2},
      {"S3, S4, S5 almost monomial with full separation witnesses", criterion3},
      {"quotient and direct product laws for almost monomial groups", criterion4},
      {"composed product witnesses for S3 x S3", criterion5},
      {"Clifford dichotomy and census on A wr C_p, A in {C2,C3,S3,D10}, p in {2,3}", criterion6},
      {"T-restriction identity on every fixed-label fiber", criterion7},
      {"Gallagher fibers are {beta_j chi} and sum to theta^W", criterion8},
      {"table orthogonality to order 200; reciprocity and 1e-6 float oracle to order 24", criterion9},
      {"hypothesis checkers and survey over {C2,C3,C4,S3,D10} x {2}", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", ck.failed ? "FAIL" : "PASS", i + 1, criteria[i].first, s,
                ck.failed ? " -- " : "", ck.failures.str().c_str());
    std::fflush(stdout);
    failed += ck.failed ? 1 : 0;
  }
  return failed == 0 ? 0 : 1;
}
