#include "doctest.h"

#include <algorithm>
#include <set>

#include "wreathcheck/catalog.hpp"
#include "wreathcheck/error.hpp"
#include "wreathcheck/monomiality.hpp"

using namespace wreathcheck;

namespace {

void check_witnesses(const GroupClassification& c, const CharacterTable& t) {
  for (const auto& w : c.monomial_witnesses)
    if (w) {
      CHECK(w->d == 1);
      CHECK(replay(*w, t));
    }
  for (const auto& w : c.quasi_monomial_witnesses)
    if (w) CHECK(replay(*w, t));
  for (const auto& w : c.separation)
    if (w) CHECK(replay(*w, t));
  for (const auto& w : c.normal_separation)
    if (w) CHECK(replay(*w, t));
}

GroupClassification classify(const GroupPtr& g, CharacterTable& t) {
  t = character_table(g);
  InductionScan scan = make_scan(t);
  return classify_group(scan, g->name());
}

}  // namespace

TEST_CASE("abelian groups satisfy everything with the group itself") {
  for (const auto& name : {"C1", "C2", "C6", "C8"}) {
    auto g = catalog(name);
    CharacterTable t;
    auto c = classify(g, t);
    CHECK(c.monomial);
    CHECK(c.quasi_monomial);
    CHECK(c.almost_monomial);
    CHECK(c.normally_almost_monomial);
    for (const auto& w : c.monomial_witnesses) {
      REQUIRE(w);
      CHECK(w->source.subgroup_order == g->order());
      CHECK(w->d == 1);
    }
    check_witnesses(c, t);
  }
}

TEST_CASE("monomial witnesses") {
  auto s3 = catalog("S3");
  auto t = character_table(s3);
  InductionScan scan = make_scan(t);
  auto w = monomial_witness(2, scan, MonomialMode::kStrict);
  REQUIRE(w);
  CHECK(w->source.subgroup_order == 3);
  CHECK(w->source.linear_index != 0);
  CHECK(w->d == 1);
  CHECK(replay(*w, t));
  // a linear character is its own witness on G
  auto lin = monomial_witness(1, scan, MonomialMode::kStrict);
  REQUIRE(lin);
  CHECK(lin->source.subgroup_order == 6);

  auto sl = character_table(catalog("SL(2,3)"));
  InductionScan sl_scan = make_scan(sl);
  for (std::size_t chi = 0; chi < sl.size(); ++chi) {
    if (sl.degrees[chi] != 2) continue;
    CHECK_FALSE(monomial_witness(chi, sl_scan, MonomialMode::kStrict));
    CHECK_FALSE(monomial_witness(chi, sl_scan, MonomialMode::kQuasi));
  }
}

TEST_CASE("quasi witnesses satisfy d chi(1) = |G:H|") {
  for (const auto& name : {"Q8", "A4", "S4", "SL(2,3)", "D12"}) {
    auto t = character_table(catalog(name));
    InductionScan scan = make_scan(t);
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
      auto w = monomial_witness(chi, scan, MonomialMode::kQuasi);
      if (!w) continue;
      CHECK(replay(*w, t));
      CHECK(w->d * t.degrees[chi] * static_cast<long long>(w->source.subgroup_order) ==
            static_cast<long long>(t.group->order()));
    }
  }
}

TEST_CASE("classification of the paper's small groups") {
  CharacterTable t;
  auto sl = classify(catalog("SL(2,3)"), t);
  CHECK_FALSE(sl.monomial);
  CHECK_FALSE(sl.quasi_monomial);
  CHECK(sl.almost_monomial);
  check_witnesses(sl, t);

  auto d10 = classify(catalog("D10"), t);
  CHECK(d10.normally_almost_monomial);
  CHECK(d10.monomial);
  check_witnesses(d10, t);

  for (const auto& name : {"S3", "S4"}) {
    auto c = classify(catalog(name), t);
    CHECK(c.almost_monomial);
    check_witnesses(c, t);
  }
}

TEST_CASE("monotonicity and the solvability red flag") {
  for (const auto& name : small_catalog_names()) {
    CAPTURE(name);
    CharacterTable t;
    auto c = classify(catalog(name), t);
    if (c.monomial) CHECK(c.quasi_monomial);
    if (c.quasi_monomial) CHECK(c.almost_monomial);
    if (c.normally_almost_monomial) CHECK(c.almost_monomial);
    if (c.monomial) CHECK(c.solvable);
    check_witnesses(c, t);
  }
}

TEST_CASE("scan order and determinism") {
  auto t = character_table(catalog("S4"));
  InductionScan a = make_scan(t, {kDefaultSubgroupLimit, kDefaultOrderLimit, Execution::kSerial});
  InductionScan b = make_scan(t, {kDefaultSubgroupLimit, kDefaultOrderLimit, Execution::kParallel});
  for (std::size_t k = 1; k < a.size(); ++k) {
    const auto& prev = a.subgroup(k - 1);
    const auto& cur = a.subgroup(k);
    CHECK((prev.order > cur.order || (prev.order == cur.order && prev.canonical_key < cur.canonical_key)));
  }
  auto ca = classify_group(a, "S4");
  auto cb = classify_group(b, "S4");
  REQUIRE(ca.separation.size() == cb.separation.size());
  for (std::size_t i = 0; i < ca.separation.size(); ++i) {
    REQUIRE(ca.separation[i].has_value() == cb.separation[i].has_value());
    if (!ca.separation[i]) continue;
    CHECK(ca.separation[i]->source.subgroup_key == cb.separation[i]->source.subgroup_key);
    CHECK(ca.separation[i]->source.linear_index == cb.separation[i]->source.linear_index);
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (const auto& name : {"S4", "SL(2,3)", "D12"}) {
    auto t = character_table(catalog(name));
    auto classes = subgroup_classes(t.group);
    std::vector<const SubgroupClass*> ptrs;
    for (const auto& c : classes) ptrs.push_back(&c);
    std::vector<ScanEntry> s(ptrs.size()), p(ptrs.size());
    kernels::induced_decompositions_serial(t, ptrs, s);
    kernels::induced_decompositions_parallel(t, ptrs, p);
    for (std::size_t i = 0; i < ptrs.size(); ++i) {
      CHECK(s[i].decompositions == p[i].decompositions);
      REQUIRE(s[i].linear.size() == p[i].linear.size());
      for (std::size_t k = 0; k < s[i].linear.size(); ++k)
        CHECK(std::ranges::equal(s[i].linear[k].values(), p[i].linear[k].values()));
    }
  }
  auto w = wreath_product(catalog("S3"), 2);
  auto t = character_table(w.group);
  auto classes = subgroup_classes(w.group);
  std::vector<const SubgroupClass*> ptrs;
  for (const auto& c : classes) ptrs.push_back(&c);
  std::vector<ScanEntry> s(ptrs.size()), p(ptrs.size());
  kernels::induced_decompositions_serial(t, ptrs, s);
  kernels::induced_decompositions_parallel(t, ptrs, p);
  for (std::size_t i = 0; i < ptrs.size(); ++i) CHECK(s[i].decompositions == p[i].decompositions);
}

TEST_CASE("bobo hypothesis") {
  WreathCharacters c3(wreath_product(catalog("C3"), 2));
  auto r = check_bobo_hypothesis(c3);
  CHECK(r.overall);
  CHECK(r.consistent());

  WreathCharacters s3(wreath_product(catalog("S3"), 2));
  auto rs = check_bobo_hypothesis(s3);
  CHECK(rs.overall);
  REQUIRE(rs.factor_premise);
  CHECK(*rs.factor_premise);
  REQUIRE(rs.conclusion);
  CHECK(*rs.conclusion);
  std::set<std::size_t> phis;
  for (const auto& c : rs.cases) {
    REQUIRE(c.monomial);
    CHECK(replay(*c.monomial, s3.factor_table));
    phis.insert(c.phi);
  }
  CHECK(phis == std::set<std::size_t>{0, 1, 2});
}

TEST_CASE("bobo hypothesis fails over SL(2,3)") {
  WreathCharacters w(wreath_product(catalog("SL(2,3)"), 2));
  auto r = check_bobo_hypothesis(w);
  CHECK_FALSE(r.overall);
  bool degree_two_failed = false;
  for (const auto& c : r.cases)
    if (!c.monomial) degree_two_failed = degree_two_failed || w.factor_table.degrees[c.phi] == 2;
  CHECK(degree_two_failed);
}

TEST_CASE("main hypothesis") {
  WreathCharacters triv(wreath_product(catalog("C1"), 3));
  auto r0 = check_main_hypothesis(triv);
  CHECK(r0.overall);
  CHECK(r0.cases.size() == 6);  // 3 linear characters x 2 nontrivial beta

  WreathCharacters c2(wreath_product(catalog("C2"), 2));
  auto r = check_main_hypothesis(c2);
  CHECK(r.overall);
  for (const auto& c : r.cases) {
    REQUIRE(c.separation);
    CHECK(replay(*c.separation, c2.table));
    CHECK(c2.table.index_of(c2.outer_linear[c.beta] * c2.table[c.chi]) == c.target);
  }
}

TEST_CASE("survey over abelian factors") {
  auto s = counterexample_search({{"C2", catalog("C2")}, {"C3", catalog("C3")}}, {2, 3});
  CHECK_FALSE(s.counterexample_found);
  REQUIRE(s.entries.size() == 4);
  for (const auto& e : s.entries) {
    CHECK(e.status == SurveyEntry::Status::kChecked);
    CHECK(e.wreath_almost_monomial);
  }
  auto limited = counterexample_search({{"S3", catalog("S3")}}, {3}, {kDefaultSubgroupLimit, 100, Execution::kParallel});
  REQUIRE(limited.entries.size() == 1);
  CHECK(limited.entries[0].status == SurveyEntry::Status::kOrderLimit);
}

TEST_CASE("survey over a nonabelian factor") {
  auto s = counterexample_search({{"A4", catalog("A4")}}, {2});
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].status == SurveyEntry::Status::kChecked);
}
