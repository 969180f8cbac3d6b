#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "wreathcheck/catalog.hpp"
#include "wreathcheck/error.hpp"
#include "wreathcheck/group.hpp"
#include "wreathcheck/group_io.hpp"

using namespace wreathcheck;

namespace {

// S3 as a Cayley table built by hand from permutations of {0,1,2}.
std::vector<std::vector<ElementId>> s3_table() {
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto index = [&](std::array<int, 3> p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<ElementId>(i);
    return ElementId{-1};
  };
  std::vector<std::vector<ElementId>> t(6, std::vector<ElementId>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index(c);
    }
  return t;
}

std::size_t lcm_of_orders(const FiniteGroup& g) {
  std::size_t e = 1;
  for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x)
    e = std::lcm(e, oracle::element_order(g, x));
  return e;
}

}  // namespace

TEST_CASE("from_cayley small tables") {
  auto triv = FiniteGroup::from_cayley({{0}});
  CHECK(triv->order() == 1);
  CHECK(triv->exponent() == 1);
  CHECK(triv->num_classes() == 1);

  auto c2 = FiniteGroup::from_cayley({{0, 1}, {1, 0}});
  CHECK(c2->order() == 2);
  CHECK(c2->num_classes() == 2);

  auto s3 = FiniteGroup::from_cayley(s3_table());
  CHECK(s3->num_classes() == 3);
  std::multiset<std::size_t> sizes;
  for (auto s : s3->class_sizes()) sizes.insert(s);
  CHECK(sizes == oracle::class_size_multiset(*s3));
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
}

TEST_CASE("from_cayley relabels the identity to 0") {
  // C3 where the identity is element 2
  auto g = FiniteGroup::from_cayley({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(g->order() == 3);
  for (ElementId x = 0; x < 3; ++x) {
    CHECK(g->mul(0, x) == x);
    CHECK(g->mul(x, 0) == x);
  }
}

TEST_CASE("from_cayley rejects non-groups") {
  auto reason_of = [](const std::vector<std::vector<ElementId>>& t) {
    try {
      FiniteGroup::from_cayley(t);
    } catch (const NotAGroup& e) {
      return e.reason();
    }
    FAIL("accepted a non-group");
    return NotAGroup::Reason::kMalformed;
  };
  CHECK(reason_of({{0, 1}, {1, 1}}) == NotAGroup::Reason::kNoInverse);
  CHECK(reason_of({{1, 0}, {0, 0}}) == NotAGroup::Reason::kNoIdentity);
  CHECK(reason_of({{0, 1}, {0}}) == NotAGroup::Reason::kMalformed);
  CHECK(reason_of({{0, 5}, {1, 0}}) == NotAGroup::Reason::kMalformed);
  // identity 0 and inverses, but 1*1 = 1*2
  CHECK(reason_of({{0, 1, 2}, {1, 0, 0}, {2, 2, 0}}) == NotAGroup::Reason::kNonAssociative);
  // a Latin square loop of order 5 that is not associative
  CHECK(reason_of({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}) ==
        NotAGroup::Reason::kNonAssociative);
}

TEST_CASE("from_permutations") {
  auto c2 = FiniteGroup::from_permutations({{1, 0}});
  CHECK(c2->order() == 2);

  auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3->order() == 6);
  CHECK(s3->exponent() == 6);

  auto d10 = FiniteGroup::from_permutations({{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
  CHECK(d10->order() == 10);
  CHECK(oracle::closure(*d10, {1, 2}).size() == 10);
  CHECK(d10->exponent() == lcm_of_orders(*d10));

  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, "", 100),
                  OrderLimitExceeded);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0}}), NotAGroup);
}

TEST_CASE("class structure matches the conjugation oracle on the catalog") {
  for (const auto& name : small_catalog_names()) {
    CAPTURE(name);
    auto g = catalog(name);
    std::multiset<std::size_t> sizes;
    std::size_t total = 0;
    for (std::size_t c = 0; c < g->num_classes(); ++c) {
      sizes.insert(g->class_size(c));
      total += g->class_size(c);
      CHECK(g->order() % g->class_size(c) == 0);
      for (ElementId x : g->class_members(c)) CHECK(g->class_of(x) == c);
    }
    CHECK(total == g->order());
    CHECK(sizes == oracle::class_size_multiset(*g));
    CHECK(g->class_size(0) == 1);
    CHECK(g->exponent() == lcm_of_orders(*g));
    CHECK(g->order() % g->exponent() == 0);
    for (ElementId x = 0; x < static_cast<ElementId>(g->order()); ++x) {
      CHECK(g->power(x, static_cast<long>(g->exponent())) == 0);
      CHECK(g->element_order(x) == oracle::element_order(*g, x));
      CHECK(g->mul(x, g->inv(x)) == 0);
    }
  }
}

TEST_CASE("direct products") {
  auto c2 = catalog("C2");
  auto triv = catalog("C1");
  auto s3 = catalog("S3");

  auto p = direct_product(triv, s3);
  CHECK(p.group->order() == 6);
  CHECK(p.group->num_classes() == 3);

  auto v4 = direct_product(c2, c2);
  CHECK(v4.group->order() == 4);
  CHECK(v4.group->num_classes() == 4);
  CHECK(v4.group->exponent() == 2);

  auto s3c2 = direct_product(s3, c2);
  CHECK(s3c2.group->order() == 12);
  CHECK(oracle::conjugacy_classes(*s3c2.group).size() == 6);
  CHECK(s3c2.group->num_classes() == 6);
  // embeddings are injective and their images commute
  for (ElementId a = 0; a < 6; ++a)
    for (ElementId b = 0; b < 2; ++b) {
      const ElementId x = s3c2.embed_first(a), y = s3c2.embed_second(b);
      CHECK(s3c2.group->mul(x, y) == s3c2.group->mul(y, x));
      CHECK(s3c2.group->mul(x, y) == s3c2.pair(a, b));
    }
  CHECK_THROWS_AS(direct_product(catalog("S4"), catalog("S4"), 100), OrderLimitExceeded);
}

TEST_CASE("quotients") {
  auto s3 = catalog("S3");
  auto q1 = quotient(Subgroup::trivial(s3));
  CHECK(q1.group->order() == 6);
  CHECK(q1.group->num_classes() == 3);
  CHECK(quotient(Subgroup::whole(s3)).group->order() == 1);

  auto a3 = derived_subgroup(s3);
  auto q = quotient(a3);
  CHECK(q.group->order() == 2);
  for (ElementId x = 0; x < 6; ++x)
    for (ElementId y = 0; y < 6; ++y)
      CHECK(q.projection(s3->mul(x, y)) == q.group->mul(q.projection(x), q.projection(y)));
  for (ElementId x = 0; x < 6; ++x) CHECK((q.projection(x) == 0) == a3.contains(x));

  auto c2 = closure(s3, std::vector<ElementId>{s3->class_rep(1)});
  CHECK_THROWS_AS(quotient(c2), NotNormal);
}

TEST_CASE("derived series and solvability") {
  CHECK(derived_subgroup(catalog("C6")).order() == 1);
  CHECK(is_solvable(catalog("C6")));

  auto s3 = catalog("S3");
  CHECK(derived_subgroup(s3).order() == 3);
  CHECK(oracle::derived(*s3).size() == 3);
  CHECK(is_solvable(s3));

  auto s5 = catalog("S5");
  CHECK_FALSE(is_solvable(s5));
  auto series = derived_series(s5);
  CHECK(series.back().order() == 60);
  for (std::size_t i = 1; i < series.size(); ++i) CHECK(series[i].order() < series[i - 1].order());

  for (const auto& name : small_catalog_names()) {
    CAPTURE(name);
    auto g = catalog(name);
    auto dg = derived_subgroup(g);
    auto d = dg.elements();
    CHECK(std::vector<ElementId>(d.begin(), d.end()) == oracle::derived(*g));
  }
}

TEST_CASE("conjugate subgroups") {
  auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  // element 1 is (0 1), element 2 is (0 1 2) by discovery order
  auto h = closure(s3, std::vector<ElementId>{1});
  CHECK(conjugate_subgroup(h, 0) == h);
  auto k = conjugate_subgroup(h, 2);
  CHECK(k.order() == 2);
  // the image of (0 1) under conjugation by (0 1 2) is (1 2): perm [0,2,1]
  const ElementId x = k.elements()[1];
  CHECK(x == s3->conj(2, 1));
  auto expect = oracle::conjugate(*s3, {0, 1}, 2);
  CHECK(std::vector<ElementId>(k.elements().begin(), k.elements().end()) == expect);

  auto a3 = derived_subgroup(s3);
  for (ElementId g = 0; g < 6; ++g) CHECK(conjugate_subgroup(a3, g) == a3);
}

TEST_CASE("subgroup validation") {
  auto s3 = catalog("S3");
  CHECK_THROWS_AS(Subgroup(s3, {1}), NotASubgroup);
  CHECK_THROWS_AS(Subgroup(s3, {0, 1, 2}), NotASubgroup);
  CHECK_NOTHROW(Subgroup(s3, {0}));
}

TEST_CASE("homomorphisms are checked") {
  auto c2 = catalog("C2");
  auto c4 = catalog("C4");
  CHECK_NOTHROW(GroupHom(c4, c2, {0, 1, 0, 1}));
  CHECK_THROWS_AS(GroupHom(c4, c2, {0, 1, 1, 1}), Error);
}

TEST_CASE("randomized associativity check on a large table") {
  auto g = direct_product(catalog("S4"), catalog("D12")).group;
  CHECK(g->order() == 288);
  auto t = g->cayley_table();
  t[5][7] = t[5][8];
  CHECK_THROWS_AS(FiniteGroup::from_cayley(t), NotAGroup);
}

TEST_CASE("group files round-trip bit-exactly") {
  for (const auto& name : small_catalog_names()) {
    auto g = catalog(name);
    const std::string text = group_to_json(*g).dump();
    auto back = group_from_json(nlohmann::json::parse(text));
    CHECK(back->cayley_table() == g->cayley_table());
    CHECK(back->name() == g->name());
    CHECK(group_to_json(*back).dump() == text);
  }
  auto gens = group_from_json(nlohmann::json::parse(R"({"permutation_generators": [[1,2,0],[1,0,2]], "name": "S3"})"));
  CHECK(gens->order() == 6);
  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"({"cayley": [[0,1],[1,2]]})")), NotAGroup);
  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"({"name": "x"})")), NotAGroup);
}
