#include "wreathcheck/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "wreathcheck/error.hpp"

namespace wreathcheck {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 256;
constexpr std::size_t kRandomAssociativityTriples = 100000;

}  // namespace

GroupPtr FiniteGroup::from_cayley(const std::vector<std::vector<ElementId>>& table,
                                  std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup(NotAGroup::Reason::kMalformed, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw NotAGroup(NotAGroup::Reason::kMalformed, "table is not square");
    for (ElementId x : row)
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw NotAGroup(NotAGroup::Reason::kMalformed, "entry out of range");
  }

  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b)
      ok = table[a][b] == static_cast<ElementId>(b) && table[b][a] == static_cast<ElementId>(b);
    if (ok) e = a;
  }
  if (e == n) throw NotAGroup(NotAGroup::Reason::kNoIdentity, "no two-sided identity");

  // Swap labels e and 0 so the identity becomes id 0.
  auto relabel = [e](ElementId x) -> ElementId {
    if (x == 0) return static_cast<ElementId>(e);
    if (static_cast<std::size_t>(x) == e) return 0;
    return x;
  };
  std::vector<ElementId> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
  return from_flat_table(n, std::move(flat), std::move(name));
}

GroupPtr FiniteGroup::from_flat_table(std::size_t order, std::vector<ElementId> flat,
                                      std::string name) {
  if (order == 0 || flat.size() != order * order)
    throw NotAGroup(NotAGroup::Reason::kMalformed, "table size mismatch");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = order;
  g->table_ = std::move(flat);
  g->name_ = std::move(name);
  g->validate();
  g->compute_structure();
  return g;
}

void FiniteGroup::validate() const {
  const std::size_t n = order_;
  for (ElementId x : table_)
    if (x < 0 || static_cast<std::size_t>(x) >= n)
      throw NotAGroup(NotAGroup::Reason::kMalformed, "entry out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (mul(0, a) != static_cast<ElementId>(a) || mul(a, 0) != static_cast<ElementId>(a))
      throw NotAGroup(NotAGroup::Reason::kNoIdentity, "id 0 is not a two-sided identity");
  for (std::size_t a = 0; a < n; ++a) {
    const ElementId* row = &table_[a * n];
    auto it = std::find(row, row + n, 0);
    if (it == row + n || mul(static_cast<ElementId>(it - row), a) != 0)
      throw NotAGroup(NotAGroup::Reason::kNoInverse,
                      "element " + std::to_string(a) + " has no two-sided inverse");
  }
  // Cancellation: every row and column is a permutation. Cheap, and it keeps
  // the sampled associativity check honest for large tables.
  std::vector<std::size_t> seen_row(n, n), seen_col(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto r = static_cast<std::size_t>(mul(static_cast<ElementId>(a), static_cast<ElementId>(b)));
      const auto c = static_cast<std::size_t>(mul(static_cast<ElementId>(b), static_cast<ElementId>(a)));
      if (seen_row[r] == a || seen_col[c] == a)
        throw NotAGroup(NotAGroup::Reason::kNonAssociative,
                        "cancellation fails in row or column " + std::to_string(a));
      seen_row[r] = a;
      seen_col[c] = a;
    }
  auto check = [this](ElementId a, ElementId b, ElementId c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw NotAGroup(NotAGroup::Reason::kNonAssociative,
                      "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                          std::to_string(c) + " differs from the other bracketing");
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          check(static_cast<ElementId>(a), static_cast<ElementId>(b), static_cast<ElementId>(c));
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (std::size_t i = 0; i < kRandomAssociativityTriples; ++i)
      check(pick(rng), pick(rng), pick(rng));
  }
}

void FiniteGroup::compute_structure() {
  const std::size_t n = order_;
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const ElementId* row = &table_[a * n];
    inverse_[a] = static_cast<ElementId>(std::find(row, row + n, 0) - row);
  }

  element_order_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (ElementId x = static_cast<ElementId>(a); x != 0; x = mul(x, static_cast<ElementId>(a))) ++k;
    element_order_[a] = k;
    exponent_ = std::lcm(exponent_, element_order_[a]);
  }

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  class_index_.assign(n, kUnassigned);
  class_elements_.clear();
  class_offsets_.assign(1, 0);
  std::vector<ElementId> orbit;
  for (std::size_t x = 0; x < n; ++x) {
    if (class_index_[x] != kUnassigned) continue;
    const std::size_t c = class_offsets_.size() - 1;
    orbit.clear();
    for (std::size_t g = 0; g < n; ++g) {
      ElementId y = conj(static_cast<ElementId>(g), static_cast<ElementId>(x));
      if (class_index_[y] == kUnassigned) {
        class_index_[y] = c;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    class_elements_.insert(class_elements_.end(), orbit.begin(), orbit.end());
    class_offsets_.push_back(class_elements_.size());
  }
}

ElementId FiniteGroup::power(ElementId a, long k) const {
  const auto ord = static_cast<long>(element_order_[a]);
  k %= ord;
  if (k < 0) k += ord;
  ElementId result = 0;
  ElementId base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::size_t> FiniteGroup::class_sizes() const {
  std::vector<std::size_t> sizes(num_classes());
  for (std::size_t c = 0; c < sizes.size(); ++c) sizes[c] = class_size(c);
  return sizes;
}

std::size_t FiniteGroup::class_power(std::size_t c, long k) const {
  return class_of(power(class_rep(c), k));
}

std::vector<std::vector<ElementId>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<ElementId>> rows(order_);
  for (std::size_t a = 0; a < order_; ++a)
    rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                   table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  return rows;
}

GroupPtr FiniteGroup::from_permutations(const std::vector<Permutation>& generators,
                                        std::string name, std::size_t order_limit) {
  const std::size_t points = generators.empty() ? 0 : generators.front().size();
  for (const auto& gen : generators) {
    if (gen.size() != points)
      throw NotAGroup(NotAGroup::Reason::kMalformed, "generators act on different point sets");
    std::vector<bool> seen(points, false);
    for (int x : gen) {
      if (x < 0 || static_cast<std::size_t>(x) >= points || seen[x])
        throw NotAGroup(NotAGroup::Reason::kMalformed, "generator is not a bijection");
      seen[x] = true;
    }
  }

  Permutation id(points);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::map<Permutation, ElementId> index{{id, 0}};
  std::vector<ElementId> parent{0};
  std::vector<std::size_t> via{0};
  const std::size_t ngens = generators.size();
  std::vector<ElementId> right;  // right[i * ngens + s] = i * gen_s

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Permutation next(points);
      for (std::size_t x = 0; x < points; ++x) next[x] = elements[i][generators[s][x]];
      auto [it, inserted] = index.emplace(std::move(next), static_cast<ElementId>(elements.size()));
      if (inserted) {
        if (elements.size() >= order_limit)
          throw OrderLimitExceeded("permutation closure exceeds order limit " +
                                   std::to_string(order_limit));
        elements.push_back(it->first);
        parent.push_back(static_cast<ElementId>(i));
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  std::vector<ElementId> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    ElementId* row = &flat[i * n];
    row[0] = static_cast<ElementId>(i);
    for (std::size_t j = 1; j < n; ++j)
      row[j] = right[static_cast<std::size_t>(row[parent[j]]) * ngens + via[j]];
  }
  return from_flat_table(n, std::move(flat), std::move(name));
}

Subgroup::Subgroup(Trusted, GroupPtr parent, std::vector<ElementId> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  member_.assign(parent_->order(), 0);
  for (ElementId x : elements_) member_[x] = 1;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const auto n = static_cast<ElementId>(parent_->order());
  if (elements_.empty() || elements_.front() != 0)
    throw NotASubgroup("subgroup must contain the identity");
  if (elements_.back() >= n || elements_.front() < 0)
    throw NotASubgroup("element id out of range");
  member_.assign(parent_->order(), 0);
  for (ElementId x : elements_) member_[x] = 1;
  for (ElementId a : elements_) {
    if (!contains(parent_->inv(a))) throw NotASubgroup("not closed under inverses");
    for (ElementId b : elements_)
      if (!contains(parent_->mul(a, b))) throw NotASubgroup("not closed under multiplication");
  }
  if (parent_->order() % elements_.size() != 0)
    throw NotASubgroup("subgroup order does not divide the group order");
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(Trusted{}, std::move(parent), {0});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElementId> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(Trusted{}, std::move(parent), std::move(all));
}

bool Subgroup::is_normal() const {
  const auto n = static_cast<ElementId>(parent_->order());
  for (ElementId g = 0; g < n; ++g)
    for (ElementId h : elements_)
      if (!contains(parent_->conj(g, h))) return false;
  return true;
}

GroupPtr Subgroup::as_group() const {
  const std::size_t k = elements_.size();
  std::vector<ElementId> position(parent_->order(), -1);
  for (std::size_t i = 0; i < k; ++i) position[elements_[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      flat[i * k + j] = position[parent_->mul(elements_[i], elements_[j])];
  return FiniteGroup::from_flat_table(k, std::move(flat));
}

GroupHom::GroupHom(GroupPtr src, GroupPtr tgt, std::vector<ElementId> img)
    : source(std::move(src)), target(std::move(tgt)), image(std::move(img)) {
  const std::size_t n = source->order();
  if (image.size() != n) throw Error("homomorphism image table has wrong size");
  for (ElementId x : image)
    if (x < 0 || static_cast<std::size_t>(x) >= target->order())
      throw Error("homomorphism image out of range");
  if (image[0] != 0) throw Error("homomorphism does not fix the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
        throw Error("map is not a homomorphism");
}

DirectProduct direct_product(const GroupPtr& g1, const GroupPtr& g2, std::size_t order_limit) {
  const std::size_t n1 = g1->order();
  const std::size_t n2 = g2->order();
  if (n1 * n2 > order_limit)
    throw OrderLimitExceeded("direct product of order " + std::to_string(n1 * n2) +
                             " exceeds limit " + std::to_string(order_limit));
  const std::size_t n = n1 * n2;
  std::vector<ElementId> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto a = g1->mul(static_cast<ElementId>(x % n1), static_cast<ElementId>(y % n1));
      auto b = g2->mul(static_cast<ElementId>(x / n1), static_cast<ElementId>(y / n1));
      flat[x * n + y] = a + static_cast<ElementId>(n1) * b;
    }
  std::string name;
  if (!g1->name().empty() && !g2->name().empty()) name = g1->name() + "x" + g2->name();
  GroupPtr g = FiniteGroup::from_flat_table(n, std::move(flat), std::move(name));

  std::vector<ElementId> e1(n1), e2(n2);
  for (std::size_t a = 0; a < n1; ++a) e1[a] = static_cast<ElementId>(a);
  for (std::size_t b = 0; b < n2; ++b) e2[b] = static_cast<ElementId>(n1 * b);
  return DirectProduct{g, g1, g2, GroupHom(g1, g, std::move(e1)), GroupHom(g2, g, std::move(e2))};
}

Quotient quotient(const Subgroup& normal) {
  const GroupPtr& g = normal.parent();
  if (!normal.is_normal()) throw NotNormal("subgroup is not normal");
  const std::size_t n = g->order();
  std::vector<ElementId> label(n, -1);
  std::vector<ElementId> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    const auto c = static_cast<ElementId>(reps.size());
    reps.push_back(static_cast<ElementId>(x));
    for (ElementId h : normal.elements()) label[g->mul(static_cast<ElementId>(x), h)] = c;
  }
  const std::size_t k = reps.size();
  std::vector<ElementId> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = label[g->mul(reps[i], reps[j])];
  std::string name = g->name().empty() ? std::string() : g->name() + "/N";
  GroupPtr q = FiniteGroup::from_flat_table(k, std::move(flat), std::move(name));
  return Quotient{q, GroupHom(g, q, std::move(label))};
}

Subgroup closure(const GroupPtr& group, std::span<const ElementId> seeds) {
  std::vector<std::uint8_t> member(group->order(), 0);
  std::vector<ElementId> elements{0};
  member[0] = 1;
  std::vector<ElementId> gens;
  for (ElementId s : seeds) {
    if (member[s]) continue;
    gens.push_back(s);
    // Re-close: every known element times every generator.
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (ElementId gen : gens) {
        ElementId y = group->mul(elements[i], gen);
        if (!member[y]) {
          member[y] = 1;
          elements.push_back(y);
        }
      }
  }
  std::sort(elements.begin(), elements.end());
  return Subgroup(Subgroup::Trusted{}, group, std::move(elements));
}

Subgroup conjugate_subgroup(const Subgroup& h, ElementId g) {
  const GroupPtr& parent = h.parent();
  std::vector<ElementId> elements;
  elements.reserve(h.order());
  for (ElementId x : h.elements()) elements.push_back(parent->conj(g, x));
  std::sort(elements.begin(), elements.end());
  return Subgroup(Subgroup::Trusted{}, parent, std::move(elements));
}

namespace {

Subgroup commutator_subgroup_of(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  std::vector<std::uint8_t> seen(g->order(), 0);
  std::vector<ElementId> commutators;
  for (ElementId a : h.elements())
    for (ElementId b : h.elements()) {
      ElementId c = g->commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  return closure(g, commutators);
}

}  // namespace

Subgroup derived_subgroup(const GroupPtr& group) {
  return commutator_subgroup_of(Subgroup::whole(group));
}

std::vector<Subgroup> derived_series(const GroupPtr& group) {
  std::vector<Subgroup> series{Subgroup::whole(group)};
  for (;;) {
    Subgroup next = commutator_subgroup_of(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const GroupPtr& group) {
  return derived_series(group).back().order() == 1;
}

}  // namespace wreathcheck
