#include "wreathcheck/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wreathcheck/error.hpp"

namespace wreathcheck {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string label_string(const BaseLabel& label) {
  std::string out = "(";
  for (std::size_t j = 0; j < label.size(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(label[j]);
  }
  return out + ")";
}

}  // namespace

ElementId WreathGroup::encode(std::span<const ElementId> coords, int shift) const {
  const auto a = static_cast<ElementId>(factor->order());
  ElementId id = 0;
  for (std::size_t k = coords.size(); k-- > 0;) id = id * a + coords[k];
  return static_cast<ElementId>(shift) * static_cast<ElementId>(base.order()) + id;
}

WreathGroup::Decoded WreathGroup::decode(ElementId x) const {
  const auto a = static_cast<ElementId>(factor->order());
  const auto b = static_cast<ElementId>(base.order());
  Decoded d;
  d.shift = static_cast<int>(x / b);
  ElementId rest = x % b;
  d.coords.resize(static_cast<std::size_t>(copies));
  for (auto& c : d.coords) {
    c = rest % a;
    rest /= a;
  }
  return d;
}

WreathGroup wreath_product(const GroupPtr& factor, int p, std::size_t order_limit) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const std::size_t a = factor->order();
  std::size_t base_order = 1;
  for (int k = 0; k < p; ++k) {
    base_order *= a;
    if (base_order * static_cast<std::size_t>(p) > order_limit)
      throw OrderLimitExceeded("wreath product exceeds order limit " + std::to_string(order_limit));
  }
  const std::size_t n = base_order * static_cast<std::size_t>(p);
  const auto up = static_cast<std::size_t>(p);

  std::vector<ElementId> coords(n * up);
  std::vector<int> shifts(n);
  for (std::size_t x = 0; x < n; ++x) {
    shifts[x] = static_cast<int>(x / base_order);
    std::size_t rest = x % base_order;
    for (std::size_t k = 0; k < up; ++k) {
      coords[x * up + k] = static_cast<ElementId>(rest % a);
      rest /= a;
    }
  }

  std::vector<ElementId> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const int i = shifts[x];
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t id = 0;
      for (std::size_t k = up; k-- > 0;) {
        // (a * sigma^i(b))_k = a_k * b_{k - i}
        const std::size_t src = (k + up - static_cast<std::size_t>(i)) % up;
        id = id * a + static_cast<std::size_t>(factor->mul(coords[x * up + k], coords[y * up + src]));
      }
      id += static_cast<std::size_t>((i + shifts[y]) % p) * base_order;
      flat[x * n + y] = static_cast<ElementId>(id);
    }
  }

  std::string name;
  if (!factor->name().empty()) name = factor->name() + "wrC" + std::to_string(p);
  GroupPtr w = FiniteGroup::from_flat_table(n, std::move(flat), std::move(name));
  std::vector<ElementId> base_elements(base_order);
  std::iota(base_elements.begin(), base_elements.end(), 0);
  return WreathGroup{w, factor, p, Subgroup(w, std::move(base_elements)),
                     static_cast<ElementId>(base_order)};
}

BaseLabel shift_label(const BaseLabel& label, int k) {
  const auto p = static_cast<int>(label.size());
  BaseLabel out(label.size());
  for (int j = 0; j < p; ++j) out[j] = label[static_cast<std::size_t>(((j + k) % p + p) % p)];
  return out;
}

bool is_diagonal(const BaseLabel& label) {
  return std::all_of(label.begin(), label.end(), [&](std::size_t x) { return x == label.front(); });
}

std::vector<BaseIrreducible> base_irreducibles(const WreathGroup& w, const CharacterTable& factor_table,
                                               const SubgroupEmbedding& base) {
  const std::size_t r = factor_table.size();
  const auto p = static_cast<std::size_t>(w.copies);
  std::size_t count = 1;
  for (std::size_t k = 0; k < p; ++k) count *= r;

  // Decoded class representatives of the base.
  const GroupPtr& bg = base.group;
  std::vector<WreathGroup::Decoded> reps;
  reps.reserve(bg->num_classes());
  for (std::size_t c = 0; c < bg->num_classes(); ++c)
    reps.push_back(w.decode(base.subgroup.elements()[bg->class_rep(c)]));

  std::vector<BaseIrreducible> out;
  out.reserve(count);
  BaseLabel label(p, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = p; k-- > 0;) {
      label[k] = rest % r;
      rest /= r;
    }
    std::vector<Cyclotomic> values;
    values.reserve(reps.size());
    for (const auto& rep : reps) {
      Cyclotomic v = factor_table[label[0]].at_element(rep.coords[0]);
      for (std::size_t k = 1; k < p; ++k) v *= factor_table[label[k]].at_element(rep.coords[k]);
      values.push_back(std::move(v));
    }
    out.push_back(BaseIrreducible{label, ClassFunction(bg, std::move(values))});
  }
  return out;
}

std::vector<ClassFunction> outer_linear_characters(const WreathGroup& w) {
  Quotient top = quotient(w.base);
  CharacterTable table = character_table(top.group);
  std::vector<ClassFunction> inflated;
  for (const auto& chi : table.irreducibles) inflated.push_back(inflate(chi, top.projection));

  std::vector<ClassFunction> out;
  for (int j = 0; j < w.copies; ++j) {
    const Cyclotomic target = Cyclotomic::zeta(w.copies, j);
    auto it = std::find_if(inflated.begin(), inflated.end(), [&](const ClassFunction& beta) {
      return beta.at_element(w.shift_generator) == target;
    });
    if (it == inflated.end()) throw Error("W/B has no character with beta(t) = zeta^j");
    out.push_back(*it);
  }
  return out;
}

WreathCensus wreath_census(const CharacterTable& factor_table, int p) {
  WreathCensus census;
  const std::size_t r = factor_table.size();
  census.labels = 1;
  for (int k = 0; k < p; ++k) census.labels *= r;
  census.fixed_labels = r;
  census.orbits = (census.labels - r) / static_cast<std::size_t>(p);
  census.predicted_irreducibles = census.orbits + static_cast<std::size_t>(p) * census.fixed_labels;

  // Fixed label: p extensions of degree d^p. Orbit: one induced character of degree p * prod d_k.
  long long fixed_sum = 0;
  long long all_sum = 0;
  for (long long d : factor_table.degrees) {
    long long dp = 1;
    for (int k = 0; k < p; ++k) dp *= d;
    fixed_sum += dp * dp;
  }
  long long per_copy = 0;
  for (long long d : factor_table.degrees) per_copy += d * d;
  all_sum = 1;
  for (int k = 0; k < p; ++k) all_sum *= per_copy;
  const long long orbit_sum = (all_sum - fixed_sum) / p;  // one representative per orbit
  census.predicted_degree_square_sum = p * fixed_sum + orbit_sum * p * p;
  return census;
}

WreathCharacters::WreathCharacters(WreathGroup w)
    : wreath(std::move(w)),
      factor_table(character_table(wreath.factor)),
      table(character_table(wreath.group)),
      base(wreath.base),
      base_irreducibles(wreathcheck::base_irreducibles(wreath, factor_table, base)),
      outer_linear(outer_linear_characters(wreath)) {}

std::size_t WreathCharacters::label_index(const BaseLabel& label) const {
  std::size_t idx = 0;
  for (std::size_t k : label) idx = idx * factor_table.size() + k;
  return idx;
}

CliffordCase clifford_case(std::size_t chi, const WreathCharacters& wc) {
  const ClassFunction restricted = restrict_to(wc.table[chi], wc.base);
  std::vector<std::size_t> support;
  std::vector<long long> mult;
  for (std::size_t i = 0; i < wc.base_irreducibles.size(); ++i) {
    auto m = hermitian_product(restricted, wc.base_irreducibles[i].character).as_nonneg_integer();
    if (!m) throw DichotomyViolation("restriction to the base is not a character");
    if (*m > 0) {
      support.push_back(i);
      mult.push_back(*m);
    }
  }
  const std::string where = "irreducible " + std::to_string(chi) + " of W: ";
  if (support.empty()) throw DichotomyViolation(where + "restriction to the base is zero");
  const BaseLabel& first = wc.base_irreducibles[support.front()].label;

  if (support.size() == 1 && mult.front() == 1) {
    if (!is_diagonal(first))
      throw DichotomyViolation(where + "irreducible restriction " + label_string(first) +
                               " is not shift-invariant");
    CliffordCase out;
    out.kind = CliffordCase::Kind::kExtension;
    out.labels = {first};
    out.phi = first.front();
    return out;
  }

  const int p = wc.wreath.copies;
  CliffordCase out;
  out.kind = CliffordCase::Kind::kInduced;
  for (int k = 0; k < p; ++k) out.labels.push_back(shift_label(first, k));
  std::vector<std::size_t> orbit;
  for (const auto& l : out.labels) orbit.push_back(wc.label_index(l));
  std::sort(orbit.begin(), orbit.end());
  const bool full_orbit = std::adjacent_find(orbit.begin(), orbit.end()) == orbit.end();
  const bool unit = std::all_of(mult.begin(), mult.end(), [](long long m) { return m == 1; });
  if (!full_orbit || !unit || orbit != support)
    throw DichotomyViolation(where + "restriction to the base is neither irreducible nor a full orbit");
  if (induce(wc.base_irreducibles[support.front()].character, wc.base) != wc.table[chi])
    throw DichotomyViolation(where + "not induced from " + label_string(first));
  return out;
}

std::vector<std::size_t> gallagher_fiber(const BaseLabel& label, const WreathCharacters& wc) {
  if (label.size() != static_cast<std::size_t>(wc.wreath.copies))
    throw Error("label has the wrong number of coordinates");
  if (!is_diagonal(label)) throw NotInvariant(label_string(label) + " is not shift-invariant");
  const ClassFunction induced = induce(wc.base_irreducibles[wc.label_index(label)].character, wc.base);
  auto cons = constituents(induced, wc.table);
  const auto p = static_cast<std::size_t>(wc.wreath.copies);
  if (cons.size() != p ||
      std::any_of(cons.begin(), cons.end(), [](const auto& kv) { return kv.second != 1; }))
    throw DichotomyViolation("theta^W for " + label_string(label) +
                             " does not split into p distinct extensions");
  const ClassFunction& chi0 = wc.table[cons.begin()->first];
  std::vector<std::size_t> fiber;
  for (const auto& beta : wc.outer_linear) {
    auto idx = wc.table.index_of(beta * chi0);
    if (!idx || cons.count(*idx) == 0)
      throw DichotomyViolation("beta * chi is not a constituent of theta^W");
    fiber.push_back(*idx);
  }
  return fiber;
}

}  // namespace wreathcheck
