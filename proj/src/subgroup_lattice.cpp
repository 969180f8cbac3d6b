#include "wreathcheck/subgroup_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

#include "wreathcheck/error.hpp"

namespace wreathcheck {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& bits) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : bits) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

Bits to_bits(std::span<const ElementId> elements, std::size_t n) {
  Bits bits((n + 63) / 64, 0);
  for (ElementId x : elements) bits[x / 64] |= std::uint64_t{1} << (x % 64);
  return bits;
}

struct Found {
  std::vector<ElementId> elements;  // sorted
  std::vector<ElementId> generators;
};

class LatticeBuilder {
 public:
  LatticeBuilder(GroupPtr group, std::size_t limit) : group_(std::move(group)), limit_(limit) {}

  std::vector<SubgroupClass> run() {
    register_class(Found{{0}, {}});
    for (std::size_t next = 0; next < reps_.size(); ++next) extend(next);

    std::vector<SubgroupClass> out;
    out.reserve(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      Subgroup rep(group_, reps_[i].elements);
      SubgroupClass cls{rep, reps_[i].elements, rep.order(), conjugate_counts_[i],
                        conjugate_counts_[i] == 1};
      out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
      if (a.order != b.order) return a.order < b.order;
      return a.canonical_key < b.canonical_key;
    });
    return out;
  }

 private:
  void extend(std::size_t cls) {
    const std::size_t n = group_->order();
    // Copies: reps_ may grow while we iterate.
    const std::vector<ElementId> base = reps_[cls].elements;
    const std::vector<ElementId> base_gens = reps_[cls].generators;
    std::vector<std::uint8_t> in_base(n, 0);
    for (ElementId x : base) in_base[x] = 1;
    std::vector<std::uint8_t> done(n, 0);

    for (std::size_t gi = 0; gi < n; ++gi) {
      const auto g = static_cast<ElementId>(gi);
      if (in_base[g] || done[g]) continue;
      // <H, g> = <H, h g^k> for h in H and k prime to ord(g).
      const auto ord = static_cast<long>(group_->element_order(g));
      for (long k = 1; k < ord; ++k) {
        if (std::gcd(k, ord) != 1) continue;
        ElementId gk = group_->power(g, k);
        for (ElementId h : base) done[group_->mul(h, gk)] = 1;
      }

      Found grown = grow(base, base_gens, g);
      Bits key = to_bits(grown.elements, n);
      if (seen_.find(key) != seen_.end()) continue;
      register_class(std::move(grown));
    }
  }

  Found grow(const std::vector<ElementId>& base, std::vector<ElementId> gens, ElementId g) const {
    gens.push_back(g);
    std::vector<std::uint8_t> member(group_->order(), 0);
    std::vector<ElementId> elements = base;
    for (ElementId x : elements) member[x] = 1;
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (ElementId s : gens) {
        ElementId y = group_->mul(elements[i], s);
        if (!member[y]) {
          member[y] = 1;
          elements.push_back(y);
        }
      }
    std::sort(elements.begin(), elements.end());
    return Found{std::move(elements), std::move(gens)};
  }

  void register_class(Found found) {
    const std::size_t n = group_->order();
    const std::size_t id = reps_.size();
    if (id >= limit_)
      throw SearchBudgetExceeded("subgroup class limit " + std::to_string(limit_) + " exceeded");

    std::vector<ElementId> best;
    ElementId best_conjugator = 0;
    std::size_t count = 0;
    std::vector<ElementId> conj(found.elements.size());
    for (std::size_t xi = 0; xi < n; ++xi) {
      const auto x = static_cast<ElementId>(xi);
      for (std::size_t i = 0; i < conj.size(); ++i) conj[i] = group_->conj(x, found.elements[i]);
      std::sort(conj.begin(), conj.end());
      auto [it, inserted] = seen_.emplace(to_bits(conj, n), id);
      if (!inserted) continue;
      ++count;
      if (best.empty() || conj < best) {
        best = conj;
        best_conjugator = x;
      }
    }
    std::vector<ElementId> gens;
    gens.reserve(found.generators.size());
    for (ElementId s : found.generators) gens.push_back(group_->conj(best_conjugator, s));
    reps_.push_back(Found{std::move(best), std::move(gens)});
    conjugate_counts_.push_back(count);
  }

  GroupPtr group_;
  std::size_t limit_;
  std::vector<Found> reps_;
  std::vector<std::size_t> conjugate_counts_;
  std::unordered_map<Bits, std::size_t, BitsHash> seen_;
};

}  // namespace

std::vector<ElementId> canonical_key(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  std::vector<ElementId> best;
  std::vector<ElementId> conj(h.order());
  for (std::size_t xi = 0; xi < g->order(); ++xi) {
    for (std::size_t i = 0; i < conj.size(); ++i)
      conj[i] = g->conj(static_cast<ElementId>(xi), h.elements()[i]);
    std::sort(conj.begin(), conj.end());
    if (best.empty() || conj < best) best = conj;
  }
  return best;
}

std::vector<SubgroupClass> subgroup_classes(const GroupPtr& group, std::size_t limit) {
  return LatticeBuilder(group, limit).run();
}

std::vector<Subgroup> normal_subgroups(const std::vector<SubgroupClass>& classes) {
  std::vector<Subgroup> out;
  for (const auto& cls : classes)
    if (cls.is_normal) out.push_back(cls.representative);
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& group, std::size_t limit) {
  return normal_subgroups(subgroup_classes(group, limit));
}

std::map<std::size_t, std::size_t> class_counts_by_order(
    const std::vector<SubgroupClass>& classes) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& cls : classes) ++counts[cls.order];
  return counts;
}

}  // namespace wreathcheck
