#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wreathcheck {

using ElementId = std::int32_t;

/// Image list of a permutation of {0..k-1}: point i is sent to perm[i].
using Permutation = std::vector<int>;

inline constexpr std::size_t kDefaultOrderLimit = 20000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/**
 * A finite group stored as its complete multiplication table.
 *
 * Element ids are dense and 0-based; id 0 is always the identity. The
 * conjugacy classes are ordered by their smallest member, and that member is
 * the class representative, so class 0 is {identity}.
 *
 * Instances are immutable after construction and shared via GroupPtr.
 */
class FiniteGroup {
 public:
  /// Validates the group axioms and relabels so that the identity is id 0.
  static GroupPtr from_cayley(const std::vector<std::vector<ElementId>>& table,
                              std::string name = {});

  /// Closure of permutation generators; multiplication is composition
  /// (a*b applies b first). Element ids follow breadth-first discovery order.
  static GroupPtr from_permutations(const std::vector<Permutation>& generators,
                                    std::string name = {},
                                    std::size_t order_limit = kDefaultOrderLimit);

  /// Row-major order*order table whose identity is already id 0.
  static GroupPtr from_flat_table(std::size_t order, std::vector<ElementId> flat,
                                  std::string name = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr ElementId identity() noexcept { return 0; }

  ElementId mul(ElementId a, ElementId b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
  }
  ElementId inv(ElementId a) const noexcept { return inverse_[a]; }
  ElementId conj(ElementId g, ElementId x) const noexcept {  // g x g^-1
    return mul(mul(g, x), inv(g));
  }
  ElementId power(ElementId a, long k) const;
  ElementId commutator(ElementId a, ElementId b) const noexcept {  // a^-1 b^-1 a b
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  std::size_t num_classes() const noexcept { return class_offsets_.size() - 1; }
  std::span<const ElementId> class_members(std::size_t c) const noexcept {
    return {class_elements_.data() + class_offsets_[c],
            class_offsets_[c + 1] - class_offsets_[c]};
  }
  ElementId class_rep(std::size_t c) const noexcept {
    return class_elements_[class_offsets_[c]];
  }
  std::size_t class_size(std::size_t c) const noexcept {
    return class_offsets_[c + 1] - class_offsets_[c];
  }
  std::size_t class_of(ElementId a) const noexcept { return class_index_[a]; }
  std::vector<std::size_t> class_sizes() const;

  /// Class containing rep^k for the representative of class c.
  std::size_t class_power(std::size_t c, long k) const;
  /// Class of inverses of class c.
  std::size_t inverse_class(std::size_t c) const noexcept {
    return class_of(inv(class_rep(c)));
  }

  std::size_t element_order(ElementId a) const noexcept { return element_order_[a]; }
  std::size_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return num_classes() == order_; }

  const std::string& name() const noexcept { return name_; }
  std::vector<std::vector<ElementId>> cayley_table() const;

 private:
  FiniteGroup() = default;
  void validate() const;
  void compute_structure();

  std::size_t order_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::size_t> element_order_;
  std::size_t exponent_ = 1;
  std::vector<ElementId> class_elements_;
  std::vector<std::size_t> class_offsets_;
  std::vector<std::size_t> class_index_;
  std::string name_;
};

/// A subgroup, stored as the sorted list of its element ids in the parent.
class Subgroup {
 public:
  /// Checks the subgroup axioms; throws NotASubgroup otherwise.
  Subgroup(GroupPtr parent, std::vector<ElementId> elements);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::span<const ElementId> elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_->order() / elements_.size(); }
  bool contains(ElementId a) const noexcept { return member_[a] != 0; }
  bool is_normal() const;

  /// The subgroup as a group in its own right; element k there is elements()[k].
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  struct Trusted {};
  Subgroup(Trusted, GroupPtr parent, std::vector<ElementId> elements);
  friend Subgroup closure(const GroupPtr&, std::span<const ElementId>);
  friend Subgroup conjugate_subgroup(const Subgroup&, ElementId);

  GroupPtr parent_;
  std::vector<ElementId> elements_;
  std::vector<std::uint8_t> member_;
};

/// Homomorphism given by its image table; checked on construction.
struct GroupHom {
  GroupHom(GroupPtr source, GroupPtr target, std::vector<ElementId> image);

  ElementId operator()(ElementId a) const noexcept { return image[a]; }

  GroupPtr source;
  GroupPtr target;
  std::vector<ElementId> image;
};

struct DirectProduct {
  GroupPtr group;
  GroupPtr first;
  GroupPtr second;
  GroupHom embed_first;
  GroupHom embed_second;

  /// Element (a, b) has id a + |first| * b.
  ElementId pair(ElementId a, ElementId b) const noexcept {
    return a + static_cast<ElementId>(first->order()) * b;
  }
  std::pair<ElementId, ElementId> split(ElementId x) const noexcept {
    auto n = static_cast<ElementId>(first->order());
    return {x % n, x / n};
  }
};

DirectProduct direct_product(const GroupPtr& g1, const GroupPtr& g2,
                             std::size_t order_limit = kDefaultOrderLimit);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// G/N with cosets ordered by their smallest element. Throws NotNormal.
Quotient quotient(const Subgroup& normal);

/// Smallest subgroup containing the seeds.
Subgroup closure(const GroupPtr& group, std::span<const ElementId> seeds);

Subgroup conjugate_subgroup(const Subgroup& h, ElementId g);

Subgroup derived_subgroup(const GroupPtr& group);
/// G = G0 > G1 > ... > Gk with G(i+1) = [Gi, Gi] and Gk perfect, as subgroups of G.
std::vector<Subgroup> derived_series(const GroupPtr& group);
bool is_solvable(const GroupPtr& group);

}  // namespace wreathcheck
