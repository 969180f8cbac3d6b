#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wreathcheck/group.hpp"

namespace wreathcheck {

inline constexpr std::size_t kDefaultSubgroupLimit = 100000;

/// One conjugacy class of subgroups.
struct SubgroupClass {
  /// The conjugate whose sorted element list is lexicographically smallest.
  Subgroup representative;
  /// Sorted element list of the representative; identical for every conjugate.
  std::vector<ElementId> canonical_key;
  std::size_t order = 0;
  std::size_t conjugates = 0;
  bool is_normal = false;
};

/// Lexicographically smallest sorted element list among the conjugates of h.
std::vector<ElementId> canonical_key(const Subgroup& h);

/**
 * All subgroups of `group` up to conjugacy, sorted by order and then by
 * canonical key. Classes are discovered by extending each known class
 * representative H by one element g to <H, g> until nothing new appears.
 *
 * Throws SearchBudgetExceeded once more than `limit` classes are found.
 */
std::vector<SubgroupClass> subgroup_classes(const GroupPtr& group,
                                            std::size_t limit = kDefaultSubgroupLimit);

/// Normal subgroups, ordered as in subgroup_classes.
std::vector<Subgroup> normal_subgroups(const GroupPtr& group,
                                       std::size_t limit = kDefaultSubgroupLimit);
std::vector<Subgroup> normal_subgroups(const std::vector<SubgroupClass>& classes);

/// Number of subgroup classes of each order.
std::map<std::size_t, std::size_t> class_counts_by_order(const std::vector<SubgroupClass>& classes);

}  // namespace wreathcheck
