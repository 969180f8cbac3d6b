#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wreathcheck/chartab.hpp"
#include "wreathcheck/group.hpp"

namespace wreathcheck {

/**
 * W = A wr C_p: the semidirect product of B = A^p by <t>, where t shifts
 * coordinates, sigma(a_1, ..., a_p) = (a_p, a_1, ..., a_{p-1}).
 *
 * Element (a, i) has id i*|A|^p + sum_k a_k |A|^k, and
 * (a, i)(b, j) = (a * sigma^i(b), i + j mod p). The base B is therefore the
 * id range [0, |A|^p) and t = (1, 1) has id |A|^p.
 */
struct WreathGroup {
  GroupPtr group;
  GroupPtr factor;
  int copies = 0;
  Subgroup base;
  ElementId shift_generator = 0;

  struct Decoded {
    std::vector<ElementId> coords;
    int shift = 0;
  };

  std::size_t base_order() const noexcept { return base.order(); }
  ElementId encode(std::span<const ElementId> coords, int shift) const;
  Decoded decode(ElementId x) const;
};

/// Throws NotPrime unless p is prime, OrderLimitExceeded if |A|^p p is too big.
WreathGroup wreath_product(const GroupPtr& factor, int p,
                           std::size_t order_limit = kDefaultOrderLimit);

/// theta_1 x ... x theta_p as indices into Irr(A).
using BaseLabel = std::vector<std::size_t>;

struct BaseIrreducible {
  BaseLabel label;
  ClassFunction character;  // on the base as its own group
};

/// sigma^k applied to a label: entry j becomes label[j + k mod p].
BaseLabel shift_label(const BaseLabel& label, int k);
bool is_diagonal(const BaseLabel& label);

/// Everything the Clifford analysis of W needs, computed once.
struct WreathCharacters {
  explicit WreathCharacters(WreathGroup w);

  WreathGroup wreath;
  CharacterTable factor_table;  // Irr(A)
  CharacterTable table;         // Irr(W), computed directly on the full table
  SubgroupEmbedding base;       // B inside W
  std::vector<BaseIrreducible> base_irreducibles;  // label-lexicographic
  std::vector<ClassFunction> outer_linear;         // beta_0..beta_{p-1}

  std::size_t label_index(const BaseLabel& label) const;
};

/// All |Irr(A)|^p outer products on the base, in label-lexicographic order.
std::vector<BaseIrreducible> base_irreducibles(const WreathGroup& w, const CharacterTable& factor_table,
                                               const SubgroupEmbedding& base);

/// The p inflations of Irr(W/B), ordered so that beta_j(t) = zeta_p^j.
std::vector<ClassFunction> outer_linear_characters(const WreathGroup& w);

/// Predicted shape of Irr(W) from the labels alone.
struct WreathCensus {
  std::size_t labels = 0;
  std::size_t fixed_labels = 0;
  std::size_t orbits = 0;  // shift orbits of size p
  std::size_t predicted_irreducibles = 0;
  long long predicted_degree_square_sum = 0;
};
WreathCensus wreath_census(const CharacterTable& factor_table, int p);

struct CliffordCase {
  enum class Kind { kInduced, kExtension };
  Kind kind = Kind::kInduced;
  /// Case I: the p distinct shifts of theta, chi = theta^W. Case II: the single
  /// diagonal label phi x ... x phi.
  std::vector<BaseLabel> labels;
  /// Case II only: index of phi in Irr(A).
  std::size_t phi = 0;
};

/// Case of Irr(W)[chi]; throws DichotomyViolation if neither case holds.
CliffordCase clifford_case(std::size_t chi, const WreathCharacters& wc);

/**
 * The p irreducible constituents of theta^W for a diagonal label, listed as
 * beta_j * chi_0 for j = 0..p-1 where chi_0 is the constituent with the
 * smallest table index. Throws NotInvariant for a non-diagonal label.
 */
std::vector<std::size_t> gallagher_fiber(const BaseLabel& label, const WreathCharacters& wc);

}  // namespace wreathcheck
