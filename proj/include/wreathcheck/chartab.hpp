#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wreathcheck/cyclotomic.hpp"
#include "wreathcheck/group.hpp"

namespace wreathcheck {

/// Cyclotomic values indexed by the conjugacy classes of a parent group.
class ClassFunction {
 public:
  ClassFunction(GroupPtr parent, std::vector<Cyclotomic> values);

  static ClassFunction trivial(const GroupPtr& parent);
  static ClassFunction regular(const GroupPtr& parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::span<const Cyclotomic> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Cyclotomic& operator[](std::size_t cls) const noexcept { return values_[cls]; }
  const Cyclotomic& at_element(ElementId x) const noexcept {
    return values_[parent_->class_of(x)];
  }
  /// Value at the identity.
  const Cyclotomic& degree() const noexcept { return values_[0]; }

  ClassFunction conjugate() const;
  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& scale);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& q) { return a *= q; }
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.parent_ == b.parent_ && a.values_ == b.values_;
  }

  std::vector<std::complex<double>> numeric() const;
  /// lcm of the value conductors.
  int conductor() const;

 private:
  void require_same_parent(const ClassFunction& other) const;

  GroupPtr parent_;
  std::vector<Cyclotomic> values_;
};

/**
 * Irr(G) with deterministic ordering: by degree, then by the numeric values
 * class by class in descending order (real part first), so the trivial
 * character always comes first.
 */
struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::vector<long long> degrees;
  /// Prime used by the modular eigenspace split.
  long long prime = 0;

  std::size_t size() const noexcept { return irreducibles.size(); }
  const ClassFunction& operator[](std::size_t i) const noexcept { return irreducibles[i]; }
  std::optional<std::size_t> index_of(const ClassFunction& chi) const;
};

/**
 * Dixon-Burnside: class multiplication coefficients are reduced modulo the
 * smallest prime p = 1 (mod exponent) above 2 sqrt|G|, the common
 * eigenvectors are split out over F_p, and the eigenvalue multiplicities of
 * each element are recovered by a discrete Fourier sum and lifted to exact
 * cyclotomic values. A failed split retries with the next admissible prime.
 */
CharacterTable character_table(const GroupPtr& group);

/// (1/|G|) sum_g a(g) conj(b(g)) as an arbitrary cyclotomic.
Cyclotomic hermitian_product(const ClassFunction& a, const ClassFunction& b);
/// hermitian_product for values known to be rational (e.g. characters);
/// throws Error otherwise and ParentMismatch on different parents.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicity of every irreducible; throws NotACharacter unless all are
/// nonnegative integers.
std::vector<long long> decompose(const ClassFunction& chi, const CharacterTable& table);
/// Irreducible index -> positive multiplicity.
std::map<std::size_t, long long> constituents(const ClassFunction& chi,
                                              const CharacterTable& table);

/// A subgroup together with its own group object and class fusion.
struct SubgroupEmbedding {
  explicit SubgroupEmbedding(Subgroup h);

  Subgroup subgroup;
  GroupPtr group;                   // element k is subgroup.elements()[k]
  std::vector<std::size_t> fusion;  // class of group -> class of parent
  const GroupPtr& parent() const noexcept { return subgroup.parent(); }
};

/// theta^G(g) = (1/|H|) sum_{x in G} theta0(x g x^-1); theta lives on h.group.
ClassFunction induce(const ClassFunction& theta, const SubgroupEmbedding& h);
/// chi restricted to h.group.
ClassFunction restrict_to(const ClassFunction& chi, const SubgroupEmbedding& h);
/// Pulls a class function on G/N back along the projection G -> G/N.
ClassFunction inflate(const ClassFunction& on_quotient, const GroupHom& projection);
/// (a x b)(x, y) = a(x) b(y) on the direct product.
ClassFunction outer_product(const ClassFunction& a, const ClassFunction& b,
                            const DirectProduct& product);

/// Lin(G): inflations of the character table of G/[G,G].
std::vector<ClassFunction> linear_characters(const GroupPtr& group);

}  // namespace wreathcheck
