#include "wreathcheck/chartab.hpp"

#include <numeric>
#include <string>

#include "wreathcheck/error.hpp"

namespace wreathcheck {

ClassFunction::ClassFunction(GroupPtr parent, std::vector<Cyclotomic> values)
    : parent_(std::move(parent)), values_(std::move(values)) {
  if (values_.size() != parent_->num_classes())
    throw Error("class function has " + std::to_string(values_.size()) + " values for " +
                std::to_string(parent_->num_classes()) + " classes");
}

ClassFunction ClassFunction::trivial(const GroupPtr& parent) {
  return ClassFunction(parent, std::vector<Cyclotomic>(parent->num_classes(), Cyclotomic(1)));
}

ClassFunction ClassFunction::regular(const GroupPtr& parent) {
  std::vector<Cyclotomic> values(parent->num_classes());
  values[0] = Cyclotomic(static_cast<long>(parent->order()));
  return ClassFunction(parent, std::move(values));
}

void ClassFunction::require_same_parent(const ClassFunction& other) const {
  if (parent_ != other.parent_) throw ParentMismatch("class functions live on different groups");
}

ClassFunction ClassFunction::conjugate() const {
  std::vector<Cyclotomic> values;
  values.reserve(values_.size());
  for (const auto& v : values_) values.push_back(v.conjugate());
  return ClassFunction(parent_, std::move(values));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_parent(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  require_same_parent(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.require_same_parent(b);
  std::vector<Cyclotomic> values;
  values.reserve(a.values_.size());
  for (std::size_t i = 0; i < a.values_.size(); ++i) values.push_back(a.values_[i] * b.values_[i]);
  return ClassFunction(a.parent_, std::move(values));
}

std::vector<std::complex<double>> ClassFunction::numeric() const {
  std::vector<std::complex<double>> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.to_complex());
  return out;
}

int ClassFunction::conductor() const {
  int m = 1;
  for (const auto& v : values_) m = std::lcm(m, v.conductor());
  return m;
}

std::optional<std::size_t> CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i] == chi) return i;
  return std::nullopt;
}

Cyclotomic hermitian_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.parent() != b.parent()) throw ParentMismatch("inner product across different groups");
  const GroupPtr& g = a.parent();
  CyclotomicAccumulator acc(std::lcm(a.conductor(), b.conductor()));
  const Rational inv_order(1, static_cast<unsigned long>(g->order()));
  for (std::size_t c = 0; c < a.size(); ++c)
    acc.add_product_conj(a[c], b[c], inv_order * static_cast<unsigned long>(g->class_size(c)));
  return acc.result();
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  auto value = hermitian_product(a, b).as_rational();
  if (!value) throw Error("inner product is not rational");
  return *value;
}

std::vector<long long> decompose(const ClassFunction& chi, const CharacterTable& table) {
  if (chi.parent() != table.group) throw ParentMismatch("character and table live on different groups");
  std::vector<long long> mult(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto m = hermitian_product(chi, table[i]).as_nonneg_integer();
    if (!m)
      throw NotACharacter("multiplicity of irreducible " + std::to_string(i) +
                          " is not a nonnegative integer");
    mult[i] = *m;
  }
  return mult;
}

std::map<std::size_t, long long> constituents(const ClassFunction& chi,
                                              const CharacterTable& table) {
  std::map<std::size_t, long long> out;
  auto mult = decompose(chi, table);
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] > 0) out.emplace(i, mult[i]);
  return out;
}

SubgroupEmbedding::SubgroupEmbedding(Subgroup h) : subgroup(std::move(h)) {
  group = subgroup.as_group();
  fusion.resize(group->num_classes());
  for (std::size_t c = 0; c < fusion.size(); ++c)
    fusion[c] = subgroup.parent()->class_of(subgroup.elements()[group->class_rep(c)]);
}

ClassFunction induce(const ClassFunction& theta, const SubgroupEmbedding& h) {
  if (theta.parent() != h.group)
    throw ParentMismatch("induced class function does not live on the subgroup");
  const GroupPtr& g = h.parent();
  const int m = theta.conductor();
  std::vector<CyclotomicAccumulator> sums(g->num_classes(), CyclotomicAccumulator(m));
  std::vector<bool> touched(g->num_classes(), false);
  for (std::size_t c = 0; c < theta.size(); ++c) {
    sums[h.fusion[c]].add_scaled(theta[c], Rational(static_cast<unsigned long>(h.group->class_size(c))));
    touched[h.fusion[c]] = true;
  }
  std::vector<Cyclotomic> values(g->num_classes());
  for (std::size_t l = 0; l < values.size(); ++l) {
    if (!touched[l]) continue;
    // |C_G(g_l)| / |H| = |G| / (|H| |C_l|)
    Rational scale(static_cast<unsigned long>(g->order()),
                   static_cast<unsigned long>(h.group->order() * g->class_size(l)));
    scale.canonicalize();
    values[l] = sums[l].result() * scale;
  }
  return ClassFunction(g, std::move(values));
}

ClassFunction restrict_to(const ClassFunction& chi, const SubgroupEmbedding& h) {
  if (chi.parent() != h.parent())
    throw ParentMismatch("restricted class function does not live on the parent group");
  std::vector<Cyclotomic> values;
  values.reserve(h.fusion.size());
  for (std::size_t c : h.fusion) values.push_back(chi[c]);
  return ClassFunction(h.group, std::move(values));
}

ClassFunction inflate(const ClassFunction& on_quotient, const GroupHom& projection) {
  if (on_quotient.parent() != projection.target)
    throw ParentMismatch("inflated class function does not live on the quotient");
  const GroupPtr& g = projection.source;
  std::vector<Cyclotomic> values;
  values.reserve(g->num_classes());
  for (std::size_t c = 0; c < g->num_classes(); ++c)
    values.push_back(on_quotient.at_element(projection(g->class_rep(c))));
  return ClassFunction(g, std::move(values));
}

ClassFunction outer_product(const ClassFunction& a, const ClassFunction& b,
                            const DirectProduct& product) {
  if (a.parent() != product.first || b.parent() != product.second)
    throw ParentMismatch("outer product factors do not match the direct product");
  const GroupPtr& g = product.group;
  std::vector<Cyclotomic> values;
  values.reserve(g->num_classes());
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    auto [x, y] = product.split(g->class_rep(c));
    values.push_back(a.at_element(x) * b.at_element(y));
  }
  return ClassFunction(g, std::move(values));
}

std::vector<ClassFunction> linear_characters(const GroupPtr& group) {
  Quotient abelianization = quotient(derived_subgroup(group));
  CharacterTable table = character_table(abelianization.group);
  std::vector<ClassFunction> out;
  out.reserve(table.size());
  for (const auto& chi : table.irreducibles) out.push_back(inflate(chi, abelianization.projection));
  return out;
}

}  // namespace wreathcheck
