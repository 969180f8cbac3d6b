// Brute-force reference computations used only by the tests. They read the
// multiplication table and nothing else from the library.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include "wreathcheck/group.hpp"

namespace oracle {

using wreathcheck::ElementId;
using wreathcheck::FiniteGroup;
using Set = std::vector<ElementId>;  // sorted

inline std::vector<Set> conjugacy_classes(const FiniteGroup& g) {
  const auto n = static_cast<ElementId>(g.order());
  std::vector<int> seen(g.order(), 0);
  std::vector<Set> out;
  for (ElementId x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<ElementId> orbit;
    for (ElementId y = 0; y < n; ++y) {
      // y x y^-1 with the inverse found by search
      ElementId yi = 0;
      while (g.mul(y, yi) != 0) ++yi;
      orbit.insert(g.mul(g.mul(y, x), yi));
    }
    for (ElementId z : orbit) seen[z] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

inline std::multiset<std::size_t> class_size_multiset(const FiniteGroup& g) {
  std::multiset<std::size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.insert(c.size());
  return out;
}

/// Smallest set containing `seed` and closed under multiplication.
inline Set closure(const FiniteGroup& g, Set seed) {
  std::set<ElementId> s(seed.begin(), seed.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementId> cur(s.begin(), s.end());
    for (ElementId a : cur)
      for (ElementId b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

inline Set conjugate(const FiniteGroup& g, const Set& h, ElementId x) {
  ElementId xi = 0;
  while (g.mul(x, xi) != 0) ++xi;
  Set out;
  for (ElementId a : h) out.push_back(g.mul(g.mul(x, a), xi));
  std::sort(out.begin(), out.end());
  return out;
}

inline Set min_conjugate(const FiniteGroup& g, const Set& h) {
  Set best = h;
  for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x) best = std::min(best, conjugate(g, h, x));
  return best;
}

/// Every subgroup: grow closed subsets one element at a time from {1} until
/// nothing new appears. Only closure under the law is used.
inline std::set<Set> all_subgroups(const FiniteGroup& g) {
  std::set<Set> found{Set{0}};
  std::vector<Set> frontier{Set{0}};
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& h : frontier) {
      std::vector<char> in(g.order(), 0);
      for (ElementId a : h) in[a] = 1;
      for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x) {
        if (in[x]) continue;
        Set s = h;
        s.push_back(x);
        Set c = closure(g, s);
        if (g.order() % c.size() != 0) continue;  // cannot happen for a group
        if (found.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return found;
}

inline std::set<Set> subgroup_class_keys(const FiniteGroup& g) {
  std::set<Set> keys;
  for (const auto& h : all_subgroups(g)) keys.insert(min_conjugate(g, h));
  return keys;
}

inline std::size_t element_order(const FiniteGroup& g, ElementId x) {
  std::size_t k = 1;
  for (ElementId y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

/// Commutator subgroup by closure of all a^-1 b^-1 a b.
inline Set derived(const FiniteGroup& g) {
  const auto n = static_cast<ElementId>(g.order());
  auto inv = [&](ElementId a) {
    ElementId b = 0;
    while (g.mul(a, b) != 0) ++b;
    return b;
  };
  Set comms;
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) comms.push_back(g.mul(g.mul(inv(a), inv(b)), g.mul(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure(g, comms);
}

/**
 * Floating-point character table from the class sums: a random combination
 * of the class-multiplication matrices is diagonalized, each eigenvector is
 * scaled to the central character omega (omega(1) = 1), and
 * chi(c) = d omega(c) / |c| with d^2 = |G| / sum_c omega(c) conj(omega(c)) / |c|.
 * Rows are returned in no particular order; values are indexed by the
 * classes of conjugacy_classes(g).
 */
inline std::vector<std::vector<std::complex<double>>> numeric_table(const FiniteGroup& g, unsigned seed = 7) {
  const auto classes = conjugacy_classes(g);
  const std::size_t k = classes.size();
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t c = 0; c < k; ++c)
    for (ElementId x : classes[c]) class_of[x] = c;
  // K_j K_l = sum_c a_jlc K_c; the matrix (a_jlc)_{l,c} has the central characters as eigenvectors.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t j = 0; j < k; ++j) {
    const double w = coef(rng);
    for (std::size_t c = 0; c < k; ++c) {
      const ElementId z = classes[c].front();
      for (ElementId x : classes[j]) {
        // a_jlc = #{x in C_j : x^-1 z in C_l}
        ElementId xi = 0;
        while (g.mul(x, xi) != 0) ++xi;
        m(static_cast<Eigen::Index>(class_of[g.mul(xi, z)]), static_cast<Eigen::Index>(c)) += w;
      }
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<std::vector<std::complex<double>>> rows;
  for (Eigen::Index e = 0; e < static_cast<Eigen::Index>(k); ++e) {
    Eigen::VectorXcd v = solver.eigenvectors().col(e);
    const std::complex<double> scale = v(0);
    std::vector<std::complex<double>> omega(k);
    for (std::size_t c = 0; c < k; ++c) omega[c] = v(static_cast<Eigen::Index>(c)) / scale;
    double s = 0;
    for (std::size_t c = 0; c < k; ++c) s += std::norm(omega[c]) / static_cast<double>(classes[c].size());
    const double d = std::sqrt(static_cast<double>(g.order()) / s);
    std::vector<std::complex<double>> chi(k);
    for (std::size_t c = 0; c < k; ++c) chi[c] = d * omega[c] / static_cast<double>(classes[c].size());
    rows.push_back(std::move(chi));
  }
  return rows;
}

/// lambda^G(g) = (1/|H|) sum_{x in G} lambda0(x g x^-1), on elements.
inline std::vector<std::complex<double>> induce_numeric(const FiniteGroup& g, const Set& h,
                                                        const std::vector<std::complex<double>>& on_h) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<int>(i);
  std::vector<std::complex<double>> out(g.order());
  for (ElementId y = 0; y < static_cast<ElementId>(g.order()); ++y) {
    std::complex<double> s = 0;
    for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x) {
      ElementId xi = 0;
      while (g.mul(x, xi) != 0) ++xi;
      const ElementId c = g.mul(g.mul(x, y), xi);
      if (pos[c] >= 0) s += on_h[static_cast<std::size_t>(pos[c])];
    }
    out[y] = s / static_cast<double>(h.size());
  }
  return out;
}

}  // namespace oracle
