#include "wreathcheck/catalog.hpp"

#include <array>
#include <charconv>
#include <numeric>

#include "wreathcheck/error.hpp"

namespace wreathcheck {

namespace {

Permutation cycle(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

Permutation transposition(int n, int a, int b) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return p;
}

GroupPtr cyclic(int n, const std::string& name, std::size_t limit) {
  if (n == 1) return FiniteGroup::from_permutations({}, name, limit);
  return FiniteGroup::from_permutations({cycle(n)}, name, limit);
}

GroupPtr dihedral(int order, const std::string& name, std::size_t limit) {
  if (order % 2 != 0) throw UnknownGroup(name + ": dihedral groups have even order");
  const int m = order / 2;
  if (m == 1) return cyclic(2, name, limit);
  if (m == 2) return FiniteGroup::from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}, name, limit);
  Permutation reflection(m);
  for (int i = 0; i < m; ++i) reflection[i] = (m - i) % m;
  return FiniteGroup::from_permutations({cycle(m), reflection}, name, limit);
}

GroupPtr symmetric(int n, const std::string& name, std::size_t limit) {
  if (n <= 1) return FiniteGroup::from_permutations({}, name, limit);
  if (n == 2) return FiniteGroup::from_permutations({transposition(2, 0, 1)}, name, limit);
  return FiniteGroup::from_permutations({transposition(n, 0, 1), cycle(n)}, name, limit);
}

GroupPtr alternating(int n, const std::string& name, std::size_t limit) {
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(gens, name, limit);
}

GroupPtr quaternion(const std::string& name) {
  // unit u in {1,i,j,k} times sign s; id = 4*s + u
  static constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  std::vector<std::vector<ElementId>> table(8, std::vector<ElementId>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int s = (a / 4 + b / 4 + sign[ua][ub]) % 2;
      table[a][b] = 4 * s + unit[ua][ub];
    }
  return FiniteGroup::from_cayley(table, name);
}

GroupPtr sl23(const std::string& name, std::size_t limit) {
  using Mat = std::array<int, 4>;
  std::vector<Mat> mats;
  for (int x = 0; x < 81; ++x) {
    Mat m{x / 27, x / 9 % 3, x / 3 % 3, x % 3};
    if (((m[0] * m[3] - m[1] * m[2]) % 3 + 3) % 3 == 1) mats.push_back(m);
  }
  auto index = [&](const Mat& m) {
    for (std::size_t i = 0; i < mats.size(); ++i)
      if (mats[i] == m) return static_cast<int>(i);
    return -1;
  };
  auto left = [&](const Mat& g) {
    Permutation p;
    for (const auto& m : mats)
      p.push_back(index({(g[0] * m[0] + g[1] * m[2]) % 3, (g[0] * m[1] + g[1] * m[3]) % 3,
                         (g[2] * m[0] + g[3] * m[2]) % 3, (g[2] * m[1] + g[3] * m[3]) % 3}));
    return p;
  };
  return FiniteGroup::from_permutations({left({1, 1, 0, 1}), left({0, 2, 1, 0})}, name, limit);
}

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && out >= 1;
}

}  // namespace

GroupPtr catalog(const std::string& name, std::size_t order_limit) {
  if (name == "Q8") return quaternion(name);
  if (name == "SL(2,3)") return sl23(name, order_limit);
  int n = 0;
  if (name.size() >= 2 && parse_int(std::string_view(name).substr(1), n)) {
    switch (name[0]) {
      case 'C': return cyclic(n, name, order_limit);
      case 'D': return dihedral(n, name, order_limit);
      case 'S': return symmetric(n, name, order_limit);
      case 'A': return alternating(n, name, order_limit);
      default: break;
    }
  }
  throw UnknownGroup("unknown group '" + name + "'");
}

std::vector<std::string> small_catalog_names() {
  return {"C1", "C2", "C3", "C4", "C5", "C6", "C8", "D6", "D8", "D10", "D12",
          "Q8", "A4", "S3", "S4", "SL(2,3)"};
}

}  // namespace wreathcheck
