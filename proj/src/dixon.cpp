// Exact character tables by the Dixon-Burnside method.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "wreathcheck/chartab.hpp"
#include "wreathcheck/error.hpp"

namespace wreathcheck {

namespace {

using u64 = std::uint64_t;

class ModP {
 public:
  explicit ModP(u64 p) : p_(p) {}
  u64 p() const noexcept { return p_; }
  u64 add(u64 a, u64 b) const noexcept { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const noexcept { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const noexcept { return a * b % p_; }
  u64 pow(u64 a, u64 e) const noexcept {
    u64 r = 1;
    a %= p_;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const noexcept { return pow(a, p_ - 2); }

 private:
  u64 p_;
};

using Matrix = std::vector<std::vector<u64>>;
using Vector = std::vector<u64>;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  ModP f(p);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && f.pow(g, (p - 1) / q) != 1;
    if (ok) return g;
  }
  return 1;  // p == 2
}

/// Characteristic polynomial of a square matrix via Hessenberg reduction;
/// coefficients lowest degree first, monic.
Vector charpoly(Matrix h, const ModP& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 pivot_inv = f.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h[r][m - 1] == 0) continue;
      const u64 u = f.mul(h[r][m - 1], pivot_inv);
      for (std::size_t c = 0; c < n; ++c) h[r][c] = f.sub(h[r][c], f.mul(u, h[m][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][m] = f.add(h[c][m], f.mul(u, h[c][r]));
    }
  }
  // p_{k+1}(x) = (x - h_kk) p_k(x) - sum_{i<k} h_ik (prod_{j=i+1..k} h_j,j-1) p_i(x)
  std::vector<Vector> polys{Vector{1}};
  for (std::size_t k = 0; k < n; ++k) {
    Vector next(k + 2, 0);
    const Vector& pk = polys[k];
    for (std::size_t d = 0; d < pk.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], pk[d]);
      next[d] = f.sub(next[d], f.mul(h[k][k], pk[d]));
    }
    u64 t = 1;
    for (std::size_t i = k; i-- > 0;) {
      t = f.mul(t, h[i + 1][i]);
      if (t == 0) break;
      const u64 coef = f.mul(h[i][k], t);
      for (std::size_t d = 0; d < polys[i].size(); ++d)
        next[d] = f.sub(next[d], f.mul(coef, polys[i][d]));
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

/// Basis of the null space of a (rows x cols) matrix.
std::vector<Vector> null_space(Matrix a, const ModP& f) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = f.inv(a[r][c]);
    for (auto& v : a[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Vector> basis;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, a[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Subspace of F_p^r spanned by rows in reduced echelon form.
struct Subspace {
  std::vector<Vector> basis;
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<Vector> rows, const ModP& f) {
  Subspace s;
  if (rows.empty()) return s;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    s.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  s.basis = std::move(rows);
  return s;
}

Vector apply(const Matrix& m, const Vector& v, const ModP& f) {
  Vector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) acc = (acc + m[i][j] * v[j]) % f.p();
    out[i] = acc;
  }
  return out;
}

/**
 * Splits an M-invariant subspace into eigenspaces of M. Returns false if M is
 * not diagonalizable over F_p on it.
 */
bool split(const Subspace& space, const Matrix& m, const ModP& f, std::vector<Subspace>& out) {
  const std::size_t d = space.basis.size();
  if (d == 1) {
    out.push_back(space);
    return true;
  }
  // Restricted matrix: M b_i = sum_k A[k][i] b_k, read off at the pivots.
  Matrix a(d, Vector(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    Vector image = apply(m, space.basis[i], f);
    for (std::size_t k = 0; k < d; ++k) a[k][i] = image[space.pivots[k]];
  }
  Vector poly = charpoly(a, f);

  std::vector<std::pair<u64, std::size_t>> roots;  // (eigenvalue, multiplicity)
  std::size_t total = 0;
  for (u64 x = 0; x < f.p() && total < d; ++x) {
    // Divide out (t - x) as long as it divides.
    std::size_t mult = 0;
    for (;;) {
      u64 acc = 0;
      for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
      if (acc != 0) break;
      Vector q(poly.size() - 1, 0);
      u64 carry = 0;
      for (std::size_t i = poly.size() - 1; i-- > 0;) {
        carry = f.add(poly[i + 1], f.mul(carry, x));
        q[i] = carry;
      }
      poly = std::move(q);
      ++mult;
    }
    if (mult > 0) {
      roots.emplace_back(x, mult);
      total += mult;
    }
  }
  if (total != d) return false;
  if (roots.size() == 1) {
    out.push_back(space);
    return true;
  }

  auto lift = [&](const std::vector<Vector>& coords) {
    std::vector<Vector> rows;
    for (const auto& c : coords) {
      Vector v(space.basis[0].size(), 0);
      for (std::size_t i = 0; i < d; ++i)
        if (c[i] != 0)
          for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = f.add(v[j], f.mul(c[i], space.basis[i][j]));
      rows.push_back(std::move(v));
    }
    return echelon(std::move(rows), f);
  };

  // Simple eigenvalues: project a Krylov vector with prod_{mu != lambda} (A - mu).
  // Krylov basis K[k] = A^k v for a fixed start vector.
  std::vector<Vector> krylov;
  {
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (7 * i * i + 3 * i + 1) % f.p();
    krylov.push_back(v);
    for (std::size_t k = 1; k < d; ++k) krylov.push_back(apply(a, krylov.back(), f));
  }
  for (auto [lambda, mult] : roots) {
    std::vector<Vector> coords;
    if (mult == 1) {
      // q(t) = prod over the other roots (t - mu)^mult.
      Vector q{1};
      for (auto [mu, mm] : roots) {
        if (mu == lambda) continue;
        for (std::size_t e = 0; e < mm; ++e) {
          Vector next(q.size() + 1, 0);
          for (std::size_t i = 0; i < q.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], q[i]);
            next[i] = f.sub(next[i], f.mul(mu, q[i]));
          }
          q = std::move(next);
        }
      }
      Vector w(d, 0);
      for (std::size_t k = 0; k < q.size(); ++k)
        if (q[k] != 0)
          for (std::size_t i = 0; i < d; ++i) w[i] = f.add(w[i], f.mul(q[k], krylov[k][i]));
      if (std::any_of(w.begin(), w.end(), [](u64 x) { return x != 0; })) coords.push_back(std::move(w));
    }
    if (coords.empty()) {
      Matrix shifted = a;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
      coords = null_space(std::move(shifted), f);
      if (coords.size() != mult) return false;
    }
    out.push_back(lift(coords));
  }
  return true;
}

struct ModularSplit {
  std::vector<Vector> central_characters;  // omega, normalized to omega[0] = 1
};

std::optional<ModularSplit> split_central_characters(const GroupPtr& g, const ModP& f) {
  const std::size_t r = g->num_classes();
  // coef[j][k][l] = #{x in C_j : x^-1 g_l in C_k}
  std::vector<Matrix> coef(r, Matrix(r, Vector(r, 0)));
  for (std::size_t l = 0; l < r; ++l) {
    const ElementId gl = g->class_rep(l);
    for (std::size_t xi = 0; xi < g->order(); ++xi) {
      const auto x = static_cast<ElementId>(xi);
      ++coef[g->class_of(x)][g->class_of(g->mul(g->inv(x), gl))][l];
    }
  }
  for (auto& m : coef)
    for (auto& row : m)
      for (auto& v : row) v %= f.p();

  Matrix identity(r, Vector(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces{echelon(identity, f)};

  auto refine = [&](const Matrix& m) -> bool {
    std::vector<Subspace> next;
    for (const auto& s : spaces)
      if (!split(s, m, f, next)) return false;
    spaces = std::move(next);
    return true;
  };

  // A pseudo-random combination usually separates everything in one pass.
  Matrix combo(r, Vector(r, 0));
  u64 seed = 0x2545f4914f6cdd1dull;
  for (std::size_t j = 1; j < r; ++j) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    const u64 c = (seed >> 33) % f.p();
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = 0; l < r; ++l) combo[k][l] = f.add(combo[k][l], f.mul(c, coef[j][k][l]));
  }
  if (!refine(combo)) return std::nullopt;
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(),
                    [](const Subspace& s) { return s.basis.size() == 1; }))
      break;
    if (!refine(coef[j])) return std::nullopt;
  }
  if (spaces.size() != r) return std::nullopt;

  ModularSplit out;
  for (const auto& s : spaces) {
    Vector v = s.basis[0];
    if (v[0] == 0) return std::nullopt;
    const u64 inv = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, inv);
    out.central_characters.push_back(std::move(v));
  }
  return out;
}

std::optional<CharacterTable> try_prime(const GroupPtr& g, u64 p) {
  const ModP f(p);
  auto split_result = split_central_characters(g, f);
  if (!split_result) return std::nullopt;

  const std::size_t r = g->num_classes();
  const u64 order = g->order();
  const u64 exponent = g->exponent();
  const u64 z = f.pow(primitive_root(p), (p - 1) / exponent);

  CharacterTable table;
  table.group = g;
  table.prime = static_cast<long long>(p);
  for (const Vector& omega : split_result->central_characters) {
    // |G| / d^2 = sum_l omega_l omega_{l'} / |C_l|
    u64 s = 0;
    for (std::size_t l = 0; l < r; ++l)
      s = f.add(s, f.mul(f.mul(omega[l], omega[g->inverse_class(l)]), f.inv(g->class_size(l) % p)));
    if (s == 0) return std::nullopt;
    const u64 d2 = f.mul(order % p, f.inv(s));
    u64 degree = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (d * d % p == d2) degree = d;
    if (degree == 0) return std::nullopt;

    Vector value_mod(r);
    for (std::size_t l = 0; l < r; ++l)
      value_mod[l] = f.mul(f.mul(omega[l], degree), f.inv(g->class_size(l) % p));

    std::vector<Cyclotomic> values(r);
    for (std::size_t l = 0; l < r; ++l) {
      const u64 o = g->element_order(g->class_rep(l));
      const u64 w = f.pow(z, exponent / o);
      const u64 w_inv = f.inv(w);
      const u64 o_inv = f.inv(o % p);
      std::vector<Rational> by_exponent(o, 0);
      u64 total = 0;
      for (u64 j = 0; j < o; ++j) {
        // multiplicity of eigenvalue w^j: (1/o) sum_k chi(g^k) w^{-jk}
        u64 acc = 0;
        const u64 step = f.pow(w_inv, j);
        u64 twiddle = 1;
        for (u64 k = 0; k < o; ++k) {
          acc = f.add(acc, f.mul(value_mod[g->class_power(l, static_cast<long>(k))], twiddle));
          twiddle = f.mul(twiddle, step);
        }
        const u64 mult = f.mul(acc, o_inv);
        if (mult > degree) return std::nullopt;
        total += mult;
        by_exponent[j] = static_cast<unsigned long>(mult);
      }
      if (total != degree) return std::nullopt;
      values[l] = Cyclotomic::from_exponent_sum(by_exponent);
    }
    table.irreducibles.emplace_back(g, std::move(values));
    table.degrees.push_back(static_cast<long long>(degree));
  }

  long long sum_squares = 0;
  for (long long d : table.degrees) sum_squares += d * d;
  if (static_cast<u64>(sum_squares) != order) return std::nullopt;

  // Sort by degree, then by numeric values, descending, class by class.
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;
  std::vector<std::vector<std::complex<double>>> numeric(r);
  for (std::size_t i = 0; i < r; ++i) numeric[i] = table.irreducibles[i].numeric();
  constexpr double kTol = 1e-9;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    for (std::size_t c = 0; c < r; ++c) {
      const auto x = numeric[a][c];
      const auto y = numeric[b][c];
      if (std::abs(x.real() - y.real()) > kTol) return x.real() > y.real();
      if (std::abs(x.imag() - y.imag()) > kTol) return x.imag() > y.imag();
    }
    return false;
  });
  CharacterTable sorted;
  sorted.group = g;
  sorted.prime = table.prime;
  for (std::size_t i : perm) {
    sorted.irreducibles.push_back(table.irreducibles[i]);
    sorted.degrees.push_back(table.degrees[i]);
  }
  return sorted;
}

}  // namespace

CharacterTable character_table(const GroupPtr& group) {
  const u64 order = group->order();
  const u64 exponent = group->exponent();
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  constexpr int kMaxPrimes = 16;
  int tried = 0;
  for (u64 p = exponent + 1; tried < kMaxPrimes; p += exponent) {
    if (static_cast<double>(p) <= bound || !is_prime(p)) continue;
    ++tried;
    if (auto table = try_prime(group, p)) return std::move(*table);
  }
  throw InternalSplitFailure("eigenspace split failed for " + std::to_string(kMaxPrimes) +
                             " admissible primes");
}

}  // namespace wreathcheck
