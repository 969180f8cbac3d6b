#include "wreathcheck/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace wreathcheck {

namespace {

/// Per-conductor data: Phi_m and the reductions of x^k mod Phi_m for k < m.
struct ConductorData {
  int conductor = 1;
  int phi = 1;
  std::vector<long long> poly;
  std::vector<std::vector<long>> power_mod;
};

/// Solves "is this dense value of Q(zeta_big) already in Q(zeta_small)?".
struct SubfieldSolver {
  int small = 1;
  int big = 1;
  std::vector<std::vector<long>> embedding;  // embedding[j] = image of x^j, length phi(big)
  std::vector<int> pivot_rows;
  std::vector<std::vector<Rational>> pivot_inverse;
};

template <typename Key, typename Value>
class WriteOnceCache {
 public:
  template <typename Make>
  const Value& get(const Key& key, Make make) {
    {
      std::shared_lock lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return *it->second;
    }
    auto value = std::make_unique<Value>(make());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<Value>> entries_;
};

WriteOnceCache<int, std::vector<long long>>& polynomial_cache() {
  static WriteOnceCache<int, std::vector<long long>> cache;
  return cache;
}

std::vector<long long> compute_cyclotomic_polynomial(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<long long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long long> q(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      long long c = num[i];  // den is monic
      q[i - dd] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      if (i == dd) break;
    }
    num = std::move(q);
  }
  return num;
}

const ConductorData& conductor_data(int m) {
  static WriteOnceCache<int, ConductorData> cache;
  return cache.get(m, [m] {
    ConductorData data;
    data.conductor = m;
    data.poly = cyclotomic_polynomial(m);
    data.phi = static_cast<int>(data.poly.size()) - 1;
    const auto phi = static_cast<std::size_t>(data.phi);
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    data.power_mod.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      data.power_mod.push_back(cur);
      // cur *= x, then reduce the x^phi term with the monic Phi_m.
      long top = cur[phi - 1];
      for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (phi == 1) cur[0] = 0;
      if (top != 0)
        for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * data.poly[j];
    }
    return data;
  });
}

const SubfieldSolver& subfield_solver(int small, int big) {
  static WriteOnceCache<std::pair<int, int>, SubfieldSolver> cache;
  return cache.get({small, big}, [small, big] {
    SubfieldSolver s;
    s.small = small;
    s.big = big;
    const ConductorData& bd = conductor_data(big);
    const int phi_small = euler_phi(small);
    const int stride = big / small;
    for (int j = 0; j < phi_small; ++j)
      s.embedding.push_back(bd.power_mod[static_cast<std::size_t>((j * stride) % big)]);

    // Greedily pick rows of the phi(big) x phi(small) embedding matrix until
    // they span, then invert that square block.
    std::vector<std::vector<Rational>> basis;  // reduced copies of picked rows
    std::vector<int> pivot_col;
    for (int r = 0; r < bd.phi && static_cast<int>(s.pivot_rows.size()) < phi_small; ++r) {
      std::vector<Rational> row(static_cast<std::size_t>(phi_small));
      for (int j = 0; j < phi_small; ++j) row[j] = s.embedding[j][r];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Rational f = row[pivot_col[b]];
        if (f != 0)
          for (int j = 0; j < phi_small; ++j) row[j] -= f * basis[b][j];
      }
      int pc = -1;
      for (int j = 0; j < phi_small; ++j)
        if (row[j] != 0) {
          pc = j;
          break;
        }
      if (pc < 0) continue;
      const Rational lead = row[pc];
      for (auto& v : row) v /= lead;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Rational f = basis[b][pc];
        if (f != 0)
          for (int j = 0; j < phi_small; ++j) basis[b][j] -= f * row[j];
      }
      basis.push_back(std::move(row));
      pivot_col.push_back(pc);
      s.pivot_rows.push_back(r);
    }
    if (static_cast<int>(s.pivot_rows.size()) != phi_small)
      throw std::logic_error("cyclotomic subfield embedding is not injective");

    // Gauss-Jordan on [R | I].
    const auto n = static_cast<std::size_t>(phi_small);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = s.embedding[j][s.pivot_rows[i]];
      a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (a[piv][col] == 0) ++piv;
      std::swap(a[piv], a[col]);
      const Rational lead = a[col][col];
      for (auto& v : a[col]) v /= lead;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a[i][col] == 0) continue;
        const Rational f = a[i][col];
        for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
      }
    }
    s.pivot_inverse.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.pivot_inverse[i][j] = a[i][n + j];
    return s;
  });
}

/// Coordinates in Q(zeta_small) if the dense value lies there.
std::optional<std::vector<Rational>> try_descend(const SubfieldSolver& s,
                                                 const std::vector<Rational>& coeffs) {
  const std::size_t n = s.pivot_rows.size();
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (s.pivot_inverse[i][j] != 0) acc += s.pivot_inverse[i][j] * coeffs[s.pivot_rows[j]];
    c[i] = acc;
  }
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (s.embedding[j][r] != 0 && c[j] != 0) acc += c[j] * s.embedding[j][r];
    if (acc != coeffs[r]) return std::nullopt;
  }
  return c;
}

std::vector<Rational> reduce_exponents(const ConductorData& data,
                                       std::span<const Rational> by_exponent) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(data.phi), 0);
  for (std::size_t k = 0; k < by_exponent.size(); ++k) {
    if (sgn(by_exponent[k]) == 0) continue;
    const auto& red = data.power_mod[k];
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (red[j] != 0) coeffs[j] += by_exponent[k] * red[j];
  }
  return coeffs;
}

}  // namespace

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic polynomial needs m >= 1");
  if (m == 1) {
    static const std::vector<long long> phi1{-1, 1};
    return phi1;
  }
  return polynomial_cache().get(m, [m] { return compute_cyclotomic_polynomial(m); });
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Cyclotomic Cyclotomic::from_dense(const DenseCyclotomic& dense) {
  const int big = dense.conductor;
  Cyclotomic out;
  bool rational = true;
  for (std::size_t j = 1; j < dense.coeffs.size(); ++j)
    if (sgn(dense.coeffs[j]) != 0) {
      rational = false;
      break;
    }
  if (big == 1 || rational) {
    out.coeffs_[0] = dense.coeffs.empty() ? Rational(0) : dense.coeffs[0];
    out.coeffs_[0].canonicalize();
    return out;
  }
  for (int m = 3; m < big; ++m) {
    if (big % m != 0 || m % 4 == 2) continue;
    if (auto c = try_descend(subfield_solver(m, big), dense.coeffs)) {
      out.conductor_ = m;
      out.coeffs_ = std::move(*c);
      return out;
    }
  }
  if (big % 4 == 2) throw std::logic_error("conductor 2 mod 4 failed to descend");
  out.conductor_ = big;
  out.coeffs_ = dense.coeffs;
  return out;
}

Cyclotomic Cyclotomic::from_exponent_sum(std::span<const Rational> by_exponent) {
  const int m = static_cast<int>(by_exponent.size());
  if (m < 1) throw std::invalid_argument("exponent sum needs a positive conductor");
  const ConductorData& data = conductor_data(m);
  return from_dense(DenseCyclotomic{m, reduce_exponents(data, by_exponent)});
}

Cyclotomic Cyclotomic::zeta(long m, long k) {
  if (m < 1) throw std::invalid_argument("zeta needs m >= 1");
  std::vector<Rational> by_exponent(static_cast<std::size_t>(m), 0);
  long e = k % m;
  if (e < 0) e += m;
  by_exponent[static_cast<std::size_t>(e)] = 1;
  return from_exponent_sum(by_exponent);
}

DenseCyclotomic Cyclotomic::embed(int m) const {
  if (m % conductor_ != 0) throw std::invalid_argument("embedding conductor is not a multiple");
  std::vector<Rational> by_exponent(static_cast<std::size_t>(m), 0);
  const int stride = m / conductor_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) by_exponent[j * stride] = coeffs_[j];
  return DenseCyclotomic{m, reduce_exponents(conductor_data(m), by_exponent)};
}

std::pair<DenseCyclotomic, DenseCyclotomic> to_common_conductor(const Cyclotomic& a,
                                                                const Cyclotomic& b) {
  const int m = std::lcm(a.conductor(), b.conductor());
  return {a.embed(m), b.embed(m)};
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (conductor_ == other.conductor_) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    return *this = from_dense(DenseCyclotomic{conductor_, std::move(coeffs_)});
  }
  CyclotomicAccumulator acc(std::lcm(conductor_, other.conductor_));
  acc.add(*this);
  acc.add(other);
  return *this = acc.result();
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor_ == 1) return *this *= other.coeffs_[0];
  CyclotomicAccumulator acc(std::lcm(conductor_, other.conductor_));
  acc.add_product(*this, other, Rational(1));
  return *this = acc.result();
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scale) {
  if (sgn(scale) == 0) return *this = Cyclotomic();
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& scale) {
  if (sgn(scale) == 0) throw std::domain_error("division by zero");
  for (auto& c : coeffs_) c /= scale;
  return *this;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (conductor_ == 1) return *this;
  const long m = conductor_;
  long kk = k % m;
  if (kk < 0) kk += m;
  if (std::gcd(kk, m) != 1) throw std::invalid_argument("galois exponent not prime to conductor");
  std::vector<Rational> by_exponent(static_cast<std::size_t>(m), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    by_exponent[(static_cast<long>(j) * kk) % m] += coeffs_[j];
  return from_exponent_sum(by_exponent);
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

std::optional<long long> Cyclotomic::as_nonneg_integer() const {
  if (conductor_ != 1) return std::nullopt;
  const Rational& q = coeffs_[0];
  if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / conductor_;
    z += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    Rational c = coeffs_[j];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    std::string term;
    if (j == 0) {
      term = c.get_str();
    } else {
      if (c != 1) term = c.get_str() + "*";
      term += "E(" + std::to_string(conductor_) + ")";
      if (j > 1) term += "^" + std::to_string(j);
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

CyclotomicAccumulator::CyclotomicAccumulator(int conductor)
    : by_exponent_(static_cast<std::size_t>(conductor), 0) {
  if (conductor < 1) throw std::invalid_argument("accumulator needs a positive conductor");
}

void CyclotomicAccumulator::add(const Cyclotomic& a) { add_scaled(a, Rational(1)); }

void CyclotomicAccumulator::add_scaled(const Cyclotomic& a, const Rational& scale) {
  const std::size_t m = by_exponent_.size();
  if (m % static_cast<std::size_t>(a.conductor_) != 0)
    throw std::invalid_argument("accumulator conductor is not a multiple");
  const std::size_t stride = m / static_cast<std::size_t>(a.conductor_);
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
    if (sgn(a.coeffs_[j]) != 0) by_exponent_[j * stride] += scale * a.coeffs_[j];
}

void CyclotomicAccumulator::add_product(const Cyclotomic& a, const Cyclotomic& b,
                                        const Rational& scale) {
  const std::size_t m = by_exponent_.size();
  if (m % static_cast<std::size_t>(a.conductor_) != 0 ||
      m % static_cast<std::size_t>(b.conductor_) != 0)
    throw std::invalid_argument("accumulator conductor is not a multiple");
  const std::size_t sa = m / static_cast<std::size_t>(a.conductor_);
  const std::size_t sb = m / static_cast<std::size_t>(b.conductor_);
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    t = scale * a.coeffs_[i];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (sgn(b.coeffs_[j]) != 0) by_exponent_[(i * sa + j * sb) % m] += t * b.coeffs_[j];
  }
}

void CyclotomicAccumulator::add_product_conj(const Cyclotomic& a, const Cyclotomic& b,
                                             const Rational& scale) {
  const std::size_t m = by_exponent_.size();
  if (m % static_cast<std::size_t>(a.conductor_) != 0 ||
      m % static_cast<std::size_t>(b.conductor_) != 0)
    throw std::invalid_argument("accumulator conductor is not a multiple");
  const std::size_t sa = m / static_cast<std::size_t>(a.conductor_);
  const std::size_t sb = m / static_cast<std::size_t>(b.conductor_);
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    t = scale * a.coeffs_[i];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (sgn(b.coeffs_[j]) != 0) by_exponent_[(i * sa + m - (j * sb) % m) % m] += t * b.coeffs_[j];
  }
}

Cyclotomic CyclotomicAccumulator::result() const {
  return Cyclotomic::from_exponent_sum(by_exponent_);
}

}  // namespace wreathcheck
