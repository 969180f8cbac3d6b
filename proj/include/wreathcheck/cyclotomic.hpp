#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wreathcheck {

using Rational = mpq_class;

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// An element of Q(zeta_m) written in the power basis 1, x, ..., x^(phi(m)-1)
/// of Q[x]/(Phi_m), at a conductor that is not necessarily minimal.
struct DenseCyclotomic {
  int conductor = 1;
  std::vector<Rational> coeffs;
};

/**
 * Exact element of a cyclotomic field.
 *
 * Values are always canonical: the conductor is the smallest m (never
 * 2 mod 4) with the value in Q(zeta_m), and the coefficients are those of the
 * power basis modulo Phi_m. Equal field elements therefore have identical
 * encodings and equality is plain comparison. Rationals have conductor 1.
 */
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_{Rational(0)} {}
  Cyclotomic(long value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational value) : coeffs_{std::move(value)} {  // NOLINT(google-explicit-constructor)
    coeffs_[0].canonicalize();
  }

  /// zeta_m^k with zeta_m = exp(2 pi i / m).
  static Cyclotomic zeta(long m, long k);
  /// Canonical form of a dense value.
  static Cyclotomic from_dense(const DenseCyclotomic& dense);
  /// Canonical form of sum_k by_exponent[k] * zeta_m^k, where m = by_exponent.size().
  static Cyclotomic from_exponent_sum(std::span<const Rational> by_exponent);

  int conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scale);
  Cyclotomic& operator/=(const Rational& scale);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& q) { return a /= q; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

  /// Complex conjugation, zeta -> zeta^-1.
  Cyclotomic conjugate() const { return galois(-1); }
  /// The field automorphism zeta -> zeta^k, k prime to the conductor.
  Cyclotomic galois(long k) const;

  std::optional<Rational> as_rational() const;
  std::optional<long long> as_nonneg_integer() const;

  /// Numeric embedding with zeta_m -> exp(2 pi i / m).
  std::complex<double> to_complex() const;
  /// GAP-style text, e.g. "-1 - 2*E(3)" or "3/2*E(8)^3".
  std::string to_string() const;

  /// Dense coefficients after embedding into Q(zeta_m); m must be a multiple of conductor().
  DenseCyclotomic embed(int m) const;

 private:
  friend class CyclotomicAccumulator;
  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Re-expresses both values over the lcm of their conductors.
std::pair<DenseCyclotomic, DenseCyclotomic> to_common_conductor(const Cyclotomic& a,
                                                                const Cyclotomic& b);

/**
 * Sums of (products of) cyclotomics in exponent form over a fixed conductor,
 * normalized once in result(). Used by the class-function kernels so that a
 * long sum costs one reduction instead of one per term.
 */
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(int conductor);

  int conductor() const noexcept { return static_cast<int>(by_exponent_.size()); }
  void add(const Cyclotomic& a);
  void add_scaled(const Cyclotomic& a, const Rational& scale);
  /// Adds scale * a * conj(b).
  void add_product_conj(const Cyclotomic& a, const Cyclotomic& b, const Rational& scale);
  void add_product(const Cyclotomic& a, const Cyclotomic& b, const Rational& scale);
  Cyclotomic result() const;

 private:
  std::vector<Rational> by_exponent_;
};

/// Euler phi.
int euler_phi(int m);
/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int m);

}  // namespace wreathcheck
