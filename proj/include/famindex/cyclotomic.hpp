#pragma once

// Exact arithmetic in Q(zeta_60), stored in the power basis 1, z, ..., z^15
// reduced modulo the 60th cyclotomic polynomial.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <string>

namespace famindex {

class Cyc {
 public:
  static constexpr int kOrder = 60;
  static constexpr int kDegree = 16;

  Cyc() = default;
  Cyc(long value) { c_[0] = value; }  // NOLINT(google-explicit-constructor)
  Cyc(const mpq_class& value) { c_[0] = value; }  // NOLINT(google-explicit-constructor)

  /// zeta_n^k; n must divide 60.
  static Cyc root(int n, int k);

  const mpq_class& coeff(int i) const { return c_[i]; }
  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error if not rational.
  const mpq_class& rational() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  Cyc operator-() const;

  /// Complex conjugation, z -> z^-1.
  Cyc conj() const;
  /// Throws std::domain_error on zero.
  Cyc inverse() const;
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  /// Lexicographic on coefficients; a total order used only for sorting.
  friend std::strong_ordering operator<=>(const Cyc& a, const Cyc& b);

 private:
  std::array<mpq_class, kDegree> c_{};
};

/// Integers and fractions print plainly; otherwise a sum of c*z^k with z = zeta_60.
std::string to_string(const Cyc& x);

}  // namespace famindex
