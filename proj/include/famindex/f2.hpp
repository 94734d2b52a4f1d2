#pragma once

// Bit-packed vectors and subspaces over F2.
//
// Index i of a vector is bit i of a 64-bit word. Spaces with basis e_1, e_2, ...
// (V) leave bit 0 unused; the space Z with basis g_0, g_1, ... uses it. The
// quotient V'_D = V_D / F2 eta_D stores the coset representative that omits e_D.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace famindex {

inline constexpr int kMaxBound = 63;

using Word = std::uint64_t;

enum class SpaceKind : std::uint8_t { V, Z, VPrime };

struct Ambient {
  SpaceKind kind = SpaceKind::V;
  int bound = kMaxBound;  // largest admissible index; D for VPrime(D)

  static constexpr Ambient v(int bound = kMaxBound) { return {SpaceKind::V, bound}; }
  static constexpr Ambient z(int bound = kMaxBound) { return {SpaceKind::Z, bound}; }
  static constexpr Ambient vprime(int d) { return {SpaceKind::VPrime, d}; }

  /// Bits that may be set in a stored vector of this ambient.
  Word mask() const;

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Same vector space: V and Z ignore the bound, V'_D does not.
constexpr bool same_space(const Ambient& a, const Ambient& b) {
  return a.kind == b.kind && (a.kind != SpaceKind::VPrime || a.bound == b.bound);
}

std::string to_string(const Ambient& a);

/// e_1 + e_3 + ... + e_d for odd d.
Word eta_bits(int d);

/// Bits of e_a + ... + e_b.
constexpr Word interval_bits(int a, int b) {
  if (a > b) return 0;
  const Word hi = b >= 63 ? ~Word{0} : ((Word{1} << (b + 1)) - 1);
  const Word lo = (Word{1} << a) - 1;
  return hi & ~lo;
}

/// Odd-index bits with index <= d.
Word odd_bits(int d);
/// Even-index bits with 2 <= index <= d.
Word even_bits(int d);

class F2Vector {
 public:
  F2Vector() = default;
  /// Throws BadIndex if bits fall outside the ambient; VPrime inputs are canonicalised.
  explicit F2Vector(Word bits, Ambient amb = Ambient::v());

  static F2Vector from_support(std::initializer_list<int> indices, Ambient amb = Ambient::v());
  static F2Vector from_support(std::span<const int> indices, Ambient amb = Ambient::v());

  Word bits() const { return bits_; }
  const Ambient& ambient() const { return amb_; }
  bool is_zero() const { return bits_ == 0; }
  bool test(int i) const { return (bits_ >> i) & 1U; }
  int weight() const { return std::popcount(bits_); }
  std::vector<int> support() const;

  F2Vector& operator+=(const F2Vector& o);
  friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }

  friend bool operator==(const F2Vector& a, const F2Vector& b) {
    return a.bits_ == b.bits_ && same_space(a.amb_, b.amb_);
  }
  friend std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  Word bits_ = 0;
  Ambient amb_{};
};

/// Canonical representative of the coset of `bits` in V'_d.
Word canonical_vprime(Word bits, int d);

/// Ascending index list, e.g. "[1,2,3]".
std::string to_string(const F2Vector& v);
std::ostream& operator<<(std::ostream& os, const F2Vector& v);

/// Subspace with a reduced echelon basis: row pivots are the lowest set bits,
/// strictly increasing, and no pivot bit occurs in another row. Equal
/// subspaces compare equal structurally.
class F2Subspace {
 public:
  F2Subspace() = default;
  explicit F2Subspace(Ambient amb) : amb_(amb) {}

  static F2Subspace span(std::span<const Word> rows, Ambient amb = Ambient::v());
  static F2Subspace span(std::initializer_list<Word> rows, Ambient amb = Ambient::v());
  static F2Subspace span_of(std::span<const F2Vector> rows);
  /// Coordinate subspace spanned by the e_i with bit i set in `mask`.
  static F2Subspace coordinate(Word mask, Ambient amb = Ambient::v());

  const Ambient& ambient() const { return amb_; }
  const std::vector<Word>& basis() const { return rows_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }

  /// Reduction of `v` modulo the subspace; zero iff v lies in it. Linear in v.
  Word reduce(Word v) const;
  bool contains(Word v) const { return reduce(v) == 0; }
  bool contains(const F2Vector& v) const { return contains(v.bits()); }
  bool contains(const F2Subspace& other) const;

  /// Adds a vector; returns false if it was already in the span.
  bool insert(Word v);

  /// All 2^dim elements in increasing order of their coordinate words.
  std::vector<Word> elements() const;

  F2Subspace sum(const F2Subspace& other) const;
  F2Subspace intersect(const F2Subspace& other) const;
  F2Subspace intersect_coordinate(Word mask) const;

  friend bool operator==(const F2Subspace& a, const F2Subspace& b) {
    return a.rows_ == b.rows_;
  }
  friend auto operator<=>(const F2Subspace& a, const F2Subspace& b) {
    if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  Ambient amb_{};
  std::vector<Word> rows_;
};

/// Subspaces as lists of index lists, e.g. "[[1,2,3],[2]]".
std::string to_string(const F2Subspace& s);
std::ostream& operator<<(std::ostream& os, const F2Subspace& s);

/// Ascending index list of a word.
std::vector<int> bit_indices(Word w);

}  // namespace famindex
