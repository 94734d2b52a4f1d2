#include "famindex/f2.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "famindex/errors.hpp"

namespace famindex {

Word Ambient::mask() const {
  switch (kind) {
    case SpaceKind::V:
      return interval_bits(1, bound);
    case SpaceKind::Z:
      return interval_bits(0, bound);
    case SpaceKind::VPrime:
      return interval_bits(1, bound - 1);
  }
  return 0;
}

std::string to_string(const Ambient& a) {
  switch (a.kind) {
    case SpaceKind::V:
      return "V";
    case SpaceKind::Z:
      return "Z";
    case SpaceKind::VPrime:
      return "V'" + std::to_string(a.bound);
  }
  return "?";
}

Word eta_bits(int d) { return odd_bits(d); }

Word odd_bits(int d) {
  Word w = 0;
  for (int i = 1; i <= d; i += 2) w |= Word{1} << i;
  return w;
}

Word even_bits(int d) {
  Word w = 0;
  for (int i = 2; i <= d; i += 2) w |= Word{1} << i;
  return w;
}

Word canonical_vprime(Word bits, int d) {
  if ((bits >> d) & 1U) bits ^= eta_bits(d);
  return bits;
}

std::vector<int> bit_indices(Word w) {
  std::vector<int> out;
  while (w != 0) {
    out.push_back(std::countr_zero(w));
    w &= w - 1;
  }
  return out;
}

F2Vector::F2Vector(Word bits, Ambient amb) : bits_(bits), amb_(amb) {
  if (amb.bound < 0 || amb.bound > kMaxBound) {
    throw BadIndex("bound " + std::to_string(amb.bound) + " outside [0," +
                   std::to_string(kMaxBound) + "]");
  }
  if (amb.kind == SpaceKind::VPrime) {
    if (amb.bound % 2 == 0) throw BadIndex("V'_D needs odd D");
    if ((bits & ~interval_bits(1, amb.bound)) != 0) throw BadIndex("support exceeds D");
    bits_ = canonical_vprime(bits, amb.bound);
  } else if ((bits & ~amb.mask()) != 0) {
    throw BadIndex("support outside ambient " + to_string(amb));
  }
}

F2Vector F2Vector::from_support(std::initializer_list<int> indices, Ambient amb) {
  return from_support(std::span<const int>(indices.begin(), indices.size()), amb);
}

F2Vector F2Vector::from_support(std::span<const int> indices, Ambient amb) {
  Word w = 0;
  for (int i : indices) {
    if (i < 0 || i > kMaxBound) throw BadIndex("index " + std::to_string(i));
    w ^= Word{1} << i;
  }
  return F2Vector(w, amb);
}

std::vector<int> F2Vector::support() const { return bit_indices(bits_); }

F2Vector& F2Vector::operator+=(const F2Vector& o) {
  if (!same_space(amb_, o.amb_)) {
    throw AmbientMismatch(to_string(amb_) + " vs " + to_string(o.amb_));
  }
  bits_ ^= o.bits_;
  return *this;
}

namespace {

std::string list_string(Word w) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int i : bit_indices(w)) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const F2Vector& v) { return list_string(v.bits()); }

std::ostream& operator<<(std::ostream& os, const F2Vector& v) { return os << to_string(v); }

F2Subspace F2Subspace::span(std::span<const Word> rows, Ambient amb) {
  F2Subspace s(amb);
  for (Word r : rows) s.insert(r);
  return s;
}

F2Subspace F2Subspace::span(std::initializer_list<Word> rows, Ambient amb) {
  return span(std::span<const Word>(rows.begin(), rows.size()), amb);
}

F2Subspace F2Subspace::span_of(std::span<const F2Vector> rows) {
  F2Subspace s(rows.empty() ? Ambient::v() : rows.front().ambient());
  for (const auto& r : rows) s.insert(r.bits());
  return s;
}

F2Subspace F2Subspace::coordinate(Word mask, Ambient amb) {
  F2Subspace s(amb);
  for (int i : bit_indices(mask)) s.rows_.push_back(Word{1} << i);
  return s;
}

Word F2Subspace::reduce(Word v) const {
  for (Word r : rows_) {
    if ((v >> std::countr_zero(r)) & 1U) v ^= r;
  }
  return v;
}

bool F2Subspace::contains(const F2Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](Word r) { return contains(r); });
}

bool F2Subspace::insert(Word v) {
  v = reduce(v);
  if (v == 0) return false;
  const int pivot = std::countr_zero(v);
  for (Word& r : rows_) {
    if ((r >> pivot) & 1U) r ^= v;
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), v, [](Word a, Word b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  rows_.insert(pos, v);
  return true;
}

std::vector<Word> F2Subspace::elements() const {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << rows_.size());
  const std::size_t n = rows_.size();
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    Word w = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((m >> k) & 1U) w ^= rows_[k];
    }
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

F2Subspace F2Subspace::sum(const F2Subspace& other) const {
  F2Subspace s = *this;
  for (Word r : other.rows_) s.insert(r);
  return s;
}

F2Subspace F2Subspace::intersect(const F2Subspace& other) const {
  // Zassenhaus: rows (a|a) for a in A and (b|0) for b in B, packed as two
  // 64-bit halves; the rows whose left half vanishes span A ∩ B.
  struct Row {
    Word left, right;
  };
  std::vector<Row> rows;
  for (Word a : rows_) rows.push_back({a, a});
  for (Word b : other.rows_) rows.push_back({b, 0});
  std::size_t rank = 0;
  for (int bit = 0; bit < 64 && rank < rows.size(); ++bit) {
    std::size_t p = rank;
    while (p < rows.size() && !((rows[p].left >> bit) & 1U)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q != rank && ((rows[q].left >> bit) & 1U)) {
        rows[q].left ^= rows[rank].left;
        rows[q].right ^= rows[rank].right;
      }
    }
    ++rank;
  }
  F2Subspace s(amb_);
  for (std::size_t q = rank; q < rows.size(); ++q) s.insert(rows[q].right);
  return s;
}

F2Subspace F2Subspace::intersect_coordinate(Word mask) const {
  return intersect(coordinate(mask, amb_));
}

std::string to_string(const F2Subspace& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < s.basis().size(); ++k) {
    if (k) os << ',';
    os << list_string(s.basis()[k]);
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const F2Subspace& s) { return os << to_string(s); }

}  // namespace famindex
