#include "famindex/f2spaces.hpp"

#include <algorithm>
#include <bit>

#include "famindex/errors.hpp"

namespace famindex {

int IntervalBasis::multiplicity(int j) const {
  return static_cast<int>(std::count_if(intervals.begin(), intervals.end(), [j](const Interval& iv) {
    return iv.first <= j && j <= iv.second;
  }));
}

namespace {

// Separation or strict nesting between two distinct intervals.
bool compatible(const Interval& p, const Interval& q) {
  const auto [a, b] = p;
  const auto [c, d] = q;
  return c - b >= 2 || a - d >= 2 || (a < c && d < b) || (c < a && b < d);
}

bool nesting_holds(const std::vector<Interval>& ivs) {
  for (const auto& [a, b] : ivs) {
    for (int c = a + 1; c < b; c += 2) {
      const bool covered = std::any_of(ivs.begin(), ivs.end(), [&](const Interval& q) {
        return a < q.first && q.first <= c && c <= q.second && q.second < b;
      });
      if (!covered) return false;
    }
  }
  return true;
}

// Backtracking over candidate intervals (lexicographic) choosing pairwise
// compatible subsets; `accept` sees each subset of the requested size.
template <class Accept>
void search_systems(const std::vector<Interval>& candidates, std::size_t start, std::size_t want,
                    std::vector<Interval>& chosen, Accept&& accept, bool any_size) {
  if (any_size || chosen.size() == want) {
    if (!accept(chosen)) return;
    if (!any_size) return;
  }
  for (std::size_t i = start; i < candidates.size(); ++i) {
    if (!any_size && candidates.size() - i < want - chosen.size()) return;
    const Interval& iv = candidates[i];
    const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                [&](const Interval& q) { return compatible(q, iv); });
    if (!ok) continue;
    chosen.push_back(iv);
    search_systems(candidates, i + 1, want, chosen, accept, any_size);
    chosen.pop_back();
  }
}

std::vector<Interval> parity_intervals(int d) {
  std::vector<Interval> out;
  for (int a = 1; a <= d; ++a) {
    for (int b = a; b <= d; b += 2) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

bool is_interval_system(const std::vector<Interval>& intervals) {
  for (const auto& [a, b] : intervals) {
    if (a < 1 || a > b || (b - a) % 2 != 0) return false;
  }
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    for (std::size_t k = i + 1; k < intervals.size(); ++k) {
      if (!compatible(intervals[i], intervals[k])) return false;
    }
  }
  return nesting_holds(intervals);
}

F2Subspace span_of(const IntervalBasis& basis) {
  F2Subspace s(Ambient::v());
  for (const auto& [a, b] : basis.intervals) s.insert(interval_bits(a, b));
  return s;
}

int support_bound(const F2Subspace& e) {
  Word all = 0;
  for (Word r : e.basis()) all |= r;
  return all == 0 ? 0 : 63 - std::countl_zero(all);
}

std::vector<IntervalBasis> all_interval_bases_of(const F2Subspace& e, std::size_t limit) {
  const int d = support_bound(e);
  std::vector<Interval> candidates;
  for (const auto& iv : parity_intervals(d)) {
    if (e.contains(interval_bits(iv.first, iv.second))) candidates.push_back(iv);
  }
  std::vector<IntervalBasis> found;
  std::vector<Interval> chosen;
  const auto want = static_cast<std::size_t>(e.dim());
  search_systems(
      candidates, 0, want, chosen,
      [&](const std::vector<Interval>& ivs) {
        // Distinct left endpoints make the rows independent, so `want` of
        // them inside E span E.
        if (nesting_holds(ivs)) found.push_back(IntervalBasis{ivs});
        return found.size() < limit;
      },
      false);
  return found;
}

IntervalBasis interval_basis_of(const F2Subspace& e) {
  if (e.ambient().kind != SpaceKind::V) throw NotIntervalFamily("E must lie in V");
  auto found = all_interval_bases_of(e, 1);
  if (found.empty()) throw NotIntervalFamily("no interval system spans " + to_string(e));
  return std::move(found.front());
}

std::vector<IntervalBasis> interval_systems(int d) {
  std::vector<IntervalBasis> out;
  std::vector<Interval> chosen;
  search_systems(
      parity_intervals(d), 0, 0, chosen,
      [&](const std::vector<Interval>& ivs) {
        if (nesting_holds(ivs)) out.push_back(IntervalBasis{ivs});
        return true;
      },
      true);
  std::sort(out.begin(), out.end());
  return out;
}

F2Vector epsilon(const IntervalBasis& basis) {
  Word w = 0;
  int top = 0;
  for (const auto& iv : basis.intervals) top = std::max(top, iv.second);
  for (int j = 1; j <= top; ++j) {
    const int f = basis.multiplicity(j);
    if ((f * (f + 1) / 2) % 2 != 0) w |= Word{1} << j;
  }
  return F2Vector(w);
}

F2Vector epsilon(const F2Subspace& e) { return epsilon(interval_basis_of(e)); }

std::vector<Interval> gap_decompose(const F2Vector& x) {
  std::vector<Interval> runs;
  Word w = x.bits();
  while (w != 0) {
    const int a = std::countr_zero(w);
    const int len = std::countr_one(w >> a);
    runs.emplace_back(a, a + len - 1);
    w &= ~interval_bits(a, a + len - 1);
  }
  return runs;
}

int u_invariant(const F2Vector& x) {
  int u = 0;
  for (const auto& [a, b] : gap_decompose(x)) {
    if ((a + b) % 2 != 0) u += (a % 2 == 0) ? 1 : -1;
  }
  return u;
}

std::vector<F2Vector> zero_v_set(int d) {
  if (d < 0 || d > 30) throw BadIndex("zero_v_set bound " + std::to_string(d));
  std::vector<F2Vector> out;
  const Ambient amb = Ambient::v(d);
  for (Word m = 0; m < (Word{1} << d); ++m) {
    F2Vector x(m << 1, amb);
    if (u_invariant(x) == 0) out.push_back(x);
  }
  return out;
}

long long zero_v_count(int d) {
  const int n = d + 1;
  const int k = d % 2 == 0 ? d / 2 : (d + 1) / 2;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

F2Vector theta(const F2Vector& x, int d) {
  if (d % 2 == 0) throw BadIndex("theta needs odd D");
  if (u_invariant(x) != 0) throw NotInZeroV(to_string(x));
  if ((x.bits() & ~interval_bits(1, d)) != 0) throw NotInZeroV(to_string(x) + " not in V_D");
  return F2Vector(x.bits() ^ eta_bits(d), x.ambient());
}

F2Vector xi(const F2Vector& x) {
  const Word w = x.bits();
  return F2Vector(w ^ (w >> 1), Ambient::z());
}

int u_tilde(const F2Vector& z) {
  const Word w = z.bits();
  constexpr Word kEven = 0x5555555555555555ULL;
  return std::popcount(w & kEven) - std::popcount(w & ~kEven);
}

int symplectic_bits(Word x, Word y) {
  return (std::popcount(x & (y << 1)) + std::popcount(x & (y >> 1))) & 1;
}

int symplectic(const F2Vector& x, const F2Vector& y) {
  const auto& ax = x.ambient();
  const auto& ay = y.ambient();
  if (!same_space(ax, ay) || ax.kind == SpaceKind::Z) {
    throw AmbientMismatch(to_string(ax) + " vs " + to_string(ay));
  }
  // eta_D lies in the radical of the form on V_D, so coset representatives
  // compute the induced form.
  return symplectic_bits(x.bits(), y.bits());
}

F2Subspace annihilator(const F2Subspace& e, const F2Subspace& within) {
  // Row k of `within` carries its pairing pattern against e's basis; solve
  // for combinations with zero pattern.
  struct Row {
    Word pattern, vec;
  };
  std::vector<Row> rows;
  for (Word w : within.basis()) {
    Word pat = 0;
    for (std::size_t s = 0; s < e.basis().size(); ++s) {
      if (symplectic_bits(w, e.basis()[s])) pat |= Word{1} << s;
    }
    rows.push_back({pat, w});
  }
  std::size_t rank = 0;
  for (int bit = 0; bit < 64 && rank < rows.size(); ++bit) {
    std::size_t p = rank;
    while (p < rows.size() && !((rows[p].pattern >> bit) & 1U)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q != rank && ((rows[q].pattern >> bit) & 1U)) {
        rows[q].pattern ^= rows[rank].pattern;
        rows[q].vec ^= rows[rank].vec;
      }
    }
    ++rank;
  }
  F2Subspace out(within.ambient());
  for (std::size_t q = rank; q < rows.size(); ++q) out.insert(rows[q].vec);
  return out;
}

}  // namespace famindex
