#pragma once

// Interval subspaces of V and the scalar invariants attached to them.

#include <utility>
#include <vector>

#include "famindex/f2.hpp"

namespace famindex {

using Interval = std::pair<int, int>;

/// Interval system {[a_k, b_k]} of a member of the interval family, sorted
/// lexicographically.
struct IntervalBasis {
  std::vector<Interval> intervals;

  int rank() const { return static_cast<int>(intervals.size()); }
  /// Number of intervals containing j.
  int multiplicity(int j) const;
  friend bool operator==(const IntervalBasis&, const IntervalBasis&) = default;
  friend auto operator<=>(const IntervalBasis&, const IntervalBasis&) = default;
};

/// Checks parity, nesting and separation; the input need not be sorted.
bool is_interval_system(const std::vector<Interval>& intervals);

F2Subspace span_of(const IntervalBasis& basis);

/// The interval system spanning E; throws NotIntervalFamily when E has none.
IntervalBasis interval_basis_of(const F2Subspace& e);

/// Every interval system spanning E (at most `limit` of them).
std::vector<IntervalBasis> all_interval_bases_of(const F2Subspace& e, std::size_t limit = 16);

/// All interval systems with endpoints <= d, in lexicographic order.
std::vector<IntervalBasis> interval_systems(int d);

F2Vector epsilon(const F2Subspace& e);
F2Vector epsilon(const IntervalBasis& basis);

/// Maximal runs of consecutive indices; successive runs are separated by a gap >= 2.
std::vector<Interval> gap_decompose(const F2Vector& x);

int u_invariant(const F2Vector& x);

/// Elements x of V_d with u(x) = 0, increasing.
std::vector<F2Vector> zero_v_set(int d);

/// |u^{-1}(0) ∩ V_d| from the binomial formulas.
long long zero_v_count(int d);

/// x + eta_d for odd d; throws NotInZeroV if u(x) != 0.
F2Vector theta(const F2Vector& x, int d);

/// V -> Z, e_i -> g_{i-1} + g_i.
F2Vector xi(const F2Vector& x);

/// Even-index count minus odd-index count of the support.
int u_tilde(const F2Vector& z);

/// The form with (e_i, e_j) = 1 iff |i - j| = 1, on packed words.
int symplectic_bits(Word x, Word y);

/// The same form on V, or the induced form on V'_D; throws AmbientMismatch.
int symplectic(const F2Vector& x, const F2Vector& y);

/// {x in within : (x, s) = 0 for all s in e}.
F2Subspace annihilator(const F2Subspace& e, const F2Subspace& within);

/// Largest index occurring in the subspace (0 for the zero subspace).
int support_bound(const F2Subspace& e);

}  // namespace famindex
