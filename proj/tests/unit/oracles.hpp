#pragma once

// Test-only brute-force references. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::uint64_t;
using Interval = std::pair<int, int>;

inline Word interval_word(int a, int b) {
  Word w = 0;
  for (int i = a; i <= b; ++i) w |= Word{1} << i;
  return w;
}

/// All elements of the span of `rows`, sorted; a canonical form for subspaces.
inline std::vector<Word> span_elements(const std::vector<Word>& rows) {
  std::set<Word> s{0};
  for (Word r : rows) {
    std::set<Word> next = s;
    for (Word x : s) next.insert(x ^ r);
    s = std::move(next);
  }
  return {s.begin(), s.end()};
}

/// Conditions (i)-(iii) read literally.
inline bool literal_interval_conditions(const std::vector<Interval>& ivs) {
  for (const auto& [a, b] : ivs) {
    if ((a - b) % 2 != 0) return false;
  }
  for (const auto& [a, b] : ivs) {
    for (int c = a + 1; c < b; ++c) {
      if ((c - a) % 2 != 1) continue;
      bool found = false;
      for (const auto& [a2, b2] : ivs) {
        if (a < a2 && a2 <= c && c <= b2 && b2 < b) found = true;
      }
      if (!found) return false;
    }
  }
  for (std::size_t k = 0; k < ivs.size(); ++k) {
    for (std::size_t l = 0; l < ivs.size(); ++l) {
      if (k == l) continue;
      const auto [a, b] = ivs[k];
      const auto [c, d] = ivs[l];
      const bool ok = (c - b >= 2) || (a - d >= 2) || (a < c && c <= d && d < b) ||
                      (c < a && a <= b && b < d);
      if (!ok) return false;
    }
  }
  return true;
}

/// Every subset of intervals with endpoints <= d satisfying (i)-(iii), as
/// (interval list, span elements). Exponential; d <= 8.
inline std::vector<std::pair<std::vector<Interval>, std::vector<Word>>> brute_interval_systems(int d) {
  std::vector<Interval> all;
  for (int a = 1; a <= d; ++a)
    for (int b = a; b <= d; ++b)
      if ((b - a) % 2 == 0) all.emplace_back(a, b);
  std::vector<std::pair<std::vector<Interval>, std::vector<Word>>> out;
  const std::size_t n = all.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<Interval> pick;
    for (std::size_t k = 0; k < n; ++k)
      if ((m >> k) & 1U) pick.push_back(all[k]);
    if (!literal_interval_conditions(pick)) continue;
    std::vector<Word> rows;
    for (const auto& [a, b] : pick) rows.push_back(interval_word(a, b));
    auto elems = span_elements(rows);
    if (elems.size() != (std::size_t{1} << pick.size())) continue;  // dependent rows
    out.emplace_back(pick, std::move(elems));
  }
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// u computed from the definition by scanning for maximal runs.
inline int u_by_runs(Word x, int d) {
  int u = 0;
  int i = 1;
  while (i <= d) {
    if (!((x >> i) & 1U)) {
      ++i;
      continue;
    }
    int b = i;
    while (b + 1 <= d && ((x >> (b + 1)) & 1U)) ++b;
    if ((i + b) % 2 == 1) u += (i % 2 == 0) ? 1 : -1;
    i = b + 1;
  }
  return u;
}

/// The symplectic form by its defining values.
inline int form_by_definition(Word x, Word y, int d) {
  int s = 0;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      if (((x >> i) & 1U) && ((y >> j) & 1U) && (i - j == 1 || j - i == 1)) s ^= 1;
  return s;
}

}  // namespace oracle
