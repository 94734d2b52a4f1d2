#include <doctest.h>

#include <map>
#include <set>

#include "famindex/errors.hpp"
#include "famindex/f2spaces.hpp"
#include "famindex/inductive.hpp"
#include "oracles.hpp"

using namespace famindex;

namespace {

constexpr Word e(int i) { return Word{1} << i; }

F2Vector vec(std::initializer_list<int> s) { return F2Vector::from_support(s); }

}  // namespace

TEST_CASE("vectors canonicalise in the quotient space") {
  const auto amb = Ambient::vprime(3);
  F2Vector a(e(3), amb);
  CHECK(a.bits() == e(1));
  F2Vector b(e(1) | e(3), amb);
  CHECK(b.is_zero());
  CHECK_THROWS_AS(F2Vector(e(4), amb), BadIndex);
  CHECK_THROWS_AS(F2Vector(e(0), Ambient::v()), BadIndex);
  CHECK_NOTHROW(F2Vector(e(0), Ambient::z()));
  CHECK_THROWS_AS(F2Vector(e(1)) + F2Vector(e(1), Ambient::z()), AmbientMismatch);
  CHECK(to_string(vec({1, 2, 3})) == "[1,2,3]");
}

TEST_CASE("subspaces have structural equality") {
  const auto s1 = F2Subspace::span({e(1) | e(2) | e(3), e(2)});
  const auto s2 = F2Subspace::span({e(1) | e(3), e(2) | e(1) | e(3)});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(to_string(s1) == "[[1,3],[2]]");
  CHECK(s1.elements().size() == 4);
  const auto s3 = F2Subspace::span({e(2), e(3)});
  CHECK(s1.intersect(s3) == F2Subspace::span({e(2)}));
  CHECK(s1.sum(s3).dim() == 3);
  CHECK(s1.intersect_coordinate(e(1) | e(3)) == F2Subspace::span({e(1) | e(3)}));
}

TEST_CASE("interval_basis_of examples") {
  CHECK(interval_basis_of(F2Subspace()).intervals.empty());
  const auto b = interval_basis_of(F2Subspace::span({e(1) | e(2) | e(3), e(2)}));
  CHECK(b.intervals == std::vector<Interval>{{1, 3}, {2, 2}});
  CHECK_THROWS_AS(interval_basis_of(F2Subspace::span({e(1) | e(2)})), NotIntervalFamily);
  // (ii) fails: [1,3] alone needs an inner interval through 2.
  CHECK_THROWS_AS(interval_basis_of(F2Subspace::span({e(1) | e(2) | e(3)})), NotIntervalFamily);
  // (iii) fails: [1,1] and [2,2] are adjacent.
  CHECK_THROWS_AS(interval_basis_of(F2Subspace::span({e(1), e(2)})), NotIntervalFamily);
}

TEST_CASE("interval systems agree with the literal brute force up to 8") {
  for (int d = 0; d <= 8; ++d) {
    CAPTURE(d);
    const auto brute = oracle::brute_interval_systems(d);
    std::map<std::vector<Word>, std::vector<Interval>> by_span;
    for (const auto& [ivs, elems] : brute) {
      auto sorted = ivs;
      std::sort(sorted.begin(), sorted.end());
      auto [it, inserted] = by_span.emplace(elems, sorted);
      CHECK_MESSAGE(inserted, "two interval systems share a span");
    }
    const auto systems = interval_systems(d);
    CHECK(systems.size() == brute.size());
    for (const auto& sys : systems) {
      CHECK(is_interval_system(sys.intervals));
      const auto sp = span_of(sys);
      const auto it = by_span.find(sp.elements());
      REQUIRE(it != by_span.end());
      CHECK(it->second == sys.intervals);
      CHECK(interval_basis_of(sp) == sys);
      CHECK(all_interval_bases_of(sp).size() == 1);
    }
  }
}

TEST_CASE("every subspace of V_4 is classified correctly") {
  // All subspaces of V_4 via spans of subsets of its 15 nonzero vectors.
  std::set<std::vector<Word>> family;
  for (const auto& sys : interval_systems(4)) family.insert(span_of(sys).elements());
  std::set<std::vector<Word>> seen;
  for (Word m = 0; m < (Word{1} << 15); ++m) {
    std::vector<Word> rows;
    for (int k = 0; k < 15; ++k)
      if ((m >> k) & 1U) rows.push_back(static_cast<Word>(k + 1) << 1);
    auto sp = F2Subspace::span(rows);
    auto elems = sp.elements();
    if (!seen.insert(elems).second) continue;
    bool member = true;
    try {
      interval_basis_of(sp);
    } catch (const NotIntervalFamily&) {
      member = false;
    }
    CHECK(member == (family.count(elems) == 1));
  }
  CHECK(seen.size() == 67);  // subspaces of F2^4
}

TEST_CASE("epsilon examples and properties") {
  CHECK(epsilon(F2Subspace()).is_zero());
  CHECK(epsilon(F2Subspace::span({e(1) | e(2) | e(3), e(2)})) == vec({1, 2, 3}));
  CHECK(epsilon(F2Subspace::span({e(2)})) == vec({2}));
  for (int d = 0; d <= 12; ++d) {
    CAPTURE(d);
    std::set<Word> images;
    for (const auto& sys : interval_systems(d)) {
      const auto sp = span_of(sys);
      const auto eps = epsilon(sys);
      CHECK(sp.contains(eps));
      CHECK(u_invariant(eps) == 0);
      images.insert(eps.bits());
    }
    std::set<Word> zero;
    for (const auto& x : zero_v_set(d)) zero.insert(x.bits());
    CHECK(images == zero);
    CHECK(images.size() == interval_systems(d).size());
  }
}

TEST_CASE("u and gap decomposition") {
  CHECK(u_invariant(F2Vector()) == 0);
  CHECK(u_invariant(vec({1, 2})) == -1);
  CHECK(u_invariant(vec({1})) == 0);
  CHECK(gap_decompose(F2Vector()).empty());
  CHECK(gap_decompose(vec({1, 2, 4})) == std::vector<Interval>{{1, 2}, {4, 4}});
  CHECK(gap_decompose(vec({1, 3})) == std::vector<Interval>{{1, 1}, {3, 3}});
  for (Word m = 0; m < (Word{1} << 12); ++m) {
    const F2Vector x(m << 1);
    Word resum = 0;
    int prev_end = -10;
    for (const auto& [a, b] : gap_decompose(x)) {
      CHECK(a - prev_end >= 2);
      prev_end = b;
      resum ^= interval_bits(a, b);
    }
    CHECK(resum == x.bits());
    CHECK(u_invariant(x) == oracle::u_by_runs(x.bits(), 12));
  }
}

TEST_CASE("zero_v_set sizes") {
  CHECK(zero_v_set(0) == std::vector<F2Vector>{F2Vector()});
  const auto z2 = zero_v_set(2);
  REQUIRE(z2.size() == 3);
  CHECK(z2[1] == vec({1}));
  CHECK(z2[2] == vec({2}));
  CHECK(zero_v_set(5).size() == 20);
  for (int d = 0; d <= 14; ++d) {
    CAPTURE(d);
    const long long expected = d % 2 == 0 ? oracle::binomial(d + 1, d / 2) : oracle::binomial(d + 1, (d + 1) / 2);
    CHECK(static_cast<long long>(zero_v_set(d).size()) == expected);
    CHECK(zero_v_count(d) == expected);
  }
}

TEST_CASE("theta is a fixed-point-free involution") {
  CHECK(theta(F2Vector(), 1) == vec({1}));
  CHECK(theta(vec({1}), 1).is_zero());
  CHECK(theta(vec({2}), 3) == vec({1, 2, 3}));
  CHECK_THROWS_AS(theta(vec({1, 2}), 3), NotInZeroV);
  for (int d = 1; d <= 11; d += 2) {
    for (const auto& x : zero_v_set(d)) {
      const auto t = theta(x, d);
      CHECK(t != x);
      CHECK(u_invariant(t) == 0);
      CHECK(theta(t, d) == x);
    }
  }
}

TEST_CASE("xi and u_tilde") {
  CHECK(xi(vec({1})) == F2Vector(e(0) | e(1), Ambient::z()));
  CHECK(xi(F2Vector()).is_zero());
  CHECK(xi(vec({1, 2})) == F2Vector(e(0) | e(2), Ambient::z()));
  CHECK(u_tilde(F2Vector(0, Ambient::z())) == 0);
  CHECK(u_tilde(F2Vector(e(0) | e(2), Ambient::z())) == 2);
  CHECK(u_tilde(F2Vector(e(0) | e(1), Ambient::z())) == 0);
  // With xi linear the two invariants differ by a factor of -2 and share
  // their zero set.
  for (Word m = 0; m < (Word{1} << 12); ++m) {
    const F2Vector x(m << 1);
    const auto z = xi(x);
    CHECK(std::popcount(z.bits()) % 2 == 0);
    CHECK(u_tilde(z) == -2 * u_invariant(x));
  }
}

TEST_CASE("symplectic form") {
  CHECK(symplectic(vec({1}), vec({2})) == 1);
  CHECK(symplectic(vec({1}), vec({3})) == 0);
  CHECK_THROWS_AS(symplectic(vec({1}), F2Vector(e(1), Ambient::z())), AmbientMismatch);
  for (Word x = 0; x < 64; ++x) {
    for (Word y = 0; y < 64; ++y) {
      CHECK(symplectic_bits(x << 1, y << 1) == oracle::form_by_definition(x << 1, y << 1, 6));
    }
    CHECK(symplectic_bits(x << 1, x << 1) == 0);
  }
  // eta_D is in the radical on V_D, so the induced form on V'_D is well defined.
  for (int d = 1; d <= 9; d += 2)
    for (Word y = 0; y < (Word{1} << d); ++y) CHECK(symplectic_bits(eta_bits(d), y << 1) == 0);
}

TEST_CASE("family members are isotropic") {
  for (int d = 0; d <= 12; ++d) {
    for (const auto& sys : interval_systems(d)) {
      const auto sp = span_of(sys);
      const auto& rows = sp.basis();
      for (Word a : rows)
        for (Word b : rows) CHECK(symplectic_bits(a, b) == 0);
    }
  }
}

TEST_CASE("annihilator") {
  const auto v2 = F2Subspace::coordinate(e(1) | e(2));
  CHECK(annihilator(F2Subspace::span({e(2)}), F2Subspace::coordinate(e(1))).is_zero());
  CHECK(annihilator(F2Subspace::span({e(1)}), v2) == F2Subspace::span({e(1)}));
  CHECK(annihilator(F2Subspace(), v2) == v2);
}
