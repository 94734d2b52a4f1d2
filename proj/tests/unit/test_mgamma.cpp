#include <doctest.h>

#include <set>

#include "famindex/errors.hpp"
#include "famindex/f2spaces.hpp"
#include "famindex/mgamma.hpp"

using namespace famindex;

namespace {

constexpr Word e(int i) { return Word{1} << i; }

// Brute force: f on every commuting pair, then the inner product
// (1/|G|) Σ f(y,g) conj b(y,g) against each basis function b found by search.
MVector brute_rho(const MSpace& m, const Subset& small, const Subset& large) {
  const FiniteGroup& g = m.group();
  const int n = g.order();
  const int nl = subset_size(large);
  auto f = [&](int y, int z) {
    long count = 0;
    for (int h = 0; h < n; ++h) count += small[g.conj(h, y)] && large[g.conj(h, z)];
    mpq_class q(count, nl);
    q.canonicalize();
    return q;
  };
  auto basis = [&](const MPair& p, int y, int z) {
    for (int k = 0; k < n; ++k) {
      if (g.conj(k, y) == m.rep(p.cls)) return m.sigma_value(p.cls, p.sigma, g.conj(k, z));
    }
    return Cyc();
  };
  MVector out;
  for (int idx = 0; idx < m.size(); ++idx) {
    Cyc acc;
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul(y, z) == g.mul(z, y)) acc += Cyc(f(y, z)) * basis(m.pairs()[idx], y, z).conj();
    acc *= Cyc(mpq_class(1, n));
    if (!acc.is_zero()) out.emplace(idx, acc);
  }
  return out;
}

std::set<Word> support_words(const AObject& g, const MVector& v) {
  std::set<Word> out;
  for (const auto& [i, c] : v) {
    CHECK(c == Cyc(1L));
    out.insert(m_word(g, m_space(g).pairs()[i]));
  }
  return out;
}

std::vector<AObject> symmetric_objects() {
  std::vector<AObject> out;
  for (const char* t : {"S1", "S2", "S3", "S2'", "S3'", "S4", "S5"}) out.push_back(AObject::parse(t));
  return out;
}

std::vector<AObject> vector_objects(int max_d) {
  std::vector<AObject> out;
  for (int d = 0; d <= max_d; d += 2) out.push_back(AObject::vec(d));
  for (int d = 1; d <= max_d; d += 2) out.push_back(AObject::vec_prime(d));
  return out;
}

SubgroupPair spaces(F2Subspace s, F2Subspace l) {
  SubgroupPair p;
  p.spaces = {std::move(s), std::move(l)};
  return p;
}

bool same(const MVector& a, const MVector& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

}  // namespace

TEST_CASE("sizes of M") {
  CHECK(m_space(AObject::sym(1)).size() == 1);
  CHECK(m_space(AObject::sym(2)).size() == 4);
  CHECK(m_space(AObject::sym(3)).size() == 8);
  CHECK(m_space(AObject::sym(4)).size() == 21);
  CHECK(m_space(AObject::sym(5)).size() == 39);
  CHECK(m_space(AObject::vec(4)).size() == 16);
  CHECK(m_space(AObject::vec_prime(5)).size() == 16);
  CHECK(m_space(AObject::vec(8)).size() == 256);
  for (const AObject& g : {AObject::vec(6), AObject::vec_prime(7)}) {
    const MSpace& m = m_space(g);
    std::set<Word> words;
    for (int i = 0; i < m.size(); ++i) {
      const Word w = m_word(g, m.pairs()[i]);
      words.insert(w);
      CHECK(m_index_of_word(g, w) == i);
    }
    CHECK(static_cast<int>(words.size()) == m.size());
  }
  CHECK_THROWS_AS(m_index_of_word(AObject::vec(4), e(6)), BadIndex);
}

TEST_CASE("function round trip is the identity") {
  for (const AObject& g : {AObject::sym(3), AObject::sym(4), AObject::vec(4)}) {
    const MSpace& m = m_space(g);
    for (int i = 0; i < m.size(); ++i) {
      const MVector v{{i, Cyc(1L)}};
      CHECK(same(m.from_function(m.to_function(v)), v));
    }
  }
}

TEST_CASE("anchor and small examples") {
  const auto& mg = standard_mgamma();
  for (const AObject& g : symmetric_objects()) {
    const auto& grp = group_model(g).group;
    SubgroupPair p;
    p.small = trivial_subgroup(grp);
    p.large = whole(grp);
    const MVector r = mg.rho(g, p);
    CHECK(same(r, MVector{{0, Cyc(1L)}}));
  }

  // (S3 ⊆ S3): one trivial pair per class
  const AObject s3 = AObject::sym(3);
  const MVector r = mg.rho(s3, named_pair(s3, "S3", "S3"));
  CHECK(r.size() == 3);
  std::set<int> classes;
  for (const auto& [i, c] : r) {
    CHECK(c == Cyc(1L));
    CHECK(m_space(s3).pairs()[i].sigma == 0);
    classes.insert(m_space(s3).pairs()[i].cls);
  }
  CHECK(classes.size() == 3);

  // V_2 reading
  const AObject v2 = AObject::vec(2);
  const Ambient a = Ambient::v(2);
  const F2Subspace zero(a), line = F2Subspace::span({e(1)}, a);
  CHECK(support_words(v2, mg.rho(v2, spaces(line, line))) == std::set<Word>{0, e(1)});
  CHECK(support_words(v2, mg.rho(v2, spaces(zero, line))) == std::set<Word>{0});
  CHECK(support_words(v2, mg.rho(v2, spaces(zero, zero))) == std::set<Word>{0, e(2)});
}

TEST_CASE("generic formula agrees with the brute-force evaluation") {
  const auto& gs = standard_gammasets();
  for (const char* t : {"S2", "S3", "S3'", "S4"}) {
    const AObject g = AObject::parse(t);
    const MSpace& m = m_space(g);
    for (const auto& p : gs.bar_big_x(g)) {
      CAPTURE(pair_string(g, p));
      const auto [s, l] = pair_subsets(group_model(g), p);
      CHECK(same(ss_unit(m, s, l), brute_rho(m, s, l)));
    }
  }
  const AObject v4 = AObject::vec(4);
  for (const auto& p : gs.big_x(v4)) {
    const auto [s, l] = pair_subsets(group_model(v4), p);
    CHECK(same(ss_unit(m_space(v4), s, l), brute_rho(m_space(v4), s, l)));
  }
}

TEST_CASE("unit induction equals induction of the unit pair through the quotient") {
  const AObject g = AObject::sym(4);
  const auto& grp = group_model(g).group;
  const MSpace& m = m_space(g);
  for (const auto& p : standard_gammasets().bar_big_x(g)) {
    const Quotient q = quotient(grp, p.large, p.small);
    const MSpace qm(q.group);
    std::vector<int> phi(grp.order(), -1);
    for (int x = 0; x < grp.order(); ++x) phi[x] = q.proj[x];
    CHECK(same(ss_induce(m, p.small, p.large, phi, qm, MVector{{qm.unit(), Cyc(1L)}}), ss_unit(m, p.small, p.large)));
  }
  // D8 is not normal in S4... and S2 is not normal in S3
  const AObject s3 = AObject::sym(3);
  CHECK_THROWS_AS(ss_unit(m_space(s3), catalog_subset(s3, "S2"), whole(group_model(s3).group)), BadPair);
}

TEST_CASE("closed form for vector kinds") {
  const auto& mg = standard_mgamma();
  for (const AObject& g : vector_objects(8)) {
    CAPTURE(g.tag());
    const auto& fast = mg.family(g);
    const auto& slow = mg.family(g, false, true);
    REQUIRE(fast.rows.size() == slow.rows.size());
    for (std::size_t p = 0; p < fast.rows.size(); ++p) CHECK(fast.rows[p] == slow.rows[p]);
  }
  // ρ of Π_D(E) is the indicator of E
  for (int d = 0; d <= 10; d += 2) {
    for (const auto& sub : enum_cf(d)) {
      const auto words = rho_vector_words(AObject::vec(d), pi_map(sub, d));
      CHECK(words == sub.elements());
    }
  }
  for (int d = 1; d <= 9; d += 2) {
    for (const auto& sub : enum_cf(d - 1)) {
      const F2Subspace img = lambda_map(sub, d);
      CHECK(rho_vector_words(AObject::vec_prime(d), lambda_prime(img, d)) == img.elements());
    }
  }
}

TEST_CASE("M_0 of the vector kinds is the zero set of u") {
  const auto& mg = standard_mgamma();
  for (int d = 0; d <= 10; d += 2) {
    const AObject g = AObject::vec(d);
    std::set<Word> got;
    for (int i : mg.family(g).m_zero) got.insert(m_word(g, m_space(g).pairs()[i]));
    std::set<Word> want;
    for (const auto& v : zero_v_set(d)) want.insert(v.bits());
    CHECK(got == want);
  }
  for (int d = 1; d <= 9; d += 2) {
    const AObject g = AObject::vec_prime(d);
    std::set<Word> got;
    for (int i : mg.family(g).m_zero) got.insert(m_word(g, m_space(g).pairs()[i]));
    std::set<Word> want;
    for (const auto& v : zero_vprime_set(d)) want.insert(v.bits());
    CHECK(got == want);
  }
}

TEST_CASE("basis property, bijection and order") {
  const auto& mg = standard_mgamma();
  std::vector<AObject> objects = symmetric_objects();
  for (const auto& g : vector_objects(8)) objects.push_back(g);
  for (const AObject& g : objects) {
    CAPTURE(g.tag());
    const auto& f = mg.family(g, false, true);
    CHECK(f.integral);
    CHECK(f.nonnegative);
    CHECK(f.m_zero.size() == f.pairs.size());
    CHECK(rho_rank(f) == static_cast<int>(f.pairs.size()));
    const auto j = bijection_j(f);
    CHECK(j.size() == f.pairs.size());
    const auto po = partial_order(f, j);
    for (std::size_t a = 0; a < po.elements.size(); ++a) CHECK(po.leq(static_cast<int>(a), static_cast<int>(a)));
    if (g.is_vector()) {
      CHECK(vector_j_matches_epsilon(f, j));
      // the unit pair lies below everything
      for (std::size_t b = 0; b < po.elements.size(); ++b) CHECK(po.leq(0, static_cast<int>(b)));
    }
  }
  CHECK(mg.family(AObject::sym(5)).m_zero.size() == 17);
}

TEST_CASE("order on S2") {
  const auto& mg = standard_mgamma();
  const AObject v2 = AObject::vec(2);
  const auto& f = mg.family(v2);
  const auto j = bijection_j(f);
  const auto po = partial_order(f, j);
  std::vector<Word> w;
  for (int i : po.elements) w.push_back(m_word(v2, m_space(v2).pairs()[i]));
  CHECK(w == std::vector<Word>{0, e(2), e(1)});
  CHECK(po.leq(0, 1));
  CHECK(po.leq(0, 2));
  CHECK_FALSE(po.leq(1, 2));
  CHECK_FALSE(po.leq(2, 1));
  CHECK(po.covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("two-step induction") {
  const auto& mg = standard_mgamma();
  for (const char* t : {"S2", "S3", "S2'", "S3'", "S4", "S5"}) {
    CAPTURE(t);
    CHECK(mg.tower_consistent(AObject::parse(t)));
  }
  for (const AObject& g : vector_objects(6)) {
    CAPTURE(g.tag());
    CHECK(mg.tower_consistent(g));
  }
}

TEST_CASE("bar families are computed") {
  const auto& mg = standard_mgamma();
  const auto& f = mg.family(AObject::sym(4), true);
  CHECK(f.pairs.size() == 12);
  CHECK(f.integral);
  // (S1 ⊆ S1) gives the regular character at the identity
  const auto& base = mg.family(AObject::vec_prime(5), true);
  CHECK(base.pairs.size() > mg.family(AObject::vec_prime(5)).pairs.size());
}

TEST_CASE("a wrong normalization is visible") {
  GammaSets gs;
  SsConfig cfg;
  cfg.lift = SsConfig::Lift::ByGroup;
  MGamma bad(gs, cfg);
  bool broken = false;
  for (const char* t : {"S2", "S3", "S4"}) {
    const auto& f = bad.family(AObject::parse(t));
    if (!f.integral || f.m_zero.size() != f.pairs.size()) broken = true;
  }
  CHECK(broken);
}
