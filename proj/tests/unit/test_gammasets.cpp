#include <doctest.h>

#include <set>

#include "famindex/errors.hpp"
#include "famindex/gammasets.hpp"

using namespace famindex;

namespace {

using Names = std::vector<std::pair<const char*, const char*>>;

std::set<SubgroupPair> golden(const AObject& g, const Names& names) {
  std::set<SubgroupPair> out;
  for (const auto& [s, l] : names) out.insert(named_pair(g, s, l));
  return out;
}

std::set<SubgroupPair> as_set(const std::vector<SubgroupPair>& v) { return {v.begin(), v.end()}; }

const std::map<std::string, Names>& golden_x() {
  static const std::map<std::string, Names> m{
      {"S1", {{"S1", "S1"}}},
      {"S2", {{"S2", "S2"}, {"S1", "S2"}, {"S1", "S1"}}},
      {"S3", {{"S3", "S3"}, {"S1", "S3"}, {"S2", "S2"}, {"S1", "S2"}, {"S1", "S1"}}},
      {"S2'", {{"S2", "S2"}, {"S1", "S2"}}},
      {"S3'", {{"S3", "S3"}, {"S1", "S3"}, {"S2", "S2"}, {"S1", "S2"}}},
      {"S4",
       {{"S4", "S4"}, {"S1", "S4"}, {"D8", "D8"}, {"S2S2", "D8"}, {"S2S2", "S2S2"}, {"S2", "S2S2"}, {"S1", "S2S2"},
        {"S3", "S3"}, {"S1", "S3"}, {"S2", "S2"}, {"S1", "S2"}}},
      {"S5",
       {{"S5", "S5"}, {"S1", "S5"}, {"S3S2", "S3S2"}, {"S3", "S3S2"}, {"S~2", "S3S2"}, {"S1", "S3S2"},
        {"S4", "S4"}, {"S1", "S4"}, {"D8", "D8"}, {"S2S2", "D8"}, {"S2S2", "S2S2"}, {"S2", "S2S2"},
        {"S1", "S2S2"}, {"S3", "S3"}, {"S1", "S3"}, {"S2", "S2"}, {"S1", "S2"}}},
  };
  return m;
}

}  // namespace

TEST_CASE("AObject tags") {
  CHECK(AObject::parse("S2'") == AObject::sym_prime(2));
  CHECK(AObject::parse("V'5") == AObject::vec_prime(5));
  CHECK(AObject::parse("V6") == AObject::vec(6));
  CHECK(AObject::parse("V2").canonical() == AObject::sym(2));
  CHECK(AObject::parse("V'3").canonical() == AObject::sym(2));
  CHECK(AObject::parse("V0").canonical() == AObject::sym(1));
  CHECK(AObject::parse("V'1").canonical() == AObject::sym(1));
  CHECK(AObject::parse("V'5").canonical() != AObject::vec(4));
  for (const char* bad : {"S6", "S0", "S4'", "V3", "V'4", "X", "S", "V", "V'", "S2''"}) {
    CHECK_THROWS_AS(AObject::parse(bad), UnknownTag);
  }
  for (const auto& g : catalog_objects(9)) CHECK(AObject::parse(g.tag()) == g);
  int anomalous = 0;
  for (const auto& g : catalog_objects(9)) anomalous += g.anomalous();
  CHECK(anomalous == 4);
  CHECK(AObject::sym(5).order() == 120);
  CHECK(AObject::vec(8).order() == 16);
  CHECK(AObject::vec_prime(7).order() == 8);
}

TEST_CASE("x sets") {
  const auto& gs = standard_gammasets();
  CHECK_THROWS_AS(gs.x_set(AObject::sym(1)), TrivialGroup);
  CHECK_THROWS_AS(gs.x_set(AObject::vec(0)), TrivialGroup);

  const auto s3 = gs.x_set(AObject::sym(3));
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].quotient == AObject::sym(2));
  CHECK(s3[1].quotient == AObject::sym(1));

  const auto s4 = gs.x_set(AObject::sym(4));
  REQUIRE(s4.size() == 4);
  std::vector<int> qs;
  for (const auto& e : s4) qs.push_back(e.quotient.n);
  CHECK(qs == std::vector<int>{2, 2, 1, 1});
  for (const auto& e : s4) {
    const auto& grp = ambient_group(AObject::sym(4)).group;
    CHECK(is_normal(grp, e.pair.small, e.pair.large));
  }

  const auto v4 = gs.x_set(AObject::vec(4));
  REQUIRE(v4.size() == 4);
  for (const auto& e : v4) {
    CHECK(e.pair.spaces.small.dim() == (e.index % 2 == 1 ? 1 : 0));
    CHECK(e.quotient == AObject::vec(2));
    CHECK(e.quotient.canonical() == AObject::sym(2));
  }
  CHECK(gs.x_set(AObject::vec_prime(5)).size() == 4);
}

TEST_CASE("bar x sets") {
  const auto& gs = standard_gammasets();
  CHECK(gs.bar_x_set(AObject::vec_prime(5)).size() == 5);
  CHECK(gs.bar_x_set(AObject::vec(6)).size() == 6);
  CHECK(gs.bar_x_set(AObject::sym(5)).size() == gs.x_set(AObject::sym(5)).size());
  CHECK(gs.bar_x_set(AObject::sym(2)).size() == 2);

  GammaSets alt({XTables::standard(), BarReading::VPrime, 0});
  CHECK(alt.bar_x_set(AObject::sym(2)).size() == 3);
  CHECK(alt.bar_x_set(AObject::vec_prime(3)).size() == 3);
  // The enlarged list repeats a pair, so the set itself does not move.
  CHECK(alt.bar_big_x(AObject::sym(2)) == gs.bar_big_x(AObject::sym(2)));
  CHECK(alt.bar_big_x(AObject::vec_prime(7)) == gs.bar_big_x(AObject::vec_prime(7)));
}

TEST_CASE("X sets of the symmetric objects match the explicit lists") {
  const auto& gs = standard_gammasets();
  const std::map<std::string, std::size_t> sizes{{"S1", 1}, {"S2", 3}, {"S3", 5}, {"S2'", 2},
                                                 {"S3'", 4}, {"S4", 11}, {"S5", 17}};
  for (const auto& [tag, names] : golden_x()) {
    CAPTURE(tag);
    const AObject g = AObject::parse(tag);
    const auto& x = gs.big_x(g);
    CHECK(x.size() == sizes.at(tag));
    CHECK(as_set(x) == golden(g, names));
    CHECK(golden(g, names).size() == names.size());
  }
}

TEST_CASE("Q sets") {
  const auto& gs = standard_gammasets();
  const AObject s4 = AObject::sym(4);
  const auto q = gs.q_sets(s4);
  std::set<Subset> qset(q.q.begin(), q.q.end());
  for (const char* n : {"D8", "S2S2", "S2", "S3", "S4"}) CHECK(qset.count(named_pair(s4, n, n).large) == 1);
  CHECK(q.q.size() == 5);
  CHECK(q.q_star.size() == 4);
  for (const auto& s : q.q_star) CHECK(s != named_pair(s4, "D8", "D8").large);

  const auto q5 = gs.q_sets(AObject::sym(5));
  CHECK(q5.q.size() == 7);
  CHECK(q5.q_star.size() == 6);

  const auto q2 = gs.q_sets(AObject::sym_prime(2));
  CHECK(q2.q_star.size() == 1);
}

TEST_CASE("bar X sets") {
  const auto& gs = standard_gammasets();
  CHECK(gs.bar_big_x(AObject::sym(4)).size() == 12);
  CHECK(gs.bar_big_x(AObject::sym(1)).size() == 1);
  const auto x = as_set(gs.big_x(AObject::sym(5)));
  auto xb = as_set(gs.bar_big_x(AObject::sym(5)));
  CHECK(xb.size() == x.size() + 1);
  xb.erase(named_pair(AObject::sym(5), "S1", "S1"));
  CHECK(xb == x);
  for (const char* t : {"S2", "S3"}) CHECK(gs.bar_big_x(AObject::parse(t)) == gs.big_x(AObject::parse(t)));
  for (int d = 5; d <= 9; d += 2) {
    const auto a = as_set(gs.big_x(AObject::vec_prime(d)));
    const auto b = as_set(gs.bar_big_x(AObject::vec_prime(d)));
    CHECK(b.size() > a.size());
    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
  for (int d = 4; d <= 8; d += 2) CHECK(gs.bar_big_x(AObject::vec(d)) == gs.big_x(AObject::vec(d)));
}

TEST_CASE("vector X sets are the inductive pair families") {
  const auto& gs = standard_gammasets();
  auto spaces = [](const std::vector<SubgroupPair>& v) {
    std::set<SubspacePair> out;
    for (const auto& p : v) out.insert(p.spaces);
    return out;
  };
  for (int d = 0; d <= 10; d += 2) {
    CAPTURE(d);
    const auto& occ = enum_occ(d);
    CHECK(spaces(gs.big_x(AObject::vec(d))) == std::set<SubspacePair>(occ.begin(), occ.end()));
  }
  for (int d = 1; d <= 9; d += 2) {
    CAPTURE(d);
    const auto& occ = enum_occ_prime(d);
    CHECK(spaces(gs.big_x(AObject::vec_prime(d))) == std::set<SubspacePair>(occ.begin(), occ.end()));
  }
}

TEST_CASE("every quotient is a product of collection objects") {
  const auto& gs = standard_gammasets();
  for (const char* t : {"S2", "S3", "S2'", "S3'", "S4", "S5"}) {
    const AObject g = AObject::parse(t);
    const auto& grp = ambient_group(g).group;
    for (const auto* set : {&gs.big_x(g), &gs.bar_big_x(g)}) {
      for (const auto& p : *set) {
        CAPTURE(pair_string(g, p));
        CHECK(is_normal(grp, p.small, p.large));
        CHECK(is_product_of_aobjects(quotient(grp, p.large, p.small).group));
      }
    }
  }
  CHECK_FALSE(is_product_of_aobjects(subgroup_group(sym5(), standard_subgroup("D8")).group));
  CHECK(is_product_of_aobjects(subgroup_group(sym5(), standard_subgroup("S3S2")).group));
  CHECK_FALSE(is_product_of_aobjects(FiniteGroup::from_permutations({{1, 2, 3, 0}}, 4)));
}

TEST_CASE("the base pair is never pulled back") {
  const auto& gs = standard_gammasets();
  for (const char* t : {"S2", "S3", "S2'", "S3'", "S4", "S5"}) {
    const AObject g = AObject::parse(t);
    const auto& grp = ambient_group(g).group;
    const SubgroupPair base = canonical_pair(g, {{}, trivial_subgroup(grp), whole(grp)});
    for (const auto& p : gs.big_x0(g)) CHECK(p != base);
  }
  for (int d = 4; d <= 8; d += 2) {
    const AObject g = AObject::vec(d);
    for (const auto& p : gs.big_x0(g)) CHECK_FALSE((p.spaces.small.is_zero() && p.spaces.large == v_odd(d)));
  }
}

TEST_CASE("X does not depend on the chosen quotient isomorphisms") {
  const auto& base = standard_gammasets();
  for (std::size_t twist = 1; twist < 6; ++twist) {
    GammaSets gs({XTables::standard(), BarReading::S2, twist});
    for (const char* t : {"S3", "S3'", "S4", "S5"}) {
      CAPTURE(t);
      CAPTURE(twist);
      CHECK(gs.big_x(AObject::parse(t)) == base.big_x(AObject::parse(t)));
      CHECK(gs.bar_big_x(AObject::parse(t)) == base.bar_big_x(AObject::parse(t)));
    }
  }
}

TEST_CASE("listing order and names") {
  const auto& gs = standard_gammasets();
  const AObject s4 = AObject::sym(4);
  std::vector<std::string> shown;
  for (const auto& p : listing_order(s4, gs.big_x(s4))) shown.push_back(pair_string(s4, p));
  const std::vector<std::string> want{"(S4 ⊆ S4)",     "(S1 ⊆ S4)",   "(D8 ⊆ D8)",   "(S2S2 ⊆ D8)",
                                      "(S2S2 ⊆ S2S2)", "(S2 ⊆ S2S2)", "(S1 ⊆ S2S2)", "(S3 ⊆ S3)",
                                      "(S1 ⊆ S3)",     "(S2 ⊆ S2)",   "(S1 ⊆ S2)"};
  CHECK(shown == want);

  const AObject s5 = AObject::sym(5);
  const auto names = catalog_names(s5, named_pair(s5, "S~2", "S3S2"));
  REQUIRE(names);
  CHECK(names->first == "S~2");
  CHECK(names->second == "S3S2");
  CHECK_THROWS_AS(catalog_subset(AObject::sym(3), "S4"), BadPair);
}
