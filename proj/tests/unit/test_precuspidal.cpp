#include <doctest.h>

#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "famindex/errors.hpp"
#include "famindex/precuspidal.hpp"

using namespace famindex;

namespace {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;  // column i is w(α_i)

Vec reflect(const CartanDiagram& d, int i, Vec v) {
  int pair = 0;
  for (int j = 0; j < d.rank; ++j) pair += v[j] * d.cartan[i][j];
  v[i] -= pair;
  return v;
}

// Every element of W as the images of the simple roots, built straight from
// the Cartan matrix.
std::vector<Mat> weyl_group(const CartanDiagram& d) {
  Mat id(d.rank, Vec(d.rank, 0));
  for (int i = 0; i < d.rank; ++i) id[i][i] = 1;
  std::set<Mat> seen{id};
  std::vector<Mat> all{id};
  for (std::size_t k = 0; k < all.size(); ++k)
    for (int i = 0; i < d.rank; ++i) {
      Mat w = all[k];
      for (auto& col : w) col = reflect(d, i, col);
      if (seen.insert(w).second) all.push_back(w);
    }
  return all;
}

int brute_orbits(const CartanDiagram& d, const std::vector<NodeSet>& subsets) {
  const auto w_all = weyl_group(d);
  auto roots_of = [&](NodeSet s, const Mat& w) {
    std::set<Vec> out;
    for (int i = 0; i < d.rank; ++i)
      if (s >> i & 1U) out.insert(w[i]);
    return out;
  };
  const Mat& id = w_all[0];
  std::vector<int> parent(subsets.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (const Mat& w : w_all) {
      const auto img = roots_of(subsets[a], w);
      for (std::size_t b = 0; b < subsets.size(); ++b)
        if (img == roots_of(subsets[b], id)) parent[find(a)] = find(b);
    }
  std::set<int> roots;
  for (std::size_t a = 0; a < subsets.size(); ++a) roots.insert(find(a));
  return static_cast<int>(roots.size());
}

std::vector<NodeSet> all_of_size(const CartanDiagram& d, int size) {
  std::vector<NodeSet> out;
  for (NodeSet s = 0; s <= d.all(); ++s)
    if (std::popcount(s) == size) out.push_back(s);
  return out;
}

NodeSet nodes(std::initializer_list<int> xs) {
  NodeSet s = 0;
  for (int x : xs) s |= NodeSet{1} << (x - 1);
  return s;
}

std::vector<std::string> types_of(const std::vector<CiEntry>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.type);
  return out;
}

}  // namespace

TEST_CASE("diagram shapes and root counts") {
  const std::map<std::string, std::size_t> roots{
      {"A1", 2},   {"A4", 20},  {"A7", 56},  {"B2", 8},   {"B3", 18},  {"B6", 72},  {"C3", 18},
      {"C7", 98},  {"D4", 24},  {"D5", 40},  {"D7", 84},  {"E6", 72},  {"E7", 126}, {"E8", 240},
      {"F4", 48},  {"G2", 12},  {"B12", 288}, {"D9", 144}};
  for (const auto& [name, count] : roots) {
    CAPTURE(name);
    const CartanDiagram d = cartan_diagram(name);
    CHECK(d.name() == name);
    CHECK(subset_type(d, d.all()) == name);
    CHECK(root_system(d).roots.size() == count);
  }
  for (const char* bad : {"E9", "D3", "B1", "F5", "G3", "X2", "A0", "e6"}) CHECK_THROWS_AS(cartan_diagram(bad), UnknownHost);

  const CartanDiagram b = cartan_diagram("B4"), c = cartan_diagram("C4"), g = cartan_diagram("G2");
  CHECK(b.short_root == std::vector<bool>{false, false, false, true});
  CHECK(c.short_root == std::vector<bool>{true, true, true, false});
  CHECK(g.short_root == std::vector<bool>{true, false});
}

TEST_CASE("subset types") {
  const CartanDiagram d4 = cartan_diagram("D4");
  CHECK(subset_type(d4, nodes({1, 2})) == "A2");
  CHECK(subset_type(d4, nodes({1, 3, 4})) == "A1A1A1");
  CHECK(subset_type(d4, nodes({1, 2, 3})) == "A3");
  CHECK(subset_type(d4, 0).empty());

  const CartanDiagram f4 = cartan_diagram("F4");
  std::multiset<std::string> got;
  for (NodeSet s : all_of_size(f4, 3)) got.insert(subset_type(f4, s));
  CHECK(got == std::multiset<std::string>{"B3", "C3", "A2~A1", "~A2A1"});

  const CartanDiagram e8 = cartan_diagram("E8");
  CHECK(subset_type(e8, e8.all() & ~nodes({8})) == "E7");
  CHECK(subset_type(e8, e8.all() & ~nodes({7})) == "E6A1");
  CHECK(subset_type(e8, e8.all() & ~nodes({6})) == "D5A2");
  CHECK(subset_type(e8, e8.all() & ~nodes({5})) == "A4A3");
  CHECK(subset_type(e8, e8.all() & ~nodes({1})) == "D7");

  const CartanDiagram b6 = cartan_diagram("B6");
  CHECK(subset_type(b6, nodes({1, 2, 4, 5, 6})) == "B3A2");
  CHECK(subset_type(b6, nodes({6})) == "~A1");
  CHECK(subset_type(cartan_diagram("C6"), nodes({1, 2, 4, 5, 6})) == "C3~A2");

  CHECK(parse_type("A1D5A2") == std::vector<std::string>{"D5", "A2", "A1"});
  CHECK(strip_lengths("~A2A1") == "A2A1");
  CHECK(strip_lengths("C3~A2") == "C3A2");
  CHECK_THROWS_AS(parse_type("D5x"), UnknownHost);
}

TEST_CASE("listed tables") {
  const auto& data = PrecuspidalData::standard();
  CHECK(data.version == 1);
  CHECK(types_of(ci_table(data, "E8").ci) == std::vector<std::string>{"E7", "E6A1", "D5A2", "A4A3", "D7"});
  CHECK(types_of(ci_table(data, "B6").ci) == std::vector<std::string>{"B5", "B4A1", "B3A2", "B2A3"});
  const auto& g2 = ci_table(data, "G2").ci;
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].size == 1);
  CHECK(g2[0].count == 2);
  CHECK_THROWS_AS(ci_table(data, "E9"), UnknownHost);

  const auto d9 = ci_formula('D', 3);
  CHECK(types_of(d9.ci) == std::vector<std::string>{"D8", "D7A1", "D6A2", "D5A3"});
  CHECK(types_of(d9.bar_extra) == std::vector<std::string>{"D4A4"});
  CHECK(d9.gamma_c == "V'5");
  for (int k = 1; k <= 6; ++k) {
    CHECK(ci_formula('B', k).ci.size() == static_cast<std::size_t>(k == 1 ? 1 : 2 * k));
    if (k >= 3) CHECK(ci_formula('D', k).ci.size() == static_cast<std::size_t>(2 * k - 2));
  }
  CHECK_THROWS_AS(ci_formula('D', 2), UnknownHost);
  CHECK_THROWS_AS(ci_formula('E', 1), UnknownHost);

  // every series record in the data is the formula's
  for (const auto& r : data.records) {
    if (r.k == 0) continue;
    const auto f = ci_formula(r.host[0], r.k);
    CHECK(f.host == r.host);
    CHECK(f.gamma_c == r.gamma_c);
    CHECK(f.ci == r.ci);
    CHECK(f.bar_extra == r.bar_extra);
  }

  CHECK(PrecuspidalData::from_json(data.to_json()).records == data.records);
}

TEST_CASE("realization") {
  const auto& data = PrecuspidalData::standard();
  const CartanDiagram d4 = cartan_diagram("D4");
  const auto d4r = realize_subsets(d4, ci_table(data, "D4").ci);
  CHECK(d4r[0] == std::vector<NodeSet>{nodes({1, 2}), nodes({2, 3}), nodes({2, 4})});
  CHECK(d4r[1] == std::vector<NodeSet>{nodes({1, 3, 4})});

  const CartanDiagram e6 = cartan_diagram("E6");
  const auto e6r = realize_subsets(e6, ci_table(data, "E6").ci);
  CHECK(e6r[0].size() == 2);
  CHECK(e6r[1].size() == 1);

  const CartanDiagram f4 = cartan_diagram("F4");
  CHECK(realize_subsets(f4, ci_table(data, "F4").ci)[0].size() == 4);

  // every record at every parameter in the data realizes
  for (const auto& r : data.records) {
    CAPTURE(r.host);
    const CartanDiagram d = cartan_diagram(r.host);
    CHECK_NOTHROW(realize_subsets(d, r.ci));
    CHECK_NOTHROW(realize_subsets(d, r.bar_extra));
  }
  CHECK_THROWS_AS(realize_subsets(e6, {{"E7", 0, 1}}), Unrealizable);
  CHECK_THROWS_AS(realize_subsets(d4, {{"D4", 0, 1}}), Unrealizable);
}

TEST_CASE("orbit walk agrees with the whole Weyl group") {
  for (const char* name : {"B2", "G2", "A3", "B3", "C3", "D4", "F4"}) {
    const CartanDiagram d = cartan_diagram(name);
    for (int size = 1; size < d.rank; ++size) {
      CAPTURE(name);
      CAPTURE(size);
      const auto subsets = all_of_size(d, size);
      CHECK(weyl_orbit_count(d, subsets) == brute_orbits(d, subsets));
    }
  }
  CHECK(weyl_group(cartan_diagram("D4")).size() == 192);
  CHECK(weyl_orbit_count(cartan_diagram("B2"), {nodes({1}), nodes({2})}) == 2);

  const CartanDiagram d4 = cartan_diagram("D4");
  CHECK(weyl_orbit_count(d4, {nodes({1, 2}), nodes({2, 3}), nodes({2, 4})}) == 1);

  const CartanDiagram e6 = cartan_diagram("E6");
  CHECK(weyl_group(e6).size() == 51840);
  const auto d5 = realize_subsets(e6, {{"D5", 0, 2}})[0];
  CHECK(brute_orbits(e6, d5) == 1);
  CHECK(weyl_orbit_count(e6, d5) == 1);
  const auto pairs = all_of_size(e6, 2);
  CHECK(weyl_orbit_count(e6, pairs) == brute_orbits(e6, pairs));

  CHECK_THROWS_AS(weyl_orbit_count(cartan_diagram("E8"), {nodes({1})}), RankCap);
  CHECK(weyl_orbit_count(cartan_diagram("E8"), {nodes({1}), nodes({8})}, 8) == 1);
}

TEST_CASE("count consistency on the shipped data") {
  const auto& data = PrecuspidalData::standard();
  const auto& gs = standard_gammasets();
  for (const auto& r : data.records) {
    CAPTURE(r.host);
    const HostReport rep = consistency_check(r, gs);
    for (const auto& c : rep.checks) {
      CAPTURE(c.id);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.pass());
  }

  // the other reading of V'_3 breaks the D4 bar count only
  GammaConfig cfg;
  cfg.bar_reading = BarReading::VPrime;
  const GammaSets alt(cfg);
  const HostReport d4 = consistency_check(ci_table(data, "D4"), alt);
  CHECK_FALSE(d4.pass());
  for (const auto& c : d4.checks) CHECK(c.pass == (c.id != "D4/bar-x-count"));
  CHECK(consistency_check(ci_table(data, "D9"), alt).pass());
}

TEST_CASE("hypotheses") {
  const auto& data = PrecuspidalData::standard();
  const auto& gs = standard_gammasets();
  auto passing = [&](const std::string& host) {
    std::vector<std::string> out;
    for (const auto& h : hypothesis_report(ci_table(data, host), gs).candidates)
      if (h.pass) out.push_back(h.gamma_c);
    return out;
  };
  CHECK(passing("E7") == std::vector<std::string>{"S2'"});
  CHECK(passing("E8") == std::vector<std::string>{"S5"});
  CHECK(passing("F4") == std::vector<std::string>{"S4"});
  CHECK(passing("B6") == std::vector<std::string>{"V4"});
  CHECK(passing("D9") == std::vector<std::string>{"V'5"});
  const auto e6 = hypothesis_report(ci_table(data, "E6"), gs);
  CHECK(e6.orbits == 2);
  CHECK(e6.bar_orbits == 2);
}

TEST_CASE("mutated records fail a named check") {
  const auto& data = PrecuspidalData::standard();
  const auto& gs = standard_gammasets();
  auto failing = [&](const PrecuspidalRecord& r) {
    std::set<std::string> out;
    for (const auto& c : consistency_check(r, gs).checks)
      if (!c.pass) out.insert(c.id);
    return out;
  };
  PrecuspidalRecord e8 = ci_table(data, "E8");
  e8.ci[3].type = "E7A1";
  CHECK(failing(e8).count("E8/realizable"));

  PrecuspidalRecord e6 = ci_table(data, "E6");
  e6.ci[0].count = 1;
  CHECK(failing(e6).count("E6/stated-counts"));

  PrecuspidalRecord f4 = ci_table(data, "F4");
  f4.gamma_c = "S5";
  CHECK(failing(f4).count("F4/x-count"));

  PrecuspidalRecord b12 = ci_table(data, "B12");
  b12.ci.pop_back();
  CHECK(failing(b12).count("B12/series-size"));

  PrecuspidalRecord d16 = ci_table(data, "D16");
  d16.bar_extra[0].type = "D10A5";
  CHECK(failing(d16).count("D16/gamma-parity"));

  PrecuspidalRecord g2 = ci_table(data, "G2");
  g2.gamma_c = "V2";
  CHECK(failing(g2).count("G2/gamma-kind"));
}
