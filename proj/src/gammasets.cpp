#include "famindex/gammasets.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <set>
#include <stdexcept>

#include "famindex/errors.hpp"
#include "famindex/memo.hpp"

namespace famindex {

namespace {

int parse_int(std::string_view s) {
  int v = -1;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return -1;
  return v;
}

const std::vector<std::string>& naming_order() {
  static const std::vector<std::string> n{"S1", "S2", "S3", "S4", "S5", "D8", "S2S2", "S~2", "S3S2"};
  return n;
}

const std::vector<std::string>& listing_large_order() {
  static const std::vector<std::string> n{"S5", "S3S2", "S4", "D8", "S2S2", "S3", "S2", "S1"};
  return n;
}

std::string sym_name(int n) { return "S" + std::to_string(n); }

}  // namespace

// ---- AObject ----

AObject AObject::parse(std::string_view tag) {
  const std::string t(tag);
  if (tag.size() >= 2 && tag[0] == 'S') {
    const bool primed = tag.back() == '\'';
    const int n = parse_int(tag.substr(1, tag.size() - 1 - (primed ? 1 : 0)));
    if (primed && (n == 2 || n == 3)) return sym_prime(n);
    if (!primed && n >= 1 && n <= 5) return sym(n);
    throw UnknownTag(t);
  }
  if (tag.size() >= 3 && tag.substr(0, 2) == "V'") {
    const int d = parse_int(tag.substr(2));
    if (d >= 1 && d % 2 == 1 && d <= kMaxBound) return vec_prime(d);
    throw UnknownTag(t);
  }
  if (tag.size() >= 2 && tag[0] == 'V') {
    const int d = parse_int(tag.substr(1));
    if (d >= 0 && d % 2 == 0 && d <= kMaxBound) return vec(d);
    throw UnknownTag(t);
  }
  throw UnknownTag(t);
}

AObject AObject::canonical() const {
  if ((kind == AKind::Vec && n == 0) || (kind == AKind::VecPrime && n == 1)) return sym(1);
  if ((kind == AKind::Vec && n == 2) || (kind == AKind::VecPrime && n == 3)) return sym(2);
  return *this;
}

std::string AObject::tag() const {
  switch (kind) {
    case AKind::Vec: return "V" + std::to_string(n);
    case AKind::VecPrime: return "V'" + std::to_string(n);
    case AKind::Sym: return sym_name(n);
    case AKind::SymPrime: return sym_name(n) + "'";
  }
  return {};
}

bool AObject::anomalous() const {
  return kind == AKind::SymPrime || (kind == AKind::Sym && n >= 4);
}

long AObject::order() const {
  switch (kind) {
    case AKind::Vec: return 1L << (n / 2);
    case AKind::VecPrime: return 1L << ((n - 1) / 2);
    default: {
      long f = 1;
      for (int i = 2; i <= n; ++i) f *= i;
      return f;
    }
  }
}

XTables XTables::standard() {
  XTables t;
  t.rows["S2"] = {{"S1", "S1", "S1"}, {"S2", "S2", "S1"}};
  t.rows["S3"] = {{"S1", "S2", "S2"}, {"S3", "S3", "S1"}};
  t.rows["S2'"] = {{"S2", "S2", "S1"}};
  t.rows["S3'"] = {{"S2", "S2", "S1"}, {"S3", "S3", "S1"}};
  t.rows["S4"] = {{"S2S2", "D8", "S2"}, {"S2", "S2S2", "S2"}, {"S3", "S3", "S1"}, {"S4", "S4", "S1"}};
  t.rows["S5"] = {{"S~2", "S3S2", "S3"}, {"S3", "S3S2", "S2"}, {"S2S2", "D8", "S2"},
                  {"S4", "S4", "S1"},    {"S5", "S5", "S1"}};
  return t;
}

// ---- symmetric ambients ----

const AmbientGroup& ambient_group(const AObject& g) {
  if (g.is_vector() && g.canonical().is_vector()) throw std::invalid_argument("ambient_group: vector kind " + g.tag());
  static std::mutex mu;
  static std::map<int, AmbientGroup> cache;
  const int n = g.canonical().n;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const Subset s = standard_subgroup(sym_name(n));
    Embedded e = subgroup_group(sym5(), s);
    it = cache.emplace(n, AmbientGroup{std::move(e.group), s, std::move(e.to_parent), std::move(e.from_parent)}).first;
  }
  return it->second;
}

Subset catalog_subset(const AObject& g, std::string_view name) {
  const AmbientGroup& a = ambient_group(g);
  const Subset s5 = standard_subgroup(name);
  if (!includes(a.in_s5, s5)) throw BadPair(std::string(name) + " is not a subgroup of " + g.tag());
  Subset out(a.group.order(), false);
  for (int x : members(s5)) out[a.from_s5[x]] = true;
  return out;
}

SubgroupPair canonical_pair(const AObject& g, const SubgroupPair& p) {
  if (g.is_vector()) return p;
  const FiniteGroup& grp = ambient_group(g).group;
  SubgroupPair best = p;
  for (int h = 1; h < grp.order(); ++h) {
    SubgroupPair c{{}, conjugate(grp, p.small, h), conjugate(grp, p.large, h)};
    if (c < best) best = std::move(c);
  }
  return best;
}

SubgroupPair named_pair(const AObject& g, std::string_view small, std::string_view large) {
  return canonical_pair(g, {{}, catalog_subset(g, small), catalog_subset(g, large)});
}

std::optional<std::pair<std::string, std::string>> catalog_names(const AObject& g, const SubgroupPair& p) {
  const AmbientGroup& a = ambient_group(g);
  const FiniteGroup& grp = a.group;
  const int ns = subset_size(p.small);
  const int nl = subset_size(p.large);
  std::vector<std::pair<std::string, Subset>> named;
  for (const auto& name : naming_order()) {
    const Subset s5 = standard_subgroup(name);
    if (!includes(a.in_s5, s5)) continue;
    Subset s(grp.order(), false);
    for (int x : members(s5)) s[a.from_s5[x]] = true;
    named.emplace_back(name, std::move(s));
  }
  for (const auto& [ln, lset] : named) {
    if (subset_size(lset) != nl) continue;
    for (const auto& [sn, sset] : named) {
      if (subset_size(sset) != ns || !includes(lset, sset)) continue;
      for (int h = 0; h < grp.order(); ++h) {
        if (conjugate(grp, p.large, h) == lset && conjugate(grp, p.small, h) == sset) return std::make_pair(sn, ln);
      }
    }
  }
  return std::nullopt;
}

std::string pair_string(const AObject& g, const SubgroupPair& p) {
  if (g.is_vector()) return "(" + to_string(p.spaces.small) + " ⊆ " + to_string(p.spaces.large) + ")";
  if (auto n = catalog_names(g, p)) return "(" + n->first + " ⊆ " + n->second + ")";
  return "(<" + std::to_string(subset_size(p.small)) + "> ⊆ <" + std::to_string(subset_size(p.large)) + ">)";
}

std::vector<SubgroupPair> listing_order(const AObject& g, std::vector<SubgroupPair> pairs) {
  if (g.is_vector()) {
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  }
  const auto& order = listing_large_order();
  auto rank = [&](const SubgroupPair& p) {
    int r = static_cast<int>(order.size());
    if (auto n = catalog_names(g, p)) {
      auto it = std::find(order.begin(), order.end(), n->second);
      if (it != order.end()) r = static_cast<int>(it - order.begin());
    }
    return std::make_tuple(r, -subset_size(p.large), -subset_size(p.small));
  };
  std::vector<std::pair<std::tuple<int, int, int>, SubgroupPair>> keyed;
  for (auto& p : pairs) keyed.emplace_back(rank(p), std::move(p));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<SubgroupPair> out;
  for (auto& [k, p] : keyed) out.push_back(std::move(p));
  return out;
}

// ---- product-of-collection test ----

bool is_product_of_aobjects(const FiniteGroup& g) {
  if (g.order() == 1 || is_elementary_abelian_2(g)) return true;
  for (const char* t : {"S3", "S4", "S5"}) {
    if (g.order() != AObject::parse(t).order()) continue;
    try {
      identify_aobject(g, t);
      return true;
    } catch (const NotIsomorphic&) {
    }
  }
  for (const auto& [n, k] : direct_factorizations(g)) {
    if (is_product_of_aobjects(subgroup_group(g, n).group) && is_product_of_aobjects(subgroup_group(g, k).group)) return true;
  }
  return false;
}

std::vector<AObject> catalog_objects(int max_d) {
  std::vector<AObject> out;
  for (int n = 2; n <= 5; ++n) out.push_back(AObject::sym(n));
  out.push_back(AObject::sym_prime(2));
  out.push_back(AObject::sym_prime(3));
  for (int d = 4; d <= max_d; d += 2) out.push_back(AObject::vec(d));
  for (int d = 5; d <= max_d; d += 2) out.push_back(AObject::vec_prime(d));
  return out;
}

// ---- the recursion ----

namespace {

bool is_trivial_object(const AObject& g) { return g.order() == 1; }

// Ambient and V^1 of a vector kind.
Ambient vec_ambient(const AObject& g) { return g.kind == AKind::Vec ? Ambient::v(g.n) : Ambient::vprime(g.n); }
F2Subspace vec_top(const AObject& g) { return g.kind == AKind::Vec ? v_odd(g.n) : vprime_odd(g.n); }

// A pair over S1 or S2 read inside V^1 of dimension <= 1 (the transposition is e_1).
SubspacePair sym_to_vector(const AObject& target, const SubgroupPair& p) {
  const Ambient amb = vec_ambient(target);
  auto conv = [&](const Subset& s) {
    F2Subspace out(amb);
    if (s.size() > 1 && s[1]) out.insert(Word{1} << 1);
    return out;
  };
  return {conv(p.small), conv(p.large)};
}

Subset vector_to_sym(const F2Subspace& s) { return Subset{true, !s.is_zero()}; }

SubgroupPair space_pair(F2Subspace small, F2Subspace large) {
  SubgroupPair p;
  p.spaces = {std::move(small), std::move(large)};
  return p;
}

enum class SetKind : int { X, XBar, X0, X0Bar };

}  // namespace

struct GammaSets::Impl {
  detail::Memo<std::pair<int, std::string>, std::vector<SubgroupPair>> memo;
};

GammaSets::GammaSets(GammaConfig config) : config_(std::move(config)), impl_(std::make_unique<Impl>()) {}
GammaSets::~GammaSets() = default;

namespace {

std::vector<XEntry> vector_entries(const AObject& g, int jmax) {
  std::vector<XEntry> out;
  const bool primed = g.kind == AKind::VecPrime;
  const AObject quot = primed ? AObject::vec_prime(g.n - 2) : AObject::vec(g.n - 2);
  for (int j = 1; j <= jmax; ++j) {
    const LinearMap c = primed ? cmap_prime1(g.n, j) : cmap1(g.n, j);
    F2Subspace small(vec_ambient(g));
    if (j % 2 == 1) small.insert(primed ? canonical_vprime(Word{1} << j, g.n) : Word{1} << j);
    if (!(c.kernel() == small)) throw std::logic_error("kernel of C_" + std::to_string(j) + " on " + g.tag());
    out.push_back({space_pair(small, c.domain()), quot, j});
  }
  return out;
}

}  // namespace

std::vector<XEntry> GammaSets::x_set(const AObject& g) const {
  if (is_trivial_object(g)) throw TrivialGroup(g.tag());
  if (g.is_vector()) return vector_entries(g, g.kind == AKind::Vec ? g.n : g.n - 1);
  const auto it = config_.tables.rows.find(g.tag());
  if (it == config_.tables.rows.end()) throw UnknownTag("no x-table for " + g.tag());
  std::vector<XEntry> out;
  int idx = 0;
  for (const XRow& r : it->second) {
    out.push_back({{{}, catalog_subset(g, r.small), catalog_subset(g, r.large)}, AObject::parse(r.quotient), ++idx});
  }
  return out;
}

std::vector<XEntry> GammaSets::bar_x_set(const AObject& g) const {
  if (is_trivial_object(g)) throw TrivialGroup(g.tag());
  if (g.kind == AKind::VecPrime) {
    if (g.n == 3 && config_.bar_reading == BarReading::S2) return x_set(g);
    return vector_entries(g, g.n);
  }
  if (g == AObject::sym(2) && config_.bar_reading == BarReading::VPrime) {
    std::vector<XEntry> out;
    for (const XEntry& e : vector_entries(AObject::vec_prime(3), 3)) {
      out.push_back({{{}, vector_to_sym(e.pair.spaces.small), vector_to_sym(e.pair.spaces.large)}, e.quotient.canonical(), e.index});
    }
    return out;
  }
  return x_set(g);
}

namespace {

struct Recursion {
  const GammaSets& gs;
  bool bar;

  const std::vector<SubgroupPair>& lower(const AObject& q) const { return bar ? gs.bar_big_x(q) : gs.big_x(q); }

  std::vector<SubgroupPair> vector_x0(const AObject& g, const std::vector<XEntry>& entries) const {
    std::set<SubgroupPair> out;
    for (const XEntry& e : entries) {
      const bool primed = g.kind == AKind::VecPrime;
      const LinearMap c = primed ? cmap_prime1(g.n, e.index) : cmap1(g.n, e.index);
      const AObject raw = e.quotient;
      const AObject canon = raw.canonical();
      for (const SubgroupPair& p : lower(canon.is_vector() ? raw : canon)) {
        const SubspacePair sp = canon.is_vector() ? p.spaces : sym_to_vector(raw, p);
        out.insert(space_pair(c.preimage(sp.small), c.preimage(sp.large)));
      }
    }
    return {out.begin(), out.end()};
  }

  std::vector<SubgroupPair> sym_x0(const AObject& g, const std::vector<XEntry>& entries) const {
    const FiniteGroup& grp = ambient_group(g).group;
    std::set<SubgroupPair> out;
    for (const XEntry& e : entries) {
      const AObject qtag = e.quotient.canonical();
      if (qtag.is_vector()) throw std::logic_error("vector quotient in a symmetric x-table");
      const Quotient q = quotient(grp, e.pair.large, e.pair.small);
      std::vector<int> iso = identify_aobject(q.group, sym_name(qtag.n));
      if (gs.config().twist != 0) {
        const auto auts = automorphisms(ambient_group(qtag).group);
        const auto& a = auts[gs.config().twist % auts.size()];
        for (int& y : iso) y = a[y];
      }
      for (const SubgroupPair& p : lower(e.quotient)) {
        SubgroupPair lifted{{}, Subset(grp.order(), false), Subset(grp.order(), false)};
        for (int x = 0; x < grp.order(); ++x) {
          if (q.proj[x] < 0) continue;
          const int y = iso[q.proj[x]];
          lifted.small[x] = p.small[y];
          lifted.large[x] = p.large[y];
        }
        out.insert(canonical_pair(g, lifted));
      }
    }
    return {out.begin(), out.end()};
  }
};

}  // namespace

const std::vector<SubgroupPair>& GammaSets::big_x0(const AObject& g) const {
  const AObject& key = g;
  return *impl_->memo.get({static_cast<int>(SetKind::X0), key.tag()}, [&] {
    if (is_trivial_object(key)) return std::vector<SubgroupPair>{};
    const Recursion r{*this, false};
    return key.is_vector() ? r.vector_x0(key, x_set(key)) : r.sym_x0(key, x_set(key));
  });
}

namespace {

const std::vector<SubgroupPair>& bar_x0(const GammaSets& gs, detail::Memo<std::pair<int, std::string>, std::vector<SubgroupPair>>& memo,
                                        const AObject& key) {
  return *memo.get({static_cast<int>(SetKind::X0Bar), key.tag()}, [&] {
    if (is_trivial_object(key)) return std::vector<SubgroupPair>{};
    const Recursion r{gs, true};
    return key.is_vector() ? r.vector_x0(key, gs.bar_x_set(key)) : r.sym_x0(key, gs.bar_x_set(key));
  });
}

SubgroupPair base_pair(const AObject& g, const Subset& large) {
  const FiniteGroup& grp = ambient_group(g).group;
  return canonical_pair(g, {{}, trivial_subgroup(grp), large});
}

}  // namespace

QSets GammaSets::q_sets(const AObject& g) const {
  QSets out;
  // Vector kinds are never anomalous, Q plays no role there.
  if (g.is_vector()) return out;
  const FiniteGroup& grp = ambient_group(g).group;
  for (const auto& p : big_x0(g)) {
    if (p.small != p.large) continue;
    out.q.push_back(p.large);
    if (is_product_of_aobjects(subgroup_group(grp, p.large).group)) out.q_star.push_back(p.large);
  }
  return out;
}

const std::vector<SubgroupPair>& GammaSets::big_x(const AObject& g) const {
  // Vector tags keep their own key so V0, V2, V'3 answer in subspaces.
  const AObject& key = g;
  return *impl_->memo.get({static_cast<int>(SetKind::X), key.tag()}, [&] {
    std::set<SubgroupPair> out;
    if (is_trivial_object(key)) {
      if (key.is_vector()) {
        const F2Subspace z(vec_ambient(key));
        out.insert(space_pair(z, z));
      } else {
        out.insert({{}, Subset{true}, Subset{true}});
      }
      return std::vector<SubgroupPair>(out.begin(), out.end());
    }
    const auto& x0 = big_x0(key);
    out.insert(x0.begin(), x0.end());
    if (key.is_vector()) {
      out.insert(space_pair(F2Subspace(vec_ambient(key)), vec_top(key)));
    } else if (!key.anomalous()) {
      out.insert(base_pair(key, whole(ambient_group(key).group)));
    } else {
      for (const Subset& g1 : q_sets(key).q_star) out.insert(base_pair(key, g1));
    }
    return std::vector<SubgroupPair>(out.begin(), out.end());
  });
}

const std::vector<SubgroupPair>& GammaSets::bar_big_x(const AObject& g) const {
  const AObject& key = g;
  return *impl_->memo.get({static_cast<int>(SetKind::XBar), key.tag()}, [&] {
    std::set<SubgroupPair> out;
    if (is_trivial_object(key)) {
      const auto& b = big_x(key);
      return std::vector<SubgroupPair>(b.begin(), b.end());
    }
    if (key.anomalous()) {
      const auto& x = big_x(key);
      out.insert(x.begin(), x.end());
      out.insert(base_pair(key, trivial_subgroup(ambient_group(key).group)));
      return std::vector<SubgroupPair>(out.begin(), out.end());
    }
    const auto& x0 = bar_x0(*this, impl_->memo, key);
    out.insert(x0.begin(), x0.end());
    if (key.is_vector()) {
      out.insert(space_pair(F2Subspace(vec_ambient(key)), vec_top(key)));
    } else {
      out.insert(base_pair(key, whole(ambient_group(key).group)));
    }
    return std::vector<SubgroupPair>(out.begin(), out.end());
  });
}

const GammaSets& standard_gammasets() {
  static const GammaSets gs;
  return gs;
}

}  // namespace famindex
