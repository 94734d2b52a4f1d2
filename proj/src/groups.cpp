#include "famindex/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "famindex/errors.hpp"

namespace famindex {

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& gens, int degree) {
  std::vector<Perm> elems{identity_perm(degree)};
  std::map<Perm, int> seen{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& s : gens) {
      Perm q = compose(s, elems[i]);
      if (seen.emplace(q, 0).second) elems.push_back(std::move(q));
    }
  }
  std::sort(elems.begin(), elems.end());
  FiniteGroup g;
  g.n_ = static_cast<int>(elems.size());
  g.table_.resize(static_cast<std::size_t>(g.n_) * g.n_);
  g.perms_ = elems;
  for (int a = 0; a < g.n_; ++a) {
    for (int b = 0; b < g.n_; ++b) g.table_[static_cast<std::size_t>(a) * g.n_ + b] = g.find_perm(compose(elems[a], elems[b]));
  }
  for (const Perm& p : elems) g.labels_.push_back(cycle_string(p));
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<int> table, int order, std::vector<std::string> labels) {
  if (static_cast<int>(table.size()) != order * order || static_cast<int>(labels.size()) != order) {
    throw std::invalid_argument("from_table: size mismatch");
  }
  FiniteGroup g;
  g.n_ = order;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  for (int a = 0; a < order; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw std::invalid_argument("from_table: element 0 is not the identity");
  }
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  inv_.assign(n_, -1);
  orders_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
    int m = 1;
    for (int y = a; y != 0; y = mul(y, a)) ++m;
    orders_[a] = m;
  }
}

int FiniteGroup::power(int a, int k) const {
  const int m = orders_[a];
  k = ((k % m) + m) % m;
  int out = 0;
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int o : orders_) e = std::lcm(e, o);
  return e;
}

int FiniteGroup::find_perm(const Perm& p) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  if (it == perms_.end() || *it != p) return -1;
  return static_cast<int>(it - perms_.begin());
}

Subset whole(const FiniteGroup& g) { return Subset(g.order(), true); }

Subset trivial_subgroup(const FiniteGroup& g) {
  Subset s(g.order(), false);
  s[0] = true;
  return s;
}

Subset generate(const FiniteGroup& g, const std::vector<int>& gens) {
  Subset s = trivial_subgroup(g);
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int x : gens) {
      const int y = g.mul(x, queue[i]);
      if (!s[y]) {
        s[y] = true;
        queue.push_back(y);
      }
    }
  }
  return s;
}

std::vector<int> members(const Subset& s) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(static_cast<int>(i));
  return out;
}

int subset_size(const Subset& s) { return static_cast<int>(std::count(s.begin(), s.end(), true)); }

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
  if (static_cast<int>(s.size()) != g.order() || !s[0]) return false;
  const auto m = members(s);
  for (int a : m)
    for (int b : m)
      if (!s[g.mul(a, b)]) return false;
  return true;
}

bool includes(const Subset& outer, const Subset& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] && !outer[i]) return false;
  return true;
}

Subset centralizer(const FiniteGroup& g, int x, const Subset& within) {
  Subset s(g.order(), false);
  for (int h = 0; h < g.order(); ++h) s[h] = within[h] && g.mul(h, x) == g.mul(x, h);
  return s;
}

Subset centralizer(const FiniteGroup& g, int x) { return centralizer(g, x, whole(g)); }

Subset conjugate(const FiniteGroup& g, const Subset& s, int h) {
  Subset out(g.order(), false);
  for (int x = 0; x < g.order(); ++x)
    if (s[x]) out[g.conj(h, x)] = true;
  return out;
}

bool is_normal(const FiniteGroup& g, const Subset& h, const Subset& k) {
  if (!includes(k, h)) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (!k[x]) continue;
    for (int y = 0; y < g.order(); ++y)
      if (h[y] && !h[g.conj(x, y)]) return false;
  }
  return true;
}

Subset normalizer(const FiniteGroup& g, const Subset& h, const Subset& within) {
  Subset out(g.order(), false);
  for (int x = 0; x < g.order(); ++x) out[x] = within[x] && conjugate(g, h, x) == h;
  return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(g.order(), false);
  for (int x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<int> cls;
    for (int h = 0; h < g.order(); ++h) {
      const int y = g.conj(h, x);
      if (!done[y]) {
        done[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

Embedded subgroup_group(const FiniteGroup& g, const Subset& s) {
  if (!is_subgroup(g, s)) throw std::invalid_argument("subgroup_group: not a subgroup");
  Embedded e;
  e.to_parent = members(s);
  e.from_parent.assign(g.order(), -1);
  const int m = static_cast<int>(e.to_parent.size());
  for (int i = 0; i < m; ++i) e.from_parent[e.to_parent[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(g.label(e.to_parent[a]));
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a) * m + b] = e.from_parent[g.mul(e.to_parent[a], e.to_parent[b])];
  }
  e.group = FiniteGroup::from_table(std::move(table), m, std::move(labels));
  return e;
}

Quotient quotient(const FiniteGroup& g, const Subset& k, const Subset& h) {
  if (!is_subgroup(g, k) || !is_subgroup(g, h)) throw std::invalid_argument("quotient: not subgroups");
  if (!is_normal(g, h, k)) throw NotNormal("subgroup of order " + std::to_string(subset_size(h)) + " in order " + std::to_string(subset_size(k)));
  Quotient q;
  q.proj.assign(g.order(), -1);
  const auto hm = members(h);
  for (int x = 0; x < g.order(); ++x) {
    if (!k[x] || q.proj[x] >= 0) continue;
    const int idx = static_cast<int>(q.section.size());
    q.section.push_back(x);
    for (int y : hm) q.proj[g.mul(x, y)] = idx;
  }
  const int m = static_cast<int>(q.section.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(g.label(q.section[a]) + "H");
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a) * m + b] = q.proj[g.mul(q.section[a], q.section[b])];
  }
  q.group = FiniteGroup::from_table(std::move(table), m, std::move(labels));
  return q;
}

std::vector<int> generating_set(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 1) return {};
  for (int a = 1; a < n; ++a)
    if (g.element_order(a) == n) return {a};
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (subset_size(generate(g, {a, b})) == n) return {a, b};
  std::vector<int> gens;
  Subset cur = trivial_subgroup(g);
  for (int a = 1; a < n; ++a) {
    if (cur[a]) continue;
    gens.push_back(a);
    cur = generate(g, gens);
  }
  return gens;
}

std::optional<std::vector<int>> extend_to_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                      const std::vector<int>& gens,
                                                      const std::vector<int>& images) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<int> map(a.order(), -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const int y = a.mul(gens[s], x);
      const int img = b.mul(images[s], map[x]);
      if (map[y] < 0) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != a.order()) return std::nullopt;
  std::vector<bool> hit(b.order(), false);
  for (int y : map) {
    if (hit[y]) return std::nullopt;
    hit[y] = true;
  }
  return map;
}

namespace {

template <class Visit>
void search_isomorphisms(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                         std::vector<int>& images, Visit&& visit, bool& stop) {
  if (stop) return;
  if (images.size() == gens.size()) {
    if (auto m = extend_to_isomorphism(a, b, gens, images)) {
      if (!visit(*m)) stop = true;
    }
    return;
  }
  const int want = a.element_order(gens[images.size()]);
  for (int y = 0; y < b.order() && !stop; ++y) {
    if (b.element_order(y) != want) continue;
    images.push_back(y);
    search_isomorphisms(a, b, gens, images, visit, stop);
    images.pop_back();
  }
}

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> p;
  for (int x = 0; x < g.order(); ++x) p.push_back(g.element_order(x));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || order_profile(a) != order_profile(b)) return std::nullopt;
  const auto gens = generating_set(a);
  std::vector<int> images;
  std::optional<std::vector<int>> found;
  bool stop = false;
  search_isomorphisms(a, b, gens, images, [&](const std::vector<int>& m) {
    found = m;
    return false;
  }, stop);
  return found;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  std::vector<int> images;
  std::vector<std::vector<int>> out;
  bool stop = false;
  search_isomorphisms(g, g, gens, images, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  }, stop);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& map) {
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

bool is_elementary_abelian_2(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) > 2) return false;
  return true;
}

std::vector<std::pair<Subset, Subset>> direct_factorizations(const FiniteGroup& g) {
  const auto classes = conjugacy_classes(g);
  const int r = static_cast<int>(classes.size());
  if (r > 24) throw SizeCap("direct_factorizations: " + std::to_string(r) + " classes");
  std::vector<Subset> normals;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << (r - 1)); ++m) {
    Subset s = trivial_subgroup(g);
    for (int c = 1; c < r; ++c)
      if ((m >> (c - 1)) & 1U)
        for (int x : classes[c]) s[x] = true;
    const int sz = subset_size(s);
    if (sz == 1 || sz == g.order() || g.order() % sz != 0) continue;
    if (is_subgroup(g, s)) normals.push_back(std::move(s));
  }
  std::vector<std::pair<Subset, Subset>> out;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      const int a = subset_size(normals[i]);
      const int b = subset_size(normals[j]);
      if (a * b != g.order()) continue;
      bool meet_trivial = true;
      for (int x = 1; x < g.order(); ++x)
        if (normals[i][x] && normals[j][x]) meet_trivial = false;
      if (meet_trivial) out.emplace_back(normals[i], normals[j]);
    }
  }
  return out;
}

const FiniteGroup& sym5() {
  static const FiniteGroup g = FiniteGroup::from_permutations({{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 5);
  return g;
}

const std::vector<std::string>& standard_subgroup_tags() {
  static const std::vector<std::string> tags{"S1", "S2", "S3", "S4", "S5", "D8", "S2S2", "S~2", "S3S2"};
  return tags;
}

Subset standard_subgroup(std::string_view tag) {
  const FiniteGroup& g = sym5();
  auto el = [&](const Perm& p) { return g.find_perm(p); };
  const int t12 = el({1, 0, 2, 3, 4});
  const int t34 = el({0, 1, 3, 2, 4});
  const int t45 = el({0, 1, 2, 4, 3});
  const int c123 = el({1, 2, 0, 3, 4});
  const int c1234 = el({1, 2, 3, 0, 4});
  if (tag == "S1") return trivial_subgroup(g);
  if (tag == "S2") return generate(g, {t12});
  if (tag == "S3") return generate(g, {t12, c123});
  if (tag == "S4") return generate(g, {t12, c1234});
  if (tag == "S5") return whole(g);
  if (tag == "D8") return centralizer(g, g.mul(t12, t34), generate(g, {t12, c1234}));
  if (tag == "S2S2") return generate(g, {t12, t34});
  if (tag == "S~2") return generate(g, {t45});
  if (tag == "S3S2") return centralizer(g, t45);
  throw UnknownTag(std::string(tag));
}

namespace {

const FiniteGroup& standard_group(std::string_view tag) {
  static std::mutex mu;
  static std::map<std::string, FiniteGroup, std::less<>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(tag);
  if (it == cache.end()) {
    it = cache.emplace(std::string(tag), subgroup_group(sym5(), standard_subgroup(tag)).group).first;
  }
  return it->second;
}

}  // namespace

std::vector<int> identify_aobject(const FiniteGroup& g, std::string_view tag) {
  const FiniteGroup& target = standard_group(tag);
  auto iso = find_isomorphism(g, target);
  if (!iso) throw NotIsomorphic("group of order " + std::to_string(g.order()) + " is not " + std::string(tag));
  return *iso;
}

}  // namespace famindex
