#include "famindex/mgamma.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "famindex/errors.hpp"
#include "famindex/f2spaces.hpp"
#include "famindex/memo.hpp"

namespace famindex {

namespace {

constexpr Word kOddMask = 0xAAAAAAAAAAAAAAAAULL;
constexpr Word kEvenMask = 0x5555555555555554ULL;

Ambient vec_ambient(const AObject& g) { return g.kind == AKind::Vec ? Ambient::v(g.n) : Ambient::vprime(g.n); }
F2Subspace vec_odd_part(const AObject& g) { return g.kind == AKind::Vec ? v_odd(g.n) : vprime_odd(g.n); }
F2Subspace vec_even_part(const AObject& g) { return g.kind == AKind::Vec ? v_even(g.n) : vprime_even(g.n); }

int position(const std::vector<Word>& sorted, Word w) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
  if (it == sorted.end() || *it != w) return -1;
  return static_cast<int>(it - sorted.begin());
}

GroupModel build_model(const AObject& g) {
  GroupModel m;
  m.object = g;
  if (!g.is_vector()) {
    m.group = ambient_group(g).group;
    return m;
  }
  m.words = vec_odd_part(g).elements();
  m.duals = vec_even_part(g).elements();
  const int n = static_cast<int>(m.words.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(to_string(F2Vector(m.words[a], vec_ambient(g))));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = position(m.words, m.words[a] ^ m.words[b]);
  }
  m.group = FiniteGroup::from_table(std::move(table), n, std::move(labels));
  return m;
}

Cyc sign(int bit) { return Cyc(bit ? -1L : 1L); }

}  // namespace

const GroupModel& group_model(const AObject& g) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<GroupModel>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(g.tag()); it != cache.end()) return *it->second;
  }
  auto m = std::make_unique<GroupModel>(build_model(g));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(g.tag(), std::move(m));
  return *it->second;
}

std::pair<Subset, Subset> pair_subsets(const GroupModel& m, const SubgroupPair& p) {
  const int n = m.group.order();
  if (!m.object.is_vector()) {
    if (static_cast<int>(p.small.size()) != n || static_cast<int>(p.large.size()) != n) {
      throw BadPair("pair does not live in " + m.object.tag());
    }
    return {p.small, p.large};
  }
  Subset s(n, false), l(n, false);
  for (int i = 0; i < n; ++i) {
    s[i] = p.spaces.small.contains(m.words[i]);
    l[i] = p.spaces.large.contains(m.words[i]);
  }
  return {s, l};
}

// ---- MSpace ----

void MSpace::init_classes() {
  const int n = group_.order();
  classes_ = conjugacy_classes(group_);
  class_of_.assign(n, -1);
  conjugator_.assign(n, -1);
  for (int c = 0; c < class_count(); ++c) {
    for (int y : classes_[c]) class_of_[y] = c;
    const int r = rep(c);
    for (int h = 0; h < n; ++h) {
      const int y = group_.conj(h, r);
      if (conjugator_[y] < 0) conjugator_[y] = group_.inv(h);
    }
  }
}

void MSpace::add_pairs() {
  offset_.clear();
  pairs_.clear();
  for (int c = 0; c < class_count(); ++c) {
    offset_.push_back(static_cast<int>(pairs_.size()));
    for (int s = 0; s < table(c).size(); ++s) pairs_.push_back({c, s});
  }
}

MSpace::MSpace(FiniteGroup g) : group_(std::move(g)) {
  init_classes();
  for (int c = 0; c < class_count(); ++c) {
    const Subset z = famindex::centralizer(group_, rep(c));
    auto it = std::find_if(slots_.begin(), slots_.end(), [&](const Slot& s) { return s.members == z; });
    if (it == slots_.end()) {
      Embedded e = subgroup_group(group_, z);
      Slot s;
      s.members = z;
      s.order = e.group.order();
      s.from_parent = e.from_parent;
      s.table = char_table(e.group);
      slots_.push_back(std::move(s));
      it = slots_.end() - 1;
    }
    slot_.push_back(static_cast<int>(it - slots_.begin()));
  }
  add_pairs();
}

MSpace::MSpace(const GroupModel& model) : group_(model.group) {
  if (!model.object.is_vector()) throw std::invalid_argument("MSpace: not a vector model");
  init_classes();
  const int n = group_.order();
  Slot s;
  s.members = whole(group_);
  s.order = n;
  s.from_parent.resize(n);
  std::iota(s.from_parent.begin(), s.from_parent.end(), 0);
  s.table.group_order = n;
  s.table.classes = classes_;
  s.table.class_of = class_of_;
  for (Word w : model.duals) {
    std::vector<Cyc> row;
    for (int i = 0; i < n; ++i) row.push_back(sign(symplectic_bits(w, model.words[i])));
    s.table.chars.push_back(std::move(row));
  }
  slots_.push_back(std::move(s));
  slot_.assign(class_count(), 0);
  add_pairs();
}

const Cyc& MSpace::sigma_value(int cls, int sigma, int g) const {
  const Slot& s = slots_[slot_[cls]];
  return s.table.value(sigma, s.from_parent[g]);
}

CommutingFunction MSpace::to_function(const MVector& v) const {
  CommutingFunction f;
  f.at.assign(class_count(), std::vector<Cyc>(group_.order()));
  for (const auto& [idx, coeff] : v) {
    const MPair& p = pairs_[idx];
    for (int g : members(centralizer(p.cls))) f.at[p.cls][g] += coeff * sigma_value(p.cls, p.sigma, g);
  }
  return f;
}

MVector MSpace::from_function(const CommutingFunction& f) const {
  MVector out;
  for (int c = 0; c < class_count(); ++c) {
    const auto zs = members(centralizer(c));
    const Cyc inv_order(mpq_class(1, centralizer_order(c)));
    for (int s = 0; s < table(c).size(); ++s) {
      Cyc acc;
      for (int g : zs) {
        if (!f.at[c][g].is_zero()) acc += f.at[c][g] * sigma_value(c, s, g).conj();
      }
      acc *= inv_order;
      if (!acc.is_zero()) out.emplace(index(c, s), std::move(acc));
    }
  }
  return out;
}

Cyc MSpace::evaluate(const CommutingFunction& f, int y, int g) const {
  const int k = conjugator_[y];
  return f.at[class_of_[y]][group_.conj(k, g)];
}

// ---- ss ----

namespace {

mpq_class lift_scale(const SsConfig& cfg, int group, int small, int large) {
  switch (cfg.lift) {
    case SsConfig::Lift::ByGroup: return mpq_class(1, group);
    case SsConfig::Lift::BySmall: return mpq_class(1, small);
    case SsConfig::Lift::ByLarge: break;
  }
  return mpq_class(1, large);
}

MVector convert_back(const MSpace& m, const CommutingFunction& f, const SsConfig& cfg) {
  if (cfg.conjugate_sigma) return m.from_function(f);
  // Mutation hook: pair against σ instead of its conjugate.
  MVector out;
  for (int c = 0; c < m.class_count(); ++c) {
    const Cyc inv_order(mpq_class(1, m.centralizer_order(c)));
    for (int s = 0; s < m.table(c).size(); ++s) {
      Cyc acc;
      for (int g : members(m.centralizer(c))) acc += f.at[c][g] * m.sigma_value(c, s, g);
      acc *= inv_order;
      if (!acc.is_zero()) out.emplace(m.index(c, s), std::move(acc));
    }
  }
  return out;
}

void check_pair(const FiniteGroup& g, const Subset& small, const Subset& large) {
  if (static_cast<int>(small.size()) != g.order() || static_cast<int>(large.size()) != g.order() ||
      !is_subgroup(g, large) || !is_subgroup(g, small) || !includes(large, small) || !is_normal(g, small, large)) {
    throw BadPair("not a normal pair of subgroups");
  }
}

}  // namespace

MVector ss_induce(const MSpace& m, const Subset& small, const Subset& large, const std::vector<int>& phi,
                  const MSpace& target, const MVector& source, const SsConfig& cfg) {
  const FiniteGroup& g = m.group();
  check_pair(g, small, large);
  const FiniteGroup& q = target.group();
  const int n = g.order();
  if (static_cast<int>(phi.size()) != n) throw BadPair("quotient map has the wrong length");
  std::vector<bool> hit(q.order(), false);
  const auto lm = members(large);
  for (int x = 0; x < n; ++x) {
    if ((phi[x] >= 0) != static_cast<bool>(large[x])) throw BadPair("quotient map not defined on exactly Γ''");
    if (phi[x] >= q.order()) throw BadPair("quotient map leaves the target");
    if (phi[x] >= 0) {
      hit[phi[x]] = true;
      if ((phi[x] == 0) != static_cast<bool>(small[x])) throw BadPair("quotient map kernel is not Γ'");
    }
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw BadPair("quotient map not onto");
  for (int a : lm)
    for (int b : lm)
      if (phi[g.mul(a, b)] != q.mul(phi[a], phi[b])) throw BadPair("quotient map not a homomorphism");

  const CommutingFunction fbar = target.to_function(source);
  const Cyc scale(lift_scale(cfg, n, subset_size(small), subset_size(large)));
  CommutingFunction f;
  f.at.assign(m.class_count(), std::vector<Cyc>(n));
  for (int c = 0; c < m.class_count(); ++c) {
    const int x = m.rep(c);
    for (int gz : members(m.centralizer(c))) {
      Cyc acc;
      for (int h = 0; h < n; ++h) {
        const int a = g.conj(h, x);
        const int b = g.conj(h, gz);
        if (large[a] && large[b]) acc += target.evaluate(fbar, phi[a], phi[b]);
      }
      f.at[c][gz] = acc * scale;
    }
  }
  return convert_back(m, f, cfg);
}

MVector ss_unit(const MSpace& m, const Subset& small, const Subset& large, const SsConfig& cfg) {
  const FiniteGroup& g = m.group();
  check_pair(g, small, large);
  const int n = g.order();
  const mpq_class scale = lift_scale(cfg, n, subset_size(small), subset_size(large));
  CommutingFunction f;
  f.at.assign(m.class_count(), std::vector<Cyc>(n));
  for (int c = 0; c < m.class_count(); ++c) {
    const int x = m.rep(c);
    for (int gz : members(m.centralizer(c))) {
      long count = 0;
      for (int h = 0; h < n; ++h) count += small[g.conj(h, x)] && large[g.conj(h, gz)];
      if (count != 0) f.at[c][gz] = Cyc(mpq_class(count * scale));
    }
  }
  return convert_back(m, f, cfg);
}

// ---- M(Γ) per object ----

const MSpace& m_space(const AObject& g) {
  static detail::Memo<std::string, MSpace> memo;
  return *memo.get(g.tag(), [&] {
    const GroupModel& model = group_model(g);
    return g.is_vector() ? MSpace(model) : MSpace(model.group);
  });
}

Word m_word(const AObject& g, const MPair& p) {
  if (!g.is_vector()) throw std::invalid_argument("m_word: not a vector kind");
  const GroupModel& model = group_model(g);
  return model.words[m_space(g).rep(p.cls)] ^ model.duals[p.sigma];
}

int m_index_of_word(const AObject& g, Word w) {
  const GroupModel& model = group_model(g);
  const int x = position(model.words, w & kOddMask);
  const int y = position(model.duals, w & kEvenMask);
  if (x < 0 || y < 0 || (w & ~(kOddMask | kEvenMask)) != 0) throw BadIndex("word outside M(" + g.tag() + ")");
  return x * static_cast<int>(model.duals.size()) + y;
}

std::string mpair_string(const AObject& g, const MPair& p) {
  if (g.is_vector()) return to_string(F2Vector(m_word(g, p), vec_ambient(g)));
  const MSpace& m = m_space(g);
  const std::string x = cycle_string(sym5().perm(ambient_group(g).to_s5[m.rep(p.cls)]));
  if (p.sigma == 0) return "(" + x + ", 1)";
  return "(" + x + ", chi" + std::to_string(p.sigma) + ":" + std::to_string(m.degree(p.cls, p.sigma)) + ")";
}

std::vector<Word> rho_vector_words(const AObject& g, const SubspacePair& p) {
  const F2Subspace perp = annihilator(p.large, vec_even_part(g));
  F2Subspace s(vec_ambient(g));
  for (Word w : p.small.basis()) s.insert(w);
  for (Word w : perp.basis()) s.insert(w);
  return s.elements();
}

// ---- families ----

namespace {

void finish_family(RhoFamily& f) {
  std::set<int> support;
  for (const auto& row : f.rows)
    for (const auto& [i, c] : row) support.insert(i);
  for (const auto& v : f.exact)
    for (const auto& [i, c] : v) support.insert(i);
  f.m_zero.assign(support.begin(), support.end());
}

std::vector<int> quotient_map(const GammaSets& gs, const AObject& g, const XEntry& e, const Subset& large) {
  const GroupModel& model = group_model(g);
  const int n = model.group.order();
  std::vector<int> phi(n, -1);
  if (g.is_vector()) {
    const LinearMap c = g.kind == AKind::Vec ? cmap1(g.n, e.index) : cmap_prime1(g.n, e.index);
    const GroupModel& qm = group_model(e.quotient);
    for (int x = 0; x < n; ++x)
      if (large[x]) phi[x] = position(qm.words, c.apply(model.words[x]));
    return phi;
  }
  const auto [small, lg] = pair_subsets(model, e.pair);
  const Quotient q = quotient(model.group, lg, small);
  const AObject qtag = e.quotient.canonical();
  std::vector<int> iso = identify_aobject(q.group, "S" + std::to_string(qtag.n));
  if (gs.config().twist != 0) {
    const auto auts = automorphisms(ambient_group(qtag).group);
    const auto& a = auts[gs.config().twist % auts.size()];
    for (int& y : iso) y = a[y];
  }
  for (int x = 0; x < n; ++x)
    if (q.proj[x] >= 0) phi[x] = iso[q.proj[x]];
  return phi;
}

bool same_vector(const MVector& a, const MVector& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

}  // namespace

struct MGamma::Impl {
  detail::Memo<std::tuple<std::string, bool, bool>, RhoFamily> memo;
};

MGamma::MGamma(const GammaSets& gs, SsConfig cfg) : gs_(gs), cfg_(cfg), impl_(std::make_unique<Impl>()) {}
MGamma::~MGamma() = default;

const RhoFamily& MGamma::family(const AObject& g, bool bar, bool generic) const {
  return *impl_->memo.get({g.tag(), bar, generic}, [&] {
    RhoFamily f;
    f.object = g;
    f.bar = bar;
    f.pairs = bar ? gs_.bar_big_x(g) : gs_.big_x(g);
    if (g.is_vector() && !generic && cfg_ == SsConfig{}) {
      for (const auto& p : f.pairs) {
        IntRow row;
        for (Word w : rho_vector_words(g, p.spaces)) row.emplace_back(m_index_of_word(g, w), 1L);
        std::sort(row.begin(), row.end());
        f.rows.push_back(std::move(row));
      }
      finish_family(f);
      return f;
    }
    const MSpace& m = m_space(g);
    const GroupModel& model = group_model(g);
    for (const auto& p : f.pairs) {
      const auto [s, l] = pair_subsets(model, p);
      f.exact.push_back(ss_unit(m, s, l, cfg_));
    }
    for (const auto& v : f.exact) {
      IntRow row;
      for (const auto& [i, c] : v) {
        if (!c.is_rational() || c.rational().get_den() != 1) {
          f.integral = false;
          continue;
        }
        if (c.rational() < 0) f.nonnegative = false;
        row.emplace_back(i, c.rational().get_num().get_si());
      }
      f.rows.push_back(std::move(row));
    }
    if (!f.integral) f.rows.clear();
    finish_family(f);
    return f;
  });
}

MVector MGamma::rho(const AObject& g, const SubgroupPair& p) const {
  const auto [s, l] = pair_subsets(group_model(g), p);
  return ss_unit(m_space(g), s, l, cfg_);
}

bool MGamma::tower_consistent(const AObject& g) const {
  if (g.order() == 1) return true;
  const GroupModel& model = group_model(g);
  const MSpace& m = m_space(g);
  for (const XEntry& e : gs_.x_set(g)) {
    const auto [small, large] = pair_subsets(model, e.pair);
    const std::vector<int> phi = quotient_map(gs_, g, e, large);
    const AObject& target = e.quotient;
    const GroupModel& tm = group_model(target);
    const MSpace& tms = m_space(target);
    for (const SubgroupPair& p1 : gs_.big_x(target)) {
      const auto [s1, l1] = pair_subsets(tm, p1);
      const MVector src = ss_unit(tms, s1, l1, cfg_);
      Subset ts(model.group.order(), false), tl(model.group.order(), false);
      for (int x = 0; x < model.group.order(); ++x) {
        if (phi[x] < 0) continue;
        ts[x] = s1[phi[x]];
        tl[x] = l1[phi[x]];
      }
      if (!same_vector(ss_induce(m, small, large, phi, tms, src, cfg_), ss_unit(m, ts, tl, cfg_))) return false;
    }
  }
  return true;
}

const MGamma& standard_mgamma() {
  static const MGamma mg(standard_gammasets());
  return mg;
}

// ---- rank, j, order ----

namespace {

template <class T>
int eliminate(std::vector<std::vector<T>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && a[p][c] == T()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == T()) continue;
      const T factor = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k)
        if (!(a[rank][k] == T())) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> positions_of(const RhoFamily& f) {
  int top = f.m_zero.empty() ? 0 : f.m_zero.back() + 1;
  std::vector<int> pos(top, -1);
  for (std::size_t k = 0; k < f.m_zero.size(); ++k) pos[f.m_zero[k]] = static_cast<int>(k);
  return pos;
}

// Positions of M_0 carrying coefficient exactly 1 (resp. nonzero) in each ρ.
std::vector<std::vector<int>> incidences(const RhoFamily& f, bool ones) {
  const auto pos = positions_of(f);
  std::vector<std::vector<int>> out(f.pairs.size());
  for (std::size_t p = 0; p < f.pairs.size(); ++p) {
    if (f.integral) {
      for (const auto& [i, c] : f.rows[p])
        if (!ones || c == 1) out[p].push_back(pos[i]);
    } else {
      for (const auto& [i, c] : f.exact[p])
        if (!ones || c == Cyc(1L)) out[p].push_back(pos[i]);
    }
  }
  return out;
}

}  // namespace

int rho_rank(const RhoFamily& f) {
  const auto pos = positions_of(f);
  const std::size_t cols = f.m_zero.size();
  if (f.integral) {
    std::vector<std::vector<mpq_class>> a(f.rows.size(), std::vector<mpq_class>(cols));
    for (std::size_t p = 0; p < f.rows.size(); ++p)
      for (const auto& [i, c] : f.rows[p]) a[p][pos[i]] = c;
    return eliminate(std::move(a));
  }
  std::vector<std::vector<Cyc>> a(f.exact.size(), std::vector<Cyc>(cols));
  for (std::size_t p = 0; p < f.exact.size(); ++p)
    for (const auto& [i, c] : f.exact[p]) a[p][pos[i]] = c;
  return eliminate(std::move(a));
}

std::vector<int> bijection_j(const RhoFamily& f) {
  const int n = static_cast<int>(f.m_zero.size());
  if (n != static_cast<int>(f.pairs.size())) {
    throw NoBijection("|M_0| = " + std::to_string(n) + " but |X| = " + std::to_string(f.pairs.size()));
  }
  const auto ones = incidences(f, true);
  std::vector<std::vector<int>> by_m(n);
  for (int p = 0; p < n; ++p)
    for (int k : ones[p]) by_m[k].push_back(p);

  // Kuhn's augmenting paths from each element of M_0.
  std::vector<int> match_pair(n, -1);  // pair -> m position
  std::vector<int> match_m(n, -1);     // m position -> pair
  std::vector<int> seen(n, -1);
  auto augment = [&](auto&& self, int k, int stamp) -> bool {
    for (int p : by_m[k]) {
      if (seen[p] == stamp) continue;
      seen[p] = stamp;
      if (match_pair[p] < 0 || self(self, match_pair[p], stamp)) {
        match_pair[p] = k;
        match_m[k] = p;
        return true;
      }
    }
    return false;
  };
  for (int k = 0; k < n; ++k) {
    if (!augment(augment, k, k)) throw NoBijection("no coefficient-1 matching covers every element of M_0");
  }

  // Unique iff no alternating cycle: p -> q when p has a spare 1 at q's partner.
  std::vector<std::vector<int>> next(n);
  std::vector<int> indeg(n, 0);
  for (int p = 0; p < n; ++p) {
    for (int k : ones[p]) {
      const int q = match_m[k];
      if (q != p) {
        next[p].push_back(q);
        ++indeg[q];
      }
    }
  }
  std::vector<int> queue;
  for (int p = 0; p < n; ++p)
    if (indeg[p] == 0) queue.push_back(p);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int q : next[queue[i]])
      if (--indeg[q] == 0) queue.push_back(q);
  if (static_cast<int>(queue.size()) != n) throw NotUnique("a second coefficient-1 matching exists");
  return match_m;
}

PartialOrder partial_order(const RhoFamily& f, const std::vector<int>& j) {
  const int n = static_cast<int>(f.m_zero.size());
  const auto supp = incidences(f, false);
  PartialOrder po;
  po.elements = f.m_zero;
  // b -> a for a in supp ρ_{j(b)}, a != b
  std::vector<std::vector<int>> next(n);
  std::vector<int> indeg(n, 0);
  for (int b = 0; b < n; ++b) {
    for (int a : supp[j[b]]) {
      if (a == b) continue;
      next[b].push_back(a);
      ++indeg[a];
    }
  }
  std::vector<int> order;
  for (int b = 0; b < n; ++b)
    if (indeg[b] == 0) order.push_back(b);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int a : next[order[i]])
      if (--indeg[a] == 0) order.push_back(a);
  if (static_cast<int>(order.size()) != n) throw NotAntisymmetric("the generated relation has a cycle");

  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  po.below.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int b = *it;
    po.below[b][b / 64] |= std::uint64_t{1} << (b % 64);
    for (int a : next[b])
      for (std::size_t w = 0; w < words; ++w) po.below[b][w] |= po.below[a][w];
  }
  for (int b = 0; b < n; ++b) {
    for (int a : next[b]) {
      bool cover = true;
      for (int c : next[b]) {
        if (c != a && po.leq(a, c)) {
          cover = false;
          break;
        }
      }
      if (cover) po.covers.emplace_back(a, b);
    }
  }
  std::sort(po.covers.begin(), po.covers.end());
  po.covers.erase(std::unique(po.covers.begin(), po.covers.end()), po.covers.end());
  return po;
}

bool vector_j_matches_epsilon(const RhoFamily& f, const std::vector<int>& j) {
  const AObject& g = f.object;
  if (!g.is_vector()) throw std::invalid_argument("vector_j_matches_epsilon: not a vector kind");
  const auto pos = positions_of(f);
  std::map<SubspacePair, int> pair_index;
  for (std::size_t p = 0; p < f.pairs.size(); ++p) pair_index[f.pairs[p].spaces] = static_cast<int>(p);
  auto check = [&](Word w, const SubspacePair& want) {
    const int idx = m_index_of_word(g, w);
    if (idx >= static_cast<int>(pos.size()) || pos[idx] < 0) return false;
    auto it = pair_index.find(want);
    return it != pair_index.end() && j[pos[idx]] == it->second;
  };
  if (g.kind == AKind::Vec) {
    for (const auto& e : enum_cf(g.n))
      if (!check(epsilon(e).bits(), pi_map(e, g.n))) return false;
    return true;
  }
  for (const auto& e : enum_cf(g.n - 1)) {
    const F2Subspace img = lambda_map(e, g.n);
    if (!check(epsilon_prime(img, g.n).bits(), lambda_prime(img, g.n))) return false;
  }
  return true;
}

}  // namespace famindex
