// Dixon-Schneider: the columns of the class-multiplication matrices share
// eigenvectors, one per irreducible character. We split over F_p for a
// prime p = 1 mod exponent, then lift each character value from the
// eigenvalue multiplicities of the element's cyclic subgroup.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "famindex/errors.hpp"
#include "famindex/groups.hpp"

namespace famindex {

namespace {

using i64 = long long;

i64 mod_pow(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 mod_inv(i64 a, i64 p) { return mod_pow(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](i64 f) { return mod_pow(g, (p - 1) / f, p) != 1; })) return g;
  }
  throw std::logic_error("no primitive root");
}

using Row = std::vector<i64>;

// Null space of the r x s matrix given by its columns.
std::vector<Row> null_space(std::vector<Row> cols, int r, i64 p) {
  const int s = static_cast<int>(cols.size());
  // rows of the augmented system: m[i][t] = cols[t][i]
  std::vector<Row> m(r, Row(s));
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < s; ++t) m[i][t] = cols[t][i];
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < s && rank < r; ++c) {
    int piv = rank;
    while (piv < r && m[piv][c] == 0) ++piv;
    if (piv == r) continue;
    std::swap(m[piv], m[rank]);
    const i64 inv = mod_inv(m[rank][c], p);
    for (auto& v : m[rank]) v = v * inv % p;
    for (int i = 0; i < r; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const i64 f = m[i][c];
      for (int k = 0; k < s; ++k) m[i][k] = ((m[i][k] - f * m[rank][k]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<Row> out;
  std::vector<bool> is_pivot(s, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < s; ++free) {
    if (is_pivot[free]) continue;
    Row v(s, 0);
    v[free] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = (p - m[i][free]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

struct ClassData {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<i64> sizes;
  std::vector<int> inverse_class;
  // consts[j][i][k]: pairs (x in C_j, y in C_i) with xy = rep_k
  std::vector<std::vector<std::vector<i64>>> consts;
};

ClassData class_data(const FiniteGroup& g) {
  ClassData d;
  d.classes = conjugacy_classes(g);
  const int r = static_cast<int>(d.classes.size());
  d.class_of.assign(g.order(), -1);
  for (int c = 0; c < r; ++c) {
    for (int x : d.classes[c]) d.class_of[x] = c;
    d.sizes.push_back(static_cast<i64>(d.classes[c].size()));
  }
  for (int c = 0; c < r; ++c) d.inverse_class.push_back(d.class_of[g.inv(d.classes[c][0])]);
  d.consts.assign(r, std::vector<std::vector<i64>>(r, std::vector<i64>(r, 0)));
  for (int k = 0; k < r; ++k) {
    const int z = d.classes[k][0];
    for (int x = 0; x < g.order(); ++x) {
      const int y = g.mul(g.inv(x), z);
      ++d.consts[d.class_of[x]][d.class_of[y]][k];
    }
  }
  return d;
}

// Simultaneous eigenvectors of the class matrices over F_p, or empty if
// some eigenspace fails to split to dimension one.
std::vector<Row> split(const ClassData& d, i64 p) {
  const int r = static_cast<int>(d.classes.size());
  std::vector<std::vector<Row>> spaces(1);
  for (int i = 0; i < r; ++i) {
    Row e(r, 0);
    e[i] = 1;
    spaces[0].push_back(e);
  }
  for (int j = 1; j < r; ++j) {
    std::vector<std::vector<Row>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // images M_j b for each basis vector b
      std::vector<Row> images;
      for (const Row& b : basis) {
        Row img(r, 0);
        for (int i = 0; i < r; ++i) {
          i64 s = 0;
          for (int k = 0; k < r; ++k) s += d.consts[j][i][k] % p * b[k] % p;
          img[i] = s % p;
        }
        images.push_back(std::move(img));
      }
      std::size_t found = 0;
      for (i64 lambda = 0; lambda < p && found < basis.size(); ++lambda) {
        std::vector<Row> cols;
        for (std::size_t t = 0; t < basis.size(); ++t) {
          Row c(r);
          for (int i = 0; i < r; ++i) c[i] = ((images[t][i] - lambda * basis[t][i]) % p + p) % p;
          cols.push_back(std::move(c));
        }
        const auto ns = null_space(cols, r, p);
        if (ns.empty()) continue;
        std::vector<Row> sub;
        for (const Row& coef : ns) {
          Row v(r, 0);
          for (std::size_t t = 0; t < basis.size(); ++t)
            for (int i = 0; i < r; ++i) v[i] = (v[i] + coef[t] * basis[t][i]) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != basis.size()) return {};
    }
    spaces = std::move(next);
  }
  std::vector<Row> out;
  for (auto& s : spaces) {
    if (s.size() != 1) return {};
    out.push_back(std::move(s[0]));
  }
  return out;
}

std::optional<CharacterTable> attempt(const FiniteGroup& g, const ClassData& d, i64 p) {
  const int r = static_cast<int>(d.classes.size());
  const int n = g.order();
  const int e = g.exponent();
  const auto vecs = split(d, p);
  if (static_cast<int>(vecs.size()) != r) return std::nullopt;
  const i64 z = mod_pow(primitive_root(p), (p - 1) / e, p);
  const int max_deg = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)))) + 1;

  CharacterTable t;
  t.classes = d.classes;
  t.class_of = d.class_of;
  t.group_order = n;
  for (Row w : vecs) {
    if (w[0] == 0) return std::nullopt;
    const i64 w0inv = mod_inv(w[0], p);
    for (auto& v : w) v = v * w0inv % p;
    i64 s = 0;
    for (int i = 0; i < r; ++i) s = (s + w[i] * w[d.inverse_class[i]] % p * mod_inv(d.sizes[i] % p, p)) % p;
    if (s == 0) return std::nullopt;
    const i64 deg_sq = static_cast<i64>(n) % p * mod_inv(s, p) % p;
    int deg = 0;
    for (int c = 1; c <= max_deg; ++c)
      if (static_cast<i64>(c) * c % p == deg_sq && n % c == 0) deg = c;
    if (deg == 0) return std::nullopt;
    Row chi(r);
    for (int i = 0; i < r; ++i) chi[i] = w[i] * deg % p * mod_inv(d.sizes[i] % p, p) % p;

    std::vector<Cyc> row;
    for (int i = 0; i < r; ++i) {
      const int x = d.classes[i][0];
      const int m = g.element_order(x);
      const i64 zm = mod_pow(z, e / m, p);
      Cyc value;
      i64 total = 0;
      for (int l = 0; l < m; ++l) {
        i64 acc = 0;
        for (int k = 0; k < m; ++k) {
          const i64 v = chi[d.class_of[g.power(x, k)]];
          acc = (acc + v * mod_pow(zm, static_cast<i64>(m - l) * k % m, p)) % p;
        }
        const i64 mult = acc * mod_inv(m, p) % p;
        if (mult > deg) return std::nullopt;
        total += mult;
        if (mult != 0) value += Cyc(static_cast<long>(mult)) * Cyc::root(m, l);
      }
      if (total != deg) return std::nullopt;
      row.push_back(std::move(value));
    }
    t.chars.push_back(std::move(row));
  }

  // exact orthogonality
  for (int a = 0; a < r; ++a) {
    for (int b = a; b < r; ++b) {
      Cyc s;
      for (int i = 0; i < r; ++i) s += Cyc(static_cast<long>(d.sizes[i])) * t.chars[a][i] * t.chars[b][i].conj();
      if (s != Cyc(a == b ? static_cast<long>(n) : 0L)) return std::nullopt;
    }
  }
  auto is_trivial = [](const std::vector<Cyc>& row) {
    return std::all_of(row.begin(), row.end(), [](const Cyc& c) { return c == Cyc(1L); });
  };
  std::sort(t.chars.begin(), t.chars.end(), [&](const auto& x, const auto& y) {
    const bool tx = is_trivial(x);
    const bool ty = is_trivial(y);
    if (tx != ty) return tx;
    if (x[0] != y[0]) return x[0] < y[0];
    return x < y;
  });
  return t;
}

}  // namespace

CharacterTable char_table(const FiniteGroup& g) {
  if (g.order() > 200) throw SizeCap("char_table order " + std::to_string(g.order()));
  const int e = g.exponent();
  if (Cyc::kOrder % e != 0) throw SizeCap("exponent " + std::to_string(e) + " does not divide 60");
  const ClassData d = class_data(g);
  const i64 floor = std::max<i64>(50, static_cast<i64>(2 * std::sqrt(static_cast<double>(g.order()))) + 1);
  int tries = 0;
  for (i64 p = e + 1; tries < 20; p += e) {
    if (p <= floor || !is_prime(p)) continue;
    ++tries;
    if (auto t = attempt(g, d, p)) return std::move(*t);
  }
  throw std::logic_error("char_table: no prime separated the characters");
}

}  // namespace famindex
