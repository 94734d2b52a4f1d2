#include "famindex/inductive.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "famindex/errors.hpp"
#include "famindex/f2spaces.hpp"
#include "famindex/memo.hpp"

namespace famindex {

namespace {

Word e(int i) { return Word{1} << i; }

void check_index(int d, int j) {
  if (d < 2 || j < 1 || j > d) {
    throw BadIndex("C_j needs D >= 2 and j in [1,D], got D=" + std::to_string(d) +
                   " j=" + std::to_string(j));
  }
}

void check_prime_index(int d, int j) {
  if (d < 3 || d % 2 == 0 || j < 1 || j > d) {
    throw BadIndex("C'_j needs odd D >= 3 and j in [1,D], got D=" + std::to_string(d) +
                   " j=" + std::to_string(j));
  }
}

// Odd indices 1, 3, ..., top.
std::vector<Word> odd_units(int top) {
  std::vector<Word> out;
  for (int i = 1; i <= top; i += 2) out.push_back(e(i));
  return out;
}

// Pushes a map through the projections V_D -> V'_D and V_{D-2} -> V'_{D-2}.
LinearMap descend(const LinearMap& m, int d) {
  std::vector<Word> src, img;
  for (std::size_t k = 0; k < m.domain_rows().size(); ++k) {
    src.push_back(canonical_vprime(m.domain_rows()[k], d));
    img.push_back(canonical_vprime(m.image_rows()[k], d - 2));
  }
  return LinearMap(Ambient::vprime(d), Ambient::vprime(d - 2), src, img);
}

}  // namespace

LinearMap::LinearMap(Ambient domain_ambient, Ambient codomain_ambient,
                     const std::vector<Word>& sources, const std::vector<Word>& images)
    : dom_amb_(domain_ambient), cod_amb_(codomain_ambient) {
  if (sources.size() != images.size()) throw std::invalid_argument("LinearMap: size mismatch");
  struct Row {
    Word src, img;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < sources.size(); ++k) rows.push_back({sources[k], images[k]});
  std::size_t rank = 0;
  for (int bit = 0; bit < 64 && rank < rows.size(); ++bit) {
    std::size_t p = rank;
    while (p < rows.size() && !((rows[p].src >> bit) & 1U)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q != rank && ((rows[q].src >> bit) & 1U)) {
        rows[q].src ^= rows[rank].src;
        rows[q].img ^= rows[rank].img;
      }
    }
    ++rank;
  }
  for (std::size_t q = rank; q < rows.size(); ++q) {
    if (rows[q].img != 0) throw std::invalid_argument("LinearMap: not well defined");
  }
  rows.resize(rank);
  for (const auto& r : rows) {
    rows_.push_back(r.src);
    images_.push_back(r.img);
  }
}

F2Subspace LinearMap::domain() const { return F2Subspace::span(rows_, dom_amb_); }
F2Subspace LinearMap::image() const { return F2Subspace::span(images_, cod_amb_); }
F2Subspace LinearMap::kernel() const { return preimage(F2Subspace(cod_amb_)); }

Word LinearMap::apply(Word v) const {
  Word out = 0;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if ((v >> std::countr_zero(rows_[k])) & 1U) {
      v ^= rows_[k];
      out ^= images_[k];
    }
  }
  if (v != 0) throw BadIndex("vector outside the domain of the map");
  return out;
}

F2Subspace LinearMap::preimage(const F2Subspace& target) const {
  struct Row {
    Word residue, src;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < rows_.size(); ++k) rows.push_back({target.reduce(images_[k]), rows_[k]});
  std::size_t rank = 0;
  for (int bit = 0; bit < 64 && rank < rows.size(); ++bit) {
    std::size_t p = rank;
    while (p < rows.size() && !((rows[p].residue >> bit) & 1U)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q != rank && ((rows[q].residue >> bit) & 1U)) {
        rows[q].residue ^= rows[rank].residue;
        rows[q].src ^= rows[rank].src;
      }
    }
    ++rank;
  }
  F2Subspace out(dom_amb_);
  for (std::size_t q = rank; q < rows.size(); ++q) out.insert(rows[q].src);
  return out;
}

std::string to_string(const SubspacePair& p) {
  return "(" + to_string(p.small) + " ⊆ " + to_string(p.large) + ")";
}

LinearMap cmap(int d, int j) {
  check_index(d, j);
  std::vector<Word> starred;
  if (j == 1) {
    for (int i = 3; i <= d; ++i) starred.push_back(e(i));
  } else if (j < d) {
    for (int i = 1; i <= j - 2; ++i) starred.push_back(e(i));
    starred.push_back(interval_bits(j - 1, j + 1));
    for (int i = j + 2; i <= d; ++i) starred.push_back(e(i));
  } else {
    for (int i = 1; i <= d - 2; ++i) starred.push_back(e(i));
  }
  std::vector<Word> src{e(j)}, img{0};
  for (std::size_t k = 0; k < starred.size(); ++k) {
    src.push_back(starred[k]);
    img.push_back(e(static_cast<int>(k) + 1));
  }
  return LinearMap(Ambient::v(d), Ambient::v(d - 2), src, img);
}

LinearMap cmap1(int d, int j) {
  check_index(d, j);
  const int dminus = d % 2 == 1 ? d : d - 1;
  std::vector<Word> src, img;
  const auto targets = odd_units(dminus - 2);
  if (j % 2 == 1) {
    src.push_back(e(j));
    img.push_back(0);
    std::size_t k = 0;
    for (int i = 1; i <= dminus; i += 2) {
      if (i == j) continue;
      src.push_back(e(i));
      img.push_back(targets.at(k++));
    }
  } else {
    std::vector<Word> starred;
    if (j < d) {
      for (int i = 1; i <= j - 3; i += 2) starred.push_back(e(i));
      starred.push_back(e(j - 1) | e(j + 1));
      for (int i = j + 3; i <= dminus; i += 2) starred.push_back(e(i));
    } else {
      for (int i = 1; i <= dminus - 2; i += 2) starred.push_back(e(i));
    }
    if (starred.size() != targets.size()) throw std::logic_error("cmap1: basis count mismatch");
    src = starred;
    img = targets;
  }
  return LinearMap(Ambient::v(d), Ambient::v(d - 2), src, img);
}

LinearMap cmap_prime(int d, int j) {
  check_prime_index(d, j);
  return descend(cmap(d, j), d);
}

LinearMap cmap_prime1(int d, int j) {
  check_prime_index(d, j);
  return descend(cmap1(d, j), d);
}

F2Subspace v_even(int d) { return F2Subspace::coordinate(even_bits(d), Ambient::v(d)); }
F2Subspace v_odd(int d) { return F2Subspace::coordinate(odd_bits(d), Ambient::v(d)); }
F2Subspace vprime_even(int d) {
  return F2Subspace::coordinate(even_bits(d - 1), Ambient::vprime(d));
}
F2Subspace vprime_odd(int d) {
  return F2Subspace::coordinate(odd_bits(d - 2), Ambient::vprime(d));
}

namespace {

template <class T>
std::vector<T> sorted_unique(std::set<T> s) {
  return std::vector<T>(s.begin(), s.end());
}

detail::Memo<int, std::vector<F2Subspace>> cf_memo, cf_prime_memo;
detail::Memo<int, std::vector<SubspacePair>> occ_memo, occ_prime_memo;

void check_bound(int d) {
  if (d < 0 || d > kMaxBound) throw BadIndex("D=" + std::to_string(d));
}

void check_odd_bound(int d) {
  if (d < 1 || d % 2 == 0 || d > kMaxBound) throw BadIndex("need odd D, got " + std::to_string(d));
}

}  // namespace

const std::vector<F2Subspace>& enum_cf(int d) {
  check_bound(d);
  return *cf_memo.get(d, [d] {
    const Ambient amb = Ambient::v(d);
    std::set<F2Subspace> out{F2Subspace(amb)};
    if (d == 1) out.insert(F2Subspace::span({e(1)}, amb));
    if (d >= 2) {
      const auto& lower = enum_cf(d - 2);
      for (int j = 1; j <= d; ++j) {
        const LinearMap c = cmap(d, j);
        for (const auto& ep : lower) out.insert(c.preimage(ep));
      }
    }
    return sorted_unique(std::move(out));
  });
}

const std::vector<SubspacePair>& enum_occ(int d) {
  check_bound(d);
  return *occ_memo.get(d, [d] {
    const Ambient amb = Ambient::v(d);
    const F2Subspace zero(amb);
    std::set<SubspacePair> out;
    if (d == 0) out.insert({zero, zero});
    if (d == 1) {
      const auto v1 = v_odd(1);
      out.insert({v1, v1});
      out.insert({zero, v1});
    }
    if (d >= 2) {
      out.insert({zero, v_odd(d)});
      const auto& lower = enum_occ(d - 2);
      for (int j = 1; j <= d; ++j) {
        const LinearMap c = cmap1(d, j);
        for (const auto& p : lower) out.insert({c.preimage(p.small), c.preimage(p.large)});
      }
    }
    return sorted_unique(std::move(out));
  });
}

const std::vector<F2Subspace>& enum_cf_prime(int d) {
  check_odd_bound(d);
  return *cf_prime_memo.get(d, [d] {
    const Ambient amb = Ambient::vprime(d);
    std::set<F2Subspace> out{F2Subspace(amb)};
    if (d >= 3) {
      const auto& lower = enum_cf_prime(d - 2);
      for (int j = 1; j <= d - 1; ++j) {
        const LinearMap c = cmap_prime(d, j);
        for (const auto& ep : lower) out.insert(c.preimage(ep));
      }
    }
    return sorted_unique(std::move(out));
  });
}

const std::vector<SubspacePair>& enum_occ_prime(int d) {
  check_odd_bound(d);
  return *occ_prime_memo.get(d, [d] {
    const F2Subspace zero(Ambient::vprime(d));
    std::set<SubspacePair> out{{zero, vprime_odd(d)}};
    if (d >= 3) {
      const auto& lower = enum_occ_prime(d - 2);
      for (int j = 1; j <= d - 1; ++j) {
        const LinearMap c = cmap_prime1(d, j);
        for (const auto& p : lower) out.insert({c.preimage(p.small), c.preimage(p.large)});
      }
    }
    return sorted_unique(std::move(out));
  });
}

SubspacePair pi_map(const F2Subspace& e, int d) {
  const auto& family = enum_cf(d);
  if (!std::binary_search(family.begin(), family.end(), e)) {
    throw NotInFamily(to_string(e) + " for D=" + std::to_string(d));
  }
  const Ambient amb = Ambient::v(d);
  F2Subspace e0 = e.intersect_coordinate(even_bits(d));
  F2Subspace e1 = e.intersect_coordinate(odd_bits(d));
  F2Subspace small = F2Subspace::span(e1.basis(), amb);
  F2Subspace large = annihilator(e0, v_odd(d));
  return {small, F2Subspace::span(large.basis(), amb)};
}

F2Subspace lambda_map(const F2Subspace& e, int d) {
  check_odd_bound(d);
  const auto& family = enum_cf(d - 1);
  if (!std::binary_search(family.begin(), family.end(), e)) {
    throw NotInFamily(to_string(e) + " for D-1=" + std::to_string(d - 1));
  }
  return F2Subspace::span(e.basis(), Ambient::vprime(d));
}

SubspacePair lambda_prime(const F2Subspace& image, int d) {
  check_odd_bound(d);
  const auto& family = enum_cf_prime(d);
  if (!std::binary_search(family.begin(), family.end(), image)) {
    throw NotInFamily(to_string(image) + " in V'_" + std::to_string(d));
  }
  const F2Subspace e0 = image.intersect(vprime_even(d));
  const F2Subspace e1 = image.intersect(vprime_odd(d));
  return {e1, annihilator(e0, vprime_odd(d))};
}

F2Vector epsilon_prime(const F2Subspace& image, int d) {
  check_odd_bound(d);
  const F2Subspace e = F2Subspace::span(image.basis(), Ambient::v());
  const auto& family = enum_cf(d - 1);
  if (!std::binary_search(family.begin(), family.end(), F2Subspace::span(e.basis(), Ambient::v(d - 1)))) {
    throw NotInFamily(to_string(image) + " is not lambda of a member of the family");
  }
  return F2Vector(epsilon(e).bits(), Ambient::vprime(d));
}

std::vector<F2Vector> zero_vprime_set(int d) {
  check_odd_bound(d);
  std::set<F2Vector> out;
  for (const auto& x : zero_v_set(d)) out.insert(F2Vector(x.bits(), Ambient::vprime(d)));
  return {out.begin(), out.end()};
}

}  // namespace famindex
