#pragma once

// The C_j maps and the families they generate by induction on D.

#include <compare>
#include <string>
#include <vector>

#include "famindex/f2.hpp"

namespace famindex {

/// A linear map given on a basis of its domain. The stored basis is the
/// joint echelon form of (domain row | image) pairs.
class LinearMap {
 public:
  LinearMap() = default;
  /// Throws std::invalid_argument if the assignment is not well defined on the span.
  LinearMap(Ambient domain_ambient, Ambient codomain_ambient, const std::vector<Word>& sources,
            const std::vector<Word>& images);

  const Ambient& domain_ambient() const { return dom_amb_; }
  const Ambient& codomain_ambient() const { return cod_amb_; }
  const std::vector<Word>& domain_rows() const { return rows_; }
  const std::vector<Word>& image_rows() const { return images_; }

  F2Subspace domain() const;
  F2Subspace image() const;
  F2Subspace kernel() const;
  /// Throws BadIndex if v is outside the domain.
  Word apply(Word v) const;
  /// {v in domain : apply(v) in target}.
  F2Subspace preimage(const F2Subspace& target) const;

 private:
  Ambient dom_amb_{};
  Ambient cod_amb_{};
  std::vector<Word> rows_;
  std::vector<Word> images_;
};

struct SubspacePair {
  F2Subspace small;
  F2Subspace large;

  friend bool operator==(const SubspacePair&, const SubspacePair&) = default;
  friend auto operator<=>(const SubspacePair& a, const SubspacePair& b) {
    if (auto c = a.small <=> b.small; c != 0) return c;
    return a.large <=> b.large;
  }
};

std::string to_string(const SubspacePair& p);

/// C_j : U_{D,j} -> V_{D-2}.
LinearMap cmap(int d, int j);
/// C_j^1 : U_{D,j}^1 -> V_{D-2}^1, built from the odd-index basis lists.
LinearMap cmap1(int d, int j);
/// C'_j and C'_j^1 on V'_D (D odd >= 3), for every j in [1, D].
LinearMap cmap_prime(int d, int j);
LinearMap cmap_prime1(int d, int j);

/// V_D^0, V_D^1 and their images in V'_D (coset representatives).
F2Subspace v_even(int d);
F2Subspace v_odd(int d);
F2Subspace vprime_even(int d);
F2Subspace vprime_odd(int d);

/// The inductive family of subspaces of V_D, sorted.
const std::vector<F2Subspace>& enum_cf(int d);
/// The inductive family of pairs of subspaces of V_D^1, sorted.
const std::vector<SubspacePair>& enum_occ(int d);
const std::vector<F2Subspace>& enum_cf_prime(int d);
const std::vector<SubspacePair>& enum_occ_prime(int d);

/// E -> (E^1 ⊆ (E^0)^!); throws NotInFamily if E is not in enum_cf(d).
SubspacePair pi_map(const F2Subspace& e, int d);

/// E in enum_cf(d - 1) -> its image in V'_d; throws NotInFamily.
F2Subspace lambda_map(const F2Subspace& e, int d);
/// (E^1 ⊆ (E^0)^!) computed with the induced form on V'_d.
SubspacePair lambda_prime(const F2Subspace& image, int d);
/// pi(epsilon_{d-1}(E)) for image = lambda(E).
F2Vector epsilon_prime(const F2Subspace& image, int d);
/// pi(u^{-1}(0) ∩ V_d) as canonical representatives, sorted.
std::vector<F2Vector> zero_vprime_set(int d);

}  // namespace famindex
