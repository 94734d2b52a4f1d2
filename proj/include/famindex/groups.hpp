#pragma once

// Small finite groups given by a full multiplication table. Permutation
// groups are closed up front; quotients and subgroups become tables of
// their own with maps back to the parent.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "famindex/cyclotomic.hpp"

namespace famindex {

/// Images of 0..n-1.
using Perm = std::vector<int>;

/// Membership flags over the elements of a group.
using Subset = std::vector<bool>;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Closure of the generators; elements sorted lexicographically, so the
  /// identity is element 0.
  static FiniteGroup from_permutations(const std::vector<Perm>& gens, int degree);
  /// Element 0 must be the identity.
  static FiniteGroup from_table(std::vector<int> table, int order, std::vector<std::string> labels);

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// h x h^-1
  int conj(int h, int x) const { return mul(mul(h, x), inv_[h]); }
  int power(int a, int k) const;
  int element_order(int a) const { return orders_[a]; }
  int exponent() const;

  const std::string& label(int a) const { return labels_[a]; }
  bool has_perms() const { return !perms_.empty(); }
  const Perm& perm(int a) const { return perms_[a]; }
  /// -1 if absent.
  int find_perm(const Perm& p) const;

 private:
  void finish();

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  std::vector<Perm> perms_;
};

/// Cycle notation with points numbered from 1, "()" for the identity.
std::string cycle_string(const Perm& p);

Subset whole(const FiniteGroup& g);
Subset trivial_subgroup(const FiniteGroup& g);
Subset generate(const FiniteGroup& g, const std::vector<int>& gens);
std::vector<int> members(const Subset& s);
int subset_size(const Subset& s);
bool is_subgroup(const FiniteGroup& g, const Subset& s);
/// inner ⊆ outer
bool includes(const Subset& outer, const Subset& inner);

Subset centralizer(const FiniteGroup& g, int x, const Subset& within);
Subset centralizer(const FiniteGroup& g, int x);
/// h S h^-1
Subset conjugate(const FiniteGroup& g, const Subset& s, int h);
/// h normal in k (both subgroups, h ⊆ k).
bool is_normal(const FiniteGroup& g, const Subset& h, const Subset& k);
Subset normalizer(const FiniteGroup& g, const Subset& h, const Subset& within);

/// Classes of the whole group, each sorted, ordered by least element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// A subgroup as a group in its own right.
struct Embedded {
  FiniteGroup group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 outside the subgroup
};
Embedded subgroup_group(const FiniteGroup& g, const Subset& s);

/// k/h for h normal in k, both subgroups of g.
struct Quotient {
  FiniteGroup group;
  std::vector<int> proj;     // element of g -> coset index, -1 outside k
  std::vector<int> section;  // coset index -> least element of the coset
};
/// Throws NotNormal.
Quotient quotient(const FiniteGroup& g, const Subset& k, const Subset& h);

/// A short generating set, preferring two generators when one exists.
std::vector<int> generating_set(const FiniteGroup& g);

/// Extends generator images to a homomorphism; nullopt if inconsistent or
/// not bijective.
std::optional<std::vector<int>> extend_to_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                      const std::vector<int>& gens,
                                                      const std::vector<int>& images);
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);
bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& map);

bool is_elementary_abelian_2(const FiniteGroup& g);
/// Pairs (N, K) of nontrivial normal subgroups with N ∩ K = 1 and NK = G.
std::vector<std::pair<Subset, Subset>> direct_factorizations(const FiniteGroup& g);

/// The symmetric group on 5 points; every catalog subgroup lives here.
const FiniteGroup& sym5();

/// Catalog subgroups of S5: "S1".."S5", "D8", "S2S2", "S~2", "S3S2". Throws UnknownTag.
Subset standard_subgroup(std::string_view tag);
const std::vector<std::string>& standard_subgroup_tags();

/// An explicit isomorphism from g onto the catalog group `tag`, as a map of
/// g's elements to elements of subgroup_group(sym5(), standard_subgroup(tag)).
/// Throws NotIsomorphic.
std::vector<int> identify_aobject(const FiniteGroup& g, std::string_view tag);

struct CharacterTable {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  /// Rows: irreducible characters, trivial first, sorted by degree then values.
  std::vector<std::vector<Cyc>> chars;
  int group_order = 0;

  int size() const { return static_cast<int>(chars.size()); }
  const Cyc& value(int row, int element) const { return chars[row][class_of[element]]; }
  long degree(int row) const { return chars[row][0].rational().get_num().get_si(); }
};

/// Exact character table by the Dixon-Schneider method. Throws SizeCap above
/// order 200 and std::logic_error if an internal consistency check fails.
CharacterTable char_table(const FiniteGroup& g);

}  // namespace famindex
