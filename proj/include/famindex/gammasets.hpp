#pragma once

// The objects Γ of the collection (elementary abelian V_D^1, V'_D^1 and the
// symmetric groups S1..S5, S2', S3') with their pair sets x, x̄, X, X̄.
//
// Pairs over a symmetric Γ are subsets of Γ's element table and are kept up
// to Γ-conjugacy (one canonical representative per class). Pairs over a
// vector Γ are subspace pairs; Γ is abelian so nothing is identified.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "famindex/groups.hpp"
#include "famindex/inductive.hpp"

namespace famindex {

enum class AKind : std::uint8_t { Vec, VecPrime, Sym, SymPrime };

struct AObject {
  AKind kind = AKind::Sym;
  int n = 1;  // D for the vector kinds

  static AObject vec(int d) { return {AKind::Vec, d}; }
  static AObject vec_prime(int d) { return {AKind::VecPrime, d}; }
  static AObject sym(int n) { return {AKind::Sym, n}; }
  static AObject sym_prime(int n) { return {AKind::SymPrime, n}; }

  /// "S1".."S5", "S2'", "S3'", "V<D>" (D even), "V'<D>" (D odd). Throws UnknownTag.
  static AObject parse(std::string_view tag);

  /// V0, V'1 -> S1 and V2, V'3 -> S2.
  AObject canonical() const;
  std::string tag() const;
  bool is_vector() const { return kind == AKind::Vec || kind == AKind::VecPrime; }
  bool anomalous() const;
  long order() const;

  friend bool operator==(const AObject&, const AObject&) = default;
  friend auto operator<=>(const AObject&, const AObject&) = default;
};

/// Pair (small ⊆ large) of subgroups of Γ.
struct SubgroupPair {
  SubspacePair spaces;  // vector kinds
  Subset small, large;  // symmetric kinds, over ambient_group(Γ)

  friend bool operator==(const SubgroupPair&, const SubgroupPair&) = default;
  friend auto operator<=>(const SubgroupPair& a, const SubgroupPair& b) {
    if (auto c = a.spaces <=> b.spaces; c != 0) return c;
    if (a.large != b.large) return a.large < b.large ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.small != b.small) return a.small < b.small ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

struct XEntry {
  SubgroupPair pair;
  AObject quotient;
  int index = 0;  // j for vector kinds, list position otherwise
};

/// One row of an x-table for a symmetric object: catalog names of the
/// subgroups of S5 and the tag of the quotient.
struct XRow {
  std::string small, large, quotient;
};

/// The x-tables as data, keyed by tag ("S2", "S3", "S2'", "S3'", "S4", "S5").
struct XTables {
  std::map<std::string, std::vector<XRow>> rows;
  static XTables standard();
};

/// How the bar enlargement treats V'_3^1, which is also S2.
enum class BarReading : std::uint8_t { S2, VPrime };

struct GammaConfig {
  XTables tables = XTables::standard();
  BarReading bar_reading = BarReading::S2;
  /// Post-compose every quotient identification with the automorphism of
  /// that index (mod the automorphism count) of the target.
  std::size_t twist = 0;
};

/// Γ as a group table, the symmetric kinds as subgroups of S5.
struct AmbientGroup {
  FiniteGroup group;
  Subset in_s5;
  std::vector<int> to_s5;
  std::vector<int> from_s5;
};
/// Throws std::invalid_argument for the vector kinds.
const AmbientGroup& ambient_group(const AObject& g);

/// Catalog subgroup of S5 as a subset of Γ's table; throws BadPair if not contained.
Subset catalog_subset(const AObject& g, std::string_view name);

struct QSets {
  std::vector<Subset> q;
  std::vector<Subset> q_star;
};

/// Isomorphic to a direct product of objects of the collection.
bool is_product_of_aobjects(const FiniteGroup& g);

class GammaSets {
 public:
  explicit GammaSets(GammaConfig config = {});
  ~GammaSets();
  GammaSets(const GammaSets&) = delete;
  GammaSets& operator=(const GammaSets&) = delete;

  const GammaConfig& config() const { return config_; }

  /// Throws TrivialGroup for |Γ| = 1.
  std::vector<XEntry> x_set(const AObject& g) const;
  std::vector<XEntry> bar_x_set(const AObject& g) const;

  /// Sorted canonical pairs.
  const std::vector<SubgroupPair>& big_x(const AObject& g) const;
  const std::vector<SubgroupPair>& bar_big_x(const AObject& g) const;
  /// The pulled-back part before base pairs are adjoined.
  const std::vector<SubgroupPair>& big_x0(const AObject& g) const;
  QSets q_sets(const AObject& g) const;

 private:
  struct Impl;
  GammaConfig config_;
  std::unique_ptr<Impl> impl_;
};

/// The shipped configuration.
const GammaSets& standard_gammasets();

/// Γ-conjugacy canonical form (identity for the vector kinds).
SubgroupPair canonical_pair(const AObject& g, const SubgroupPair& p);

/// Catalog names (small, large) of some conjugate of the pair, if any.
std::optional<std::pair<std::string, std::string>> catalog_names(const AObject& g, const SubgroupPair& p);

/// "(S2S2 ⊆ D8)" for symmetric kinds, subspace notation for vector kinds.
std::string pair_string(const AObject& g, const SubgroupPair& p);

/// Pairs in the fixed display order: for symmetric kinds by large group
/// (S5, S3S2, S4, D8, S2S2, S3, S2, S1) then by decreasing small order.
std::vector<SubgroupPair> listing_order(const AObject& g, std::vector<SubgroupPair> pairs);

/// The pair built from catalog names, canonicalised.
SubgroupPair named_pair(const AObject& g, std::string_view small, std::string_view large);

/// Every object of the collection with |Γ| > 1 up to the given vector bound.
std::vector<AObject> catalog_objects(int max_d);

}  // namespace famindex
