#pragma once

// Cuspidal-family hosts: Cartan data, the listed Levi types I' of the maximal
// precuspidal pairs, their realization as simple-root subsets, W-orbits of
// those subsets and the count comparison against x_Γ / x̄_Γ.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "famindex/gammasets.hpp"

namespace famindex {

/// Bit i is simple root i (0-based, Bourbaki order).
using NodeSet = std::uint32_t;

struct CartanDiagram {
  char letter = 'A';
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <α_i^vee, α_j>
  std::vector<bool> short_root;          // only meaningful for B, C, F, G

  std::string name() const { return letter + std::to_string(rank); }
  bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
  NodeSet all() const { return rank == 32 ? ~NodeSet{0} : (NodeSet{1} << rank) - 1; }
};

/// "E8", "B12", ... Throws UnknownHost for shapes outside the classification.
CartanDiagram cartan_diagram(const std::string& name);

/// Roots as coordinates in the simple roots, with the simple reflections as
/// permutations of root indices.
struct RootSystem {
  std::vector<std::vector<int>> roots;
  std::vector<std::vector<int>> reflect;  // reflect[i][r]
  std::vector<int> simple;                // index of α_i
  int positive_count() const { return static_cast<int>(roots.size()) / 2; }
};
RootSystem root_system(const CartanDiagram& d);

/// Irreducible components of the subdiagram on `s`, e.g. {"D5", "A2"}.
/// A components made of short roots are written "~A".
std::vector<std::string> subset_components(const CartanDiagram& d, NodeSet s);
/// Components joined in a fixed order: "E6A1", "B4A1", "A2A2A1".
std::string subset_type(const CartanDiagram& d, NodeSet s);
/// Splits a joined type into components ("D5A2" -> {"D5", "A2"}), sorted.
std::vector<std::string> parse_type(const std::string& type);
/// Drops root-length marks; listed types compare in this form.
std::string strip_lengths(const std::string& type);

/// One line of a listed 𝒾_c: a Levi type, or all I' of a given size.
struct CiEntry {
  std::string type;                 // empty when selecting by size
  int size = 0;                     // |I'| when type is empty
  std::optional<int> count;         // number of I', absent for "the various I'"
  friend bool operator==(const CiEntry&, const CiEntry&) = default;
};

struct PrecuspidalRecord {
  std::string host;                 // concrete, e.g. "B6"
  int k = 0;                        // parameter of the B/C and D series, else 0
  std::string gamma_c;              // AObject tag
  std::vector<CiEntry> ci;
  std::vector<CiEntry> bar_extra;   // 𝒾̄_c minus 𝒾_c
  friend bool operator==(const PrecuspidalRecord&, const PrecuspidalRecord&) = default;
};

struct PrecuspidalData {
  int version = 0;
  std::vector<PrecuspidalRecord> records;

  static PrecuspidalData from_json(const std::string& text);
  static PrecuspidalData load(const std::string& path);
  /// data/precuspidal_v1.json; FAMINDEX_DATA overrides the directory.
  static const PrecuspidalData& standard();
  std::string to_json() const;
};

/// Looks up the record for a host. Throws UnknownHost.
const PrecuspidalRecord& ci_table(const PrecuspidalData& data, const std::string& host);
/// The record generated from the series formulas: letter 'B', 'C' (rank
/// k^2+k) or 'D' (rank k^2, k >= 3). Throws UnknownHost.
PrecuspidalRecord ci_formula(char letter, int k);

/// For each entry, every I' realizing it (ascending). Throws Unrealizable
/// when some entry has none.
std::vector<std::vector<NodeSet>> realize_subsets(const CartanDiagram& d, const std::vector<CiEntry>& entries);

/// Number of W-orbits on the subsets, I' ~ I'' when some w carries the
/// simple roots of I' onto those of I''. Throws RankCap above `rank_cap`.
int weyl_orbit_count(const CartanDiagram& d, const std::vector<NodeSet>& subsets, int rank_cap = 7);

struct CountCheck {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct HostReport {
  std::string host;
  std::string gamma_c;
  std::vector<CountCheck> checks;
  bool pass() const;
};

/// Realization, stated counts, orbit counts against |x| and |x̄|, and the
/// γ parity bookkeeping of the B/C and D series.
HostReport consistency_check(const PrecuspidalRecord& r, const GammaSets& gs, int rank_cap = 7);

/// Candidate Γ_c for a host with whether the x and x̄ counts both match.
struct Hypothesis {
  std::string gamma_c;
  int x = 0;
  int bar_x = 0;
  bool pass = false;
};
/// Orbit counts of 𝒾_c and 𝒾̄_c followed by every candidate of the right kind.
struct HypothesisReport {
  std::string host;
  int orbits = 0;
  int bar_orbits = 0;
  std::vector<Hypothesis> candidates;
};
HypothesisReport hypothesis_report(const PrecuspidalRecord& r, const GammaSets& gs, int rank_cap = 7);

}  // namespace famindex
