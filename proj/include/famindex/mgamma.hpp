#pragma once

// M(Γ), the elements ρ of C[M(Γ)] induced from unit pairs, the set M(Γ)_0,
// the coefficient-1 bijection j onto X_Γ and the order it generates.
//
// Elements of C[M(Γ)] are handled as Γ-invariant functions on commuting
// pairs (y, g): the basis element (x, σ) is the function that is σ(k g k^-1)
// when k y k^-1 = x and 0 off the class of x. Induction inflates a function
// from Γ''/Γ' to Γ'' and induces it to Γ with weight 1/|Γ''|.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "famindex/cyclotomic.hpp"
#include "famindex/gammasets.hpp"
#include "famindex/groups.hpp"

namespace famindex {

/// Γ as a concrete group: the symmetric kinds as subgroups of S5, the vector
/// kinds as V^1 under addition with element i equal to words[i].
struct GroupModel {
  AObject object;
  FiniteGroup group;
  std::vector<Word> words;   // vector kinds only, sorted
  std::vector<Word> duals;   // vector kinds: V^0, indexing the characters
};
const GroupModel& group_model(const AObject& g);

/// (small, large) as subsets of the model's element table.
std::pair<Subset, Subset> pair_subsets(const GroupModel& m, const SubgroupPair& p);

/// (class of x, row of the character table of Z(x)); x is the least element
/// of its class.
struct MPair {
  int cls = 0;
  int sigma = 0;
  friend auto operator<=>(const MPair&, const MPair&) = default;
};

/// Sparse: only nonzero coefficients, keyed by index into MSpace::pairs().
using MVector = std::map<int, Cyc>;

/// Values at (rep of class c, g) for g in Z(rep); other pairs follow by conjugation.
struct CommutingFunction {
  std::vector<std::vector<Cyc>> at;  // at[c][g], zero outside Z(rep_c)
};

class MSpace {
 public:
  /// Centralizer tables by char_table.
  explicit MSpace(FiniteGroup g);
  /// For elementary abelian 2-groups of a vector model: characters given by
  /// the form, row r is the character of duals[r].
  explicit MSpace(const GroupModel& vector_model);

  const FiniteGroup& group() const { return group_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int rep(int cls) const { return classes_[cls][0]; }
  const std::vector<int>& class_members(int cls) const { return classes_[cls]; }
  int class_of(int y) const { return class_of_[y]; }
  /// Some k with k y k^-1 = rep(class_of(y)).
  int conjugator(int y) const { return conjugator_[y]; }
  const Subset& centralizer(int cls) const { return slots_[slot_[cls]].members; }
  int centralizer_order(int cls) const { return slots_[slot_[cls]].order; }
  const CharacterTable& table(int cls) const { return slots_[slot_[cls]].table; }
  /// σ(g) for g in Z(rep(cls)), g an element of the whole group.
  const Cyc& sigma_value(int cls, int sigma, int g) const;
  long degree(int cls, int sigma) const { return table(cls).degree(sigma); }

  const std::vector<MPair>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  int index(int cls, int sigma) const { return offset_[cls] + sigma; }
  int unit() const { return 0; }

  CommutingFunction to_function(const MVector& v) const;
  MVector from_function(const CommutingFunction& f) const;
  Cyc evaluate(const CommutingFunction& f, int y, int g) const;

 private:
  struct Slot {
    Subset members;
    int order = 0;
    std::vector<int> from_parent;
    CharacterTable table;
  };
  void init_classes();
  void add_pairs();

  FiniteGroup group_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> conjugator_;
  std::vector<int> slot_;
  std::vector<Slot> slots_;
  std::vector<MPair> pairs_;
  std::vector<int> offset_;
};

/// Normalization of the induction step; the shipped value is ByLarge.
struct SsConfig {
  enum class Lift : std::uint8_t { ByLarge, ByGroup, BySmall } lift = Lift::ByLarge;
  bool conjugate_sigma = true;
  friend bool operator==(const SsConfig&, const SsConfig&) = default;
};

/// ss from Γ''/Γ' to Γ. `phi` maps Γ'' onto the target group with kernel Γ'
/// (-1 outside Γ''). Throws BadPair if it does not.
MVector ss_induce(const MSpace& m, const Subset& small, const Subset& large, const std::vector<int>& phi,
                  const MSpace& target, const MVector& source, const SsConfig& cfg = {});
/// ss at the unit pair of Γ''/Γ', without building the quotient.
MVector ss_unit(const MSpace& m, const Subset& small, const Subset& large, const SsConfig& cfg = {});

/// M(Γ) for an object, memoised.
const MSpace& m_space(const AObject& g);
/// Vector kinds: the pair as the word x + w of V_D (resp. V'_D).
Word m_word(const AObject& g, const MPair& p);
/// Vector kinds: index in m_space(g) of a word of V_D (resp. V'_D).
int m_index_of_word(const AObject& g, Word w);
std::string mpair_string(const AObject& g, const MPair& p);

/// Closed form for vector kinds: indicator of L + (V^0 ∩ L'^⊥).
std::vector<Word> rho_vector_words(const AObject& g, const SubspacePair& p);

/// Integer form of a ρ element.
using IntRow = std::vector<std::pair<int, long>>;

struct RhoFamily {
  AObject object;
  bool bar = false;
  std::vector<SubgroupPair> pairs;
  std::vector<IntRow> rows;       // filled when every coefficient is a rational integer
  std::vector<MVector> exact;     // filled on the generic path
  bool integral = true;
  bool nonnegative = true;
  std::vector<int> m_zero;        // sorted indices into m_space
};

struct PartialOrder {
  std::vector<int> elements;               // m_zero
  std::vector<std::vector<std::uint64_t>> below;  // below[b] has bit a iff a <= b
  bool leq(int a, int b) const { return (below[b][a / 64] >> (a % 64)) & 1U; }
  /// Hasse covers (a, b) with a < b, positions into elements.
  std::vector<std::pair<int, int>> covers;
};

class MGamma {
 public:
  explicit MGamma(const GammaSets& gs, SsConfig cfg = {});
  ~MGamma();
  MGamma(const MGamma&) = delete;
  MGamma& operator=(const MGamma&) = delete;

  const GammaSets& gammasets() const { return gs_; }
  const SsConfig& config() const { return cfg_; }

  /// ρ over X_Γ (or X̄_Γ); vector kinds use the closed form unless `generic`.
  const RhoFamily& family(const AObject& g, bool bar = false, bool generic = false) const;
  /// One ρ by the generic formula.
  MVector rho(const AObject& g, const SubgroupPair& p) const;

  /// ss along x-pair then X of the quotient equals ss of the pulled-back pair.
  bool tower_consistent(const AObject& g) const;

 private:
  struct Impl;
  const GammaSets& gs_;
  SsConfig cfg_;
  std::unique_ptr<Impl> impl_;
};

const MGamma& standard_mgamma();

/// Exact rank of the family (over Q when integral, else over the cyclotomics).
int rho_rank(const RhoFamily& f);
/// j as positions: result[k] is the pair index for m_zero[k]. Throws
/// NoBijection or NotUnique.
std::vector<int> bijection_j(const RhoFamily& f);
/// Throws NotAntisymmetric.
PartialOrder partial_order(const RhoFamily& f, const std::vector<int>& j);

/// Vector kinds: j sends ε(E) (resp. ε'(λ(E))) to Π_D(E) (resp. λ'(λ(E))).
bool vector_j_matches_epsilon(const RhoFamily& f, const std::vector<int>& j);

}  // namespace famindex
