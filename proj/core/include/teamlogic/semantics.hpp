#pragma once

#include <cstdint>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// ---------------------------------------------------------------------------
// Denotations
// ---------------------------------------------------------------------------

/// The set of satisfying teams of a formula over a fixed domain, stored as a
/// bitset indexed by team mask (capacity: domains of up to 4 propositions,
/// 2^16 teams).
class Denotation {
 public:
  explicit Denotation(Domain d);

  const Domain& domain() const { return domain_; }
  /// Number of teams over the domain.
  std::uint32_t team_space() const { return team_space_; }

  bool test(std::uint32_t team) const {
    return (words_[team >> 6] >> (team & 63u)) & 1u;
  }
  void set(std::uint32_t team, bool value = true) {
    if (value) {
      words_[team >> 6] |= (std::uint64_t{1} << (team & 63u));
    } else {
      words_[team >> 6] &= ~(std::uint64_t{1} << (team & 63u));
    }
  }

  std::size_t count() const;
  bool any() const { return count() > 0; }
  bool subset_of(const Denotation& o) const;
  bool operator==(const Denotation& o) const;
  bool operator!=(const Denotation& o) const { return !(*this == o); }

  /// All satisfying teams, by increasing mask.
  std::vector<Team> teams() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  Domain domain_;
  std::uint32_t team_space_;
  std::vector<std::uint64_t> words_;
};

// Pointwise set algebra.
Denotation denot_and(const Denotation& a, const Denotation& b);
Denotation denot_or(const Denotation& a, const Denotation& b);
Denotation denot_not(const Denotation& a);
/// Teams T with some cover T = S ∪ U, S in a, U in b (the lax split image).
Denotation denot_cover(const Denotation& a, const Denotation& b);
/// Same with disjoint S and U (the strict split image).
Denotation denot_disjoint(const Denotation& a, const Denotation& b);
/// Teams all of whose covers hit a on the left or b on the right.
Denotation denot_co_cover(const Denotation& a, const Denotation& b);
/// Same over disjoint splits only.
Denotation denot_co_disjoint(const Denotation& a, const Denotation& b);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Classical single-assignment truth of a purely propositional formula.
bool classical_sat(const FormulaPtr& f, const Domain& d, Assignment a);
/// Bitmask over assignments of d satisfying the purely propositional f.
std::uint32_t classical_sat_mask(const FormulaPtr& f, const Domain& d);

/// Team satisfaction.  Splits are enumerated over subteams, so split
/// connectives require |t| <= 16; other connectives and atoms work for any
/// team over at most 5 propositions.
bool eval(const FormulaPtr& f, const Team& t);

/// Satisfying-team set over a domain containing Prop(f) (at most 4 props).
Denotation denotation(const FormulaPtr& f, const Domain& d);

// ---------------------------------------------------------------------------
// Comparisons
// ---------------------------------------------------------------------------

/// Extra fresh propositions used by default when comparing f and g: the
/// number of strict splits in both formulas, capped so the checked domain
/// stays within capacity.
int default_extra_props(const FormulaPtr& f, const FormulaPtr& g);

/// Denotation equality over the union domain of f and g, re-checked with
/// 0..extra_props additional fresh propositions.
bool equivalent(const FormulaPtr& f, const FormulaPtr& g, int extra_props);
bool equivalent(const FormulaPtr& f, const FormulaPtr& g);

/// Denotation inclusion (every team satisfying f satisfies g), checked over
/// the same expansions as `equivalent`.
bool entails(const FormulaPtr& f, const FormulaPtr& g, int extra_props);
bool entails(const FormulaPtr& f, const FormulaPtr& g);

/// True when some team over d satisfies f (the empty team counts).
bool satisfiable(const FormulaPtr& f, const Domain& d);

// ---------------------------------------------------------------------------
// Closure structure
// ---------------------------------------------------------------------------

struct ClosureReport {
  bool union_closed = false;      // pairwise unions stay inside
  bool downward_closed = false;   // subteams stay inside
  bool upward_closed = false;     // superteams stay inside
  bool empty_team = false;        // the empty team satisfies
  bool flat = false;              // satisfaction is memberwise
};

ClosureReport closure_report(const Denotation& d);
ClosureReport closure_report(const FormulaPtr& f, const Domain& d);

/// True when satisfaction over every expansion of the formula's domain by up
/// to extra_props fresh propositions is determined by the restriction to the
/// formula's own domain.
bool is_local(const FormulaPtr& f, int extra_props);

/// Fresh proposition names (x1, x2, ...) avoiding those already in `base`.
std::vector<std::string> fresh_prop_names(const Domain& base, int count);

}  // namespace teamlogic
