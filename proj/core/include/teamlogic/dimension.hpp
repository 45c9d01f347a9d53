#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// A sandwich presentation of a team property: a team T is accepted iff
/// lower ⊆ T ⊆ upper for some pair.  The dimension of the presentation is
/// the number of maximal upper bounds, which equals the number of maximal
/// accepted teams (each upper is itself accepted via its own pair).
struct Generator {
  Domain domain;
  /// (lower, upper) member-mask pairs with lower ⊆ upper.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  bool accepts(std::uint32_t team) const;
  std::size_t dim() const;
};

/// Builds a generator for `f` inductively: a plain literal contributes the
/// single pair (∅, assignments satisfying it); a ~literal contributes one
/// pair ({s}, full team) per assignment s falsifying the literal; /\
/// combines pairwise as (l∪l', u∩u'), \/ pairwise as (l∪l', u∪u'), and (v)
/// takes the union of the two generators.  Pairs with lower ⊄ upper accept
/// nothing and are pruned.  Defined for formulas over literals, /\, \/ and
/// (v) only; throws SignatureError otherwise and CapacityError when the
/// pair count exceeds the internal cap.
Generator generator_for(const FormulaPtr& f, const Domain& d);

/// True when `g` accepts exactly the satisfying teams of `f` over its
/// domain (compares against the full denotation).
bool generator_matches(const Generator& g, const FormulaPtr& f);

/// dim(generator_for(f, d)).  The result never exceeds 2^occ_bool_or(f),
/// which is re-checked internally.
std::size_t dim_upper_bound(const FormulaPtr& f, const Domain& d);

/// Number of maximal satisfying teams of `f` over `d`.  Every sandwich
/// presentation of `f` needs a distinct pair per maximal team, so this
/// bounds the size of any valid generator from below.
std::size_t dim_lower_bound_by_maximal_teams(const FormulaPtr& f,
                                             const Domain& d);

// ---------------------------------------------------------------------------
// Length bounds from maximal-team counts
// ---------------------------------------------------------------------------

/// A lower bound on the length of any split-free formula (literals with /\,
/// \/, (v)) expressing the dependence or exclusion atom at argument arity
/// `n`: such a formula has a generator of at most 2^length − 2 pairs, while
/// the atom has max_teams maximal satisfying teams, so
/// max_teams ≤ 2^length − 2 forces length ≥ 2^n.
struct SuccinctnessCertificate {
  std::uint64_t max_teams = 0;
  std::uint64_t implied_min_length = 0;
  /// True when max_teams was confirmed by enumerating the atom's maximal
  /// satisfying teams (feasible for small n); otherwise the closed form
  /// was used.
  bool enumerated = false;
};

/// Certificate for dep(p1..pn; q) (max_teams = 2^{2^n}) or
/// excl(p1..pn; q1..qn) (max_teams = 2^{2^n} − 2).  Supports n ≤ 5; other
/// atoms are not supported.
SuccinctnessCertificate succinctness_certificate(AtomKind kind, std::size_t n);

}  // namespace teamlogic
