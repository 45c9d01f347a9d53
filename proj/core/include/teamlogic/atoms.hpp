#pragma once

#include <cstdint>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

/// Packed truth values of a purely propositional tuple under one assignment:
/// bit i is the value of args[i].
std::uint32_t tuple_value(const Tuple& args, const Domain& d, Assignment a);

/// Direct evaluation of a dependency atom node on a team, straight from the
/// defining quantifier condition.  This is deliberately independent of the
/// general evaluator so the two can be checked against each other.
bool eval_atom(const FormulaPtr& atom, const Team& t);

// ---------------------------------------------------------------------------
// Lower-bound witness teams
// ---------------------------------------------------------------------------

/// The team families whose every one-assignment removal breaks the property
/// they witness.
enum class WitnessKind {
  kCardinalityMod,  // |T| ≡ k (mod m) over p1..pn; size 2^n - [2^n - k]_m
  kCardinality,     // |T| = k over p1..pn
  kInclusion,       // value cycle witnessing inc(p1..pn; q1..qn)
  kIndependence,    // full team over p1..pn,q1..qm for perp
  kAnonymity,       // full team over p1..pn,q for ups
};

/// Witness construction.  m is the modulus (kCardinalityMod) or the right
/// tuple arity (kIndependence); k is the target cardinality/residue.  Single
/// propositions are named p/q, larger tuples p1..pn/q1..qm.
Team witness_team(WitnessKind kind, std::size_t n, std::size_t m = 0,
                  std::size_t k = 0);

/// The atom instance a witness team is built for (the two full-team kinds and
/// the inclusion cycle; the cardinality kinds have no atom).
FormulaPtr witness_atom(WitnessKind kind, std::size_t n, std::size_t m = 0);

/// All ⊆-maximal satisfying teams of f over d, in increasing mask order.
std::vector<Team> maximal_teams(const FormulaPtr& f, const Domain& d);
std::vector<Team> maximal_teams(const Denotation& denot);

}  // namespace teamlogic
