#pragma once

#include <string>
#include <vector>

#include "teamlogic/formula.hpp"

namespace teamlogic {

// ---------------------------------------------------------------------------
// Translation modes
// ---------------------------------------------------------------------------

/// How an atom is rewritten into a plain formula.
///
///   kExpLax / kExpStrict          value-table expansion; exponential size;
///                                 signature {/\, (v), \/} resp. {/\, (v), \./}
///   kPolynegLax / kPolynegStrict  polynomial formula for the complement of
///                                 the atom, same ~-free signatures plus
///                                 auxiliary dep atoms; the strict variant
///                                 exists for dep and excl only
///   kPolyFullLax / kPolyFullStrict
///                                 polynomial formula for the atom itself in
///                                 signature {~, /\, \/} resp. {~, /\, \./}
///                                 plus auxiliary dep atoms
enum class TranslationMode {
  kExpLax,
  kExpStrict,
  kPolynegLax,
  kPolynegStrict,
  kPolyFullLax,
  kPolyFullStrict,
};

/// Parse mode names such as "exp-lax", "EXP_LAX", "polyneg-strict",
/// "poly-full-lax" (case and -/_ insensitive).
TranslationMode translation_mode_from_string(const std::string& s);
std::string translation_mode_name(TranslationMode m);

// ---------------------------------------------------------------------------
// Abbreviation builders
// ---------------------------------------------------------------------------

/// ~bot ("some assignment exists").
FormulaPtr sugar_NE();
/// top \/ (~bot /\ a): some member of the team satisfies a.
FormulaPtr sugar_E(const FormulaPtr& a);
/// -a \/ (a /\ f), or with `strict`, -a \./ (a /\ f); satisfied by T iff the
/// subteam of a-satisfying members satisfies f.
FormulaPtr sugar_hook(const FormulaPtr& a, const FormulaPtr& f,
                      bool strict = false);
/// Componentwise equivalence: conjunction over i of (ai /\ bi) \/ (-ai /\ -bi).
/// Empty tuples give top.
FormulaPtr sugar_iff(const Tuple& a, const Tuple& b);
/// Componentwise difference somewhere: dual negation of sugar_iff, pushed in.
FormulaPtr sugar_niff(const Tuple& a, const Tuple& b);
/// ~bot /\ conjunction of dep(;ai): the team is nonempty and constant on
/// every ai (exactly the singletons when the ai list the whole domain).
FormulaPtr sugar_one(const Tuple& a);

// Right-associated chains; conventions for empty argument lists:
// empty conjunction = top, empty \/ or \./ chain = bot, empty (v) chain = ~top.
FormulaPtr big_conj(const std::vector<FormulaPtr>& fs);
FormulaPtr big_lax_or(const std::vector<FormulaPtr>& fs);
FormulaPtr big_strict_or(const std::vector<FormulaPtr>& fs);
FormulaPtr big_bool_or(const std::vector<FormulaPtr>& fs);

// ---------------------------------------------------------------------------
// Atom translations
// ---------------------------------------------------------------------------

/// Value-table expansion of an atom (modes kExp*).  Constant tuples are
/// enumerated in binary counting order (bot=0, top=1, first tuple component
/// most significant).  In strict mode every \/ becomes \./.
///
/// Known limitation, kept verbatim by design: the emitted ups expansion
/// requires a nonempty part for every left-tuple value cell and therefore
/// differs from the ups atom on teams that do not realize every cell
/// (including the empty team).  See the ups tests for the counterexample.
FormulaPtr translate_exp(const FormulaPtr& atom, TranslationMode mode);

/// Comparison displays.  theta_eq holds iff each component i has one
/// constant c with alpha_i = c on every gamma-member and beta_i = c on
/// every non-gamma-member; when both sides of the gamma-partition are
/// nonempty this says every (gamma, non-gamma) pair agrees.  theta_neq
/// asserts a gamma-member plus opposite constants on the two sides, within
/// a split over components.
FormulaPtr theta_eq(const Tuple& alpha, const Tuple& beta, const FormulaPtr& gamma);
FormulaPtr theta_neq(const Tuple& alpha, const Tuple& beta, const FormulaPtr& gamma);

/// Polynomial formula equivalent to the complement of the atom (modes
/// kPolyneg*).  The strict variant exists for dep and excl only; other atoms
/// raise UnsupportedError.
FormulaPtr translate_polyneg(const FormulaPtr& atom, TranslationMode mode);

/// Polynomial formula equivalent to the atom itself using strong negation
/// (modes kPolyFull*): the strong negation of the complement formula with
/// every (v) rewritten as a (v) b = ~(~a /\ ~b).
FormulaPtr translate_polyfull(const FormulaPtr& atom, TranslationMode mode);

/// The ups atom over (alpha; beta) as a disjunction over the single-column
/// atoms ups(alpha; bi): lax when `strict` is false, strict otherwise.
FormulaPtr upsilon_decomposition(const Tuple& alpha, const Tuple& beta,
                                 bool strict);

// ---------------------------------------------------------------------------
// Parity formulas
// ---------------------------------------------------------------------------

/// Defines odd team cardinality over the whole domain d with dep atoms and
/// {~, /\, (v), \./}; length grows quadratically in |d|.
FormulaPtr parity_poly(const Domain& d);

enum class Parity { kEven, kOdd };

/// Atom-free parity formulas in {(v), /\, \/}; length grows exponentially.
FormulaPtr parity_exp(const Domain& d, Parity parity);

// ---------------------------------------------------------------------------
// Structural rewrites
// ---------------------------------------------------------------------------

/// Replace every strict split by its lax counterpart (\./ by \/ and (.^) by
/// (^)).  The result is implied by the input; equivalence holds exactly for
/// local formulas.
FormulaPtr relax(const FormulaPtr& f);

/// Distribute (v) over /\, \/ and \./ until the formula is a Boolean
/// disjunction of (v)-free formulas; returns the list of disjuncts.
/// Requires signature {(v), /\, \/, \./}; the disjunct count is capped.
std::vector<FormulaPtr> bor_normal_form(const FormulaPtr& f);

}  // namespace teamlogic
