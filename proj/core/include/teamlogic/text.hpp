#pragma once

#include <string>

#include "teamlogic/formula.hpp"

namespace teamlogic {

/// Parse the ASCII formula grammar.
///
/// Connectives from loosest to tightest binding, all right-associative:
///   (v)   Boolean disjunction
///   (^)   lax co-disjunction
///   (.^)  strict co-disjunction
///   \/    lax disjunction
///   \./   strict disjunction
///   /\    conjunction
/// Prefix operators: ~ (strong negation), - (dual negation, purely
/// propositional operands only).  Constants: top, bot.  Propositions match
/// [a-z][a-z0-9_]* and must avoid the reserved words top, bot, dep, perp,
/// perpc, inc, excl, ups, hook, iff.
///
/// Atoms take tuples of purely propositional arguments separated by
/// spaces or single optional commas, e.g. dep(p q;r), dep(p, q; r),
/// perpc(a;c;b), inc(p;q).  Compound arguments need parentheses.  The
/// canonical printed form always uses spaces.
///
/// Parse-time abbreviations (expanded immediately, printed expanded):
///   NE          ~bot
///   E(a)        top \/ (~bot /\ a)
///   hook(a,f)   -a \/ (a /\ f)
///   iff(a1 ...;b1 ...)   conjunction of (ai /\ bi) \/ (-ai /\ -bi)
///
/// Note: "(v)" "(^)" "(.^)" lex as single tokens only when written without
/// inner spaces; to parenthesize a proposition named v, write "( v )".
FormulaPtr parse_formula(const std::string& text);

/// Canonical printed form: binary nodes always parenthesized, atoms as
/// name(arg arg;arg), strong negation as a ~ prefix.  parse_formula of the
/// output returns the identical (interned) formula.
std::string print_formula(const FormulaPtr& f);

}  // namespace teamlogic
