#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "teamlogic/team.hpp"

namespace teamlogic {

// ---------------------------------------------------------------------------
// Syntax
// ---------------------------------------------------------------------------

enum class NodeKind {
  kLiteral,      // top, bot, p, -p, each optionally under ~
  kStrongNeg,    // ~f for non-literal f
  kConj,         // f /\ g
  kBoolOr,       // f (v) g
  kLaxOr,        // f \/ g
  kStrictOr,     // f \./ g
  kLaxCoOr,      // f (^) g
  kStrictCoOr,   // f (.^) g
  kAtom,         // dep/perp/perpc/inc/excl/ups
};

enum class LitBase { kTop, kBot, kProp, kNegProp };

enum class AtomKind { kDep, kIndep, kCondIndep, kIncl, kExcl, kAnon };

/// Surface name of an atom: dep, perp, perpc, inc, excl, ups.
const char* atom_name(AtomKind k);

class Formula;
/// Formulas are immutable and hash-consed: structurally equal formulas are
/// the same object, so pointer equality is structural equality and evaluation
/// caches keyed by pointer see all sharing.
using FormulaPtr = std::shared_ptr<const Formula>;
using Tuple = std::vector<FormulaPtr>;

class Formula {
 public:
  NodeKind kind() const { return kind_; }

  // Literal accessors (kind() == kLiteral).
  LitBase lit_base() const { return lit_base_; }
  bool lit_strong() const { return lit_strong_; }
  const std::string& prop() const { return prop_; }

  // Child accessors (unary/binary nodes). StrongNeg uses left().
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

  // Atom accessors (kind() == kAtom).  tuples() holds the argument tuples in
  // surface order; the conditional independence atom has three tuples
  // (left side; condition; right side), all others two.
  AtomKind atom_kind() const { return atom_kind_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }

  /// Symbol count: literals cost 1 (2 for -p, +1 under ~), binary nodes add
  /// 3 (parentheses and the connective), ~ adds 1, the dependence atom adds
  /// 4 on top of its arguments and the other atoms add 1.
  std::uint64_t length() const { return length_; }
  /// Leaf count of the syntax tree; literals and atoms count 1.
  std::uint64_t width() const { return width_; }
  /// Number of Boolean-disjunction nodes, counted with tree multiplicity.
  std::uint64_t occ_bool_or() const { return occ_bool_or_; }
  /// Number of strict split nodes (\./ and (.^)), with tree multiplicity.
  std::uint64_t occ_strict() const { return occ_strict_; }
  /// True for formulas built from top/bot/p/-p with /\ and \/ only.
  bool purely_propositional() const { return purely_propositional_; }

  std::uint64_t hash() const { return hash_; }

  ~Formula() = default;

 private:
  Formula() = default;
  friend class FormulaFactory;

  NodeKind kind_ = NodeKind::kLiteral;
  LitBase lit_base_ = LitBase::kTop;
  bool lit_strong_ = false;
  std::string prop_;
  FormulaPtr left_;
  FormulaPtr right_;
  AtomKind atom_kind_ = AtomKind::kDep;
  std::vector<Tuple> tuples_;
  std::uint64_t length_ = 0;
  std::uint64_t width_ = 0;
  std::uint64_t occ_bool_or_ = 0;
  std::uint64_t occ_strict_ = 0;
  bool purely_propositional_ = false;
  std::uint64_t hash_ = 0;
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

FormulaPtr top();
FormulaPtr bot();
FormulaPtr prop(const std::string& name);
/// The dual-negated proposition -name.
FormulaPtr neg_prop(const std::string& name);

/// Strong negation ~f.  On a literal without ~ it folds into the literal;
/// otherwise it wraps the formula in a kStrongNeg node.
FormulaPtr strong_neg(const FormulaPtr& f);

/// Dual negation, defined on purely propositional formulas only: swaps
/// top/bot and p/-p and is pushed inwards through /\ and \/ (De Morgan).
/// Throws SignatureError on other formulas.
FormulaPtr dual_neg(const FormulaPtr& f);

FormulaPtr conj(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr bool_or(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr lax_or(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr strict_or(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr lax_co_or(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr strict_co_or(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr make_binary(NodeKind kind, const FormulaPtr& a, const FormulaPtr& b);

/// dep(alpha; beta): beta functionally depends on alpha.  |beta| >= 1;
/// empty alpha means constancy of beta.
FormulaPtr atom_dep(const Tuple& alpha, const Tuple& beta);
/// perp(alpha; beta): value combinations are free.  Both sides nonempty.
FormulaPtr atom_indep(const Tuple& alpha, const Tuple& beta);
/// perpc(alpha; gamma; beta): independence of alpha and beta for each fixed
/// value of the condition gamma.  Sides nonempty; gamma may be empty.
FormulaPtr atom_cond_indep(const Tuple& alpha, const Tuple& gamma,
                           const Tuple& beta);
/// inc(alpha; beta): every alpha value occurs as a beta value. |alpha|=|beta|>=1.
FormulaPtr atom_incl(const Tuple& alpha, const Tuple& beta);
/// excl(alpha; beta): no alpha value occurs as a beta value. |alpha|=|beta|>=1.
FormulaPtr atom_excl(const Tuple& alpha, const Tuple& beta);
/// ups(alpha; beta): every member has an alpha-twin with a different beta
/// value.  |beta| >= 1; alpha may be empty.
FormulaPtr atom_anon(const Tuple& alpha, const Tuple& beta);

FormulaPtr make_atom(AtomKind kind, std::vector<Tuple> tuples);

// ---------------------------------------------------------------------------
// Inspection
// ---------------------------------------------------------------------------

/// Distinct proposition names of f, sorted.
std::vector<std::string> prop_names(const FormulaPtr& f);
/// Domain over the sorted propositions of f.
Domain formula_domain(const FormulaPtr& f);

inline std::uint64_t length(const FormulaPtr& f) { return f->length(); }
inline std::uint64_t width(const FormulaPtr& f) { return f->width(); }
inline std::uint64_t occ_bool_or(const FormulaPtr& f) { return f->occ_bool_or(); }
inline std::uint64_t occ_strict(const FormulaPtr& f) { return f->occ_strict(); }
inline bool purely_propositional(const FormulaPtr& f) {
  return f->purely_propositional();
}

// ---------------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------------

/// A connective/atom signature.  Literals, including their strong-negated
/// forms, are always permitted.  bit i of atoms set = AtomKind(i) allowed.
struct ConnectiveSet {
  bool conj = false;
  bool bool_or = false;
  bool lax_or = false;
  bool strict_or = false;
  bool lax_co_or = false;
  bool strict_co_or = false;
  bool strong_neg = false;
  unsigned atoms = 0;

  ConnectiveSet& allow(AtomKind k) {
    atoms |= 1u << static_cast<unsigned>(k);
    return *this;
  }
  bool allows(AtomKind k) const {
    return (atoms >> static_cast<unsigned>(k)) & 1u;
  }

  /// Parse a comma separated list: and, bor, or, ors, coor, coors, not,
  /// dep, perp, perpc, inc, excl, ups.
  static ConnectiveSet parse(const std::string& csv);
  std::string to_string() const;
};

/// True when every connective and atom of f belongs to `sig` (strong-negated
/// literals always pass).
bool check_signature(const FormulaPtr& f, const ConnectiveSet& sig);

}  // namespace teamlogic
