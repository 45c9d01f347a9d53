#include "teamlogic/translate.hpp"

#include <cctype>
#include <unordered_map>

#include "teamlogic/team.hpp"

namespace teamlogic {

// ---------------------------------------------------------------------------
// Modes
// ---------------------------------------------------------------------------

TranslationMode translation_mode_from_string(const std::string& s) {
  std::string key;
  for (char c : s) {
    if (c == '-' || c == '_') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (key == "explax") return TranslationMode::kExpLax;
  if (key == "expstrict") return TranslationMode::kExpStrict;
  if (key == "polyneglax") return TranslationMode::kPolynegLax;
  if (key == "polynegstrict") return TranslationMode::kPolynegStrict;
  if (key == "polyfulllax") return TranslationMode::kPolyFullLax;
  if (key == "polyfullstrict") return TranslationMode::kPolyFullStrict;
  throw SyntaxError("unknown translation mode '" + s + "'");
}

std::string translation_mode_name(TranslationMode m) {
  switch (m) {
    case TranslationMode::kExpLax:
      return "exp-lax";
    case TranslationMode::kExpStrict:
      return "exp-strict";
    case TranslationMode::kPolynegLax:
      return "polyneg-lax";
    case TranslationMode::kPolynegStrict:
      return "polyneg-strict";
    case TranslationMode::kPolyFullLax:
      return "poly-full-lax";
    case TranslationMode::kPolyFullStrict:
      return "poly-full-strict";
  }
  throw Error("unreachable translation mode");
}

// ---------------------------------------------------------------------------
// Abbreviations
// ---------------------------------------------------------------------------

FormulaPtr sugar_NE() { return strong_neg(bot()); }

FormulaPtr sugar_E(const FormulaPtr& a) {
  return lax_or(top(), conj(sugar_NE(), a));
}

FormulaPtr sugar_hook(const FormulaPtr& a, const FormulaPtr& f, bool strict) {
  const FormulaPtr guard = dual_neg(a);
  const FormulaPtr body = conj(a, f);
  return strict ? strict_or(guard, body) : lax_or(guard, body);
}

FormulaPtr sugar_iff(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) {
    throw ArityError("componentwise iff needs tuples of equal length");
  }
  std::vector<FormulaPtr> parts;
  parts.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    parts.push_back(lax_or(conj(a[i], b[i]),
                           conj(dual_neg(a[i]), dual_neg(b[i]))));
  }
  return big_conj(parts);
}

FormulaPtr sugar_niff(const Tuple& a, const Tuple& b) {
  // Dual negation pushed inwards yields the disjunction of componentwise
  // differences.
  return dual_neg(sugar_iff(a, b));
}

FormulaPtr sugar_one(const Tuple& a) {
  std::vector<FormulaPtr> deps;
  deps.reserve(a.size());
  for (const FormulaPtr& arg : a) {
    deps.push_back(atom_dep(Tuple{}, Tuple{arg}));
  }
  return conj(sugar_NE(), big_conj(deps));
}

namespace {

FormulaPtr fold_right(NodeKind kind, const std::vector<FormulaPtr>& fs,
                      const FormulaPtr& empty_value) {
  if (fs.empty()) return empty_value;
  FormulaPtr acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) {
    acc = make_binary(kind, fs[i], acc);
  }
  return acc;
}

}  // namespace

FormulaPtr big_conj(const std::vector<FormulaPtr>& fs) {
  return fold_right(NodeKind::kConj, fs, top());
}

FormulaPtr big_lax_or(const std::vector<FormulaPtr>& fs) {
  return fold_right(NodeKind::kLaxOr, fs, bot());
}

FormulaPtr big_strict_or(const std::vector<FormulaPtr>& fs) {
  return fold_right(NodeKind::kStrictOr, fs, bot());
}

FormulaPtr big_bool_or(const std::vector<FormulaPtr>& fs) {
  return fold_right(NodeKind::kBoolOr, fs, strong_neg(top()));
}

// ---------------------------------------------------------------------------
// Shared building blocks
// ---------------------------------------------------------------------------

namespace {

FormulaPtr bool_lit(bool value) { return value ? top() : bot(); }

// Constant tuple for value v in binary counting order: component 0 carries
// the most significant digit, bot = 0 and top = 1.
Tuple constant_tuple(std::size_t arity, std::uint32_t v) {
  Tuple t;
  t.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    t.push_back(bool_lit((v >> (arity - 1 - i)) & 1u));
  }
  return t;
}

void check_enumerable(std::size_t arity) {
  if (arity > 16) {
    throw CapacityError("value enumeration over a tuple of arity " +
                        std::to_string(arity) + " (limit 16)");
  }
}

FormulaPtr iff1(const FormulaPtr& a, const FormulaPtr& b) {
  return sugar_iff(Tuple{a}, Tuple{b});
}

FormulaPtr niff1(const FormulaPtr& a, const FormulaPtr& b) {
  return sugar_niff(Tuple{a}, Tuple{b});
}

// Recursive node rewriters, memoised so shared subtrees rewrite once.
class Rewriter {
 public:
  virtual ~Rewriter() = default;

  FormulaPtr run(const FormulaPtr& f) {
    auto it = memo_.find(f.get());
    if (it != memo_.end()) return it->second;
    FormulaPtr out = rewrite(f);
    memo_.emplace(f.get(), out);
    return out;
  }

 protected:
  virtual FormulaPtr rewrite(const FormulaPtr& f) = 0;

  FormulaPtr descend(const FormulaPtr& f) {
    switch (f->kind()) {
      case NodeKind::kLiteral:
      case NodeKind::kAtom:
        return f;
      case NodeKind::kStrongNeg:
        return strong_neg(run(f->left()));
      default:
        return make_binary(f->kind(), run(f->left()), run(f->right()));
    }
  }

 private:
  std::unordered_map<const Formula*, FormulaPtr> memo_;
};

// Every lax split becomes strict.
class Strictifier : public Rewriter {
 protected:
  FormulaPtr rewrite(const FormulaPtr& f) override {
    if (f->kind() == NodeKind::kLaxOr) {
      return strict_or(run(f->left()), run(f->right()));
    }
    if (f->kind() == NodeKind::kLaxCoOr) {
      return strict_co_or(run(f->left()), run(f->right()));
    }
    return descend(f);
  }
};

// Every Boolean disjunction is expressed with conjunction and strong
// negation.
class Debooler : public Rewriter {
 protected:
  FormulaPtr rewrite(const FormulaPtr& f) override {
    if (f->kind() == NodeKind::kBoolOr) {
      return strong_neg(
          conj(strong_neg(run(f->left())), strong_neg(run(f->right()))));
    }
    return descend(f);
  }
};

FormulaPtr strictify(const FormulaPtr& f) { return Strictifier{}.run(f); }
FormulaPtr debool(const FormulaPtr& f) { return Debooler{}.run(f); }

// ---------------------------------------------------------------------------
// Value-table expansions
// ---------------------------------------------------------------------------

FormulaPtr exp_dep(const Tuple& alpha, const Tuple& beta) {
  check_enumerable(alpha.size());
  std::vector<FormulaPtr> constancy;
  constancy.reserve(beta.size());
  for (const FormulaPtr& b : beta) {
    constancy.push_back(bool_or(b, dual_neg(b)));
  }
  const FormulaPtr right_constant = big_conj(constancy);
  std::vector<FormulaPtr> disjuncts;
  const std::uint32_t count = std::uint32_t{1} << alpha.size();
  for (std::uint32_t c = 0; c < count; ++c) {
    disjuncts.push_back(
        conj(sugar_iff(alpha, constant_tuple(alpha.size(), c)),
             right_constant));
  }
  return big_lax_or(disjuncts);
}

FormulaPtr exp_indep(const Tuple& alpha, const Tuple& beta) {
  check_enumerable(alpha.size());
  check_enumerable(beta.size());
  std::vector<FormulaPtr> conjuncts;
  const std::uint32_t na = std::uint32_t{1} << alpha.size();
  const std::uint32_t nb = std::uint32_t{1} << beta.size();
  for (std::uint32_t c = 0; c < na; ++c) {
    const Tuple ct = constant_tuple(alpha.size(), c);
    for (std::uint32_t c2 = 0; c2 < nb; ++c2) {
      const Tuple c2t = constant_tuple(beta.size(), c2);
      conjuncts.push_back(bool_or(
          sugar_niff(alpha, ct),
          bool_or(sugar_niff(beta, c2t),
                  sugar_E(conj(sugar_iff(alpha, ct), sugar_iff(beta, c2t))))));
    }
  }
  return big_conj(conjuncts);
}

FormulaPtr exp_cond_indep(const Tuple& alpha, const Tuple& gamma,
                          const Tuple& beta) {
  check_enumerable(gamma.size());
  const FormulaPtr unconditional = exp_indep(alpha, beta);
  std::vector<FormulaPtr> disjuncts;
  const std::uint32_t count = std::uint32_t{1} << gamma.size();
  for (std::uint32_t c = 0; c < count; ++c) {
    disjuncts.push_back(conj(sugar_iff(gamma, constant_tuple(gamma.size(), c)),
                             unconditional));
  }
  return big_lax_or(disjuncts);
}

FormulaPtr exp_incl(const Tuple& alpha, const Tuple& beta) {
  check_enumerable(alpha.size());
  std::vector<FormulaPtr> conjuncts;
  const std::uint32_t count = std::uint32_t{1} << alpha.size();
  for (std::uint32_t c = 0; c < count; ++c) {
    const Tuple ct = constant_tuple(alpha.size(), c);
    conjuncts.push_back(
        bool_or(sugar_niff(alpha, ct), sugar_E(sugar_iff(beta, ct))));
  }
  return big_conj(conjuncts);
}

FormulaPtr exp_excl(const Tuple& alpha, const Tuple& beta) {
  check_enumerable(alpha.size());
  std::vector<FormulaPtr> conjuncts;
  const std::uint32_t count = std::uint32_t{1} << alpha.size();
  for (std::uint32_t c = 0; c < count; ++c) {
    const Tuple ct = constant_tuple(alpha.size(), c);
    conjuncts.push_back(bool_or(sugar_niff(alpha, ct), sugar_niff(beta, ct)));
  }
  return big_conj(conjuncts);
}

FormulaPtr exp_anon(const Tuple& alpha, const Tuple& beta) {
  check_enumerable(alpha.size());
  std::vector<FormulaPtr> flips;
  flips.reserve(beta.size());
  for (const FormulaPtr& b : beta) {
    flips.push_back(conj(sugar_E(b), sugar_E(dual_neg(b))));
  }
  const FormulaPtr some_flip = big_bool_or(flips);
  std::vector<FormulaPtr> disjuncts;
  const std::uint32_t count = std::uint32_t{1} << alpha.size();
  for (std::uint32_t c = 0; c < count; ++c) {
    disjuncts.push_back(
        conj(sugar_iff(alpha, constant_tuple(alpha.size(), c)), some_flip));
  }
  return big_lax_or(disjuncts);
}

}  // namespace

FormulaPtr translate_exp(const FormulaPtr& atom, TranslationMode mode) {
  if (atom->kind() != NodeKind::kAtom) {
    throw UnsupportedError("value-table expansion requires an atom");
  }
  if (mode != TranslationMode::kExpLax && mode != TranslationMode::kExpStrict) {
    throw UnsupportedError("translate_exp requires an exp-* mode");
  }
  const std::vector<Tuple>& t = atom->tuples();
  FormulaPtr out;
  switch (atom->atom_kind()) {
    case AtomKind::kDep:
      out = exp_dep(t[0], t[1]);
      break;
    case AtomKind::kIndep:
      out = exp_indep(t[0], t[1]);
      break;
    case AtomKind::kCondIndep:
      out = exp_cond_indep(t[0], t[1], t[2]);
      break;
    case AtomKind::kIncl:
      out = exp_incl(t[0], t[1]);
      break;
    case AtomKind::kExcl:
      out = exp_excl(t[0], t[1]);
      break;
    case AtomKind::kAnon:
      out = exp_anon(t[0], t[1]);
      break;
  }
  return mode == TranslationMode::kExpStrict ? strictify(out) : out;
}

// ---------------------------------------------------------------------------
// Pairwise comparison helpers
// ---------------------------------------------------------------------------

FormulaPtr theta_eq(const Tuple& alpha, const Tuple& beta,
                    const FormulaPtr& gamma) {
  if (alpha.size() != beta.size()) {
    throw ArityError("comparison helpers need tuples of equal length");
  }
  const FormulaPtr ngamma = dual_neg(gamma);
  std::vector<FormulaPtr> conjuncts;
  conjuncts.reserve(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<FormulaPtr> cases;
    for (const FormulaPtr& l : {bot(), top()}) {
      cases.push_back(lax_or(conj(gamma, iff1(alpha[i], l)),
                             conj(ngamma, iff1(beta[i], l))));
    }
    conjuncts.push_back(big_bool_or(cases));
  }
  return big_conj(conjuncts);
}

FormulaPtr theta_neq(const Tuple& alpha, const Tuple& beta,
                     const FormulaPtr& gamma) {
  if (alpha.size() != beta.size()) {
    throw ArityError("comparison helpers need tuples of equal length");
  }
  const FormulaPtr ngamma = dual_neg(gamma);
  const FormulaPtr some_gamma = sugar_E(gamma);
  std::vector<FormulaPtr> disjuncts;
  disjuncts.reserve(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<FormulaPtr> cases;
    for (const FormulaPtr& l : {bot(), top()}) {
      cases.push_back(lax_or(conj(gamma, iff1(alpha[i], l)),
                             conj(ngamma, niff1(beta[i], l))));
    }
    disjuncts.push_back(conj(some_gamma, big_bool_or(cases)));
  }
  return big_lax_or(disjuncts);
}

// ---------------------------------------------------------------------------
// Polynomial complements
// ---------------------------------------------------------------------------

namespace {

// With strict splits the lax disjunction over pivots inside theta_neq is not
// available; the replacement reaches the same teams through strong negation.
FormulaPtr theta_neq_strict(const Tuple& alpha, const Tuple& beta,
                            const FormulaPtr& gamma) {
  return bool_or(
      gamma,
      strong_neg(strict_or(
          top(), big_conj({sugar_E(gamma), sugar_E(dual_neg(gamma)),
                           theta_eq(alpha, beta, gamma)}))));
}

FormulaPtr theta_neq_mode(const Tuple& alpha, const Tuple& beta,
                          const FormulaPtr& gamma, bool strict) {
  return strict ? theta_neq_strict(alpha, beta, gamma)
                : theta_neq(alpha, beta, gamma);
}

FormulaPtr complement_dep(const Tuple& alpha, const Tuple& beta) {
  std::vector<FormulaPtr> tosses;
  tosses.reserve(alpha.size());
  for (const FormulaPtr& a : alpha) {
    tosses.push_back(bool_or(a, dual_neg(a)));
  }
  std::vector<FormulaPtr> flips;
  flips.reserve(beta.size());
  for (const FormulaPtr& b : beta) {
    flips.push_back(conj(sugar_E(b), sugar_E(dual_neg(b))));
  }
  return lax_or(top(), conj(big_conj(tosses), big_bool_or(flips)));
}

FormulaPtr complement_excl(const Tuple& alpha, const Tuple& beta) {
  const FormulaPtr ones = sugar_one(alpha);
  std::vector<FormulaPtr> elems;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (const FormulaPtr& gamma : {alpha[i], dual_neg(alpha[i])}) {
      elems.push_back(lax_or(
          top(), big_conj({sugar_E(dual_neg(gamma)), sugar_hook(gamma, ones),
                           theta_eq(alpha, beta, gamma)})));
    }
  }
  return bool_or(sugar_E(sugar_iff(alpha, beta)), big_bool_or(elems));
}

FormulaPtr complement_incl(const Tuple& alpha, const Tuple& beta,
                           bool strict) {
  const FormulaPtr ones = sugar_one(alpha);
  std::vector<FormulaPtr> elems;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (const FormulaPtr& gamma : {beta[i], dual_neg(beta[i])}) {
      elems.push_back(lax_or(
          gamma,
          conj(sugar_hook(gamma, conj(niff1(alpha[i], beta[i]), ones)),
               theta_neq_mode(alpha, beta, gamma, strict))));
    }
  }
  return big_bool_or(elems);
}

FormulaPtr complement_cond_indep(const Tuple& alpha, const Tuple& gamma,
                                 const Tuple& beta, bool strict) {
  Tuple alpha_gamma = alpha;
  alpha_gamma.insert(alpha_gamma.end(), gamma.begin(), gamma.end());
  const FormulaPtr cond_ones = sugar_one(gamma);
  std::vector<FormulaPtr> elems;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (const FormulaPtr& delta : {alpha[i], dual_neg(alpha[i])}) {
      for (std::size_t j = 0; j < beta.size(); ++j) {
        for (const FormulaPtr& eps : {beta[j], dual_neg(beta[j])}) {
          const FormulaPtr either = lax_or(delta, eps);
          const FormulaPtr bracket = lax_or(
              conj(dual_neg(delta),
                   theta_neq_mode(alpha_gamma, alpha_gamma, eps, strict)),
              conj(dual_neg(eps), theta_neq_mode(beta, beta, delta, strict)));
          elems.push_back(
              lax_or(either,
                     big_conj({bracket, sugar_E(delta), sugar_E(eps),
                               sugar_hook(either, cond_ones)})));
        }
      }
    }
  }
  return big_bool_or(elems);
}

// Conjunction of right-tuple literals fixing the value c, in binary counting
// order (bit clear = negated component).
FormulaPtr cell_conjunction(const Tuple& beta, std::uint32_t c) {
  std::vector<FormulaPtr> lits;
  lits.reserve(beta.size());
  for (std::size_t j = 0; j < beta.size(); ++j) {
    const bool positive = (c >> (beta.size() - 1 - j)) & 1u;
    lits.push_back(positive ? beta[j] : dual_neg(beta[j]));
  }
  return big_conj(lits);
}

FormulaPtr complement_anon(const Tuple& alpha, const Tuple& beta,
                           bool strict) {
  check_enumerable(beta.size());
  const std::uint32_t cells = std::uint32_t{1} << beta.size();
  if (alpha.empty()) {
    // Every member is everyone's twin, so the complement says: nonempty and
    // constant on the whole right tuple.  (The pivot machinery below needs a
    // nonempty left tuple.)
    std::vector<FormulaPtr> elems;
    for (std::uint32_t c = 0; c < cells; ++c) {
      elems.push_back(conj(sugar_NE(), cell_conjunction(beta, c)));
    }
    return big_bool_or(elems);
  }
  const FormulaPtr ones = sugar_one(alpha);
  if (beta.size() == 1) {
    std::vector<FormulaPtr> elems;
    for (const FormulaPtr& gamma : {beta[0], dual_neg(beta[0])}) {
      elems.push_back(
          lax_or(gamma, conj(sugar_hook(gamma, ones),
                             theta_neq_mode(alpha, alpha, gamma, strict))));
    }
    return big_bool_or(elems);
  }
  // Wider right tuples: one disjunct per constant right value, pivoting on
  // the members that realize it.
  std::vector<FormulaPtr> elems;
  for (std::uint32_t c = 0; c < cells; ++c) {
    const FormulaPtr gamma = cell_conjunction(beta, c);
    elems.push_back(
        lax_or(gamma, conj(sugar_hook(gamma, ones),
                           theta_neq_mode(alpha, alpha, gamma, strict))));
  }
  return big_bool_or(elems);
}

void require_atom(const FormulaPtr& atom, const char* op) {
  if (atom->kind() != NodeKind::kAtom) {
    throw UnsupportedError(std::string(op) + " requires an atom");
  }
}

}  // namespace

FormulaPtr translate_polyneg(const FormulaPtr& atom, TranslationMode mode) {
  require_atom(atom, "translate_polyneg");
  if (mode != TranslationMode::kPolynegLax &&
      mode != TranslationMode::kPolynegStrict) {
    throw UnsupportedError("translate_polyneg requires a polyneg-* mode");
  }
  const bool strict = mode == TranslationMode::kPolynegStrict;
  const std::vector<Tuple>& t = atom->tuples();
  FormulaPtr out;
  switch (atom->atom_kind()) {
    case AtomKind::kDep:
      out = complement_dep(t[0], t[1]);
      break;
    case AtomKind::kExcl:
      out = complement_excl(t[0], t[1]);
      break;
    case AtomKind::kIncl:
    case AtomKind::kIndep:
    case AtomKind::kCondIndep:
    case AtomKind::kAnon:
      if (strict) {
        throw UnsupportedError(
            "strict split-only complements exist for dep and excl only");
      }
      if (atom->atom_kind() == AtomKind::kIncl) {
        out = complement_incl(t[0], t[1], false);
      } else if (atom->atom_kind() == AtomKind::kIndep) {
        out = complement_cond_indep(t[0], Tuple{}, t[1], false);
      } else if (atom->atom_kind() == AtomKind::kCondIndep) {
        out = complement_cond_indep(t[0], t[1], t[2], false);
      } else {
        out = complement_anon(t[0], t[1], false);
      }
      return out;
  }
  return strict ? strictify(out) : out;
}

FormulaPtr translate_polyfull(const FormulaPtr& atom, TranslationMode mode) {
  require_atom(atom, "translate_polyfull");
  if (mode != TranslationMode::kPolyFullLax &&
      mode != TranslationMode::kPolyFullStrict) {
    throw UnsupportedError("translate_polyfull requires a poly-full-* mode");
  }
  const bool strict = mode == TranslationMode::kPolyFullStrict;
  const std::vector<Tuple>& t = atom->tuples();
  FormulaPtr full;
  if (atom->atom_kind() == AtomKind::kAnon) {
    // Column-by-column: the atom is the split disjunction of its single
    // column instances, each expressed as the strong negation of its
    // complement.
    std::vector<FormulaPtr> parts;
    parts.reserve(t[1].size());
    for (const FormulaPtr& b : t[1]) {
      parts.push_back(strong_neg(complement_anon(t[0], Tuple{b}, strict)));
    }
    full = strict ? big_strict_or(parts) : big_lax_or(parts);
  } else {
    FormulaPtr body;
    switch (atom->atom_kind()) {
      case AtomKind::kDep:
        body = complement_dep(t[0], t[1]);
        break;
      case AtomKind::kExcl:
        body = complement_excl(t[0], t[1]);
        break;
      case AtomKind::kIncl:
        body = complement_incl(t[0], t[1], strict);
        break;
      case AtomKind::kIndep:
        body = complement_cond_indep(t[0], Tuple{}, t[1], strict);
        break;
      case AtomKind::kCondIndep:
        body = complement_cond_indep(t[0], t[1], t[2], strict);
        break;
      case AtomKind::kAnon:
        break;
    }
    full = strong_neg(body);
  }
  if (strict) full = strictify(full);
  return debool(full);
}

FormulaPtr upsilon_decomposition(const Tuple& alpha, const Tuple& beta,
                                 bool strict) {
  if (beta.empty()) {
    throw ArityError("the decomposition needs a nonempty right tuple");
  }
  std::vector<FormulaPtr> parts;
  parts.reserve(beta.size());
  for (const FormulaPtr& b : beta) {
    parts.push_back(atom_anon(alpha, Tuple{b}));
  }
  return strict ? big_strict_or(parts) : big_lax_or(parts);
}

// ---------------------------------------------------------------------------
// Parity
// ---------------------------------------------------------------------------

FormulaPtr parity_poly(const Domain& d) {
  if (d.size() > kMaxDenotationProps) {
    throw CapacityError("parity formulas support at most " +
                        std::to_string(kMaxDenotationProps) + " propositions");
  }
  // Singleton formula over the full domain, shared by every level.
  std::vector<FormulaPtr> deps;
  deps.reserve(d.size());
  for (const std::string& name : d.props()) {
    deps.push_back(atom_dep(Tuple{}, Tuple{prop(name)}));
  }
  const FormulaPtr one = conj(sugar_NE(), big_conj(deps));
  // The recursion peels one proposition per level: a team has odd size iff
  // either it is a singleton, or after fixing the peeled proposition one of
  // the two halves has odd size and the other even.
  FormulaPtr phi = one;
  for (std::size_t j = d.size(); j-- > 0;) {
    const FormulaPtr dp = atom_dep(Tuple{}, Tuple{prop(d.name(j))});
    const FormulaPtr psi = strict_or(
        bool_or(one, conj(strong_neg(dp), strict_or(one, dp))),
        conj(dp, strong_neg(phi)));
    phi = strict_or(one, strong_neg(psi));
  }
  return phi;
}

FormulaPtr parity_exp(const Domain& d, Parity parity) {
  if (d.size() > kMaxDenotationProps) {
    throw CapacityError("parity formulas support at most " +
                        std::to_string(kMaxDenotationProps) + " propositions");
  }
  FormulaPtr even = bot();
  FormulaPtr odd = sugar_NE();
  for (std::size_t j = d.size(); j-- > 0;) {
    const FormulaPtr p = prop(d.name(j));
    const FormulaPtr np = neg_prop(d.name(j));
    const FormulaPtr next_even = bool_or(
        lax_or(conj(p, odd), conj(np, odd)),
        lax_or(conj(p, even), conj(np, even)));
    const FormulaPtr next_odd = bool_or(
        lax_or(conj(p, odd), conj(np, even)),
        lax_or(conj(p, even), conj(np, odd)));
    even = next_even;
    odd = next_odd;
  }
  return parity == Parity::kEven ? even : odd;
}

// ---------------------------------------------------------------------------
// Structural rewrites
// ---------------------------------------------------------------------------

namespace {

class Relaxer : public Rewriter {
 protected:
  FormulaPtr rewrite(const FormulaPtr& f) override {
    if (f->kind() == NodeKind::kStrictOr) {
      return lax_or(run(f->left()), run(f->right()));
    }
    if (f->kind() == NodeKind::kStrictCoOr) {
      return lax_co_or(run(f->left()), run(f->right()));
    }
    return descend(f);
  }
};

constexpr std::size_t kNormalFormCap = 4096;

void append_normal_form(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  switch (f->kind()) {
    case NodeKind::kLiteral:
    case NodeKind::kAtom:
      out.push_back(f);
      return;
    case NodeKind::kBoolOr:
      append_normal_form(f->left(), out);
      append_normal_form(f->right(), out);
      return;
    case NodeKind::kConj:
    case NodeKind::kLaxOr:
    case NodeKind::kStrictOr: {
      std::vector<FormulaPtr> left, right;
      append_normal_form(f->left(), left);
      append_normal_form(f->right(), right);
      if (left.size() * right.size() + out.size() > kNormalFormCap) {
        throw CapacityError("normal form exceeds " +
                            std::to_string(kNormalFormCap) + " disjuncts");
      }
      for (const FormulaPtr& l : left) {
        for (const FormulaPtr& r : right) {
          out.push_back(make_binary(f->kind(), l, r));
        }
      }
      return;
    }
    default:
      throw SignatureError(
          "the disjunctive normal form is defined for formulas built from "
          "literals, atoms, (v), /\\, \\/ and \\./ only");
  }
}

}  // namespace

FormulaPtr relax(const FormulaPtr& f) { return Relaxer{}.run(f); }

std::vector<FormulaPtr> bor_normal_form(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  append_normal_form(f, out);
  // Hash-consing makes duplicates pointer-equal; keep first occurrences.
  std::vector<FormulaPtr> dedup;
  for (const FormulaPtr& g : out) {
    bool seen = false;
    for (const FormulaPtr& h : dedup) {
      if (h.get() == g.get()) {
        seen = true;
        break;
      }
    }
    if (!seen) dedup.push_back(g);
  }
  return dedup;
}

}  // namespace teamlogic
