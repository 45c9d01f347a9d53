#include "teamlogic/semantics.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "teamlogic/atoms.hpp"

namespace teamlogic {

namespace {

void require_denotation_domain(const Domain& d) {
  if (d.size() > kMaxDenotationProps) {
    throw CapacityError("denotations support at most " +
                        std::to_string(kMaxDenotationProps) +
                        " propositions, got " + std::to_string(d.size()));
  }
}

void require_props_in(const FormulaPtr& f, const Domain& d) {
  for (const std::string& name : prop_names(f)) {
    if (!d.contains(name)) {
      throw DomainError("formula proposition '" + name +
                        "' is outside the domain " + d.to_string());
    }
  }
}

// In-place subset-sum (zeta) transform over the team lattice: afterwards
// a[t] = sum over subsets s of t of the original a[s].
void subset_zeta(std::vector<std::uint64_t>& a, std::uint32_t assignments) {
  const std::uint32_t space = std::uint32_t{1} << assignments;
  for (std::uint32_t b = 0; b < assignments; ++b) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    for (std::uint32_t t = 0; t < space; ++t) {
      if (t & bit) a[t] += a[t ^ bit];
    }
  }
}

// Inverse of subset_zeta.
void subset_mobius(std::vector<std::uint64_t>& a, std::uint32_t assignments) {
  const std::uint32_t space = std::uint32_t{1} << assignments;
  for (std::uint32_t b = 0; b < assignments; ++b) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    for (std::uint32_t t = 0; t < space; ++t) {
      if (t & bit) a[t] -= a[t ^ bit];
    }
  }
}

std::vector<std::uint64_t> indicator(const Denotation& d) {
  std::vector<std::uint64_t> v(d.team_space());
  for (std::uint32_t t = 0; t < d.team_space(); ++t) v[t] = d.test(t) ? 1 : 0;
  return v;
}

void require_same_domain(const Denotation& a, const Denotation& b) {
  if (a.domain() != b.domain()) {
    throw DomainError("combined denotations over different domains (" +
                      a.domain().to_string() + " vs " +
                      b.domain().to_string() + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Denotation
// ---------------------------------------------------------------------------

Denotation::Denotation(Domain d) : domain_(std::move(d)) {
  require_denotation_domain(domain_);
  team_space_ = std::uint32_t{1} << domain_.assignment_count();
  words_.assign((team_space_ + 63) / 64, 0);
}

std::size_t Denotation::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool Denotation::subset_of(const Denotation& o) const {
  require_same_domain(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool Denotation::operator==(const Denotation& o) const {
  return domain_ == o.domain_ && words_ == o.words_;
}

std::vector<Team> Denotation::teams() const {
  std::vector<Team> out;
  for (std::uint32_t t = 0; t < team_space_; ++t) {
    if (test(t)) out.emplace_back(domain_, t);
  }
  return out;
}

Denotation denot_and(const Denotation& a, const Denotation& b) {
  require_same_domain(a, b);
  Denotation r(a.domain());
  for (std::uint32_t t = 0; t < r.team_space(); ++t) {
    r.set(t, a.test(t) && b.test(t));
  }
  return r;
}

Denotation denot_or(const Denotation& a, const Denotation& b) {
  require_same_domain(a, b);
  Denotation r(a.domain());
  for (std::uint32_t t = 0; t < r.team_space(); ++t) {
    r.set(t, a.test(t) || b.test(t));
  }
  return r;
}

Denotation denot_not(const Denotation& a) {
  Denotation r(a.domain());
  for (std::uint32_t t = 0; t < r.team_space(); ++t) r.set(t, !a.test(t));
  return r;
}

Denotation denot_cover(const Denotation& a, const Denotation& b) {
  require_same_domain(a, b);
  // Count covers via the zeta transforms: the pointwise product of the
  // subset sums, transformed back, counts pairs (S, U) with S ∪ U = t.
  const std::uint32_t assignments = a.domain().assignment_count();
  std::vector<std::uint64_t> fa = indicator(a);
  std::vector<std::uint64_t> fb = indicator(b);
  subset_zeta(fa, assignments);
  subset_zeta(fb, assignments);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  subset_mobius(fa, assignments);
  Denotation r(a.domain());
  for (std::uint32_t t = 0; t < r.team_space(); ++t) r.set(t, fa[t] != 0);
  return r;
}

Denotation denot_disjoint(const Denotation& a, const Denotation& b) {
  require_same_domain(a, b);
  Denotation r(a.domain());
  for (std::uint32_t t = 0; t < r.team_space(); ++t) {
    bool hit = false;
    // Enumerate submasks of t (including 0 and t itself).
    std::uint32_t s = t;
    while (true) {
      if (a.test(s) && b.test(t ^ s)) {
        hit = true;
        break;
      }
      if (s == 0) break;
      s = (s - 1) & t;
    }
    r.set(t, hit);
  }
  return r;
}

Denotation denot_co_cover(const Denotation& a, const Denotation& b) {
  // T splits universally into a-or-b parts iff no cover avoids both.
  return denot_not(denot_cover(denot_not(a), denot_not(b)));
}

Denotation denot_co_disjoint(const Denotation& a, const Denotation& b) {
  return denot_not(denot_disjoint(denot_not(a), denot_not(b)));
}

// ---------------------------------------------------------------------------
// Classical evaluation of purely propositional formulas
// ---------------------------------------------------------------------------

bool classical_sat(const FormulaPtr& f, const Domain& d, Assignment a) {
  if (!f->purely_propositional()) {
    throw SignatureError(
        "classical evaluation requires a purely propositional formula");
  }
  switch (f->kind()) {
    case NodeKind::kLiteral:
      switch (f->lit_base()) {
        case LitBase::kTop:
          return true;
        case LitBase::kBot:
          return false;
        case LitBase::kProp:
        case LitBase::kNegProp: {
          const int j = d.index_of(f->prop());
          if (j < 0) {
            throw DomainError("proposition '" + f->prop() +
                              "' is outside the domain " + d.to_string());
          }
          const bool v = assignment_value(a, static_cast<std::size_t>(j));
          return f->lit_base() == LitBase::kProp ? v : !v;
        }
      }
      break;
    case NodeKind::kConj:
      return classical_sat(f->left(), d, a) && classical_sat(f->right(), d, a);
    case NodeKind::kLaxOr:
      return classical_sat(f->left(), d, a) || classical_sat(f->right(), d, a);
    default:
      break;
  }
  throw SignatureError("unexpected node in a purely propositional formula");
}

std::uint32_t classical_sat_mask(const FormulaPtr& f, const Domain& d) {
  if (d.size() > kMaxTeamProps) {
    throw CapacityError("assignment masks support at most " +
                        std::to_string(kMaxTeamProps) + " propositions");
  }
  std::uint32_t mask = 0;
  for (Assignment a = 0; a < d.assignment_count(); ++a) {
    if (classical_sat(f, d, a)) mask |= std::uint32_t{1} << a;
  }
  return mask;
}

// ---------------------------------------------------------------------------
// Team evaluation
// ---------------------------------------------------------------------------

namespace {

// One evaluation run over a fixed domain; memoises (subformula, team) pairs
// so shared subtrees (the factory interns them) are evaluated once.
class Evaluator {
 public:
  explicit Evaluator(const Domain& d) : domain_(d) {}

  bool run(const FormulaPtr& f, std::uint32_t members) {
    const Key key{f.get(), members};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const bool value = compute(f, members);
    memo_.emplace(key, value);
    return value;
  }

 private:
  struct Key {
    const Formula* node;
    std::uint32_t members;
    bool operator==(const Key& o) const {
      return node == o.node && members == o.members;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = reinterpret_cast<std::uintptr_t>(k.node);
      h ^= (std::uint64_t{k.members} + 0x9e3779b97f4a7c15ULL) + (h << 6) +
           (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  std::uint32_t literal_mask(const FormulaPtr& f) {
    auto it = masks_.find(f.get());
    if (it != masks_.end()) return it->second;
    // Mask of assignments satisfying the literal without its ~.
    FormulaPtr plain;
    switch (f->lit_base()) {
      case LitBase::kTop:
        plain = top();
        break;
      case LitBase::kBot:
        plain = bot();
        break;
      case LitBase::kProp:
        plain = prop(f->prop());
        break;
      case LitBase::kNegProp:
        plain = neg_prop(f->prop());
        break;
    }
    const std::uint32_t mask = classical_sat_mask(plain, domain_);
    masks_.emplace(f.get(), mask);
    return mask;
  }

  std::uint32_t pp_mask(const FormulaPtr& f) {
    auto it = masks_.find(f.get());
    if (it != masks_.end()) return it->second;
    const std::uint32_t mask = classical_sat_mask(f, domain_);
    masks_.emplace(f.get(), mask);
    return mask;
  }

  void check_split_size(std::uint32_t members) const {
    if (static_cast<std::size_t>(std::popcount(members)) >
        kMaxSplitTeamSize) {
      throw CapacityError(
          "split enumeration is limited to teams of at most " +
          std::to_string(kMaxSplitTeamSize) + " assignments");
    }
  }

  bool compute(const FormulaPtr& f, std::uint32_t members) {
    // Purely propositional subformulas are flat: the team satisfies them
    // exactly when every member does.
    if (f->purely_propositional()) {
      return (members & ~pp_mask(f)) == 0;
    }
    switch (f->kind()) {
      case NodeKind::kLiteral: {
        const bool plain = (members & ~literal_mask(f)) == 0;
        return f->lit_strong() ? !plain : plain;
      }
      case NodeKind::kStrongNeg:
        return !run(f->left(), members);
      case NodeKind::kConj:
        return run(f->left(), members) && run(f->right(), members);
      case NodeKind::kBoolOr:
        return run(f->left(), members) || run(f->right(), members);
      case NodeKind::kLaxOr: {
        check_split_size(members);
        // Covers S ∪ U = members: S ranges over submasks, U over the rest
        // plus any overlap X ⊆ S.
        std::uint32_t s = members;
        while (true) {
          if (run(f->left(), s)) {
            const std::uint32_t rest = members & ~s;
            std::uint32_t x = s;
            while (true) {
              if (run(f->right(), rest | x)) return true;
              if (x == 0) break;
              x = (x - 1) & s;
            }
          }
          if (s == 0) break;
          s = (s - 1) & members;
        }
        return false;
      }
      case NodeKind::kStrictOr: {
        check_split_size(members);
        std::uint32_t s = members;
        while (true) {
          if (run(f->left(), s) && run(f->right(), members ^ s)) return true;
          if (s == 0) break;
          s = (s - 1) & members;
        }
        return false;
      }
      case NodeKind::kLaxCoOr: {
        check_split_size(members);
        std::uint32_t s = members;
        while (true) {
          if (!run(f->left(), s)) {
            const std::uint32_t rest = members & ~s;
            std::uint32_t x = s;
            while (true) {
              if (!run(f->right(), rest | x)) return false;
              if (x == 0) break;
              x = (x - 1) & s;
            }
          }
          if (s == 0) break;
          s = (s - 1) & members;
        }
        return true;
      }
      case NodeKind::kStrictCoOr: {
        check_split_size(members);
        std::uint32_t s = members;
        while (true) {
          if (!run(f->left(), s) && !run(f->right(), members ^ s)) {
            return false;
          }
          if (s == 0) break;
          s = (s - 1) & members;
        }
        return true;
      }
      case NodeKind::kAtom:
        return eval_atom(f, Team(domain_, members));
    }
    throw Error("unreachable formula kind");
  }

  const Domain& domain_;
  std::unordered_map<Key, bool, KeyHash> memo_;
  std::unordered_map<const Formula*, std::uint32_t> masks_;
};

}  // namespace

bool eval(const FormulaPtr& f, const Team& t) {
  require_props_in(f, t.domain);
  Evaluator ev(t.domain);
  return ev.run(f, t.members);
}

// ---------------------------------------------------------------------------
// Full denotations
// ---------------------------------------------------------------------------

namespace {

class DenotationBuilder {
 public:
  explicit DenotationBuilder(const Domain& d) : domain_(d) {}

  Denotation run(const FormulaPtr& f) {
    auto it = memo_.find(f.get());
    if (it != memo_.end()) return it->second;
    Denotation value = compute(f);
    memo_.emplace(f.get(), value);
    return value;
  }

 private:
  Denotation from_mask(std::uint32_t mask, bool complement) const {
    Denotation r(domain_);
    for (std::uint32_t t = 0; t < r.team_space(); ++t) {
      const bool plain = (t & ~mask) == 0;
      r.set(t, complement ? !plain : plain);
    }
    return r;
  }

  Denotation compute(const FormulaPtr& f) {
    if (f->purely_propositional()) {
      return from_mask(classical_sat_mask(f, domain_), false);
    }
    switch (f->kind()) {
      case NodeKind::kLiteral: {
        FormulaPtr plain;
        switch (f->lit_base()) {
          case LitBase::kTop:
            plain = top();
            break;
          case LitBase::kBot:
            plain = bot();
            break;
          case LitBase::kProp:
            plain = prop(f->prop());
            break;
          case LitBase::kNegProp:
            plain = neg_prop(f->prop());
            break;
        }
        return from_mask(classical_sat_mask(plain, domain_), f->lit_strong());
      }
      case NodeKind::kStrongNeg:
        return denot_not(run(f->left()));
      case NodeKind::kConj:
        return denot_and(run(f->left()), run(f->right()));
      case NodeKind::kBoolOr:
        return denot_or(run(f->left()), run(f->right()));
      case NodeKind::kLaxOr:
        return denot_cover(run(f->left()), run(f->right()));
      case NodeKind::kStrictOr:
        return denot_disjoint(run(f->left()), run(f->right()));
      case NodeKind::kLaxCoOr:
        return denot_co_cover(run(f->left()), run(f->right()));
      case NodeKind::kStrictCoOr:
        return denot_co_disjoint(run(f->left()), run(f->right()));
      case NodeKind::kAtom: {
        Denotation r(domain_);
        for (std::uint32_t t = 0; t < r.team_space(); ++t) {
          r.set(t, eval_atom(f, Team(domain_, t)));
        }
        return r;
      }
    }
    throw Error("unreachable formula kind");
  }

  const Domain& domain_;
  std::unordered_map<const Formula*, Denotation> memo_;
};

}  // namespace

Denotation denotation(const FormulaPtr& f, const Domain& d) {
  require_denotation_domain(d);
  require_props_in(f, d);
  DenotationBuilder builder(d);
  return builder.run(f);
}

// ---------------------------------------------------------------------------
// Comparisons
// ---------------------------------------------------------------------------

std::vector<std::string> fresh_prop_names(const Domain& base, int count) {
  std::vector<std::string> out;
  int suffix = 1;
  while (static_cast<int>(out.size()) < count) {
    std::string name = "x" + std::to_string(suffix++);
    if (!base.contains(name)) out.push_back(name);
  }
  return out;
}

namespace {

Domain union_domain(const FormulaPtr& f, const FormulaPtr& g) {
  return Domain::sorted_union(formula_domain(f), formula_domain(g));
}

Domain extend_domain(const Domain& base,
                     const std::vector<std::string>& fresh, int take) {
  std::vector<std::string> props = base.props();
  props.insert(props.end(), fresh.begin(), fresh.begin() + take);
  return Domain(props);
}

// Shared body of equivalent/entails: compare the two denotations over the
// union domain and over each expansion by 1..extra fresh propositions.
bool compare_over_expansions(const FormulaPtr& f, const FormulaPtr& g,
                             int extra, bool require_equal) {
  if (extra < 0) throw Error("negative number of extra propositions");
  const Domain base = union_domain(f, g);
  if (base.size() + static_cast<std::size_t>(extra) > kMaxDenotationProps) {
    throw CapacityError(
        "comparison domain exceeds " + std::to_string(kMaxDenotationProps) +
        " propositions (" + std::to_string(base.size()) + " used, " +
        std::to_string(extra) + " extra)");
  }
  const std::vector<std::string> fresh = fresh_prop_names(base, extra);
  for (int take = 0; take <= extra; ++take) {
    const Domain d = extend_domain(base, fresh, take);
    const Denotation df = denotation(f, d);
    const Denotation dg = denotation(g, d);
    if (require_equal ? !(df == dg) : !df.subset_of(dg)) return false;
  }
  return true;
}

}  // namespace

int default_extra_props(const FormulaPtr& f, const FormulaPtr& g) {
  const Domain base = union_domain(f, g);
  const std::uint64_t wanted = occ_strict(f) + occ_strict(g);
  const std::uint64_t room =
      kMaxDenotationProps > base.size() ? kMaxDenotationProps - base.size() : 0;
  return static_cast<int>(std::min<std::uint64_t>(wanted, room));
}

bool equivalent(const FormulaPtr& f, const FormulaPtr& g, int extra_props) {
  return compare_over_expansions(f, g, extra_props, /*require_equal=*/true);
}

bool equivalent(const FormulaPtr& f, const FormulaPtr& g) {
  return equivalent(f, g, default_extra_props(f, g));
}

bool entails(const FormulaPtr& f, const FormulaPtr& g, int extra_props) {
  return compare_over_expansions(f, g, extra_props, /*require_equal=*/false);
}

bool entails(const FormulaPtr& f, const FormulaPtr& g) {
  return entails(f, g, default_extra_props(f, g));
}

bool satisfiable(const FormulaPtr& f, const Domain& d) {
  return denotation(f, d).any();
}

// ---------------------------------------------------------------------------
// Closure structure
// ---------------------------------------------------------------------------

ClosureReport closure_report(const Denotation& d) {
  ClosureReport rep;
  rep.empty_team = d.test(0);

  rep.downward_closed = true;
  rep.upward_closed = true;
  const std::uint32_t full = d.team_space() - 1;
  for (std::uint32_t t = 0; t < d.team_space() && (rep.downward_closed ||
                                                   rep.upward_closed);
       ++t) {
    if (!d.test(t)) continue;
    // Single removals/additions suffice: iterating them reaches every
    // subset/superset.
    std::uint32_t rem = t;
    while (rem && rep.downward_closed) {
      const std::uint32_t bit = rem & (~rem + 1);
      if (!d.test(t ^ bit)) rep.downward_closed = false;
      rem ^= bit;
    }
    std::uint32_t add = full & ~t;
    while (add && rep.upward_closed) {
      const std::uint32_t bit = add & (~add + 1);
      if (!d.test(t | bit)) rep.upward_closed = false;
      add ^= bit;
    }
  }

  // Pairwise unions of satisfying teams land exactly on the cover image of
  // the denotation with itself.
  rep.union_closed = denot_cover(d, d).subset_of(d);

  // Flat: satisfaction is decided memberwise by the satisfying singletons
  // (with the empty team satisfying vacuously).
  std::uint32_t singles = 0;
  for (std::uint32_t a = 0; a < d.domain().assignment_count(); ++a) {
    if (d.test(std::uint32_t{1} << a)) singles |= std::uint32_t{1} << a;
  }
  rep.flat = true;
  for (std::uint32_t t = 0; t < d.team_space(); ++t) {
    if (d.test(t) != ((t & ~singles) == 0)) {
      rep.flat = false;
      break;
    }
  }
  return rep;
}

ClosureReport closure_report(const FormulaPtr& f, const Domain& d) {
  return closure_report(denotation(f, d));
}

bool is_local(const FormulaPtr& f, int extra_props) {
  if (extra_props < 0) throw Error("negative number of extra propositions");
  const Domain base = formula_domain(f);
  if (base.size() + static_cast<std::size_t>(extra_props) >
      kMaxDenotationProps) {
    throw CapacityError("locality check domain exceeds " +
                        std::to_string(kMaxDenotationProps) + " propositions");
  }
  const Denotation base_denot = denotation(f, base);
  const std::vector<std::string> fresh = fresh_prop_names(base, extra_props);
  const std::uint32_t base_assignments = base.assignment_count();
  for (int take = 1; take <= extra_props; ++take) {
    const Domain d = extend_domain(base, fresh, take);
    const Denotation ext = denotation(f, d);
    for (std::uint32_t t = 0; t < ext.team_space(); ++t) {
      // Restrict the team: fresh propositions sit at the high assignment
      // bits, so each extended assignment maps onto its low base part.
      std::uint32_t projected = 0;
      for (std::uint32_t a = 0; a < d.assignment_count(); ++a) {
        if ((t >> a) & 1u) {
          projected |= std::uint32_t{1} << (a & (base_assignments - 1));
        }
      }
      if (ext.test(t) != base_denot.test(projected)) return false;
    }
  }
  return true;
}

}  // namespace teamlogic
