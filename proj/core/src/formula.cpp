#include "teamlogic/formula.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_set>

namespace teamlogic {

const char* atom_name(AtomKind k) {
  switch (k) {
    case AtomKind::kDep: return "dep";
    case AtomKind::kIndep: return "perp";
    case AtomKind::kCondIndep: return "perpc";
    case AtomKind::kIncl: return "inc";
    case AtomKind::kExcl: return "excl";
    case AtomKind::kAnon: return "ups";
  }
  return "?";
}

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64-style mixing; quality only matters for hash-table spread.
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

/// Builds and interns formula nodes.  Interning makes structural equality a
/// pointer comparison and lets per-node caches in the evaluators observe all
/// sharing between repeated subformulas.
class FormulaFactory {
 public:
  static FormulaFactory& instance() {
    static FormulaFactory f;
    return f;
  }

  FormulaPtr literal(LitBase base, bool strong, const std::string& prop_name) {
    Formula node;
    node.kind_ = NodeKind::kLiteral;
    node.lit_base_ = base;
    node.lit_strong_ = strong;
    node.prop_ = prop_name;
    node.length_ = (base == LitBase::kNegProp ? 2u : 1u) + (strong ? 1u : 0u);
    node.width_ = 1;
    node.occ_bool_or_ = 0;
    node.occ_strict_ = 0;
    node.purely_propositional_ = !strong;
    std::uint64_t h = hash_mix(0, static_cast<std::uint64_t>(node.kind_));
    h = hash_mix(h, static_cast<std::uint64_t>(base));
    h = hash_mix(h, strong ? 1 : 0);
    h = hash_mix(h, hash_string(prop_name));
    node.hash_ = h;
    return intern(std::move(node));
  }

  FormulaPtr unary(NodeKind kind, FormulaPtr child) {
    Formula node;
    node.kind_ = kind;
    node.left_ = std::move(child);
    node.length_ = 1 + node.left_->length();
    node.width_ = node.left_->width();
    node.occ_bool_or_ = node.left_->occ_bool_or();
    node.occ_strict_ = node.left_->occ_strict();
    node.purely_propositional_ = false;
    std::uint64_t h = hash_mix(0, static_cast<std::uint64_t>(kind));
    h = hash_mix(h, node.left_->hash());
    node.hash_ = h;
    return intern(std::move(node));
  }

  FormulaPtr binary(NodeKind kind, FormulaPtr a, FormulaPtr b) {
    Formula node;
    node.kind_ = kind;
    node.left_ = std::move(a);
    node.right_ = std::move(b);
    node.length_ = 3 + node.left_->length() + node.right_->length();
    node.width_ = node.left_->width() + node.right_->width();
    node.occ_bool_or_ = node.left_->occ_bool_or() + node.right_->occ_bool_or() +
                        (kind == NodeKind::kBoolOr ? 1 : 0);
    node.occ_strict_ =
        node.left_->occ_strict() + node.right_->occ_strict() +
        (kind == NodeKind::kStrictOr || kind == NodeKind::kStrictCoOr ? 1 : 0);
    node.purely_propositional_ =
        (kind == NodeKind::kConj || kind == NodeKind::kLaxOr) &&
        node.left_->purely_propositional() && node.right_->purely_propositional();
    std::uint64_t h = hash_mix(0, static_cast<std::uint64_t>(kind));
    h = hash_mix(h, node.left_->hash());
    h = hash_mix(h, node.right_->hash());
    node.hash_ = h;
    return intern(std::move(node));
  }

  FormulaPtr atom(AtomKind kind, std::vector<Tuple> tuples) {
    Formula node;
    node.kind_ = NodeKind::kAtom;
    node.atom_kind_ = kind;
    node.tuples_ = std::move(tuples);
    std::uint64_t args_len = 0;
    for (const auto& t : node.tuples_) {
      for (const auto& arg : t) args_len += arg->length();
    }
    node.length_ = (kind == AtomKind::kDep ? 4 : 1) + args_len;
    node.width_ = 1;
    node.occ_bool_or_ = 0;
    node.occ_strict_ = 0;
    node.purely_propositional_ = false;
    std::uint64_t h = hash_mix(0, static_cast<std::uint64_t>(NodeKind::kAtom));
    h = hash_mix(h, static_cast<std::uint64_t>(kind));
    for (const auto& t : node.tuples_) {
      h = hash_mix(h, 0x5bd1e995);
      for (const auto& arg : t) h = hash_mix(h, arg->hash());
    }
    node.hash_ = h;
    return intern(std::move(node));
  }

 private:
  struct Hash {
    std::size_t operator()(const FormulaPtr& f) const {
      return static_cast<std::size_t>(f->hash());
    }
  };
  struct Eq {
    bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
      if (a->kind() != b->kind()) return false;
      switch (a->kind()) {
        case NodeKind::kLiteral:
          return a->lit_base() == b->lit_base() &&
                 a->lit_strong() == b->lit_strong() && a->prop() == b->prop();
        case NodeKind::kStrongNeg:
          return a->left() == b->left();
        case NodeKind::kAtom: {
          if (a->atom_kind() != b->atom_kind()) return false;
          if (a->tuples().size() != b->tuples().size()) return false;
          for (std::size_t i = 0; i < a->tuples().size(); ++i) {
            if (a->tuples()[i] != b->tuples()[i]) return false;
          }
          return true;
        }
        default:
          return a->left() == b->left() && a->right() == b->right();
      }
    }
  };

  FormulaPtr intern(Formula&& node) {
    auto candidate = std::shared_ptr<const Formula>(new Formula(std::move(node)));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = table_.insert(candidate);
    return *it;
  }

  std::mutex mutex_;
  std::unordered_set<FormulaPtr, Hash, Eq> table_;
};

FormulaPtr top() {
  return FormulaFactory::instance().literal(LitBase::kTop, false, "");
}

FormulaPtr bot() {
  return FormulaFactory::instance().literal(LitBase::kBot, false, "");
}

FormulaPtr prop(const std::string& name) {
  if (!valid_prop_name(name)) {
    throw DomainError("invalid proposition name '" + name + "'");
  }
  return FormulaFactory::instance().literal(LitBase::kProp, false, name);
}

FormulaPtr neg_prop(const std::string& name) {
  if (!valid_prop_name(name)) {
    throw DomainError("invalid proposition name '" + name + "'");
  }
  return FormulaFactory::instance().literal(LitBase::kNegProp, false, name);
}

FormulaPtr strong_neg(const FormulaPtr& f) {
  if (f->kind() == NodeKind::kLiteral && !f->lit_strong()) {
    return FormulaFactory::instance().literal(f->lit_base(), true, f->prop());
  }
  return FormulaFactory::instance().unary(NodeKind::kStrongNeg, f);
}

FormulaPtr dual_neg(const FormulaPtr& f) {
  switch (f->kind()) {
    case NodeKind::kLiteral:
      if (f->lit_strong()) break;
      switch (f->lit_base()) {
        case LitBase::kTop: return bot();
        case LitBase::kBot: return top();
        case LitBase::kProp: return neg_prop(f->prop());
        case LitBase::kNegProp: return prop(f->prop());
      }
      break;
    case NodeKind::kConj:
      return lax_or(dual_neg(f->left()), dual_neg(f->right()));
    case NodeKind::kLaxOr:
      return conj(dual_neg(f->left()), dual_neg(f->right()));
    default:
      break;
  }
  throw SignatureError(
      "dual negation '-' is defined for purely propositional formulas only");
}

FormulaPtr make_binary(NodeKind kind, const FormulaPtr& a, const FormulaPtr& b) {
  switch (kind) {
    case NodeKind::kConj:
    case NodeKind::kBoolOr:
    case NodeKind::kLaxOr:
    case NodeKind::kStrictOr:
    case NodeKind::kLaxCoOr:
    case NodeKind::kStrictCoOr:
      return FormulaFactory::instance().binary(kind, a, b);
    default:
      throw Error("make_binary: not a binary connective");
  }
}

FormulaPtr conj(const FormulaPtr& a, const FormulaPtr& b) {
  return make_binary(NodeKind::kConj, a, b);
}
FormulaPtr bool_or(const FormulaPtr& a, const FormulaPtr& b) {
  return make_binary(NodeKind::kBoolOr, a, b);
}
FormulaPtr lax_or(const FormulaPtr& a, const FormulaPtr& b) {
  return make_binary(NodeKind::kLaxOr, a, b);
}
FormulaPtr strict_or(const FormulaPtr& a, const FormulaPtr& b) {
  return make_binary(NodeKind::kStrictOr, a, b);
}
FormulaPtr lax_co_or(const FormulaPtr& a, const FormulaPtr& b) {
  return make_binary(NodeKind::kLaxCoOr, a, b);
}
FormulaPtr strict_co_or(const FormulaPtr& a, const FormulaPtr& b) {
  return make_binary(NodeKind::kStrictCoOr, a, b);
}

namespace {

void require_pp_args(const char* name, const std::vector<Tuple>& tuples) {
  for (const auto& t : tuples) {
    for (const auto& arg : t) {
      if (!arg->purely_propositional()) {
        throw ArityError(std::string(name) +
                         ": atom arguments must be purely propositional");
      }
    }
  }
}

}  // namespace

FormulaPtr make_atom(AtomKind kind, std::vector<Tuple> tuples) {
  const char* name = atom_name(kind);
  const std::size_t want = (kind == AtomKind::kCondIndep) ? 3 : 2;
  if (tuples.size() != want) {
    throw ArityError(std::string(name) + ": expected " + std::to_string(want) +
                     " argument tuples");
  }
  require_pp_args(name, tuples);
  switch (kind) {
    case AtomKind::kDep:
      if (tuples[1].empty()) throw ArityError("dep: right tuple must be nonempty");
      break;
    case AtomKind::kIndep:
      if (tuples[0].empty() || tuples[1].empty()) {
        throw ArityError("perp: both tuples must be nonempty");
      }
      break;
    case AtomKind::kCondIndep:
      if (tuples[0].empty() || tuples[2].empty()) {
        throw ArityError("perpc: left and right tuples must be nonempty");
      }
      break;
    case AtomKind::kIncl:
    case AtomKind::kExcl:
      if (tuples[0].empty() || tuples[0].size() != tuples[1].size()) {
        throw ArityError(std::string(name) +
                         ": tuples must be nonempty and of equal length");
      }
      break;
    case AtomKind::kAnon:
      if (tuples[1].empty()) throw ArityError("ups: right tuple must be nonempty");
      break;
  }
  return FormulaFactory::instance().atom(kind, std::move(tuples));
}

FormulaPtr atom_dep(const Tuple& alpha, const Tuple& beta) {
  return make_atom(AtomKind::kDep, {alpha, beta});
}
FormulaPtr atom_indep(const Tuple& alpha, const Tuple& beta) {
  return make_atom(AtomKind::kIndep, {alpha, beta});
}
FormulaPtr atom_cond_indep(const Tuple& alpha, const Tuple& gamma,
                           const Tuple& beta) {
  return make_atom(AtomKind::kCondIndep, {alpha, gamma, beta});
}
FormulaPtr atom_incl(const Tuple& alpha, const Tuple& beta) {
  return make_atom(AtomKind::kIncl, {alpha, beta});
}
FormulaPtr atom_excl(const Tuple& alpha, const Tuple& beta) {
  return make_atom(AtomKind::kExcl, {alpha, beta});
}
FormulaPtr atom_anon(const Tuple& alpha, const Tuple& beta) {
  return make_atom(AtomKind::kAnon, {alpha, beta});
}

namespace {

void collect_props(const Formula* f, std::set<std::string>& out,
                   std::set<const Formula*>& seen) {
  if (!seen.insert(f).second) return;
  switch (f->kind()) {
    case NodeKind::kLiteral:
      if (f->lit_base() == LitBase::kProp || f->lit_base() == LitBase::kNegProp) {
        out.insert(f->prop());
      }
      break;
    case NodeKind::kStrongNeg:
      collect_props(f->left().get(), out, seen);
      break;
    case NodeKind::kAtom:
      for (const auto& t : f->tuples()) {
        for (const auto& arg : t) collect_props(arg.get(), out, seen);
      }
      break;
    default:
      collect_props(f->left().get(), out, seen);
      collect_props(f->right().get(), out, seen);
      break;
  }
}

}  // namespace

std::vector<std::string> prop_names(const FormulaPtr& f) {
  std::set<std::string> names;
  std::set<const Formula*> seen;
  collect_props(f.get(), names, seen);
  return std::vector<std::string>(names.begin(), names.end());
}

Domain formula_domain(const FormulaPtr& f) { return Domain(prop_names(f)); }

ConnectiveSet ConnectiveSet::parse(const std::string& csv) {
  ConnectiveSet sig;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](char c) { return c == ' ' || c == '\t'; }),
               item.end());
    if (item.empty()) continue;
    if (item == "and" || item == "conj") {
      sig.conj = true;
    } else if (item == "bor") {
      sig.bool_or = true;
    } else if (item == "or") {
      sig.lax_or = true;
    } else if (item == "ors") {
      sig.strict_or = true;
    } else if (item == "coor") {
      sig.lax_co_or = true;
    } else if (item == "coors") {
      sig.strict_co_or = true;
    } else if (item == "not" || item == "neg") {
      sig.strong_neg = true;
    } else if (item == "dep") {
      sig.allow(AtomKind::kDep);
    } else if (item == "perp") {
      sig.allow(AtomKind::kIndep);
    } else if (item == "perpc") {
      sig.allow(AtomKind::kCondIndep);
    } else if (item == "inc") {
      sig.allow(AtomKind::kIncl);
    } else if (item == "excl") {
      sig.allow(AtomKind::kExcl);
    } else if (item == "ups") {
      sig.allow(AtomKind::kAnon);
    } else {
      throw SyntaxError("unknown signature element '" + item + "'");
    }
  }
  return sig;
}

std::string ConnectiveSet::to_string() const {
  std::vector<std::string> parts;
  if (bool_or) parts.push_back("bor");
  if (conj) parts.push_back("and");
  if (lax_or) parts.push_back("or");
  if (strict_or) parts.push_back("ors");
  if (lax_co_or) parts.push_back("coor");
  if (strict_co_or) parts.push_back("coors");
  if (strong_neg) parts.push_back("not");
  for (unsigned i = 0; i < 6; ++i) {
    if ((atoms >> i) & 1u) parts.push_back(atom_name(static_cast<AtomKind>(i)));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

bool check_signature(const FormulaPtr& f, const ConnectiveSet& sig) {
  switch (f->kind()) {
    case NodeKind::kLiteral:
      return true;  // literals (and their ~ forms) are always available
    case NodeKind::kStrongNeg:
      return sig.strong_neg && check_signature(f->left(), sig);
    case NodeKind::kConj:
      return sig.conj && check_signature(f->left(), sig) &&
             check_signature(f->right(), sig);
    case NodeKind::kBoolOr:
      return sig.bool_or && check_signature(f->left(), sig) &&
             check_signature(f->right(), sig);
    case NodeKind::kLaxOr:
      return sig.lax_or && check_signature(f->left(), sig) &&
             check_signature(f->right(), sig);
    case NodeKind::kStrictOr:
      return sig.strict_or && check_signature(f->left(), sig) &&
             check_signature(f->right(), sig);
    case NodeKind::kLaxCoOr:
      return sig.lax_co_or && check_signature(f->left(), sig) &&
             check_signature(f->right(), sig);
    case NodeKind::kStrictCoOr:
      return sig.strict_co_or && check_signature(f->left(), sig) &&
             check_signature(f->right(), sig);
    case NodeKind::kAtom:
      // Atom arguments are purely propositional and always well-formed;
      // only the atom itself must be licensed.
      return sig.allows(f->atom_kind());
  }
  return false;
}

}  // namespace teamlogic
