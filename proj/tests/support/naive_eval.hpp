#pragma once

// Reference evaluator used only by the tests.  It transcribes the
// satisfaction clauses directly: split connectives enumerate every submask
// pair bluntly, co-splits check every cover, and the atoms restate their
// defining quantifier conditions over the member list.  There is no caching,
// no sharing and no propositional fast path, so this evaluator is
// independent of the library's and the two can be compared team by team.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic::testing {

bool naive_eval(const FormulaPtr& f, const Team& t);

/// Truth value of a purely propositional tuple entry under one assignment,
/// obtained by evaluating it on the singleton team.
inline bool naive_arg_value(const FormulaPtr& arg, const Domain& d,
                            Assignment a) {
  return naive_eval(arg, Team(d, std::uint32_t{1} << a));
}

/// Packed values of a tuple under an assignment, bit i = value of args[i].
inline std::uint32_t naive_tuple_value(const Tuple& args, const Domain& d,
                                       Assignment a) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (naive_arg_value(args[i], d, a)) v |= std::uint32_t{1} << i;
  }
  return v;
}

inline bool naive_atom(const FormulaPtr& f, const Team& t) {
  const Domain& d = t.domain;
  const std::vector<Assignment> members = t.assignments();
  const auto& tup = f->tuples();
  switch (f->atom_kind()) {
    case AtomKind::kDep: {
      // Members agreeing on the left tuple agree on the right tuple.
      for (Assignment s : members) {
        for (Assignment u : members) {
          if (naive_tuple_value(tup[0], d, s) ==
                  naive_tuple_value(tup[0], d, u) &&
              naive_tuple_value(tup[1], d, s) !=
                  naive_tuple_value(tup[1], d, u)) {
            return false;
          }
        }
      }
      return true;
    }
    case AtomKind::kIndep: {
      // Every left value seen combines with every right value seen.
      for (Assignment s : members) {
        for (Assignment u : members) {
          bool found = false;
          for (Assignment w : members) {
            if (naive_tuple_value(tup[0], d, w) ==
                    naive_tuple_value(tup[0], d, s) &&
                naive_tuple_value(tup[1], d, w) ==
                    naive_tuple_value(tup[1], d, u)) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
      }
      return true;
    }
    case AtomKind::kCondIndep: {
      // tuples() order: left side, condition, right side.
      const Tuple& alpha = tup[0];
      const Tuple& gamma = tup[1];
      const Tuple& beta = tup[2];
      for (Assignment s : members) {
        for (Assignment u : members) {
          if (naive_tuple_value(gamma, d, s) !=
              naive_tuple_value(gamma, d, u)) {
            continue;
          }
          bool found = false;
          for (Assignment w : members) {
            if (naive_tuple_value(gamma, d, w) ==
                    naive_tuple_value(gamma, d, s) &&
                naive_tuple_value(alpha, d, w) ==
                    naive_tuple_value(alpha, d, s) &&
                naive_tuple_value(beta, d, w) ==
                    naive_tuple_value(beta, d, u)) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
      }
      return true;
    }
    case AtomKind::kIncl: {
      for (Assignment s : members) {
        bool found = false;
        for (Assignment u : members) {
          if (naive_tuple_value(tup[1], d, u) ==
              naive_tuple_value(tup[0], d, s)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    }
    case AtomKind::kExcl: {
      for (Assignment s : members) {
        for (Assignment u : members) {
          if (naive_tuple_value(tup[0], d, s) ==
              naive_tuple_value(tup[1], d, u)) {
            return false;
          }
        }
      }
      return true;
    }
    case AtomKind::kAnon: {
      // Every member has a left-tuple twin disagreeing on the right tuple.
      for (Assignment s : members) {
        bool found = false;
        for (Assignment u : members) {
          if (naive_tuple_value(tup[0], d, u) ==
                  naive_tuple_value(tup[0], d, s) &&
              naive_tuple_value(tup[1], d, u) !=
                  naive_tuple_value(tup[1], d, s)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    }
  }
  return false;
}

inline bool naive_eval(const FormulaPtr& f, const Team& t) {
  const Domain& d = t.domain;
  const std::uint32_t m = t.members;
  switch (f->kind()) {
    case NodeKind::kLiteral: {
      bool base = false;
      switch (f->lit_base()) {
        case LitBase::kTop:
          base = true;
          break;
        case LitBase::kBot:
          base = (m == 0);
          break;
        case LitBase::kProp:
        case LitBase::kNegProp: {
          const int j = d.index_of(f->prop());
          const bool want = f->lit_base() == LitBase::kProp;
          base = true;
          for (Assignment a : t.assignments()) {
            if (assignment_value(a, static_cast<std::size_t>(j)) != want) {
              base = false;
              break;
            }
          }
          break;
        }
      }
      return f->lit_strong() ? !base : base;
    }
    case NodeKind::kStrongNeg:
      return !naive_eval(f->left(), t);
    case NodeKind::kConj:
      return naive_eval(f->left(), t) && naive_eval(f->right(), t);
    case NodeKind::kBoolOr:
      return naive_eval(f->left(), t) || naive_eval(f->right(), t);
    case NodeKind::kLaxOr: {
      for (std::uint32_t t1 = m;; t1 = (t1 - 1) & m) {
        for (std::uint32_t t2 = m;; t2 = (t2 - 1) & m) {
          if ((t1 | t2) == m && naive_eval(f->left(), Team(d, t1)) &&
              naive_eval(f->right(), Team(d, t2))) {
            return true;
          }
          if (t2 == 0) break;
        }
        if (t1 == 0) break;
      }
      return false;
    }
    case NodeKind::kStrictOr: {
      for (std::uint32_t t1 = m;; t1 = (t1 - 1) & m) {
        if (naive_eval(f->left(), Team(d, t1)) &&
            naive_eval(f->right(), Team(d, m & ~t1))) {
          return true;
        }
        if (t1 == 0) break;
      }
      return false;
    }
    case NodeKind::kLaxCoOr: {
      for (std::uint32_t t1 = m;; t1 = (t1 - 1) & m) {
        for (std::uint32_t t2 = m;; t2 = (t2 - 1) & m) {
          if ((t1 | t2) == m && !naive_eval(f->left(), Team(d, t1)) &&
              !naive_eval(f->right(), Team(d, t2))) {
            return false;
          }
          if (t2 == 0) break;
        }
        if (t1 == 0) break;
      }
      return true;
    }
    case NodeKind::kStrictCoOr: {
      for (std::uint32_t t1 = m;; t1 = (t1 - 1) & m) {
        if (!naive_eval(f->left(), Team(d, t1)) &&
            !naive_eval(f->right(), Team(d, m & ~t1))) {
          return false;
        }
        if (t1 == 0) break;
      }
      return true;
    }
    case NodeKind::kAtom:
      return naive_atom(f, t);
  }
  return false;
}

/// Deepest nesting of split connectives (\/, \./, (^), (.^)); used by the
/// tests to bound team sizes so the blunt cover enumeration stays cheap.
inline std::size_t split_depth(const FormulaPtr& f) {
  switch (f->kind()) {
    case NodeKind::kLiteral:
    case NodeKind::kAtom:
      return 0;
    case NodeKind::kStrongNeg:
      return split_depth(f->left());
    default: {
      const std::size_t child =
          std::max(split_depth(f->left()), split_depth(f->right()));
      const bool is_split = f->kind() == NodeKind::kLaxOr ||
                            f->kind() == NodeKind::kStrictOr ||
                            f->kind() == NodeKind::kLaxCoOr ||
                            f->kind() == NodeKind::kStrictCoOr;
      return child + (is_split ? 1 : 0);
    }
  }
}

}  // namespace teamlogic::testing
