#include "teamlogic/dimension.hpp"

#include <algorithm>
#include <string>

#include "teamlogic/atoms.hpp"
#include "teamlogic/semantics.hpp"

namespace teamlogic {

namespace {

constexpr std::size_t kGeneratorPairCap = 100000;

using Pair = std::pair<std::uint32_t, std::uint32_t>;

void prune_and_dedup(std::vector<Pair>& pairs) {
  pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                             [](const Pair& p) {
                               return (p.first & ~p.second) != 0;
                             }),
              pairs.end());
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (pairs.size() > kGeneratorPairCap) {
    throw CapacityError("generator construction exceeds the pair cap");
  }
}

std::vector<Pair> build(const FormulaPtr& f, const Domain& d) {
  switch (f->kind()) {
    case NodeKind::kLiteral: {
      const FormulaPtr plain =
          f->lit_strong()
              ? (f->lit_base() == LitBase::kTop    ? top()
                 : f->lit_base() == LitBase::kBot  ? bot()
                 : f->lit_base() == LitBase::kProp ? prop(f->prop())
                                                   : neg_prop(f->prop()))
              : f;
      const std::uint32_t sat = classical_sat_mask(plain, d);
      const std::uint32_t full =
          static_cast<std::uint32_t>(d.team_count() - 1);
      std::vector<Pair> pairs;
      if (!f->lit_strong()) {
        pairs.emplace_back(0, sat);
      } else {
        // ~l holds iff some member falsifies l; upward closed from those
        // singletons.
        for (std::uint32_t s = 0; s < d.assignment_count(); ++s) {
          if (!((sat >> s) & 1u)) {
            pairs.emplace_back(std::uint32_t{1} << s, full);
          }
        }
      }
      return pairs;
    }
    case NodeKind::kConj: {
      const std::vector<Pair> l = build(f->left(), d);
      const std::vector<Pair> r = build(f->right(), d);
      std::vector<Pair> pairs;
      pairs.reserve(l.size() * r.size());
      for (const Pair& x : l) {
        for (const Pair& y : r) {
          pairs.emplace_back(x.first | y.first, x.second & y.second);
        }
      }
      prune_and_dedup(pairs);
      return pairs;
    }
    case NodeKind::kLaxOr: {
      const std::vector<Pair> l = build(f->left(), d);
      const std::vector<Pair> r = build(f->right(), d);
      std::vector<Pair> pairs;
      pairs.reserve(l.size() * r.size());
      for (const Pair& x : l) {
        for (const Pair& y : r) {
          pairs.emplace_back(x.first | y.first, x.second | y.second);
        }
      }
      prune_and_dedup(pairs);
      return pairs;
    }
    case NodeKind::kBoolOr: {
      std::vector<Pair> pairs = build(f->left(), d);
      const std::vector<Pair> r = build(f->right(), d);
      pairs.insert(pairs.end(), r.begin(), r.end());
      prune_and_dedup(pairs);
      return pairs;
    }
    default:
      throw SignatureError(
          "generators are built for formulas over literals, /\\, \\/ and "
          "(v) only");
  }
}

}  // namespace

bool Generator::accepts(std::uint32_t team) const {
  for (const Pair& p : pairs) {
    if ((p.first & ~team) == 0 && (team & ~p.second) == 0) return true;
  }
  return false;
}

std::size_t Generator::dim() const {
  std::vector<std::uint32_t> uppers;
  uppers.reserve(pairs.size());
  for (const Pair& p : pairs) uppers.push_back(p.second);
  std::sort(uppers.begin(), uppers.end());
  uppers.erase(std::unique(uppers.begin(), uppers.end()), uppers.end());
  std::size_t count = 0;
  for (const std::uint32_t u : uppers) {
    bool maximal = true;
    for (const std::uint32_t v : uppers) {
      if (v != u && (u & ~v) == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) ++count;
  }
  return count;
}

Generator generator_for(const FormulaPtr& f, const Domain& d) {
  Generator g;
  g.domain = d;
  g.pairs = build(f, d);
  prune_and_dedup(g.pairs);
  return g;
}

bool generator_matches(const Generator& g, const FormulaPtr& f) {
  const Denotation denot = denotation(f, g.domain);
  for (std::uint32_t t = 0; t < denot.team_space(); ++t) {
    if (g.accepts(t) != denot.test(t)) return false;
  }
  return true;
}

std::size_t dim_upper_bound(const FormulaPtr& f, const Domain& d) {
  const std::size_t dim = generator_for(f, d).dim();
  if (f->occ_bool_or() < 63 &&
      dim > (std::uint64_t{1} << f->occ_bool_or())) {
    throw Error("internal: generator dimension exceeds its (v)-count bound");
  }
  return dim;
}

std::size_t dim_lower_bound_by_maximal_teams(const FormulaPtr& f,
                                             const Domain& d) {
  return maximal_teams(f, d).size();
}

SuccinctnessCertificate succinctness_certificate(AtomKind kind,
                                                 std::size_t n) {
  if (kind != AtomKind::kDep && kind != AtomKind::kExcl) {
    throw UnsupportedError(
        "length certificates exist for dep and excl only");
  }
  if (n < 1 || n > 5) {
    throw CapacityError(
        "length certificates support argument arities 1 to 5");
  }
  SuccinctnessCertificate cert;
  const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
  cert.max_teams = kind == AtomKind::kDep ? functions : functions - 2;
  cert.implied_min_length = std::uint64_t{1} << n;

  // Confirm the count by enumeration when the atom's domain is small
  // enough for full denotations: dep uses n+1 propositions, excl 2n.
  const std::size_t props = kind == AtomKind::kDep ? n + 1 : 2 * n;
  if (props <= 4) {
    Tuple alpha, beta;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back("p" + std::to_string(i));
      alpha.push_back(prop(names.back()));
    }
    if (kind == AtomKind::kDep) {
      names.push_back("q");
      beta.push_back(prop(names.back()));
    } else {
      for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("q" + std::to_string(i));
        beta.push_back(prop(names.back()));
      }
    }
    const Domain d(names);
    const FormulaPtr atom = kind == AtomKind::kDep ? atom_dep(alpha, beta)
                                                   : atom_excl(alpha, beta);
    const std::size_t counted = maximal_teams(atom, d).size();
    if (counted != cert.max_teams) {
      throw Error("internal: enumerated maximal-team count disagrees with "
                  "the closed form");
    }
    cert.enumerated = true;
  }
  return cert;
}

}  // namespace teamlogic
