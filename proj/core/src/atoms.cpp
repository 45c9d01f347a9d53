#include "teamlogic/atoms.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

namespace teamlogic {

std::uint32_t tuple_value(const Tuple& args, const Domain& d, Assignment a) {
  std::uint32_t value = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (classical_sat(args[i], d, a)) value |= std::uint32_t{1} << i;
  }
  return value;
}

namespace {

std::vector<std::uint32_t> tuple_values(const Tuple& args, const Team& t) {
  std::vector<std::uint32_t> out;
  out.reserve(t.size());
  for (Assignment a : t.assignments()) {
    out.push_back(tuple_value(args, t.domain, a));
  }
  return out;
}

bool eval_dep(const Tuple& alpha, const Tuple& beta, const Team& t) {
  std::map<std::uint32_t, std::uint32_t> image;
  const std::vector<std::uint32_t> va = tuple_values(alpha, t);
  const std::vector<std::uint32_t> vb = tuple_values(beta, t);
  for (std::size_t i = 0; i < va.size(); ++i) {
    auto [it, inserted] = image.emplace(va[i], vb[i]);
    if (!inserted && it->second != vb[i]) return false;
  }
  return true;
}

// alpha ⊥ beta within one group of assignments: every combination of an
// occurring alpha value with an occurring beta value occurs jointly.
bool group_independent(const std::vector<std::uint32_t>& va,
                       const std::vector<std::uint32_t>& vb) {
  std::set<std::uint32_t> avals(va.begin(), va.end());
  std::set<std::uint32_t> bvals(vb.begin(), vb.end());
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < va.size(); ++i) pairs.emplace(va[i], vb[i]);
  for (std::uint32_t a : avals) {
    for (std::uint32_t b : bvals) {
      if (!pairs.count({a, b})) return false;
    }
  }
  return true;
}

bool eval_cond_indep(const Tuple& alpha, const Tuple& gamma, const Tuple& beta,
                     const Team& t) {
  // Group members by their condition value, then require independence of the
  // side tuples inside each group.
  std::map<std::uint32_t, std::pair<std::vector<std::uint32_t>,
                                    std::vector<std::uint32_t>>>
      groups;
  for (Assignment a : t.assignments()) {
    auto& group = groups[tuple_value(gamma, t.domain, a)];
    group.first.push_back(tuple_value(alpha, t.domain, a));
    group.second.push_back(tuple_value(beta, t.domain, a));
  }
  for (const auto& [value, group] : groups) {
    if (!group_independent(group.first, group.second)) return false;
  }
  return true;
}

bool eval_incl(const Tuple& alpha, const Tuple& beta, const Team& t) {
  const std::vector<std::uint32_t> va = tuple_values(alpha, t);
  const std::vector<std::uint32_t> vb = tuple_values(beta, t);
  const std::set<std::uint32_t> bvals(vb.begin(), vb.end());
  for (std::uint32_t a : va) {
    if (!bvals.count(a)) return false;
  }
  return true;
}

bool eval_excl(const Tuple& alpha, const Tuple& beta, const Team& t) {
  const std::vector<std::uint32_t> va = tuple_values(alpha, t);
  const std::vector<std::uint32_t> vb = tuple_values(beta, t);
  const std::set<std::uint32_t> bvals(vb.begin(), vb.end());
  for (std::uint32_t a : va) {
    if (bvals.count(a)) return false;
  }
  return true;
}

bool eval_anon(const Tuple& alpha, const Tuple& beta, const Team& t) {
  // Every member needs an alpha-twin with a different beta value, i.e. each
  // alpha group must realize at least two beta values.
  std::map<std::uint32_t, std::set<std::uint32_t>> groups;
  for (Assignment a : t.assignments()) {
    groups[tuple_value(alpha, t.domain, a)].insert(
        tuple_value(beta, t.domain, a));
  }
  for (const auto& [value, bvals] : groups) {
    if (bvals.size() < 2) return false;
  }
  return true;
}

}  // namespace

bool eval_atom(const FormulaPtr& atom, const Team& t) {
  if (atom->kind() != NodeKind::kAtom) {
    throw Error("eval_atom requires an atom node");
  }
  for (const Tuple& tuple : atom->tuples()) {
    for (const FormulaPtr& arg : tuple) {
      for (const std::string& name : prop_names(arg)) {
        if (!t.domain.contains(name)) {
          throw DomainError("atom argument proposition '" + name +
                            "' is outside the domain " + t.domain.to_string());
        }
      }
    }
  }
  const std::vector<Tuple>& tuples = atom->tuples();
  switch (atom->atom_kind()) {
    case AtomKind::kDep:
      return eval_dep(tuples[0], tuples[1], t);
    case AtomKind::kIndep:
      return eval_cond_indep(tuples[0], Tuple{}, tuples[1], t);
    case AtomKind::kCondIndep:
      return eval_cond_indep(tuples[0], tuples[1], tuples[2], t);
    case AtomKind::kIncl:
      return eval_incl(tuples[0], tuples[1], t);
    case AtomKind::kExcl:
      return eval_excl(tuples[0], tuples[1], t);
    case AtomKind::kAnon:
      return eval_anon(tuples[0], tuples[1], t);
  }
  throw Error("unreachable atom kind");
}

// ---------------------------------------------------------------------------
// Witness teams
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> numbered_props(const std::string& stem,
                                        std::size_t count) {
  std::vector<std::string> names;
  if (count == 1) {
    names.push_back(stem);
    return names;
  }
  for (std::size_t i = 1; i <= count; ++i) {
    names.push_back(stem + std::to_string(i));
  }
  return names;
}

Domain witness_domain(WitnessKind kind, std::size_t n, std::size_t m) {
  std::vector<std::string> names = numbered_props("p", n);
  switch (kind) {
    case WitnessKind::kCardinalityMod:
    case WitnessKind::kCardinality:
      break;
    case WitnessKind::kInclusion: {
      const std::vector<std::string> qs = numbered_props("q", n);
      names.insert(names.end(), qs.begin(), qs.end());
      break;
    }
    case WitnessKind::kIndependence: {
      const std::vector<std::string> qs = numbered_props("q", m);
      names.insert(names.end(), qs.begin(), qs.end());
      break;
    }
    case WitnessKind::kAnonymity:
      names.push_back("q");
      break;
  }
  return Domain(names);
}

Tuple prop_tuple(const std::vector<std::string>& names, std::size_t begin,
                 std::size_t count) {
  Tuple tuple;
  for (std::size_t i = 0; i < count; ++i) tuple.push_back(prop(names[begin + i]));
  return tuple;
}

}  // namespace

Team witness_team(WitnessKind kind, std::size_t n, std::size_t m,
                  std::size_t k) {
  const Domain d = witness_domain(kind, n, m);
  const std::uint64_t assignments = std::uint64_t{1} << n;
  switch (kind) {
    case WitnessKind::kCardinalityMod: {
      if (m == 0) throw ArityError("cardinality-mod witness needs modulus m >= 1");
      if (k > assignments) {
        throw ArityError("cardinality-mod witness needs residue k <= 2^n");
      }
      // Size 2^n - [2^n - k]_m: congruent to k mod m, with that many
      // one-smaller neighbours of different residue.
      const std::uint64_t size = assignments - ((assignments - k) % m);
      return Team(d, size >= 32 ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << size) - 1);
    }
    case WitnessKind::kCardinality: {
      if (k > assignments) {
        throw ArityError("cardinality witness needs k <= 2^n");
      }
      return Team(d, k >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << k) - 1);
    }
    case WitnessKind::kInclusion: {
      if (n == 0) throw ArityError("inclusion witness needs n >= 1");
      // Member i has left value i and right value [i+1]_{2^n}; the first
      // tuple proposition carries the most significant digit.
      std::uint32_t members = 0;
      for (std::uint64_t i = 0; i < assignments; ++i) {
        const std::uint64_t next = (i + 1) % assignments;
        std::uint32_t a = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if ((i >> (n - 1 - j)) & 1u) a |= std::uint32_t{1} << j;
          if ((next >> (n - 1 - j)) & 1u) a |= std::uint32_t{1} << (n + j);
        }
        members |= std::uint32_t{1} << a;
      }
      return Team(d, members);
    }
    case WitnessKind::kIndependence:
      if (n == 0 || m == 0) {
        throw ArityError("independence witness needs n, m >= 1");
      }
      return Team::full(d);
    case WitnessKind::kAnonymity:
      return Team::full(d);
  }
  throw Error("unreachable witness kind");
}

FormulaPtr witness_atom(WitnessKind kind, std::size_t n, std::size_t m) {
  const Domain d = witness_domain(kind, n, m);
  const std::vector<std::string>& names = d.props();
  switch (kind) {
    case WitnessKind::kInclusion:
      return atom_incl(prop_tuple(names, 0, n), prop_tuple(names, n, n));
    case WitnessKind::kIndependence:
      return atom_indep(prop_tuple(names, 0, n), prop_tuple(names, n, m));
    case WitnessKind::kAnonymity:
      return atom_anon(prop_tuple(names, 0, n), prop_tuple(names, n, 1));
    case WitnessKind::kCardinalityMod:
    case WitnessKind::kCardinality:
      break;
  }
  throw UnsupportedError("cardinality witnesses have no atom");
}

// ---------------------------------------------------------------------------
// Maximal satisfying teams
// ---------------------------------------------------------------------------

std::vector<Team> maximal_teams(const Denotation& denot) {
  const std::uint32_t space = denot.team_space();
  const std::uint32_t assignments = denot.domain().assignment_count();
  // up[t] = some superset of t (including t) satisfies; superset-or sweep.
  std::vector<char> up(space);
  for (std::uint32_t t = 0; t < space; ++t) up[t] = denot.test(t) ? 1 : 0;
  for (std::uint32_t b = 0; b < assignments; ++b) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    for (std::uint32_t t = 0; t < space; ++t) {
      if (!(t & bit) && up[t | bit]) up[t] = 1;
    }
  }
  std::vector<Team> out;
  for (std::uint32_t t = 0; t < space; ++t) {
    if (!denot.test(t)) continue;
    bool maximal = true;
    for (std::uint32_t b = 0; b < assignments && maximal; ++b) {
      const std::uint32_t bit = std::uint32_t{1} << b;
      if (!(t & bit) && up[t | bit]) maximal = false;
    }
    if (maximal) out.emplace_back(denot.domain(), t);
  }
  return out;
}

std::vector<Team> maximal_teams(const FormulaPtr& f, const Domain& d) {
  return maximal_teams(denotation(f, d));
}

}  // namespace teamlogic
