// Dependency atoms: the direct quantifier evaluator against the reference
// transcription and the general evaluator, the lower-bound witness teams,
// and maximal satisfying teams.
#include "teamlogic/atoms.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "support/naive_eval.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/text.hpp"

namespace teamlogic {
namespace {

using testing::naive_eval;

TEST(TupleValue, PacksBitsInTupleOrder) {
  const Domain d({"p", "q", "r"});
  const Tuple t = {prop("r"), prop("p")};
  // Assignment p=1,q=0,r=0: bit 0 = r = 0, bit 1 = p = 1.
  EXPECT_EQ(tuple_value(t, d, 0b001), 0b10u);
  EXPECT_EQ(tuple_value(t, d, 0b100), 0b01u);
  EXPECT_EQ(tuple_value({}, d, 0b111), 0u);
}

TEST(EvalAtom, ThreeEvaluatorsAgreeOnEveryTeamUpToThreeProps) {
  const char* atoms[] = {
      "dep(p; q)",       "dep(; q)",          "dep(p, q; r)",
      "dep(p; q, r)",    "perp(p; q)",        "perp(p; q, r)",
      "perp(p, q; r)",   "perpc(p; r; q)",    "perpc(p; ; q)",
      "perpc(q; p; r)",  "inc(p; q)",         "inc(p, q; q, r)",
      "inc(p, q; r, p)", "excl(p; q)",        "excl(p, q; q, r)",
      "ups(p; q)",       "ups(; q)",          "ups(p, q; r)",
      "ups(p; q, r)",
  };
  for (const char* text : atoms) {
    const FormulaPtr atom = parse_formula(text);
    const Domain d = formula_domain(atom);
    const std::uint32_t teams = 1u << d.assignment_count();
    for (std::uint32_t m = 0; m < teams; ++m) {
      const Team t(d, m);
      const bool direct = eval_atom(atom, t);
      EXPECT_EQ(direct, testing::naive_atom(atom, t))
          << text << " team " << m;
      EXPECT_EQ(direct, eval(atom, t)) << text << " team " << m;
    }
  }
}

TEST(EvalAtom, EveryAtomHoldsVacuouslyOnTheEmptyTeam) {
  const char* atoms[] = {"dep(p; q)", "perp(p; q)",    "perpc(p; r; q)",
                         "inc(p; q)", "excl(p; q)",    "ups(p; q)"};
  for (const char* text : atoms) {
    const FormulaPtr atom = parse_formula(text);
    EXPECT_TRUE(eval_atom(atom, Team::empty(formula_domain(atom)))) << text;
  }
}

TEST(EvalAtom, HandPickedTeams) {
  const Domain d({"p", "q"});
  const FormulaPtr dep = parse_formula("dep(p; q)");
  // Two members with the same p but different q refute dependence.
  EXPECT_FALSE(eval_atom(dep, Team::of(d, {0b00, 0b10})));
  EXPECT_TRUE(eval_atom(dep, Team::of(d, {0b00, 0b11})));

  const FormulaPtr perp = parse_formula("perp(p; q)");
  EXPECT_TRUE(eval_atom(perp, Team::full(d)));
  // {p0q0, p1q1} lacks the p0q1 combination.
  EXPECT_FALSE(eval_atom(perp, Team::of(d, {0b00, 0b11})));
  // A q-constant team is trivially independent.
  EXPECT_TRUE(eval_atom(perp, Team::of(d, {0b00, 0b01})));

  const FormulaPtr inc = parse_formula("inc(p; q)");
  // p-values {0,1} but q-values {0}: 1 has no q-occurrence.
  EXPECT_FALSE(eval_atom(inc, Team::of(d, {0b00, 0b01})));
  EXPECT_TRUE(eval_atom(inc, Team::of(d, {0b00})));
  EXPECT_TRUE(eval_atom(inc, Team::of(d, {0b01, 0b10})));

  const FormulaPtr excl = parse_formula("excl(p; q)");
  EXPECT_TRUE(eval_atom(excl, Team::of(d, {0b01})));   // p-values {1}, q {0}
  EXPECT_FALSE(eval_atom(excl, Team::of(d, {0b00})));  // 0 meets 0
  // Adding the p1q1 row makes the value sets overlap at 1.
  EXPECT_FALSE(eval_atom(excl, Team::of(d, {0b01, 0b11})));

  const FormulaPtr ups = parse_formula("ups(; q)");
  EXPECT_TRUE(eval_atom(ups, Team::of(d, {0b00, 0b10})));
  EXPECT_FALSE(eval_atom(ups, Team::of(d, {0b00})));
}

TEST(EvalAtom, ConditionalIndependenceConditionsOnGamma) {
  // perpc(p; r; q): independence of p and q within each r-block.
  const Domain d({"p", "q", "r"});
  const FormulaPtr f = parse_formula("perpc(p; r; q)");
  // Block r=0 has all four (p,q) combinations; block r=1 is a singleton.
  EXPECT_TRUE(
      eval_atom(f, Team::of(d, {0b000, 0b001, 0b010, 0b011, 0b100})));
  // Block r=0 = {p0q0, p1q1} is not independent.
  EXPECT_FALSE(eval_atom(f, Team::of(d, {0b000, 0b011, 0b100})));
}

TEST(EvalAtom, RejectsNonAtoms) {
  EXPECT_THROW(eval_atom(parse_formula("p /\\ q"),
                         Team(Domain({"p", "q"}), 0b1)),
               Error);
}

// ---------------------------------------------------------------------------
// Witness teams
// ---------------------------------------------------------------------------

TEST(Witness, CardinalityTeamHasRequestedSize) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 0; k <= (std::size_t{1} << n); ++k) {
      const Team t = witness_team(WitnessKind::kCardinality, n, 0, k);
      EXPECT_EQ(t.size(), k) << "n=" << n << " k=" << k;
      EXPECT_EQ(t.domain.size(), n);
    }
  }
}

TEST(Witness, CardinalityModResidueIsMet) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t cap = std::min<std::size_t>(4, std::size_t{1} << n);
    for (std::size_t m = 2; m <= cap; ++m) {
      for (std::size_t k = 0; k < m; ++k) {
        const Team t = witness_team(WitnessKind::kCardinalityMod, n, m, k);
        EXPECT_EQ(t.size() % m, k) << "n=" << n << " m=" << m << " k=" << k;
      }
    }
  }
}

TEST(Witness, InclusionCycleSatisfiesItsAtomAndIsCritical) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const Team t = witness_team(WitnessKind::kInclusion, n);
    const FormulaPtr atom = witness_atom(WitnessKind::kInclusion, n);
    EXPECT_TRUE(eval_atom(atom, t));
    // Removing any single member must break the property: the cycle is the
    // whole point of the construction.
    for (Assignment a : t.assignments()) {
      Team smaller = t;
      smaller.members &= ~(std::uint32_t{1} << a);
      EXPECT_FALSE(eval_atom(atom, smaller)) << "n=" << n << " drop " << a;
    }
  }
}

TEST(Witness, IndependenceFullTeamIsCritical) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m + n <= 4; ++m) {
      const Team t = witness_team(WitnessKind::kIndependence, n, m);
      const FormulaPtr atom = witness_atom(WitnessKind::kIndependence, n, m);
      EXPECT_TRUE(eval_atom(atom, t));
      EXPECT_EQ(t.size(), std::size_t{1} << (n + m));
      for (Assignment a : t.assignments()) {
        Team smaller = t;
        smaller.members &= ~(std::uint32_t{1} << a);
        EXPECT_FALSE(eval_atom(atom, smaller));
      }
    }
  }
}

TEST(Witness, AnonymityFullTeamIsCritical) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Team t = witness_team(WitnessKind::kAnonymity, n);
    const FormulaPtr atom = witness_atom(WitnessKind::kAnonymity, n);
    EXPECT_TRUE(eval_atom(atom, t));
    for (Assignment a : t.assignments()) {
      Team smaller = t;
      smaller.members &= ~(std::uint32_t{1} << a);
      EXPECT_FALSE(eval_atom(atom, smaller));
    }
  }
}

// ---------------------------------------------------------------------------
// Maximal teams
// ---------------------------------------------------------------------------

std::vector<Team> brute_maximal(const FormulaPtr& f, const Domain& d) {
  const Denotation denot = denotation(f, d);
  std::vector<Team> out;
  for (std::uint32_t m = 0; m < denot.team_space(); ++m) {
    if (!denot.test(m)) continue;
    bool maximal = true;
    for (std::uint32_t sup = 0; sup < denot.team_space(); ++sup) {
      if (sup != m && (sup & m) == m && denot.test(sup)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.emplace_back(d, m);
  }
  return out;
}

TEST(MaximalTeams, MatchesBruteForceEnumeration) {
  const char* formulas[] = {"dep(p; q)", "excl(p; q)", "inc(p; q)",
                            "ups(; q)",  "p \\/ ~q",   "NE /\\ dep(; p)"};
  for (const char* text : formulas) {
    const FormulaPtr f = parse_formula(text);
    const Domain d = formula_domain(f);
    const std::vector<Team> expected = brute_maximal(f, d);
    const std::vector<Team> got = maximal_teams(f, d);
    ASSERT_EQ(got.size(), expected.size()) << text;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].members, expected[i].members) << text << " #" << i;
    }
  }
}

TEST(MaximalTeams, DependenceCountsGraphsOfFunctions) {
  // Maximal dependence teams are exactly the graphs of functions from left
  // values to right values: 2^(2^n) of them for dep over n left and one
  // right proposition.
  const FormulaPtr f1 = parse_formula("dep(p; q)");
  EXPECT_EQ(maximal_teams(f1, formula_domain(f1)).size(), 4u);
  const FormulaPtr f2 = parse_formula("dep(p1, p2; q)");
  EXPECT_EQ(maximal_teams(f2, formula_domain(f2)).size(), 16u);
}

TEST(MaximalTeams, ExclusionCountsProperBipartitions) {
  // Maximal exclusion teams pick a nonempty proper subset of values for the
  // left column, the complement for the right: 2^(2^n) - 2.
  const FormulaPtr f1 = parse_formula("excl(p; q)");
  EXPECT_EQ(maximal_teams(f1, formula_domain(f1)).size(), 2u);
  const FormulaPtr f2 = parse_formula("excl(p1, p2; q1, q2)");
  EXPECT_EQ(maximal_teams(f2, formula_domain(f2)).size(), 14u);
}

}  // namespace
}  // namespace teamlogic
