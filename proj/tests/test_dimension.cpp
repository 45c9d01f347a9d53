// Generator pairs for split-free formulas: interval acceptance, exactness of
// the construction, the Boolean-disjunction dimension cap, and the
// maximal-team counting certificates.
#include "teamlogic/dimension.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "teamlogic/atoms.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/text.hpp"

namespace teamlogic {
namespace {

TEST(Generator, AcceptsExactlyTheIntervalUnion) {
  Generator g;
  g.domain = Domain({"p", "q"});
  g.pairs = {{0b0001, 0b0111}, {0b1000, 0b1000}};
  EXPECT_TRUE(g.accepts(0b0001));
  EXPECT_TRUE(g.accepts(0b0011));
  EXPECT_TRUE(g.accepts(0b0111));
  EXPECT_FALSE(g.accepts(0b0000));
  EXPECT_FALSE(g.accepts(0b1111));
  EXPECT_TRUE(g.accepts(0b1000));
  EXPECT_FALSE(g.accepts(0b1001));
}

TEST(Generator, DimCountsDistinctMaximalUpperSets) {
  Generator g;
  g.domain = Domain({"p"});
  g.pairs = {{0b00, 0b11}, {0b01, 0b11}, {0b00, 0b01}};
  // Upper sets {0b11, 0b11, 0b01}; only 0b11 is maximal.
  EXPECT_EQ(g.dim(), 1u);
  g.pairs = {{0b00, 0b01}, {0b00, 0b10}};
  EXPECT_EQ(g.dim(), 2u);
}

TEST(Generator, MatchesLibraryFormulasExactly) {
  const char* formulas[] = {
      "p",
      "~p",
      "-q",
      "~-q",
      "top",
      "~top",
      "bot",
      "~bot",
      "p /\\ q",
      "p \\/ ~q",
      "(p /\\ q) \\/ (-p /\\ -q)",
      "~p \\/ ~q",
      "p (v) ~p",
      "(p (v) q) /\\ (~p (v) ~-q)",
      "(p \\/ ~q) (v) (q /\\ (top \\/ ~bot))",
  };
  for (const char* text : formulas) {
    const FormulaPtr f = parse_formula(text);
    const Domain d = formula_domain(f).empty() ? Domain({"p"})
                                               : formula_domain(f);
    const Generator g = generator_for(f, d);
    EXPECT_TRUE(generator_matches(g, f)) << text;
  }
}

TEST(Generator, RejectsSplitFreeViolations) {
  const Domain d({"p", "q"});
  EXPECT_THROW(generator_for(parse_formula("p \\./ q"), d), SignatureError);
  EXPECT_THROW(generator_for(parse_formula("~(p /\\ q)"), d), SignatureError);
  EXPECT_THROW(generator_for(parse_formula("dep(p; q)"), d), SignatureError);
  EXPECT_THROW(generator_for(parse_formula("p (^) q"), d), SignatureError);
}

TEST(Generator, DimUpperBoundRespectsTheBorCount) {
  const Domain d({"p", "q"});
  for (const char* text : {"p \\/ ~q", "p (v) ~p", "(p (v) q) (v) ~-q"}) {
    const FormulaPtr f = parse_formula(text);
    EXPECT_LE(dim_upper_bound(f, d),
              std::size_t{1} << f->occ_bool_or())
        << text;
  }
}

TEST(Generator, LowerBoundByMaximalTeamsIsConsistent) {
  // For split-free formulas the number of maximal satisfying teams never
  // exceeds the generator dimension bound.
  const Domain d({"p", "q"});
  for (const char* text : {"p \\/ ~q", "~p /\\ ~-p", "p (v) -p"}) {
    const FormulaPtr f = parse_formula(text);
    EXPECT_LE(dim_lower_bound_by_maximal_teams(f, d), dim_upper_bound(f, d))
        << text;
  }
}

TEST(Certificates, DependenceMaximalTeamCountIsDoubleExponential) {
  const SuccinctnessCertificate c1 = succinctness_certificate(AtomKind::kDep, 1);
  EXPECT_EQ(c1.max_teams, 4u);
  EXPECT_EQ(c1.implied_min_length, 2u);
  EXPECT_TRUE(c1.enumerated);
  const SuccinctnessCertificate c3 = succinctness_certificate(AtomKind::kDep, 3);
  EXPECT_EQ(c3.max_teams, 256u);
  EXPECT_EQ(c3.implied_min_length, 8u);
  EXPECT_TRUE(c3.enumerated);
  const SuccinctnessCertificate c5 = succinctness_certificate(AtomKind::kDep, 5);
  EXPECT_EQ(c5.max_teams, std::uint64_t{1} << 32);
  EXPECT_EQ(c5.implied_min_length, 32u);
  EXPECT_FALSE(c5.enumerated);  // beyond enumeration capacity, shape only
}

TEST(Certificates, ExclusionDropsTheTwoTrivialValueSets) {
  const SuccinctnessCertificate c1 =
      succinctness_certificate(AtomKind::kExcl, 1);
  EXPECT_EQ(c1.max_teams, 2u);
  EXPECT_TRUE(c1.enumerated);
  const SuccinctnessCertificate c2 =
      succinctness_certificate(AtomKind::kExcl, 2);
  EXPECT_EQ(c2.max_teams, 14u);
  EXPECT_EQ(c2.implied_min_length, 4u);
  EXPECT_TRUE(c2.enumerated);
}

TEST(Certificates, OnlyCountingAtomsAreSupported) {
  EXPECT_THROW(succinctness_certificate(AtomKind::kIndep, 2),
               UnsupportedError);
  EXPECT_THROW(succinctness_certificate(AtomKind::kDep, 0), Error);
  EXPECT_THROW(succinctness_certificate(AtomKind::kDep, 6), Error);
}

TEST(Generator, ImplicationChainStrongLiteralCase) {
  // ~l contributes a singleton lower bound per falsifying assignment; check
  // the documented pair shape on one example.
  const Domain d({"p"});
  const Generator g = generator_for(parse_formula("~p"), d);
  // p fails on the p=0 assignment only.
  ASSERT_EQ(g.pairs.size(), 1u);
  EXPECT_EQ(g.pairs[0].first, 0b01u);
  EXPECT_EQ(g.pairs[0].second, 0b11u);
}

}  // namespace
}  // namespace teamlogic
