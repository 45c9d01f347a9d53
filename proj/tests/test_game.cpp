// The separation game: move legality and application, the solver with its
// win certificates, strategy extraction and replay, density, the certified
// duplicator play, and the independent width-synthesis oracle the solver is
// cross-checked against.
#include "teamlogic/game.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "teamlogic/semantics.hpp"
#include "teamlogic/text.hpp"

namespace teamlogic {
namespace {

const ConnectiveSet kBaseSig = ConnectiveSet::parse("and,bor,or");

// Even-cardinality teams versus odd-cardinality teams over one proposition;
// the smallest position that needs width 3.
Position parity_position(int k) {
  return Position(Domain({"p"}), k, {0b00, 0b11}, {0b01, 0b10}, kBaseSig);
}

TEST(Position, CanonicalizesTeamLists) {
  const Position p(Domain({"p"}), 2, {0b11, 0b00, 0b11}, {0b10, 0b01},
                   kBaseSig);
  EXPECT_EQ(p.a, (std::vector<std::uint32_t>{0b00, 0b11}));
  EXPECT_EQ(p.b, (std::vector<std::uint32_t>{0b01, 0b10}));
}

TEST(Position, RejectsOutOfRangeTeams) {
  EXPECT_THROW(Position(Domain({"p"}), 1, {0b100}, {}, kBaseSig),
               DomainError);
}

TEST(Moves, OnlyLiteralMovesAtResourceOne) {
  const std::vector<Move> moves = legal_moves(parity_position(1));
  // Eight literals over one proposition: top, bot, p, -p and their strong
  // negations.
  EXPECT_EQ(moves.size(), 8u);
  for (const Move& m : moves) {
    EXPECT_EQ(m.kind, MoveKind::kLiteral);
  }
}

TEST(Moves, BinaryMovesAppearAtResourceTwo) {
  const std::vector<Move> moves = legal_moves(parity_position(2));
  bool saw_bor = false, saw_conj = false, saw_or = false, saw_co = false;
  for (const Move& m : moves) {
    saw_bor = saw_bor || m.kind == MoveKind::kBorSplit;
    saw_conj = saw_conj || m.kind == MoveKind::kConjSplit;
    saw_or = saw_or || m.kind == MoveKind::kOrMove;
    saw_co = saw_co || m.kind == MoveKind::kCoOrMove ||
             m.kind == MoveKind::kStrictCoOrMove;
  }
  EXPECT_TRUE(saw_bor);
  EXPECT_TRUE(saw_conj);
  EXPECT_TRUE(saw_or);
  // The signature has no co-splits, so no co-or moves may be offered.
  EXPECT_FALSE(saw_co);
}

TEST(Moves, LiteralMoveEndsTheGame) {
  const Position p = parity_position(3);
  Move m;
  m.kind = MoveKind::kLiteral;
  m.literal = parse_formula("top");
  const StepResult r = apply_move(p, m, 1);
  EXPECT_TRUE(r.ended);
  // top satisfies the odd teams too, so S loses on it.
  EXPECT_FALSE(r.s_wins);

  // No literal wins this position outright; spot-check one that fails the
  // other way around.
  m.literal = parse_formula("~bot");
  const StepResult r2 = apply_move(p, m, 1);
  EXPECT_TRUE(r2.ended);
  EXPECT_FALSE(r2.s_wins);  // the empty team is on the satisfy side
}

TEST(Moves, BorSplitBuildsTheChosenSuccessor) {
  const Position p = parity_position(3);
  Move m;
  m.kind = MoveKind::kBorSplit;
  m.k1 = 1;
  m.k2 = 2;
  m.side1 = {0b00};
  m.side2 = {0b11};
  const StepResult r1 = apply_move(p, m, 1);
  ASSERT_FALSE(r1.ended);
  ASSERT_EQ(r1.next.size(), 1u);
  EXPECT_EQ(r1.next[0].k, 1);
  EXPECT_EQ(r1.next[0].a, (std::vector<std::uint32_t>{0b00}));
  EXPECT_EQ(r1.next[0].b, p.b);
  const StepResult r2 = apply_move(p, m, 2);
  EXPECT_EQ(r2.next[0].k, 2);
  EXPECT_EQ(r2.next[0].a, (std::vector<std::uint32_t>{0b11}));
}

TEST(Moves, BorSplitMustCoverTheSatisfySide) {
  const Position p = parity_position(3);
  Move m;
  m.kind = MoveKind::kBorSplit;
  m.k1 = 1;
  m.k2 = 1;
  m.side1 = {0b00};
  m.side2 = {0b00};  // 0b11 is dropped
  EXPECT_THROW(apply_move(p, m, 1), Error);
}

TEST(Moves, ResourceBudgetIsEnforced) {
  const Position p = parity_position(2);
  Move m;
  m.kind = MoveKind::kBorSplit;
  m.k1 = 1;
  m.k2 = 2;  // 1 + 2 > 2
  m.side1 = {0b00};
  m.side2 = {0b11};
  EXPECT_THROW(apply_move(p, m, 1), Error);
}

TEST(Moves, OrMoveRoutesSplitsAndChoices) {
  // a = [{p0,p1}], b = [{p0}].
  const Position p(Domain({"p"}), 2, {0b11}, {0b01}, kBaseSig);
  Move m;
  m.kind = MoveKind::kOrMove;
  m.k1 = 1;
  m.k2 = 1;
  m.splits = {TeamSplit{0b01, 0b10}};
  ChoiceOutcome oc;
  oc.to1 = {0b00, 0b01};  // route every first half to successor 1
  m.choices = {oc};
  const StepResult r = apply_move(p, m, 1);
  ASSERT_FALSE(r.ended);
  const Position& n = r.next[0];
  EXPECT_EQ(n.k, 1);
  EXPECT_EQ(n.a, (std::vector<std::uint32_t>{0b01}));
  EXPECT_EQ(n.b, (std::vector<std::uint32_t>{0b00, 0b01}));
}

TEST(Moves, OrMoveValidatesSplitsAndChoiceCoverage) {
  const Position p(Domain({"p"}), 2, {0b11}, {0b01}, kBaseSig);
  Move m;
  m.kind = MoveKind::kOrMove;
  m.k1 = 1;
  m.k2 = 1;
  m.splits = {TeamSplit{0b01, 0b01}};  // does not cover {p0,p1}
  m.choices = {ChoiceOutcome{{0b00, 0b01}, {}}};
  EXPECT_THROW(apply_move(p, m, 1), Error);

  m.splits = {TeamSplit{0b01, 0b10}};
  m.choices = {ChoiceOutcome{{0b01}, {}}};  // split (0,{p0}) is uncovered
  EXPECT_THROW(apply_move(p, m, 1), Error);
}

TEST(Moves, EnumerationCapsSurfaceAsCapacityErrors) {
  // A function-side team with more than three members exceeds the
  // choice-function cap.
  const Domain d({"p", "q"});
  const Position p(d, 2, {0b0001}, {0b1111}, kBaseSig);
  EXPECT_THROW(legal_moves(p), CapacityError);
}

// ---------------------------------------------------------------------------
// Solver and synthesis
// ---------------------------------------------------------------------------

TEST(Solve, ParityPositionNeedsWidthThree) {
  Solver solver(Domain({"p"}), kBaseSig);
  const SolveResult r1 = solver.solve(1, {0b00, 0b11}, {0b01, 0b10});
  EXPECT_FALSE(r1.s_wins);
  EXPECT_EQ(r1.certificate, DCertificateKind::kDensity);
  EXPECT_EQ(r1.density, 2);

  const SolveResult r2 = solver.solve(2, {0b00, 0b11}, {0b01, 0b10});
  EXPECT_FALSE(r2.s_wins);
  EXPECT_EQ(r2.certificate, DCertificateKind::kSearchExhausted);

  const SolveResult r3 = solver.solve(3, {0b00, 0b11}, {0b01, 0b10});
  ASSERT_TRUE(r3.s_wins);
  ASSERT_TRUE(r3.strategy != nullptr);
  const FormulaPtr f = strategy_to_formula(r3.strategy, kBaseSig);
  EXPECT_LE(f->width(), 3u);
  const Domain d({"p"});
  EXPECT_TRUE(eval(f, Team(d, 0b00)));
  EXPECT_TRUE(eval(f, Team(d, 0b11)));
  EXPECT_FALSE(eval(f, Team(d, 0b01)));
  EXPECT_FALSE(eval(f, Team(d, 0b10)));
}

TEST(Solve, SharedTeamIsAnImmediateLossForS) {
  Solver solver(Domain({"p"}), kBaseSig);
  const SolveResult r = solver.solve(9, {0b01, 0b11}, {0b01});
  EXPECT_FALSE(r.s_wins);
  EXPECT_EQ(r.certificate, DCertificateKind::kSharedTeam);
  EXPECT_EQ(r.shared_team, 0b01u);
}

TEST(Solve, ZeroResourceLosesForS) {
  Solver solver(Domain({"p"}), kBaseSig);
  const SolveResult r = solver.solve(0, {0b00}, {0b01});
  EXPECT_FALSE(r.s_wins);
  EXPECT_EQ(r.certificate, DCertificateKind::kResourceExhausted);
}

TEST(Solve, DomainCapacityIsThreeProps) {
  EXPECT_THROW(Solver(Domain({"p", "q", "r", "s"}), kBaseSig),
               CapacityError);
}

TEST(Synthesis, ParityPositionWidthAndWitness) {
  const SynthesisResult r = min_separating_width(
      Domain({"p"}), {0b00, 0b11}, {0b01, 0b10}, kBaseSig, 8);
  ASSERT_EQ(r.outcome, SynthesisOutcome::kFound);
  EXPECT_EQ(r.width, 3);
  const Domain d({"p"});
  EXPECT_TRUE(eval(r.formula, Team(d, 0b00)));
  EXPECT_TRUE(eval(r.formula, Team(d, 0b11)));
  EXPECT_FALSE(eval(r.formula, Team(d, 0b01)));
  EXPECT_FALSE(eval(r.formula, Team(d, 0b10)));
  EXPECT_EQ(r.formula->width(), 3u);
  EXPECT_TRUE(check_signature(r.formula, kBaseSig));
}

TEST(Synthesis, SharedTeamIsUnattainable) {
  const SynthesisResult r = min_separating_width(Domain({"p"}), {0b01},
                                                 {0b01, 0b10}, kBaseSig, 4);
  EXPECT_EQ(r.outcome, SynthesisOutcome::kUnattainable);
}

TEST(Synthesis, ConjunctionOnlySignatureCanBeUnattainable) {
  // True on both singletons but false on their union is impossible with
  // literals and conjunction alone: the closure completes and proves it.
  const ConnectiveSet sig = ConnectiveSet::parse("and");
  const SynthesisResult r =
      min_separating_width(Domain({"p"}), {0b01, 0b10}, {0b11}, sig, 6);
  EXPECT_EQ(r.outcome, SynthesisOutcome::kUnattainable);
}

TEST(Solve, AgreesWithSynthesisOnEveryOnePropPosition) {
  // Exhaustive cross-check of the two independent deciders: every pair of
  // nonempty team families over one proposition, resources 1..4, with the
  // density shortcut both on and off.
  const Domain d({"p"});
  Solver with_shortcut(d, kBaseSig);
  Solver::Options no_shortcut_opts;
  no_shortcut_opts.density_shortcut = false;
  Solver without_shortcut(d, kBaseSig, no_shortcut_opts);
  for (std::uint32_t asel = 1; asel < 16; ++asel) {
    for (std::uint32_t bsel = 1; bsel < 16; ++bsel) {
      std::vector<std::uint32_t> a, b;
      for (std::uint32_t t = 0; t < 4; ++t) {
        if ((asel >> t) & 1u) a.push_back(t);
        if ((bsel >> t) & 1u) b.push_back(t);
      }
      const SynthesisResult syn = min_separating_width(d, a, b, kBaseSig, 6);
      ASSERT_NE(syn.outcome, SynthesisOutcome::kLimitReached)
          << "closure must complete on one proposition";
      for (int k = 1; k <= 4; ++k) {
        const bool expect_s =
            syn.outcome == SynthesisOutcome::kFound && syn.width <= k;
        const SolveResult r = with_shortcut.solve(k, a, b);
        EXPECT_EQ(r.s_wins, expect_s)
            << "a=" << asel << " b=" << bsel << " k=" << k;
        const SolveResult r2 = without_shortcut.solve(k, a, b);
        EXPECT_EQ(r2.s_wins, expect_s)
            << "no-shortcut a=" << asel << " b=" << bsel << " k=" << k;
        if (r.s_wins) {
          const FormulaPtr f = strategy_to_formula(r.strategy, kBaseSig);
          EXPECT_LE(static_cast<int>(f->width()), k);
          for (std::uint32_t t : a) EXPECT_TRUE(eval(f, Team(d, t)));
          for (std::uint32_t t : b) EXPECT_FALSE(eval(f, Team(d, t)));
        }
      }
    }
  }
}

TEST(Solve, MinimalWidthNeverBeatsDensity) {
  // Whenever a separator exists its width is at least the position density.
  const Domain d({"p"});
  for (std::uint32_t asel = 1; asel < 16; ++asel) {
    for (std::uint32_t bsel = 1; bsel < 16; ++bsel) {
      std::vector<std::uint32_t> a, b;
      for (std::uint32_t t = 0; t < 4; ++t) {
        if ((asel >> t) & 1u) a.push_back(t);
        if ((bsel >> t) & 1u) b.push_back(t);
      }
      const SynthesisResult syn = min_separating_width(d, a, b, kBaseSig, 6);
      if (syn.outcome == SynthesisOutcome::kFound) {
        EXPECT_GE(syn.width, density(d, a, b))
            << "a=" << asel << " b=" << bsel;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Strategy round trips
// ---------------------------------------------------------------------------

TEST(Strategy, FormulaRoundTripThroughStrategyTrees) {
  const Domain d({"p"});
  const std::vector<std::uint32_t> a = {0b00, 0b11};
  const std::vector<std::uint32_t> b = {0b01, 0b10};
  Solver solver(d, kBaseSig);
  const SolveResult r = solver.solve(3, a, b);
  ASSERT_TRUE(r.s_wins);
  const FormulaPtr f = strategy_to_formula(r.strategy, kBaseSig);
  const StrategyPtr st = formula_to_strategy(f, d, a, b);
  EXPECT_EQ(strategy_to_formula(st, kBaseSig).get(), f.get());
}

TEST(Strategy, FormulaMustSeparateTheSides) {
  const Domain d({"p"});
  EXPECT_THROW(formula_to_strategy(parse_formula("p"), d, {0b01}, {0b10}),
               Error);
}

TEST(Strategy, ExtractionRespectsTheSignature) {
  const Domain d({"p"});
  Solver solver(d, kBaseSig);
  const SolveResult r = solver.solve(3, {0b00, 0b11}, {0b01, 0b10});
  ASSERT_TRUE(r.s_wins);
  // Asking for the formula in a signature that forbids the moves used must
  // fail rather than emit an out-of-signature formula.
  EXPECT_THROW(strategy_to_formula(r.strategy, ConnectiveSet::parse("or")),
               SignatureError);
}

// ---------------------------------------------------------------------------
// Density and certified duplicator play
// ---------------------------------------------------------------------------

TEST(Density, NeighboursRemoveOneMember) {
  const Domain d({"p"});
  std::vector<Team> ns = neighbours(Team(d, 0b11));
  std::vector<std::uint32_t> masks;
  for (const Team& t : ns) masks.push_back(t.members);
  std::sort(masks.begin(), masks.end());
  EXPECT_EQ(masks, (std::vector<std::uint32_t>{0b01, 0b10}));
  EXPECT_TRUE(neighbours(Team(d, 0b00)).empty());
}

TEST(Density, CountsOneMemberSubteamsOnTheOtherSide) {
  const Domain d({"p"});
  EXPECT_EQ(density(d, {0b00, 0b11}, {0b01, 0b10}), 2);
  EXPECT_EQ(density(d, {0b11}, {0b01}), 1);
  EXPECT_EQ(density(d, {0b11}, {0b11}), 0);
  EXPECT_EQ(density(d, {}, {0b01}), 0);
}

// Verifies that following the duplicator responder keeps D in positions the
// solver scores as D wins, against every legal S move, to the given depth.
void verify_delilah(const Position& p, const DelilahStrategy& delilah,
                    Solver& solver, int depth) {
  if (depth == 0) return;
  for (const Move& m : legal_moves(p)) {
    if (m.kind == MoveKind::kLiteral) {
      EXPECT_FALSE(apply_move(p, m, 1).s_wins)
          << "literal " << print_formula(m.literal);
      continue;
    }
    const int choice = delilah.respond(p, m);
    ASSERT_TRUE(choice == 1 || choice == 2);
    const StepResult step = apply_move(p, m, choice);
    ASSERT_FALSE(step.ended);
    const Position& n = step.next[0];
    EXPECT_FALSE(solver.solve(n.k, n.a, n.b).s_wins)
        << move_kind_name(m.kind);
    verify_delilah(n, delilah, solver, depth - 1);
  }
}

TEST(Delilah, DensityModeLiteralSweepOnTheParityPosition) {
  const Position p = parity_position(1);
  DelilahStrategy delilah(p);
  Solver solver(p.domain, p.sig);
  verify_delilah(p, delilah, solver, 2);
}

TEST(Delilah, DensityModeAnswersHandBuiltConnectiveMoves) {
  // Density-3 position: the satisfy side is one three-member team, the
  // falsify side its three two-member subteams; k = 2 < 3.
  const Domain d({"p", "q"});
  const Position p(d, 2, {0b0111}, {0b0011, 0b0101, 0b0110}, kBaseSig);
  ASSERT_EQ(density(d, p.a, p.b), 3);
  DelilahStrategy delilah(p);
  Solver solver(d, kBaseSig);

  auto check = [&](const Move& m) {
    const int choice = delilah.respond(p, m);
    ASSERT_TRUE(choice == 1 || choice == 2) << move_kind_name(m.kind);
    const StepResult step = apply_move(p, m, choice);
    ASSERT_FALSE(step.ended);
    const Position& n = step.next[0];
    EXPECT_FALSE(solver.solve(n.k, n.a, n.b).s_wins) << move_kind_name(m.kind);
  };

  Move bor;
  bor.kind = MoveKind::kBorSplit;
  bor.k1 = bor.k2 = 1;
  bor.side1 = {0b0111};
  bor.side2 = {0b0111};
  check(bor);

  Move conj_move;
  conj_move.kind = MoveKind::kConjSplit;
  conj_move.k1 = conj_move.k2 = 1;
  conj_move.side1 = {0b0011, 0b0101};
  conj_move.side2 = {0b0110};
  check(conj_move);

  Move or_move;
  or_move.kind = MoveKind::kOrMove;
  or_move.k1 = or_move.k2 = 1;
  or_move.splits = {TeamSplit{0b0011, 0b0100}};
  // Route every first half of every split to successor 1.
  or_move.choices = {ChoiceOutcome{{0b0000, 0b0001, 0b0010, 0b0011}, {}},
                     ChoiceOutcome{{0b0000, 0b0001, 0b0100, 0b0101}, {}},
                     ChoiceOutcome{{0b0000, 0b0010, 0b0100, 0b0110}, {}}};
  check(or_move);

  // No literal separates this position, so every literal move loses for S.
  for (const Move& m : legal_moves(Position(d, 1, p.a, p.b, kBaseSig))) {
    ASSERT_EQ(m.kind, MoveKind::kLiteral);
    EXPECT_FALSE(apply_move(p, m, 1).s_wins);
  }
}

TEST(Delilah, SharedTeamModeSurvivesEveryMove) {
  const Position p(Domain({"p"}), 3, {0b01, 0b11}, {0b01}, kBaseSig);
  DelilahStrategy delilah(p);
  Solver solver(p.domain, p.sig);
  verify_delilah(p, delilah, solver, 2);
}

TEST(Delilah, RefusesPositionsWhereSWins) {
  EXPECT_THROW(DelilahStrategy(parity_position(3)), Error);
}

}  // namespace
}  // namespace teamlogic
