#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// ---------------------------------------------------------------------------
// Positions
// ---------------------------------------------------------------------------

/// A position of the formula-size game.  Player S (the spoiler) claims that
/// some formula over the given connective signature, of width at most `k`,
/// is true on every team in `a` and false on every team in `b`; player D
/// (the duplicator) disputes the claim.  Teams are member bitmasks over
/// `domain`.
struct Position {
  Domain domain;
  int k = 0;
  std::vector<std::uint32_t> a;  // S claims: all satisfy
  std::vector<std::uint32_t> b;  // S claims: none satisfies
  ConnectiveSet sig;

  Position(Domain d, int resource, std::vector<std::uint32_t> sat,
           std::vector<std::uint32_t> unsat, ConnectiveSet s);
};

// ---------------------------------------------------------------------------
// Moves
// ---------------------------------------------------------------------------

enum class MoveKind {
  kBorSplit,     // (v): S covers the satisfy side with two subsets
  kConjSplit,    // /\ : S covers the falsify side with two subsets
  kOrMove,       // \/ : splits on the satisfy side, choices on the falsify side
  kStrictOrMove,     // \./ : as kOrMove with disjoint splits
  kCoOrMove,         // (^) : splits on the falsify side, choices on the satisfy side
  kStrictCoOrMove,   // (.^): as kCoOrMove with disjoint splits
  kLiteral,      // S commits to a literal; the game ends
};

const char* move_kind_name(MoveKind kind);

/// Two halves of one team (for or-type moves the split S picks for a team on
/// the split side).  Lax splits satisfy part1|part2 == team; strict splits
/// additionally part1&part2 == 0.
struct TeamSplit {
  std::uint32_t part1 = 0;
  std::uint32_t part2 = 0;
};

/// The outcome of a choice function S picks for one team on the function
/// side of an or-type move: for every split (h1,h2) of the team S routes one
/// half to a successor, and `to1`/`to2` collect the routed halves.  A valid
/// outcome covers every split: h1 appears in `to1` or h2 appears in `to2`.
struct ChoiceOutcome {
  std::vector<std::uint32_t> to1;
  std::vector<std::uint32_t> to2;
};

/// One S move.  Fields are read according to `kind`:
///   kBorSplit          side1/side2 (subsets of a, union = a), k1/k2
///   kConjSplit         side1/side2 (subsets of b, union = b), k1/k2
///   kOrMove/kStrictOrMove
///                      splits (one per a-team, in position order),
///                      choices (one per b-team, in position order), k1/k2
///   kCoOrMove/kStrictCoOrMove
///                      splits (one per b-team), choices (one per a-team),
///                      k1/k2
///   kLiteral           literal
struct Move {
  MoveKind kind = MoveKind::kLiteral;
  int k1 = 0;
  int k2 = 0;
  std::vector<std::uint32_t> side1;
  std::vector<std::uint32_t> side2;
  std::vector<TeamSplit> splits;
  std::vector<ChoiceOutcome> choices;
  FormulaPtr literal;
};

/// Result of applying a move: either the game ended on a literal (then
/// `s_wins` reports the winner) or it continues from `next` after D chose a
/// successor.
struct StepResult {
  bool ended = false;
  bool s_wins = false;
  std::vector<Position> next;  // empty when ended; else one Position
};

/// All moves legal for S in `p`, within enumeration capacity.  Or-type move
/// choice functions are enumerated up to successor equivalence: two
/// functions yielding the same routed-half sets are listed once.  Throws
/// CapacityError when the enumeration would exceed internal caps.
std::vector<Move> legal_moves(const Position& p);

/// Validates `m` against `p` and applies it.  For connective moves,
/// `d_choice` (1 or 2) selects the successor position.  Throws Error when
/// the move is not legal in `p`.
StepResult apply_move(const Position& p, const Move& m, int d_choice);

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

struct StrategyTree;
using StrategyPtr = std::shared_ptr<const StrategyTree>;

/// A winning S strategy: the move to make, and for connective moves the
/// subtrees for D's two possible replies.  Leaves are literal moves.
struct StrategyTree {
  Move move;
  StrategyPtr child1;  // D picks 1
  StrategyPtr child2;  // D picks 2
};

/// Why D wins, when D wins.
enum class DCertificateKind {
  kResourceExhausted,  // k = 0
  kSharedTeam,         // some team appears on both sides
  kDensity,            // k < density(a, b); no width-k separation exists
  kSearchExhausted,    // full move search found no winning S move
};

struct SolveResult {
  bool s_wins = false;
  StrategyPtr strategy;  // set when s_wins
  DCertificateKind certificate = DCertificateKind::kSearchExhausted;
  std::uint32_t shared_team = 0;  // set for kSharedTeam
  int density = 0;                // set for kDensity
};

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

/// Decides the game by memoized alternating search over canonicalized
/// positions (sorted, deduplicated team lists).  Capacity: at most 3
/// domain propositions; raw or-move enumeration additionally requires at
/// most 2 propositions and function-side teams of at most 3 members, and
/// larger positions fall back to candidate-driven enumeration (see below).
struct SolverOptions {
  /// Decide for D without search when k < density(a,b) (sound for
  /// signatures without co-splits; ignored when the signature has them).
  bool density_shortcut = true;
  /// For or-type moves beyond raw-enumeration capacity, enumerate only
  /// choice functions induced by pairs of denotations reachable at the
  /// successor widths (complete: any achievable S win is witnessed by a
  /// formula pair, whose induced choices are of this shape).
  bool guided_or_moves = true;
};

class Solver {
 public:
  using Options = SolverOptions;

  Solver(Domain domain, ConnectiveSet sig, Options options = {});
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  SolveResult solve(int k, const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper.
SolveResult solve(const Position& p, Solver::Options options = {});

/// Reads a winning strategy back as a separating formula: literal leaves
/// stay literals, kBorSplit becomes (v), kConjSplit /\, or-moves \/ or \./,
/// co-or-moves (^) or (.^).  The result is checked against `sig`.
FormulaPtr strategy_to_formula(const StrategyPtr& st, const ConnectiveSet& sig);

/// Builds the winning S strategy that plays along `f`.  Requires that `f`
/// separates `a` from `b` (all of `a` satisfies `f`, none of `b` does) and
/// throws Error otherwise.
StrategyPtr formula_to_strategy(const FormulaPtr& f, const Domain& domain,
                                const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b);

// ---------------------------------------------------------------------------
// Density
// ---------------------------------------------------------------------------

/// The teams obtained from `t` by removing exactly one member.
std::vector<Team> neighbours(const Team& t);

/// max over A-teams of the number of B-teams that are one-member-removed
/// subteams of it; 0 when `a` is empty.
int density(const Domain& domain, const std::vector<std::uint32_t>& a,
            const std::vector<std::uint32_t>& b);

// ---------------------------------------------------------------------------
// D's certified play
// ---------------------------------------------------------------------------

/// Move-response function for D, available when D provably wins: either a
/// team is shared between the sides, or k < density(a,b) (the latter only
/// for signatures without co-splits).  respond() returns D's choice (1 or
/// 2) for a connective move; literal moves end the game and need no
/// response.  The chosen successor maintains the winning invariant.
class DelilahStrategy {
 public:
  explicit DelilahStrategy(const Position& p);

  /// D's reply to `m` played in `p`.  `p` must satisfy the invariant (it
  /// does when play started from the constructor position and followed
  /// respond()).  Throws Error for literal moves.
  int respond(const Position& p, const Move& m) const;
};

// ---------------------------------------------------------------------------
// Width synthesis
// ---------------------------------------------------------------------------

enum class SynthesisOutcome {
  kFound,         // minimal width determined; witness attached
  kUnattainable,  // no formula in the signature separates at any width
  kLimitReached,  // no separator at widths <= limit; larger widths unexplored
};

struct SynthesisResult {
  SynthesisOutcome outcome = SynthesisOutcome::kUnattainable;
  int width = 0;       // set when kFound
  FormulaPtr formula;  // set when kFound
};

/// Minimal width of a separating formula, computed independently of the
/// game: enumerate the denotations reachable at width 1, 2, ... (combining
/// all reachable pairs under the enabled connectives, deduplicating by
/// denotation, preferring the lexicographically least canonical print among
/// equal-width witnesses) until one contains every `a`-team and no
/// `b`-team.  Unattainability is decided by closing the reachable set under
/// all enabled connectives regardless of width; when that closure would
/// exceed internal caps the search reports kLimitReached instead.
SynthesisResult min_separating_width(const Domain& domain,
                                     const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b,
                                     const ConnectiveSet& sig,
                                     int width_limit = 16);

}  // namespace teamlogic
