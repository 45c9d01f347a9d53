#include "teamlogic/game.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>

#include "teamlogic/text.hpp"

namespace teamlogic {

namespace {

constexpr int kMaxSolveProps = 3;
constexpr std::size_t kMaxSideTeams = 12;
constexpr std::size_t kMoveEnumerationCap = 200000;
constexpr std::size_t kFrontierCap = 200000;
constexpr std::size_t kGuidedPairCap = 2000000;
constexpr std::size_t kSynthesisEntryCap = 200000;
constexpr std::size_t kClosureSetCap = 4096;

std::vector<std::uint32_t> canonical_teams(std::vector<std::uint32_t> teams) {
  std::sort(teams.begin(), teams.end());
  teams.erase(std::unique(teams.begin(), teams.end()), teams.end());
  return teams;
}

void check_team_masks(const Domain& d, const std::vector<std::uint32_t>& teams,
                      const char* side) {
  for (std::uint32_t t : teams) {
    if (std::uint64_t{t} >= d.team_count()) {
      throw DomainError(std::string("team mask on the ") + side +
                        " side does not fit the domain " + d.to_string());
    }
  }
}

// Both lists sorted.  Returns true and the first shared team, if any.
bool find_shared(const std::vector<std::uint32_t>& a,
                 const std::vector<std::uint32_t>& b, std::uint32_t* shared) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      *shared = a[i];
      return true;
    }
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

std::vector<FormulaPtr> literal_alphabet(const Domain& d) {
  std::vector<FormulaPtr> lits = {top(), bot(), strong_neg(top()),
                                  strong_neg(bot())};
  for (const std::string& name : d.props()) {
    lits.push_back(prop(name));
    lits.push_back(neg_prop(name));
    lits.push_back(strong_neg(prop(name)));
    lits.push_back(strong_neg(neg_prop(name)));
  }
  return lits;
}

bool separates_teams(const FormulaPtr& f, const Domain& d,
                     const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
  for (std::uint32_t t : a) {
    if (!eval(f, Team(d, t))) return false;
  }
  for (std::uint32_t t : b) {
    if (eval(f, Team(d, t))) return false;
  }
  return true;
}

// All (strict) splits of a team's member mask.  Lax splits are the pairs
// with part1|part2 == m (3^|m| of them), strict splits the two-colourings
// (2^|m|).
std::vector<TeamSplit> enumerate_splits(std::uint32_t m, bool strict) {
  std::vector<TeamSplit> out;
  std::uint32_t p1 = m;
  while (true) {
    if (strict) {
      out.push_back({p1, m & ~p1});
    } else {
      const std::uint32_t rest = m & ~p1;
      std::uint32_t x = p1;
      while (true) {
        out.push_back({p1, rest | x});
        if (x == 0) break;
        x = (x - 1) & p1;
      }
    }
    if (p1 == 0) break;
    p1 = (p1 - 1) & m;
  }
  return out;
}

std::vector<std::uint32_t> submasks_of(std::uint32_t m) {
  std::vector<std::uint32_t> out;
  std::uint32_t s = m;
  while (true) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Choice-function outcomes for one function-side team, up to successor
// equivalence: an outcome is determined by the set of halves routed to
// successor 1 (everything not covered that way is forced to successor 2).
std::vector<ChoiceOutcome> enumerate_choice_outcomes(std::uint32_t m,
                                                     bool strict) {
  const std::vector<std::uint32_t> halves = submasks_of(m);
  if (halves.size() > 8) {
    throw CapacityError(
        "choice-function enumeration over a team with more than 3 members");
  }
  const std::vector<TeamSplit> splits = enumerate_splits(m, strict);
  auto half_index = [&](std::uint32_t h) {
    return static_cast<std::size_t>(
        std::lower_bound(halves.begin(), halves.end(), h) - halves.begin());
  };
  std::vector<ChoiceOutcome> out;
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
      seen;
  for (std::uint32_t lbits = 0; lbits < (1u << halves.size()); ++lbits) {
    ChoiceOutcome oc;
    for (const TeamSplit& sp : splits) {
      if ((lbits >> half_index(sp.part1)) & 1u) {
        oc.to1.push_back(sp.part1);
      } else {
        oc.to2.push_back(sp.part2);
      }
    }
    sort_unique(oc.to1);
    sort_unique(oc.to2);
    auto key = std::make_pair(oc.to1, oc.to2);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      out.push_back(std::move(oc));
    }
  }
  return out;
}

bool has_co_splits(const ConnectiveSet& sig) {
  return sig.lax_co_or || sig.strict_co_or;
}

bool valid_split_of(std::uint32_t team, const TeamSplit& sp, bool strict) {
  if ((sp.part1 | sp.part2) != team) return false;
  if (strict && (sp.part1 & sp.part2) != 0) return false;
  return true;
}

void check_choice_outcome(std::uint32_t team, const ChoiceOutcome& oc,
                          bool strict) {
  if (std::popcount(team) > 8) {
    throw CapacityError(
        "choice validation over a team with more than 8 members");
  }
  for (std::uint32_t h : oc.to1) {
    if ((h | team) != team) throw Error("routed half is not part of its team");
  }
  for (std::uint32_t h : oc.to2) {
    if ((h | team) != team) throw Error("routed half is not part of its team");
  }
  for (const TeamSplit& sp : enumerate_splits(team, strict)) {
    const bool covered =
        std::find(oc.to1.begin(), oc.to1.end(), sp.part1) != oc.to1.end() ||
        std::find(oc.to2.begin(), oc.to2.end(), sp.part2) != oc.to2.end();
    if (!covered) {
      throw Error("choice function misses a split of its team");
    }
  }
}

// side1/side2 must cover `all` and introduce nothing else.
void check_cover(const std::vector<std::uint32_t>& all,
                 const std::vector<std::uint32_t>& side1,
                 const std::vector<std::uint32_t>& side2) {
  for (std::uint32_t t : side1) {
    if (!std::binary_search(all.begin(), all.end(), t)) {
      throw Error("cover side contains a team not in the position");
    }
  }
  for (std::uint32_t t : side2) {
    if (!std::binary_search(all.begin(), all.end(), t)) {
      throw Error("cover side contains a team not in the position");
    }
  }
  for (std::uint32_t t : all) {
    const bool covered =
        std::find(side1.begin(), side1.end(), t) != side1.end() ||
        std::find(side2.begin(), side2.end(), t) != side2.end();
    if (!covered) throw Error("cover misses a team of the position");
  }
}

void check_resources(const Position& p, const Move& m) {
  if (m.k1 < 1 || m.k2 < 1 || m.k1 + m.k2 != p.k) {
    throw Error("move resources must be positive and sum to the position's k");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Positions and moves
// ---------------------------------------------------------------------------

Position::Position(Domain d, int resource, std::vector<std::uint32_t> sat,
                   std::vector<std::uint32_t> unsat, ConnectiveSet s)
    : domain(std::move(d)),
      k(resource),
      a(canonical_teams(std::move(sat))),
      b(canonical_teams(std::move(unsat))),
      sig(s) {
  if (k < 0) throw Error("game resource must be nonnegative");
  check_team_masks(domain, a, "satisfy");
  check_team_masks(domain, b, "falsify");
}

const char* move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::kBorSplit:
      return "bor-split";
    case MoveKind::kConjSplit:
      return "conj-split";
    case MoveKind::kOrMove:
      return "or";
    case MoveKind::kStrictOrMove:
      return "strict-or";
    case MoveKind::kCoOrMove:
      return "co-or";
    case MoveKind::kStrictCoOrMove:
      return "strict-co-or";
    case MoveKind::kLiteral:
      return "literal";
  }
  return "?";
}

StepResult apply_move(const Position& p, const Move& m, int d_choice) {
  if (p.k < 1) throw Error("no moves are legal at k = 0");
  if (m.kind == MoveKind::kLiteral) {
    if (!m.literal || m.literal->kind() != NodeKind::kLiteral) {
      throw Error("literal move carries no literal");
    }
    StepResult r;
    r.ended = true;
    r.s_wins = separates_teams(m.literal, p.domain, p.a, p.b);
    return r;
  }
  if (d_choice != 1 && d_choice != 2) {
    throw Error("D's choice must be 1 or 2");
  }
  check_resources(p, m);
  const int k_next = d_choice == 1 ? m.k1 : m.k2;
  StepResult r;
  switch (m.kind) {
    case MoveKind::kBorSplit: {
      if (!p.sig.bool_or) throw Error("(v) is not in the signature");
      check_cover(p.a, m.side1, m.side2);
      const auto& side = d_choice == 1 ? m.side1 : m.side2;
      r.next.emplace_back(p.domain, k_next, side, p.b, p.sig);
      return r;
    }
    case MoveKind::kConjSplit: {
      if (!p.sig.conj) throw Error("/\\ is not in the signature");
      check_cover(p.b, m.side1, m.side2);
      const auto& side = d_choice == 1 ? m.side1 : m.side2;
      r.next.emplace_back(p.domain, k_next, p.a, side, p.sig);
      return r;
    }
    case MoveKind::kOrMove:
    case MoveKind::kStrictOrMove:
    case MoveKind::kCoOrMove:
    case MoveKind::kStrictCoOrMove: {
      const bool strict = m.kind == MoveKind::kStrictOrMove ||
                          m.kind == MoveKind::kStrictCoOrMove;
      const bool co = m.kind == MoveKind::kCoOrMove ||
                      m.kind == MoveKind::kStrictCoOrMove;
      if (co ? (strict ? !p.sig.strict_co_or : !p.sig.lax_co_or)
             : (strict ? !p.sig.strict_or : !p.sig.lax_or)) {
        throw Error(std::string(move_kind_name(m.kind)) +
                    " is not in the signature");
      }
      const auto& split_side = co ? p.b : p.a;
      const auto& fn_side = co ? p.a : p.b;
      if (m.splits.size() != split_side.size() ||
          m.choices.size() != fn_side.size()) {
        throw Error("or-type move must carry one split per split-side team "
                    "and one choice per function-side team");
      }
      for (std::size_t i = 0; i < split_side.size(); ++i) {
        if (!valid_split_of(split_side[i], m.splits[i], strict)) {
          throw Error("split does not split its team");
        }
      }
      for (std::size_t i = 0; i < fn_side.size(); ++i) {
        check_choice_outcome(fn_side[i], m.choices[i], strict);
      }
      std::vector<std::uint32_t> split_part, routed;
      for (const TeamSplit& sp : m.splits) {
        split_part.push_back(d_choice == 1 ? sp.part1 : sp.part2);
      }
      for (const ChoiceOutcome& oc : m.choices) {
        const auto& to = d_choice == 1 ? oc.to1 : oc.to2;
        routed.insert(routed.end(), to.begin(), to.end());
      }
      if (co) {
        r.next.emplace_back(p.domain, k_next, routed, split_part, p.sig);
      } else {
        r.next.emplace_back(p.domain, k_next, split_part, routed, p.sig);
      }
      return r;
    }
    case MoveKind::kLiteral:
      break;
  }
  throw Error("malformed move");
}

namespace {

// Emit every cover pair (side1, side2) of `teams` (each team lands in side
// 1, side 2, or both).
template <typename Fn>
void for_each_cover(const std::vector<std::uint32_t>& teams, const Fn& fn) {
  if (teams.size() > kMaxSideTeams) {
    throw CapacityError("cover enumeration over more than 12 teams");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < teams.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> s1, s2;
    std::size_t c = code;
    for (std::uint32_t t : teams) {
      switch (c % 3) {
        case 0:
          s1.push_back(t);
          break;
        case 1:
          s2.push_back(t);
          break;
        default:
          s1.push_back(t);
          s2.push_back(t);
          break;
      }
      c /= 3;
    }
    fn(s1, s2);
  }
}

template <typename Opt, typename Fn>
void for_each_product(const std::vector<std::vector<Opt>>& options,
                      std::vector<const Opt*>& picked, std::size_t i,
                      const Fn& fn) {
  if (i == options.size()) {
    fn(picked);
    return;
  }
  for (const Opt& o : options[i]) {
    picked.push_back(&o);
    for_each_product(options, picked, i + 1, fn);
    picked.pop_back();
  }
}

}  // namespace

std::vector<Move> legal_moves(const Position& p) {
  if (p.k < 1) throw Error("no moves are legal at k = 0");
  std::vector<Move> out;
  auto guard = [&out]() {
    if (out.size() > kMoveEnumerationCap) {
      throw CapacityError("move enumeration exceeds the listing cap");
    }
  };
  for (const FormulaPtr& lit : literal_alphabet(p.domain)) {
    Move m;
    m.kind = MoveKind::kLiteral;
    m.literal = lit;
    out.push_back(std::move(m));
  }
  if (p.k < 2) return out;
  for (int k1 = 1; k1 < p.k; ++k1) {
    const int k2 = p.k - k1;
    if (p.sig.bool_or) {
      for_each_cover(p.a, [&](const std::vector<std::uint32_t>& s1,
                              const std::vector<std::uint32_t>& s2) {
        Move m;
        m.kind = MoveKind::kBorSplit;
        m.k1 = k1;
        m.k2 = k2;
        m.side1 = s1;
        m.side2 = s2;
        out.push_back(std::move(m));
        guard();
      });
    }
    if (p.sig.conj) {
      for_each_cover(p.b, [&](const std::vector<std::uint32_t>& s1,
                              const std::vector<std::uint32_t>& s2) {
        Move m;
        m.kind = MoveKind::kConjSplit;
        m.k1 = k1;
        m.k2 = k2;
        m.side1 = s1;
        m.side2 = s2;
        out.push_back(std::move(m));
        guard();
      });
    }
    struct OrShape {
      MoveKind kind;
      bool strict;
      bool co;
      bool enabled;
    };
    const OrShape shapes[] = {
        {MoveKind::kOrMove, false, false, p.sig.lax_or},
        {MoveKind::kStrictOrMove, true, false, p.sig.strict_or},
        {MoveKind::kCoOrMove, false, true, p.sig.lax_co_or},
        {MoveKind::kStrictCoOrMove, true, true, p.sig.strict_co_or},
    };
    for (const OrShape& shape : shapes) {
      if (!shape.enabled) continue;
      const auto& split_side = shape.co ? p.b : p.a;
      const auto& fn_side = shape.co ? p.a : p.b;
      std::vector<std::vector<TeamSplit>> split_opts;
      for (std::uint32_t t : split_side) {
        if (std::popcount(t) > 8) {
          throw CapacityError(
              "split enumeration over a team with more than 8 members");
        }
        split_opts.push_back(enumerate_splits(t, shape.strict));
      }
      std::vector<std::vector<ChoiceOutcome>> choice_opts;
      for (std::uint32_t t : fn_side) {
        choice_opts.push_back(enumerate_choice_outcomes(t, shape.strict));
      }
      std::vector<const TeamSplit*> picked_splits;
      for_each_product<TeamSplit>(
          split_opts, picked_splits, 0,
          [&](const std::vector<const TeamSplit*>& splits) {
            std::vector<const ChoiceOutcome*> picked_choices;
            for_each_product<ChoiceOutcome>(
                choice_opts, picked_choices, 0,
                [&](const std::vector<const ChoiceOutcome*>& choices) {
                  Move m;
                  m.kind = shape.kind;
                  m.k1 = k1;
                  m.k2 = k2;
                  for (const TeamSplit* sp : splits) m.splits.push_back(*sp);
                  for (const ChoiceOutcome* oc : choices) {
                    m.choices.push_back(*oc);
                  }
                  out.push_back(std::move(m));
                  guard();
                });
          });
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Density
// ---------------------------------------------------------------------------

std::vector<Team> neighbours(const Team& t) {
  std::vector<Team> out;
  for (Assignment s : t.assignments()) {
    out.emplace_back(t.domain, t.members & ~(std::uint32_t{1} << s));
  }
  return out;
}

int density(const Domain& domain, const std::vector<std::uint32_t>& a,
            const std::vector<std::uint32_t>& b) {
  check_team_masks(domain, a, "satisfy");
  check_team_masks(domain, b, "falsify");
  int best = 0;
  for (std::uint32_t t : a) {
    int n = 0;
    for (std::uint32_t u : b) {
      if ((u | t) == t && std::popcount(t & ~u) == 1) ++n;
    }
    best = std::max(best, n);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Width synthesis
// ---------------------------------------------------------------------------

namespace {

struct DenotationHash {
  std::size_t operator()(const Denotation& d) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : d.words()) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct DenotationEq {
  bool operator()(const Denotation& x, const Denotation& y) const {
    return x == y;
  }
};

std::vector<NodeKind> enabled_binary(const ConnectiveSet& sig) {
  std::vector<NodeKind> out;
  if (sig.conj) out.push_back(NodeKind::kConj);
  if (sig.bool_or) out.push_back(NodeKind::kBoolOr);
  if (sig.lax_or) out.push_back(NodeKind::kLaxOr);
  if (sig.strict_or) out.push_back(NodeKind::kStrictOr);
  if (sig.lax_co_or) out.push_back(NodeKind::kLaxCoOr);
  if (sig.strict_co_or) out.push_back(NodeKind::kStrictCoOr);
  return out;
}

Denotation combine_denotations(NodeKind kind, const Denotation& l,
                               const Denotation& r) {
  switch (kind) {
    case NodeKind::kConj:
      return denot_and(l, r);
    case NodeKind::kBoolOr:
      return denot_or(l, r);
    case NodeKind::kLaxOr:
      return denot_cover(l, r);
    case NodeKind::kStrictOr:
      return denot_disjoint(l, r);
    case NodeKind::kLaxCoOr:
      return denot_co_cover(l, r);
    case NodeKind::kStrictCoOr:
      return denot_co_disjoint(l, r);
    default:
      throw Error("not a binary connective");
  }
}

struct LevelEntry {
  Denotation denot;
  FormulaPtr formula;
  LevelEntry(Denotation d, FormulaPtr f)
      : denot(std::move(d)), formula(std::move(f)) {}
};

// Denotations reachable at width 1, 2, ...: width 1 is the literal
// alphabet, width w the combinations of reachable pairs with widths summing
// to w under the enabled connectives.  Each denotation is kept at its first
// width with the lexicographically least print among that width's
// witnesses.
class DenotationLevels {
 public:
  DenotationLevels(Domain d, ConnectiveSet sig)
      : domain_(std::move(d)), ops_(enabled_binary(sig)) {
    levels_.emplace_back();  // width 0: unused
  }

  void build_to(int w) {
    while (static_cast<int>(levels_.size()) <= w) build_next();
  }

  const std::vector<LevelEntry>& level(int w) const { return levels_.at(w); }

  std::size_t total() const { return total_; }

  /// True when combining any two known denotations under any enabled
  /// connective yields a known denotation — then the known set is the full
  /// closure and no larger width can reach anything new.  Returns false
  /// (unknown) when the known set exceeds the closure-check cap.
  bool closure_complete() {
    if (total_ > kClosureSetCap) return false;
    std::vector<const Denotation*> all;
    for (const auto& lv : levels_) {
      for (const LevelEntry& e : lv) all.push_back(&e.denot);
    }
    for (const Denotation* l : all) {
      for (const Denotation* r : all) {
        for (NodeKind op : ops_) {
          if (!first_width_.count(combine_denotations(op, *l, *r))) {
            return false;
          }
        }
      }
    }
    return true;
  }

 private:
  void build_next() {
    const int w = static_cast<int>(levels_.size());
    std::unordered_map<Denotation, FormulaPtr, DenotationHash, DenotationEq>
        cand;
    auto offer = [&](const Denotation& dn, const FormulaPtr& f) {
      if (first_width_.count(dn)) return;
      auto it = cand.find(dn);
      if (it == cand.end()) {
        cand.emplace(dn, f);
      } else if (print_formula(f) < print_formula(it->second)) {
        it->second = f;
      }
    };
    if (w == 1) {
      for (const FormulaPtr& lit : literal_alphabet(domain_)) {
        offer(denotation(lit, domain_), lit);
      }
    } else {
      for (int w1 = 1; w1 < w; ++w1) {
        const int w2 = w - w1;
        for (const LevelEntry& l : levels_[w1]) {
          for (const LevelEntry& r : levels_[w2]) {
            for (NodeKind op : ops_) {
              offer(combine_denotations(op, l.denot, r.denot),
                    make_binary(op, l.formula, r.formula));
            }
          }
        }
      }
    }
    std::vector<LevelEntry> entries;
    entries.reserve(cand.size());
    for (auto& kv : cand) entries.emplace_back(kv.first, kv.second);
    std::sort(entries.begin(), entries.end(),
              [](const LevelEntry& x, const LevelEntry& y) {
                return print_formula(x.formula) < print_formula(y.formula);
              });
    for (const LevelEntry& e : entries) first_width_.emplace(e.denot, w);
    total_ += entries.size();
    if (total_ > kSynthesisEntryCap) {
      throw CapacityError("width synthesis exceeds the reachable-set cap");
    }
    levels_.push_back(std::move(entries));
  }

  Domain domain_;
  std::vector<NodeKind> ops_;
  std::vector<std::vector<LevelEntry>> levels_;
  std::unordered_map<Denotation, int, DenotationHash, DenotationEq>
      first_width_;
  std::size_t total_ = 0;
};

}  // namespace

SynthesisResult min_separating_width(const Domain& domain,
                                     const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b,
                                     const ConnectiveSet& sig,
                                     int width_limit) {
  if (domain.size() > kMaxSolveProps) {
    throw CapacityError("width synthesis supports at most 3 propositions");
  }
  const std::vector<std::uint32_t> ca = canonical_teams(a);
  const std::vector<std::uint32_t> cb = canonical_teams(b);
  check_team_masks(domain, ca, "satisfy");
  check_team_masks(domain, cb, "falsify");
  std::uint32_t shared = 0;
  if (find_shared(ca, cb, &shared)) {
    return {SynthesisOutcome::kUnattainable, 0, nullptr};
  }
  auto separating = [&](const Denotation& dn) {
    for (std::uint32_t t : ca) {
      if (!dn.test(t)) return false;
    }
    for (std::uint32_t t : cb) {
      if (dn.test(t)) return false;
    }
    return true;
  };
  DenotationLevels levels(domain, sig);
  for (int w = 1; w <= width_limit; ++w) {
    levels.build_to(w);
    for (const LevelEntry& e : levels.level(w)) {
      if (separating(e.denot)) {
        return {SynthesisOutcome::kFound, w, e.formula};
      }
    }
    if (levels.level(w).empty() && levels.closure_complete()) {
      return {SynthesisOutcome::kUnattainable, 0, nullptr};
    }
  }
  if (levels.closure_complete()) {
    return {SynthesisOutcome::kUnattainable, 0, nullptr};
  }
  return {SynthesisOutcome::kLimitReached, 0, nullptr};
}

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

namespace {

struct PositionKey {
  int k = 0;
  std::vector<std::uint32_t> a, b;
  bool operator==(const PositionKey& o) const {
    return k == o.k && a == o.a && b == o.b;
  }
};

struct PositionKeyHash {
  std::size_t operator()(const PositionKey& key) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(key.k));
    mix(0x5bd1e995u);
    for (std::uint32_t t : key.a) mix(t);
    mix(0xc2b2ae35u);
    for (std::uint32_t t : key.b) mix(t);
    return h;
  }
};

}  // namespace

struct Solver::Impl {
  Domain domain;
  ConnectiveSet sig;
  Options opt;
  std::vector<FormulaPtr> alphabet;

  struct Entry {
    bool s_wins = false;
    bool has_move = false;
    Move move;
    FormulaPtr guided1, guided2;  // successor witnesses for guided or-wins
    DCertificateKind cert = DCertificateKind::kSearchExhausted;
    std::uint32_t shared = 0;
    int dens = 0;
  };
  std::unordered_map<PositionKey, Entry, PositionKeyHash> memo;
  std::unique_ptr<DenotationLevels> levels;

  Impl(Domain d, ConnectiveSet s, Options o)
      : domain(std::move(d)), sig(s), opt(o),
        alphabet(literal_alphabet(domain)) {}

  bool raw_or_eligible(const std::vector<std::uint32_t>& fn_side) const {
    if (domain.size() > 2) return false;
    for (std::uint32_t t : fn_side) {
      if (std::popcount(t) > 3) return false;
    }
    return true;
  }

  // Frontier search over per-team contributions.  State packs the four
  // successor sets as 16-bit team-space masks (team-space size <= 16 here).
  bool try_or_raw(int k1, int k2, bool strict, bool co,
                  const std::vector<std::uint32_t>& a,
                  const std::vector<std::uint32_t>& b, Entry* out) {
    const auto& split_side = co ? b : a;
    const auto& fn_side = co ? a : b;
    // Packed contribution per option: successor-1 a-side | successor-2
    // a-side | successor-1 b-side | successor-2 b-side, 16 bits each.
    auto pack = [&](std::uint32_t a1, std::uint32_t a2, std::uint32_t b1,
                    std::uint32_t b2) {
      return (std::uint64_t{a1}) | (std::uint64_t{a2} << 16) |
             (std::uint64_t{b1} << 32) | (std::uint64_t{b2} << 48);
    };
    std::vector<std::vector<std::uint64_t>> options;
    std::vector<std::vector<TeamSplit>> split_opts;
    std::vector<std::vector<ChoiceOutcome>> choice_opts;
    for (std::uint32_t t : split_side) {
      split_opts.push_back(enumerate_splits(t, strict));
      std::vector<std::uint64_t> packed;
      for (const TeamSplit& sp : split_opts.back()) {
        const std::uint32_t m1 = std::uint32_t{1} << sp.part1;
        const std::uint32_t m2 = std::uint32_t{1} << sp.part2;
        packed.push_back(co ? pack(0, 0, m1, m2) : pack(m1, m2, 0, 0));
      }
      options.push_back(std::move(packed));
    }
    for (std::uint32_t t : fn_side) {
      choice_opts.push_back(enumerate_choice_outcomes(t, strict));
      std::vector<std::uint64_t> packed;
      for (const ChoiceOutcome& oc : choice_opts.back()) {
        std::uint32_t m1 = 0, m2 = 0;
        for (std::uint32_t h : oc.to1) m1 |= std::uint32_t{1} << h;
        for (std::uint32_t h : oc.to2) m2 |= std::uint32_t{1} << h;
        packed.push_back(co ? pack(m1, m2, 0, 0) : pack(0, 0, m1, m2));
      }
      options.push_back(std::move(packed));
    }
    // Layered frontier with back-pointers for move reconstruction.
    std::vector<std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>>>
        layers(options.size() + 1);
    layers[0].emplace(0, std::make_pair(0, -1));
    for (std::size_t i = 0; i < options.size(); ++i) {
      for (const auto& [state, back] : layers[i]) {
        for (std::size_t oi = 0; oi < options[i].size(); ++oi) {
          layers[i + 1].emplace(state | options[i][oi],
                                std::make_pair(state, static_cast<int>(oi)));
        }
      }
      if (layers[i + 1].size() > kFrontierCap) {
        throw CapacityError("or-move frontier exceeds its cap");
      }
    }
    std::vector<std::uint64_t> finals;
    finals.reserve(layers.back().size());
    for (const auto& kv : layers.back()) finals.push_back(kv.first);
    std::sort(finals.begin(), finals.end());
    auto unpack = [](std::uint64_t state, int part) {
      std::vector<std::uint32_t> teams;
      const std::uint32_t mask = (state >> (16 * part)) & 0xFFFFu;
      for (std::uint32_t t = 0; t < 16; ++t) {
        if ((mask >> t) & 1u) teams.push_back(t);
      }
      return teams;
    };
    for (std::uint64_t state : finals) {
      if (!solve_rec(k1, unpack(state, 0), unpack(state, 2)).s_wins) continue;
      if (!solve_rec(k2, unpack(state, 1), unpack(state, 3)).s_wins) continue;
      // Reconstruct the per-team picks along the back-pointer chain.
      std::vector<int> picks(options.size());
      std::uint64_t cur = state;
      for (std::size_t i = options.size(); i-- > 0;) {
        const auto& back = layers[i + 1].at(cur);
        picks[i] = back.second;
        cur = back.first;
      }
      out->s_wins = true;
      out->has_move = true;
      out->move.kind = co ? (strict ? MoveKind::kStrictCoOrMove
                                    : MoveKind::kCoOrMove)
                          : (strict ? MoveKind::kStrictOrMove
                                    : MoveKind::kOrMove);
      out->move.k1 = k1;
      out->move.k2 = k2;
      for (std::size_t i = 0; i < split_opts.size(); ++i) {
        out->move.splits.push_back(split_opts[i][picks[i]]);
      }
      for (std::size_t i = 0; i < choice_opts.size(); ++i) {
        out->move.choices.push_back(
            choice_opts[i][picks[split_opts.size() + i]]);
      }
      return true;
    }
    return false;
  }

  // Candidate-driven enumeration: any or-move win is witnessed by a pair of
  // separating formulas for the successors, so it suffices to scan pairs of
  // denotations reachable at the successor widths.
  bool try_or_guided(int k1, int k2, bool strict,
                     const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b, Entry* out) {
    if (!levels) {
      levels = std::make_unique<DenotationLevels>(domain, sig);
    }
    levels->build_to(std::max(k1, k2));
    auto entries_to = [&](int w) {
      std::vector<const LevelEntry*> es;
      for (int i = 1; i <= w; ++i) {
        for (const LevelEntry& e : levels->level(i)) es.push_back(&e);
      }
      return es;
    };
    const auto left = entries_to(k1);
    const auto right = entries_to(k2);
    if (left.size() * right.size() > kGuidedPairCap) {
      throw CapacityError("guided or-move candidate pairs exceed their cap");
    }
    for (const LevelEntry* l : left) {
      for (const LevelEntry* r : right) {
        const Denotation comb = strict ? denot_disjoint(l->denot, r->denot)
                                       : denot_cover(l->denot, r->denot);
        bool ok = true;
        for (std::uint32_t t : a) {
          if (!comb.test(t)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (std::uint32_t t : b) {
          if (comb.test(t)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        out->s_wins = true;
        out->has_move = true;
        out->move.kind = strict ? MoveKind::kStrictOrMove : MoveKind::kOrMove;
        out->move.k1 = k1;
        out->move.k2 = k2;
        for (std::uint32_t t : a) {
          bool found = false;
          for (const TeamSplit& sp : enumerate_splits(t, strict)) {
            if (l->denot.test(sp.part1) && r->denot.test(sp.part2)) {
              out->move.splits.push_back(sp);
              found = true;
              break;
            }
          }
          if (!found) throw Error("internal: cover witness lost its split");
        }
        for (std::uint32_t t : b) {
          ChoiceOutcome oc;
          for (const TeamSplit& sp : enumerate_splits(t, strict)) {
            if (!l->denot.test(sp.part1)) {
              oc.to1.push_back(sp.part1);
            } else {
              oc.to2.push_back(sp.part2);
            }
          }
          sort_unique(oc.to1);
          sort_unique(oc.to2);
          out->move.choices.push_back(std::move(oc));
        }
        out->guided1 = l->formula;
        out->guided2 = r->formula;
        return true;
      }
    }
    return false;
  }

  const Entry solve_rec(int k, std::vector<std::uint32_t> a,
                        std::vector<std::uint32_t> b) {
    a = canonical_teams(std::move(a));
    b = canonical_teams(std::move(b));
    PositionKey key{k, a, b};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Entry e = decide(k, a, b);
    memo[key] = e;
    return e;
  }

  Entry decide(int k, const std::vector<std::uint32_t>& a,
               const std::vector<std::uint32_t>& b) {
    Entry e;
    std::uint32_t shared = 0;
    if (find_shared(a, b, &shared)) {
      e.cert = DCertificateKind::kSharedTeam;
      e.shared = shared;
      return e;
    }
    if (k <= 0) {
      e.cert = DCertificateKind::kResourceExhausted;
      return e;
    }
    if (opt.density_shortcut && !has_co_splits(sig)) {
      const int d = density(domain, a, b);
      if (k < d) {
        e.cert = DCertificateKind::kDensity;
        e.dens = d;
        return e;
      }
    }
    for (const FormulaPtr& lit : alphabet) {
      if (separates_teams(lit, domain, a, b)) {
        e.s_wins = true;
        e.has_move = true;
        e.move.kind = MoveKind::kLiteral;
        e.move.literal = lit;
        return e;
      }
    }
    bool exhaustive = true;
    if (k >= 2) {
      if (a.size() > kMaxSideTeams || b.size() > kMaxSideTeams) {
        throw CapacityError("position side exceeds 12 teams");
      }
      for (int k1 = 1; k1 < k; ++k1) {
        const int k2 = k - k1;
        if (sig.bool_or) {
          // Partitions suffice: shrinking an obligation side only helps S.
          for (std::uint32_t sel = 0; sel < (std::uint32_t{1} << a.size());
               ++sel) {
            std::vector<std::uint32_t> a1, a2;
            for (std::size_t i = 0; i < a.size(); ++i) {
              ((sel >> i) & 1u) ? a1.push_back(a[i]) : a2.push_back(a[i]);
            }
            if (solve_rec(k1, a1, b).s_wins && solve_rec(k2, a2, b).s_wins) {
              e.s_wins = true;
              e.has_move = true;
              e.move.kind = MoveKind::kBorSplit;
              e.move.k1 = k1;
              e.move.k2 = k2;
              e.move.side1 = a1;
              e.move.side2 = a2;
              return e;
            }
          }
        }
        if (sig.conj) {
          for (std::uint32_t sel = 0; sel < (std::uint32_t{1} << b.size());
               ++sel) {
            std::vector<std::uint32_t> b1, b2;
            for (std::size_t i = 0; i < b.size(); ++i) {
              ((sel >> i) & 1u) ? b1.push_back(b[i]) : b2.push_back(b[i]);
            }
            if (solve_rec(k1, a, b1).s_wins && solve_rec(k2, a, b2).s_wins) {
              e.s_wins = true;
              e.has_move = true;
              e.move.kind = MoveKind::kConjSplit;
              e.move.k1 = k1;
              e.move.k2 = k2;
              e.move.side1 = b1;
              e.move.side2 = b2;
              return e;
            }
          }
        }
        for (const bool strict : {false, true}) {
          if (strict ? !sig.strict_or : !sig.lax_or) continue;
          if (raw_or_eligible(b)) {
            if (try_or_raw(k1, k2, strict, /*co=*/false, a, b, &e)) return e;
          } else if (opt.guided_or_moves) {
            try {
              if (try_or_guided(k1, k2, strict, a, b, &e)) return e;
            } catch (const CapacityError&) {
              exhaustive = false;
            }
          } else {
            exhaustive = false;
          }
        }
        for (const bool strict : {false, true}) {
          if (strict ? !sig.strict_co_or : !sig.lax_co_or) continue;
          // Candidate-driven search is not used for co-splits; raw only.
          if (raw_or_eligible(a)) {
            if (try_or_raw(k1, k2, strict, /*co=*/true, a, b, &e)) return e;
          } else {
            exhaustive = false;
          }
        }
      }
    }
    if (!exhaustive) {
      throw CapacityError(
          "cannot certify a win for D: some or-move family was beyond "
          "enumeration capacity");
    }
    e.cert = DCertificateKind::kSearchExhausted;
    return e;
  }

  StrategyPtr build_strategy(int k, const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
    const Entry e = solve_rec(k, a, b);
    if (!e.s_wins || !e.has_move) {
      throw Error("no strategy: S does not win this position");
    }
    auto node = std::make_shared<StrategyTree>();
    node->move = e.move;
    if (e.move.kind == MoveKind::kLiteral) return node;
    const Position p(domain, k, a, b, sig);
    const StepResult s1 = apply_move(p, e.move, 1);
    const StepResult s2 = apply_move(p, e.move, 2);
    if (e.guided1) {
      node->child1 = formula_to_strategy(e.guided1, domain, s1.next[0].a,
                                         s1.next[0].b);
      node->child2 = formula_to_strategy(e.guided2, domain, s2.next[0].a,
                                         s2.next[0].b);
    } else {
      node->child1 = build_strategy(s1.next[0].k, s1.next[0].a, s1.next[0].b);
      node->child2 = build_strategy(s2.next[0].k, s2.next[0].a, s2.next[0].b);
    }
    return node;
  }
};

Solver::Solver(Domain domain, ConnectiveSet sig, Options options)
    : impl_(std::make_unique<Impl>(std::move(domain), sig, options)) {
  if (impl_->domain.size() > kMaxSolveProps) {
    throw CapacityError("the game solver supports at most 3 propositions");
  }
}

Solver::~Solver() = default;

SolveResult Solver::solve(int k, const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b) {
  const std::vector<std::uint32_t> ca = canonical_teams(a);
  const std::vector<std::uint32_t> cb = canonical_teams(b);
  check_team_masks(impl_->domain, ca, "satisfy");
  check_team_masks(impl_->domain, cb, "falsify");
  const Impl::Entry e = impl_->solve_rec(k, ca, cb);
  SolveResult r;
  r.s_wins = e.s_wins;
  r.certificate = e.cert;
  r.shared_team = e.shared;
  r.density = e.dens;
  if (e.s_wins) r.strategy = impl_->build_strategy(k, ca, cb);
  return r;
}

SolveResult solve(const Position& p, Solver::Options options) {
  Solver solver(p.domain, p.sig, options);
  return solver.solve(p.k, p.a, p.b);
}

// ---------------------------------------------------------------------------
// Strategies <-> formulas
// ---------------------------------------------------------------------------

FormulaPtr strategy_to_formula(const StrategyPtr& st,
                               const ConnectiveSet& sig) {
  if (!st) throw Error("empty strategy");
  if (st->move.kind == MoveKind::kLiteral) {
    if (!st->move.literal) throw Error("literal leaf carries no literal");
    return st->move.literal;
  }
  if (!st->child1 || !st->child2) {
    throw Error("connective strategy node is missing a child");
  }
  const FormulaPtr l = strategy_to_formula(st->child1, sig);
  const FormulaPtr r = strategy_to_formula(st->child2, sig);
  NodeKind kind;
  switch (st->move.kind) {
    case MoveKind::kBorSplit:
      kind = NodeKind::kBoolOr;
      break;
    case MoveKind::kConjSplit:
      kind = NodeKind::kConj;
      break;
    case MoveKind::kOrMove:
      kind = NodeKind::kLaxOr;
      break;
    case MoveKind::kStrictOrMove:
      kind = NodeKind::kStrictOr;
      break;
    case MoveKind::kCoOrMove:
      kind = NodeKind::kLaxCoOr;
      break;
    case MoveKind::kStrictCoOrMove:
      kind = NodeKind::kStrictCoOr;
      break;
    default:
      throw Error("malformed strategy move");
  }
  const FormulaPtr out = make_binary(kind, l, r);
  if (!check_signature(out, sig)) {
    throw SignatureError("extracted formula leaves the requested signature");
  }
  return out;
}

namespace {

StrategyPtr strategy_for(const FormulaPtr& f, const Domain& domain,
                         const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b) {
  if (!separates_teams(f, domain, a, b)) {
    throw Error("formula does not separate the sides");
  }
  auto node = std::make_shared<StrategyTree>();
  auto sat = [&](const FormulaPtr& g, std::uint32_t t) {
    return eval(g, Team(domain, t));
  };
  switch (f->kind()) {
    case NodeKind::kLiteral: {
      node->move.kind = MoveKind::kLiteral;
      node->move.literal = f;
      return node;
    }
    case NodeKind::kBoolOr: {
      node->move.kind = MoveKind::kBorSplit;
      node->move.k1 = static_cast<int>(f->left()->width());
      node->move.k2 = static_cast<int>(f->right()->width());
      std::vector<std::uint32_t> a1, a2;
      for (std::uint32_t t : a) {
        if (sat(f->left(), t)) a1.push_back(t);
        if (sat(f->right(), t)) a2.push_back(t);
      }
      node->move.side1 = a1;
      node->move.side2 = a2;
      node->child1 = strategy_for(f->left(), domain, a1, b);
      node->child2 = strategy_for(f->right(), domain, a2, b);
      return node;
    }
    case NodeKind::kConj: {
      node->move.kind = MoveKind::kConjSplit;
      node->move.k1 = static_cast<int>(f->left()->width());
      node->move.k2 = static_cast<int>(f->right()->width());
      std::vector<std::uint32_t> b1, b2;
      for (std::uint32_t t : b) {
        if (!sat(f->left(), t)) b1.push_back(t);
        if (!sat(f->right(), t)) b2.push_back(t);
      }
      node->move.side1 = b1;
      node->move.side2 = b2;
      node->child1 = strategy_for(f->left(), domain, a, b1);
      node->child2 = strategy_for(f->right(), domain, a, b2);
      return node;
    }
    case NodeKind::kLaxOr:
    case NodeKind::kStrictOr:
    case NodeKind::kLaxCoOr:
    case NodeKind::kStrictCoOr: {
      const bool strict = f->kind() == NodeKind::kStrictOr ||
                          f->kind() == NodeKind::kStrictCoOr;
      const bool co = f->kind() == NodeKind::kLaxCoOr ||
                      f->kind() == NodeKind::kStrictCoOr;
      node->move.kind =
          co ? (strict ? MoveKind::kStrictCoOrMove : MoveKind::kCoOrMove)
             : (strict ? MoveKind::kStrictOrMove : MoveKind::kOrMove);
      node->move.k1 = static_cast<int>(f->left()->width());
      node->move.k2 = static_cast<int>(f->right()->width());
      const auto& split_side = co ? b : a;
      const auto& fn_side = co ? a : b;
      std::vector<std::uint32_t> part1s, part2s, routed1, routed2;
      for (std::uint32_t t : split_side) {
        if (std::popcount(t) > 8) {
          throw CapacityError(
              "split search over a team with more than 8 members");
        }
        bool found = false;
        for (const TeamSplit& sp : enumerate_splits(t, strict)) {
          const bool good = co ? (!sat(f->left(), sp.part1) &&
                                  !sat(f->right(), sp.part2))
                               : (sat(f->left(), sp.part1) &&
                                  sat(f->right(), sp.part2));
          if (good) {
            node->move.splits.push_back(sp);
            part1s.push_back(sp.part1);
            part2s.push_back(sp.part2);
            found = true;
            break;
          }
        }
        if (!found) throw Error("formula does not separate the sides");
      }
      for (std::uint32_t t : fn_side) {
        if (std::popcount(t) > 8) {
          throw CapacityError(
              "choice construction over a team with more than 8 members");
        }
        ChoiceOutcome oc;
        for (const TeamSplit& sp : enumerate_splits(t, strict)) {
          if (co ? sat(f->left(), sp.part1) : !sat(f->left(), sp.part1)) {
            oc.to1.push_back(sp.part1);
          } else if (co ? sat(f->right(), sp.part2)
                        : !sat(f->right(), sp.part2)) {
            oc.to2.push_back(sp.part2);
          } else {
            throw Error("formula does not separate the sides");
          }
        }
        sort_unique(oc.to1);
        sort_unique(oc.to2);
        for (std::uint32_t h : oc.to1) routed1.push_back(h);
        for (std::uint32_t h : oc.to2) routed2.push_back(h);
        node->move.choices.push_back(std::move(oc));
      }
      if (co) {
        node->child1 = strategy_for(f->left(), domain, routed1, part1s);
        node->child2 = strategy_for(f->right(), domain, routed2, part2s);
      } else {
        node->child1 = strategy_for(f->left(), domain, part1s, routed1);
        node->child2 = strategy_for(f->right(), domain, part2s, routed2);
      }
      return node;
    }
    default:
      throw SignatureError(
          "game strategies exist for formulas built from literals and "
          "connectives only");
  }
}

}  // namespace

StrategyPtr formula_to_strategy(const FormulaPtr& f, const Domain& domain,
                                const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b) {
  const std::vector<std::uint32_t> ca = canonical_teams(a);
  const std::vector<std::uint32_t> cb = canonical_teams(b);
  check_team_masks(domain, ca, "satisfy");
  check_team_masks(domain, cb, "falsify");
  return strategy_for(f, domain, ca, cb);
}

// ---------------------------------------------------------------------------
// D's certified play
// ---------------------------------------------------------------------------

DelilahStrategy::DelilahStrategy(const Position& p) {
  std::uint32_t shared = 0;
  if (find_shared(p.a, p.b, &shared)) return;
  if (has_co_splits(p.sig)) {
    throw UnsupportedError(
        "certified play without a shared team needs a co-split-free "
        "signature");
  }
  if (p.k >= density(p.domain, p.a, p.b)) {
    throw Error(
        "certified play needs a shared team or k < density of the position");
  }
}

int DelilahStrategy::respond(const Position& p, const Move& m) const {
  if (m.kind == MoveKind::kLiteral) {
    throw Error("a literal move ends the game; D has no reply");
  }
  std::uint32_t shared = 0;
  if (find_shared(p.a, p.b, &shared)) {
    switch (m.kind) {
      case MoveKind::kBorSplit:
        return std::find(m.side1.begin(), m.side1.end(), shared) !=
                       m.side1.end()
                   ? 1
                   : 2;
      case MoveKind::kConjSplit:
        return std::find(m.side1.begin(), m.side1.end(), shared) !=
                       m.side1.end()
                   ? 1
                   : 2;
      case MoveKind::kOrMove:
      case MoveKind::kStrictOrMove:
      case MoveKind::kCoOrMove:
      case MoveKind::kStrictCoOrMove: {
        const bool co = m.kind == MoveKind::kCoOrMove ||
                        m.kind == MoveKind::kStrictCoOrMove;
        const auto& split_side = co ? p.b : p.a;
        const auto& fn_side = co ? p.a : p.b;
        const std::size_t si = static_cast<std::size_t>(
            std::lower_bound(split_side.begin(), split_side.end(), shared) -
            split_side.begin());
        const std::size_t fi = static_cast<std::size_t>(
            std::lower_bound(fn_side.begin(), fn_side.end(), shared) -
            fn_side.begin());
        const TeamSplit sp = m.splits.at(si);
        const ChoiceOutcome& oc = m.choices.at(fi);
        if (std::find(oc.to1.begin(), oc.to1.end(), sp.part1) != oc.to1.end()) {
          return 1;
        }
        if (std::find(oc.to2.begin(), oc.to2.end(), sp.part2) != oc.to2.end()) {
          return 2;
        }
        throw Error("choice function misses the shared team's split");
      }
      default:
        throw Error("malformed move");
    }
  }
  // Density mode.
  switch (m.kind) {
    case MoveKind::kBorSplit: {
      if (m.k1 < density(p.domain, canonical_teams(m.side1), p.b)) return 1;
      if (m.k2 < density(p.domain, canonical_teams(m.side2), p.b)) return 2;
      throw Error("no reply keeps k below density after this (v)-move");
    }
    case MoveKind::kConjSplit: {
      if (m.k1 < density(p.domain, p.a, canonical_teams(m.side1))) return 1;
      if (m.k2 < density(p.domain, p.a, canonical_teams(m.side2))) return 2;
      throw Error("no reply keeps k below density after this /\\-move");
    }
    case MoveKind::kOrMove:
    case MoveKind::kStrictOrMove: {
      const StepResult s1 = apply_move(p, m, 1);
      const StepResult s2 = apply_move(p, m, 2);
      std::uint32_t sh = 0;
      if (find_shared(s1.next[0].a, s1.next[0].b, &sh)) return 1;
      if (find_shared(s2.next[0].a, s2.next[0].b, &sh)) return 2;
      if (m.k1 < density(p.domain, s1.next[0].a, s1.next[0].b)) return 1;
      if (m.k2 < density(p.domain, s2.next[0].a, s2.next[0].b)) return 2;
      throw Error("no reply keeps the invariant after this or-move");
    }
    default:
      throw UnsupportedError(
          "density-based play covers (v), /\\, \\/ and \\./ moves only");
  }
}

}  // namespace teamlogic
