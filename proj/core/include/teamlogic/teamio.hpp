#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "teamlogic/game.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// ---------------------------------------------------------------------------
// Team files
// ---------------------------------------------------------------------------

/// Teams over one domain, in file order (duplicates preserved).
struct TeamList {
  Domain domain;
  std::vector<std::uint32_t> teams;
};

/// Parses a team file.  A leading '{' selects the JSON format
///   {"domain":["p","q"],"teams":[["00","11"],[]]}
/// (an empty array is the empty team).  Otherwise the text format applies:
/// a first line `domain: p,q`; then teams separated by blank lines, each
/// team a run of assignment bitstrings in domain order (one per line) or
/// the single word `empty` for the empty team.  Lines starting with '#'
/// are ignored.  Throws SyntaxError on malformed input.
TeamList parse_teams(const std::string& text);

/// parse_teams over the contents of `path`; throws Error when the file
/// cannot be read.
TeamList read_teams_file(const std::string& path);

std::string teams_to_text(const TeamList& tl);
std::string teams_to_json(const TeamList& tl);

// ---------------------------------------------------------------------------
// Strategy trees
// ---------------------------------------------------------------------------

/// Serializes the skeleton of a strategy: connective nodes as
/// {"move": name, "k1": n, "k2": n, "children": [node, node]}, literal
/// leaves as {"literal": text}.  Team-level move data (sides, splits,
/// choices) is not serialized; the skeleton is exactly what formula
/// extraction needs, so a dumped strategy replays by extracting its
/// formula and re-checking the separation.
std::string strategy_to_json(const StrategyPtr& st);

/// Inverse of strategy_to_json.  Throws SyntaxError on malformed input.
StrategyPtr strategy_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Benchmark reports
// ---------------------------------------------------------------------------

struct BenchRow {
  std::string property;
  std::string atom_arity;
  std::string mode;
  std::uint64_t formula_length = 0;
  std::uint64_t formula_width = 0;
  /// True only when an exhaustive denotation comparison was run for this
  /// row.
  bool equivalence_checked = false;
  std::string bound_claim;
  bool bound_holds = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

/// Versioned report JSON: {"schema": 1, "rows": [...]}.
std::string bench_report_to_json(const BenchReport& report);

}  // namespace teamlogic
