#include "teamlogic/teamio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "teamlogic/text.hpp"

namespace teamlogic {

namespace {

using nlohmann::json;

std::string trimmed(const std::string& line) {
  const auto begin = line.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = line.find_last_not_of(" \t\r");
  return line.substr(begin, end - begin + 1);
}

TeamList parse_teams_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TeamList tl;
  bool have_domain = false;
  bool in_team = false;
  bool after_empty = false;
  std::uint32_t current = 0;
  auto flush = [&]() {
    if (in_team) {
      tl.teams.push_back(current);
      current = 0;
      in_team = false;
    }
  };
  while (std::getline(in, line)) {
    const std::string t = trimmed(line);
    if (!t.empty() && t[0] == '#') continue;
    if (t.empty()) {
      flush();
      after_empty = false;
      continue;
    }
    if (!have_domain) {
      if (t.rfind("domain:", 0) != 0) {
        throw SyntaxError("team file must start with a `domain:` line");
      }
      std::vector<std::string> names;
      std::istringstream rest(t.substr(7));
      std::string name;
      while (std::getline(rest, name, ',')) {
        name = trimmed(name);
        if (!name.empty()) names.push_back(name);
      }
      tl.domain = Domain(names);
      have_domain = true;
      continue;
    }
    if (t == "empty") {
      if (in_team || after_empty) {
        throw SyntaxError("`empty` must stand alone as a team of its own");
      }
      tl.teams.push_back(0);
      after_empty = true;
      continue;
    }
    if (after_empty) {
      throw SyntaxError("`empty` must stand alone as a team of its own");
    }
    current |= std::uint32_t{1} << assignment_from_string(tl.domain, t);
    in_team = true;
  }
  flush();
  if (!have_domain) {
    throw SyntaxError("team file must start with a `domain:` line");
  }
  return tl;
}

TeamList parse_teams_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed team JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("domain") || !j.contains("teams") ||
      !j["domain"].is_array() || !j["teams"].is_array()) {
    throw SyntaxError(
        "team JSON must be an object with `domain` and `teams` arrays");
  }
  TeamList tl;
  std::vector<std::string> names;
  for (const json& name : j["domain"]) {
    if (!name.is_string()) {
      throw SyntaxError("team JSON domain entries must be strings");
    }
    names.push_back(name.get<std::string>());
  }
  tl.domain = Domain(names);
  for (const json& team : j["teams"]) {
    if (!team.is_array()) {
      throw SyntaxError("team JSON teams must be arrays of bitstrings");
    }
    std::uint32_t mask = 0;
    for (const json& bits : team) {
      if (!bits.is_string()) {
        throw SyntaxError("team JSON assignments must be bitstrings");
      }
      mask |= std::uint32_t{1}
              << assignment_from_string(tl.domain, bits.get<std::string>());
    }
    tl.teams.push_back(mask);
  }
  return tl;
}

}  // namespace

TeamList parse_teams(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? parse_teams_json(text) : parse_teams_text(text);
  }
  throw SyntaxError("empty team file");
}

TeamList read_teams_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read team file: " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return parse_teams(contents.str());
}

std::string teams_to_text(const TeamList& tl) {
  std::ostringstream out;
  out << "domain:";
  for (std::size_t j = 0; j < tl.domain.size(); ++j) {
    out << (j == 0 ? " " : ", ") << tl.domain.name(j);
  }
  out << "\n";
  for (std::uint32_t mask : tl.teams) {
    out << "\n";
    if (mask == 0) {
      out << "empty\n";
      continue;
    }
    for (Assignment a = 0; a < tl.domain.assignment_count(); ++a) {
      if ((mask >> a) & 1u) out << assignment_to_string(tl.domain, a) << "\n";
    }
  }
  return out.str();
}

std::string teams_to_json(const TeamList& tl) {
  json j;
  j["domain"] = json::array();
  for (const std::string& name : tl.domain.props()) j["domain"].push_back(name);
  j["teams"] = json::array();
  for (std::uint32_t mask : tl.teams) {
    json team = json::array();
    for (Assignment a = 0; a < tl.domain.assignment_count(); ++a) {
      if ((mask >> a) & 1u) team.push_back(assignment_to_string(tl.domain, a));
    }
    j["teams"].push_back(team);
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Strategy trees
// ---------------------------------------------------------------------------

namespace {

json strategy_node(const StrategyPtr& st) {
  if (!st) throw Error("empty strategy");
  if (st->move.kind == MoveKind::kLiteral) {
    return json{{"literal", print_formula(st->move.literal)}};
  }
  json node;
  node["move"] = move_kind_name(st->move.kind);
  node["k1"] = st->move.k1;
  node["k2"] = st->move.k2;
  node["children"] =
      json::array({strategy_node(st->child1), strategy_node(st->child2)});
  return node;
}

StrategyPtr strategy_from_node(const json& node) {
  if (!node.is_object()) {
    throw SyntaxError("strategy nodes must be JSON objects");
  }
  auto tree = std::make_shared<StrategyTree>();
  if (node.contains("literal")) {
    if (!node["literal"].is_string()) {
      throw SyntaxError("strategy literal must be a formula string");
    }
    tree->move.kind = MoveKind::kLiteral;
    tree->move.literal = parse_formula(node["literal"].get<std::string>());
    if (tree->move.literal->kind() != NodeKind::kLiteral) {
      throw SyntaxError("strategy leaf formula is not a literal");
    }
    return tree;
  }
  if (!node.contains("move") || !node["move"].is_string() ||
      !node.contains("k1") || !node.contains("k2") ||
      !node.contains("children") || !node["children"].is_array() ||
      node["children"].size() != 2) {
    throw SyntaxError(
        "strategy nodes need move, k1, k2 and two children, or a literal");
  }
  const std::string name = node["move"].get<std::string>();
  const MoveKind kinds[] = {MoveKind::kBorSplit,    MoveKind::kConjSplit,
                            MoveKind::kOrMove,      MoveKind::kStrictOrMove,
                            MoveKind::kCoOrMove,    MoveKind::kStrictCoOrMove};
  bool found = false;
  for (MoveKind k : kinds) {
    if (name == move_kind_name(k)) {
      tree->move.kind = k;
      found = true;
      break;
    }
  }
  if (!found) throw SyntaxError("unknown strategy move: " + name);
  tree->move.k1 = node["k1"].get<int>();
  tree->move.k2 = node["k2"].get<int>();
  tree->child1 = strategy_from_node(node["children"][0]);
  tree->child2 = strategy_from_node(node["children"][1]);
  return tree;
}

}  // namespace

std::string strategy_to_json(const StrategyPtr& st) {
  return strategy_node(st).dump(2) + "\n";
}

StrategyPtr strategy_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed strategy JSON: ") + e.what());
  }
  return strategy_from_node(j);
}

// ---------------------------------------------------------------------------
// Benchmark reports
// ---------------------------------------------------------------------------

std::string bench_report_to_json(const BenchReport& report) {
  json j;
  j["schema"] = 1;
  j["rows"] = json::array();
  for (const BenchRow& row : report.rows) {
    j["rows"].push_back({{"property", row.property},
                         {"atomArity", row.atom_arity},
                         {"mode", row.mode},
                         {"formulaLength", row.formula_length},
                         {"formulaWidth", row.formula_width},
                         {"equivalenceChecked", row.equivalence_checked},
                         {"boundClaim", row.bound_claim},
                         {"boundHolds", row.bound_holds}});
  }
  return j.dump(2) + "\n";
}

}  // namespace teamlogic
