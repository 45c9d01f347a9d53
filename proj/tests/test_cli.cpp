// End-to-end checks of the command line tool: subcommand behaviour and the
// exit-code contract (0 success / affirmative, 1 negative verdict, 2 usage or
// input errors, 3 capacity limits).

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "teamlogic/semantics.hpp"
#include "teamlogic/teamio.hpp"

namespace teamlogic {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TEAMLOGIC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr) << "popen failed for: " << cmd;
  RunResult r;
  if (pipe == nullptr) return r;
  char buf[512];
  while (fgets(buf, sizeof(buf), pipe) != nullptr) r.output += buf;
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Writes the parity position over {p} (even-cardinality teams vs singletons)
// into team files under a per-process temp directory.
class CliFiles : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new fs::path(fs::temp_directory_path() /
                        ("teamlogic-cli-" + std::to_string(getpid())));
    fs::create_directories(*dir_);
    write("even.team", "domain: p\nempty\n\n0\n1\n");
    write("odd.team", "domain: p\n0\n\n1\n");
    write("full.team", "domain: p\n0\n1\n");
  }

  static void TearDownTestSuite() {
    fs::remove_all(*dir_);
    delete dir_;
    dir_ = nullptr;
  }

  static void write(const std::string& name, const std::string& text) {
    std::ofstream out(*dir_ / name, std::ios::binary);
    out << text;
  }

  static std::string path(const std::string& name) {
    return (*dir_ / name).string();
  }

 private:
  static fs::path* dir_;
};

fs::path* CliFiles::dir_ = nullptr;

TEST_F(CliFiles, EvalPrintsOneVerdictPerTeam) {
  const RunResult all = run_cli("eval \"p \\/ -p\" " + path("even.team"));
  EXPECT_EQ(all.exit_code, 0) << all.output;
  EXPECT_NE(all.output.find("SAT"), std::string::npos);

  // The empty team refutes NE, so the run reports a failure.
  const RunResult some = run_cli("eval NE " + path("even.team"));
  EXPECT_EQ(some.exit_code, 1) << some.output;
  EXPECT_NE(some.output.find("UNSAT"), std::string::npos);
}

TEST_F(CliFiles, EvalRejectsMissingFileAndBadFormula) {
  EXPECT_EQ(run_cli("eval NE " + path("nope.team")).exit_code, 2);
  EXPECT_EQ(run_cli("eval \"p /\\\\\" " + path("even.team")).exit_code, 2);
}

TEST(Cli, EquivUsesTheThreeVerdictExitCodes) {
  const RunResult eq = run_cli("equiv \"p /\\ q\" \"q /\\ p\"");
  EXPECT_EQ(eq.exit_code, 0) << eq.output;
  EXPECT_NE(eq.output.find("equivalent"), std::string::npos);

  const RunResult ne = run_cli("equiv p q");
  EXPECT_EQ(ne.exit_code, 1) << ne.output;
  EXPECT_NE(ne.output.find("inequivalent"), std::string::npos);

  EXPECT_EQ(run_cli("equiv \"p /\\\" q").exit_code, 2);
}

TEST(Cli, CapacityLimitsExitWithCode3) {
  // Five distinct propositions exceed the denotation capacity.
  const RunResult r =
      run_cli("equiv \"a /\\ (b /\\ (c /\\ (d /\\ e)))\" top");
  EXPECT_EQ(r.exit_code, 3) << r.output;
  EXPECT_NE(r.output.find("capacity"), std::string::npos);
}

TEST(Cli, TranslatePrintsTheFormulaAndOptionalStats) {
  const RunResult r = run_cli("translate \"dep(p; q)\" exp-lax --stats");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("(q (v) -q)"), std::string::npos);
  EXPECT_NE(r.output.find("length"), std::string::npos);

  EXPECT_EQ(run_cli("translate \"dep(p; q)\" no-such-mode").exit_code, 2);
  // Non-atom input is an input error, not a crash.
  EXPECT_EQ(run_cli("translate \"p /\\ q\" exp-lax").exit_code, 2);
}

TEST_F(CliFiles, MinwidthReportsTheParityWidth) {
  const RunResult r =
      run_cli("minwidth " + path("even.team") + " " + path("odd.team"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("width 3"), std::string::npos);
}

TEST_F(CliFiles, MinwidthReportsUnattainableSharedTeams) {
  const RunResult r =
      run_cli("minwidth " + path("odd.team") + " " + path("odd.team"));
  EXPECT_EQ(r.exit_code, 1) << r.output;
  EXPECT_NE(r.output.find("unattainable"), std::string::npos);
}

TEST_F(CliFiles, GameExitCodeFollowsTheWinner) {
  const RunResult lose =
      run_cli("game " + path("even.team") + " " + path("odd.team") + " 2");
  EXPECT_EQ(lose.exit_code, 1) << lose.output;
  EXPECT_NE(lose.output.find("D wins"), std::string::npos);

  const RunResult win =
      run_cli("game " + path("even.team") + " " + path("odd.team") + " 3");
  EXPECT_EQ(win.exit_code, 0) << win.output;
  EXPECT_NE(win.output.find("S wins"), std::string::npos);
}

TEST_F(CliFiles, GameDumpedStrategyReplaysToTheReportedWinner) {
  const std::string dump =
      (fs::temp_directory_path() / "teamlogic-cli-strategy.json").string();
  const RunResult win = run_cli("game " + path("even.team") + " " +
                                path("odd.team") + " 3 --dump-strategy " +
                                dump);
  EXPECT_EQ(win.exit_code, 0) << win.output;

  std::ifstream in(dump, std::ios::binary);
  ASSERT_TRUE(in.good()) << "strategy dump missing: " << dump;
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  // Replay: the skeleton extracts to a formula that separates the two team
  // lists within the claimed resource bound.
  const StrategyPtr st = strategy_from_json(text);
  const FormulaPtr f =
      strategy_to_formula(st, ConnectiveSet::parse("and,bor,or"));
  EXPECT_LE(f->width(), 3u);
  const Domain d({"p"});
  for (std::uint32_t t : {0b00u, 0b11u}) EXPECT_TRUE(eval(f, Team(d, t)));
  for (std::uint32_t t : {0b01u, 0b10u}) EXPECT_FALSE(eval(f, Team(d, t)));
  fs::remove(dump);
}

TEST_F(CliFiles, DensityPrintsTheNeighbourhoodBound) {
  const RunResult r =
      run_cli("density " + path("even.team") + " " + path("odd.team"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_EQ(r.output, "2\n");
}

TEST(Cli, DimSummarisesTheGeneratorView) {
  const RunResult r = run_cli("dim \"p \\/ ~q\"");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("pairs:"), std::string::npos);
  EXPECT_NE(r.output.find("dim"), std::string::npos);
}

TEST(Cli, UsageErrorsExitWithCode2) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("no-such-command").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

}  // namespace
}  // namespace teamlogic
