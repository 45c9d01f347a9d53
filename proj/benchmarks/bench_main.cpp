// Microbenchmarks: translation construction cost and output size growth,
// full team-space denotation cost, and the separation-game solver on the
// parity position.  Formula lengths are attached as counters so growth
// trends are visible directly in the benchmark report.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "teamlogic/atoms.hpp"
#include "teamlogic/formula.hpp"
#include "teamlogic/game.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/translate.hpp"

namespace {

using namespace teamlogic;

Tuple make_tuple(const char* base, std::int64_t count) {
  Tuple t;
  for (std::int64_t i = 1; i <= count; ++i) {
    t.push_back(prop(std::string(base) + std::to_string(i)));
  }
  return t;
}

FormulaPtr atom_for(int kind_index, std::int64_t n) {
  switch (kind_index) {
    case 0:
      return atom_dep(make_tuple("p", n), make_tuple("q", n));
    case 1:
      return atom_indep(make_tuple("p", n), make_tuple("q", n));
    case 2:
      return atom_cond_indep(make_tuple("p", n), make_tuple("r", n),
                             make_tuple("q", n));
    case 3:
      return atom_incl(make_tuple("p", n), make_tuple("q", n));
    case 4:
      return atom_excl(make_tuple("p", n), make_tuple("q", n));
    default:
      return atom_anon(make_tuple("p", n), make_tuple("q", n));
  }
}

void BM_TranslateExp(benchmark::State& state) {
  const int kind = static_cast<int>(state.range(0));
  const std::int64_t n = state.range(1);
  std::size_t length = 0;
  for (auto _ : state) {
    FormulaPtr out = translate_exp(atom_for(kind, n), TranslationMode::kExpLax);
    benchmark::DoNotOptimize(out);
    length = out->length();
  }
  state.counters["length"] = static_cast<double>(length);
}
BENCHMARK(BM_TranslateExp)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4}});

void BM_TranslatePolyneg(benchmark::State& state) {
  const int kind = static_cast<int>(state.range(0));
  const std::int64_t n = state.range(1);
  std::size_t length = 0;
  for (auto _ : state) {
    FormulaPtr out =
        translate_polyneg(atom_for(kind, n), TranslationMode::kPolynegLax);
    benchmark::DoNotOptimize(out);
    length = out->length();
  }
  state.counters["length"] = static_cast<double>(length);
}
BENCHMARK(BM_TranslatePolyneg)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4}});

void BM_TranslatePolyFull(benchmark::State& state) {
  const int kind = static_cast<int>(state.range(0));
  const std::int64_t n = state.range(1);
  std::size_t length = 0;
  for (auto _ : state) {
    FormulaPtr out =
        translate_polyfull(atom_for(kind, n), TranslationMode::kPolyFullLax);
    benchmark::DoNotOptimize(out);
    length = out->length();
  }
  state.counters["length"] = static_cast<double>(length);
}
BENCHMARK(BM_TranslatePolyFull)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1, 2, 3, 4}});

void BM_ParityFormula(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::vector<std::string> names;
  for (std::int64_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  const Domain d(names);
  std::size_t length = 0;
  for (auto _ : state) {
    FormulaPtr out = parity_poly(d);
    benchmark::DoNotOptimize(out);
    length = out->length();
  }
  state.counters["length"] = static_cast<double>(length);
}
BENCHMARK(BM_ParityFormula)->DenseRange(1, 4);

void BM_Denotation(benchmark::State& state) {
  // Full team-space denotation of the dependence translation over two
  // propositions: 16 teams, lax splits dominate the cost.
  const FormulaPtr atom = atom_dep(make_tuple("p", 1), make_tuple("q", 1));
  const FormulaPtr f = translate_exp(atom, TranslationMode::kExpLax);
  const Domain d = formula_domain(atom);
  for (auto _ : state) {
    Denotation denot = denotation(f, d);
    benchmark::DoNotOptimize(denot);
  }
}
BENCHMARK(BM_Denotation);

void BM_GameSolveParity(benchmark::State& state) {
  // Even-cardinality teams versus odd-cardinality teams over one
  // proposition; S needs width 3.
  const Domain d({"p"});
  const std::vector<std::uint32_t> evens = {0b00, 0b11};
  const std::vector<std::uint32_t> odds = {0b01, 0b10};
  const ConnectiveSet sig = ConnectiveSet::parse("and,bor,or");
  for (auto _ : state) {
    Solver solver(d, sig);
    SolveResult r = solver.solve(3, evens, odds);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GameSolveParity);

void BM_MinWidthParity(benchmark::State& state) {
  const Domain d({"p"});
  const std::vector<std::uint32_t> evens = {0b00, 0b11};
  const std::vector<std::uint32_t> odds = {0b01, 0b10};
  const ConnectiveSet sig = ConnectiveSet::parse("and,bor,or");
  for (auto _ : state) {
    SynthesisResult r = min_separating_width(d, evens, odds, sig, 4);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MinWidthParity);

}  // namespace

BENCHMARK_MAIN();
