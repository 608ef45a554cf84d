#include <benchmark/benchmark.h>

#include "jref/parser.hpp"
#include "jref/unification.hpp"

using namespace jref;

namespace {

  ConditionalProblem assertionChain(std::size_t n) {
    std::vector<Assertion> asserts;
    for (std::size_t i = 0; i < n; ++i) {
      Term t = Expr::justAtom("x" + std::to_string(i % 3));
      asserts.emplace_back(t, i % 2 ? Expr::goal(t) : Expr::prop("p" + std::to_string(i)));
    }
    return problemFromAssertions(asserts);
  }

} // namespace

static void BM_MguAssertions(benchmark::State& state) {
  const ConditionalProblem prob = assertionChain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mgu(prob));
}
BENCHMARK(BM_MguAssertions)->RangeMultiplier(2)->Range(2, 32);

static void BM_EqualModGoalAssignment(benchmark::State& state) {
  std::vector<Assertion> asserts{{parseTerm("x*y"), parseFormula("q")},
                                 {parseTerm("x*y"), parseFormula("v(x*y)")},
                                 {parseTerm("x"), parseFormula("v(y) -> v(x*y)")}};
  const ConditionalProblem prob = problemFromAssertions(asserts);
  const Formula f = parseFormula("x:(v(y) -> v(x*y))");
  const Formula g = parseFormula("x:(v(y) -> q)");
  for (auto _ : state) benchmark::DoNotOptimize(equalMod(f, g, prob));
}
BENCHMARK(BM_EqualModGoalAssignment);
