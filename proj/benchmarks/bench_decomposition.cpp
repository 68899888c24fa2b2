#include <benchmark/benchmark.h>

#include <random>

#include <convdec/exactification.hpp>
#include <convdec/problems.hpp>

using namespace convdec;

namespace {

// Deterministic knapsack with n items and a fractional point inside its relaxation.
struct Fixture
{
  KnapsackProblem problem;
  RVector xstar;
};

Fixture knapsack_fixture(std::size_t n)
{
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> weight(1, 20);
  std::vector<Rational> weights;
  long total = 0, largest = 0;
  for (std::size_t k = 0; k < n; ++k)
  {
    long w = weight(rng);
    weights.emplace_back(w);
    total += w;
    largest = std::max(largest, w);
  }
  long capacity = std::max(largest, total / 2);
  KnapsackProblem problem({weights, Rational(capacity)});

  // Scale a uniform fractional point down until it fits the capacity.
  RVector x(n);
  std::uniform_int_distribution<long> num(1, 9);
  Rational load = 0;
  for (std::size_t k = 0; k < n; ++k)
  {
    x[k] = make_rational(num(rng), 10);
    load += x[k] * weights[k];
  }
  if (load > capacity)
    x = Rational(capacity / load) * x;
  return {std::move(problem), std::move(x)};
}

ExplicitProblem cube(std::size_t n)
{
  return ExplicitProblem(ExplicitPolytope(n, {BinaryPoint(std::vector<std::uint8_t>(n, 1))}));
}

void BM_EpsilonPhaseKnapsack(benchmark::State& state)
{
  Fixture f = knapsack_fixture(static_cast<std::size_t>(state.range(0)));
  Rational eps = make_rational(1, state.range(1));
  ExtendedVerifier ev(f.problem.verifier(), f.problem.feasibility());
  RVector target = f.xstar / f.problem.alpha();
  std::size_t iterations = 0;
  for (auto _ : state)
  {
    EpsilonRun run = decompose_epsilon(target, ev, eps);
    iterations = run.iterations;
    benchmark::DoNotOptimize(run.result);
  }
  state.counters["steps"] = static_cast<double>(iterations);
}
BENCHMARK(BM_EpsilonPhaseKnapsack)->Args({8, 10})->Args({14, 10})->Args({14, 30})->Args({14, 100})
    ->Unit(benchmark::kMillisecond);

void BM_ExactStepsKnapsack(benchmark::State& state)
{
  Fixture f = knapsack_fixture(static_cast<std::size_t>(state.range(0)));
  ExtendedVerifier ev(f.problem.verifier(), f.problem.feasibility());
  RVector target = f.xstar / f.problem.alpha();
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose_epsilon(target, ev, make_rational(1, 10), {StepRule::exact}));
}
BENCHMARK(BM_ExactStepsKnapsack)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_FullPipelineKnapsack(benchmark::State& state)
{
  Fixture f = knapsack_fixture(static_cast<std::size_t>(state.range(0)));
  Rational eps = make_rational(1, state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose_exact(f.problem, f.xstar, eps));
}
BENCHMARK(BM_FullPipelineKnapsack)->Args({14, 10})->Args({14, 100})->Unit(benchmark::kMillisecond);

void BM_ReductionCube(benchmark::State& state)
{
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ExplicitProblem problem = cube(n);
  // Dominating combination: half on the top vertex, half on the origin;
  // reduce to a target with distinct rational coordinates.
  ConvexCombination dominating(n, {{BinaryPoint(std::vector<std::uint8_t>(n, 1)), make_rational(1, 2)},
                                      {BinaryPoint::origin(n), make_rational(1, 2)}});
  RVector x(n);
  for (std::size_t k = 0; k < n; ++k)
    x[k] = make_rational(static_cast<long>(k + 1), static_cast<long>(2 * (n + 1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(reduce_to_exact(dominating, x, problem));
}
BENCHMARK(BM_ReductionCube)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_ExplicitVerifier(benchmark::State& state)
{
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ExplicitProblem problem = cube(n);
  RVector mu(n);
  for (std::size_t k = 0; k < n; ++k)
    mu[k] = make_rational(static_cast<long>(k % 3) - 1, 3);
  ExtendedVerifier ev(problem.verifier(), problem.feasibility());
  for (auto _ : state)
    benchmark::DoNotOptimize(ev.query(mu));
}
BENCHMARK(BM_ExplicitVerifier)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
