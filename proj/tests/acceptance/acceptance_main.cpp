// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <convdec/exactification.hpp>
#include <convdec/problems.hpp>

#include "decompose/runner.hpp"
#include "decompose/sampler.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace convdec;
using Clock = std::chrono::steady_clock;

namespace {

Rational q(long p, long d = 1)
{
  return make_rational(p, d);
}

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally
{
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string firstFailure;

  void expect(bool ok, const std::string& what)
  {
    ++checks;
    if (!ok && violations++ == 0)
      firstFailure = what;
  }
};

int failures = 0;

void report(int id, const char* name, const Tally& tally, const std::string& detail)
{
  bool ok = tally.violations == 0;
  if (!ok)
    ++failures;
  std::printf("criterion %2d %-28s %s  %zu checks, %zu violations; %s%s%s\n", id, name, ok ? "PASS" : "FAIL",
      tally.checks, tally.violations, detail.c_str(), ok ? "" : "; first: ", ok ? "" : tally.firstFailure.c_str());
}

struct Instance
{
  std::unique_ptr<PackingProblem> problem;
  RVector objective;
  // Barycenter of a random feasible combination: an interior relaxed point.
  RVector interior;
};

std::vector<Instance> make_instances(std::size_t count)
{
  test_support::InstanceGenerator gen(20240601);
  std::vector<Instance> instances;
  for (std::size_t i = 0; i < count; ++i)
  {
    Instance inst;
    if (i % 2 == 0)
    {
      std::size_t n = gen.uniform(2, 10);
      inst.problem = std::make_unique<ExplicitProblem>(gen.explicit_problem(n));
    }
    else
    {
      std::size_t n = gen.uniform(3, 14);
      inst.problem = std::make_unique<KnapsackProblem>(gen.eligible_knapsack(n));
    }
    inst.objective = gen.nonnegative_objective(inst.problem->dimension());
    inst.interior = sigma(gen.random_combination(*inst.problem, 6));
    instances.push_back(std::move(inst));
  }
  return instances;
}

class OriginVerifier : public GapVerifier
{
public:
  explicit OriginVerifier(std::size_t n) : _n(n) {}
  std::size_t dimension() const override { return _n; }
  const Rational& alpha() const override { return _alpha; }
  BinaryPoint query(const RVector&) const override
  {
    ++queries;
    return BinaryPoint::origin(_n);
  }
  mutable std::size_t queries = 0;

private:
  std::size_t _n;
  Rational _alpha = 1;
};

ExplicitProblem cube(std::size_t n)
{
  return ExplicitProblem(ExplicitPolytope(n, {BinaryPoint(std::vector<std::uint8_t>(n, 1))}));
}

} // namespace

int main()
{
  const Rational epsilons[] = {q(1), q(1, 2), q(1, 10)};
  std::vector<Instance> instances = make_instances(200);

  Tally exactness, epsilonBound, reductionBound, support, dominance, closure;
  auto start = Clock::now();
  // Runs 0..199 decompose the relaxed optimum for mu; 200..399 decompose
  // interior points, which force long epsilon phases.
  for (std::size_t runIndex = 0; runIndex < 2 * instances.size(); ++runIndex)
  {
    const std::size_t i = runIndex % instances.size();
    const bool interior = runIndex >= instances.size();
    const PackingProblem& problem = *instances[i].problem;
    const std::size_t n = problem.dimension();
    const Rational& eps = epsilons[runIndex % 3];
    std::string tag = "run " + std::to_string(runIndex) + " (" + std::string(problem.kind()) +
        ", n=" + std::to_string(n) + ", eps=" + to_string(eps) + ")";
    RVector xstar = interior ? instances[i].interior : problem.relaxed_optimum(instances[i].objective);

    std::optional<ExactRun> attempt;
    try
    {
      attempt.emplace(decompose_exact(problem, xstar, eps));
    }
    catch (const std::exception& e)
    {
      exactness.expect(false, tag + ": " + e.what());
      continue;
    }
    const ExactRun& run = *attempt;

    RVector expected = xstar / (problem.alpha() * (1 + run.slack));
    exactness.expect(run.scaledTarget == expected && test_support::weighted_sum(run.result()) == expected, tag);

    const EpsilonRun& phase = run.epsilonRun;
    epsilonBound.expect(Integer(static_cast<long>(phase.iterations)) <= iteration_bound(n, phase.epsilon), tag);
    for (std::size_t k = 0; k < phase.trace.size(); ++k)
      epsilonBound.expect(phase.trace[k].residual * static_cast<long>(k + 1) <= static_cast<long>(n),
          tag + " trace " + std::to_string(k));

    std::size_t bound = psi(run.dominating) * n + (n * n + n) / 2;
    reductionBound.expect(run.reduction.iterations <= bound, tag);

    support.expect(psi(phase.result) <= phase.iterations + 1, tag);

    Rational mass = 0;
    for (const auto& [p, w] : run.dominating)
      mass += w;
    dominance.expect(mass == 1 && dominates(sigma(run.dominating), expected), tag);

    for (const auto& step : phase.trace)
      closure.expect(problem.feasible(step.sampled), tag + " sampled " + to_string(step.sampled));
    for (const auto& [p, w] : run.dominating)
      closure.expect(problem.feasible(p), tag + " dominating " + to_string(p));
    for (const auto& step : run.reduction.trace)
      closure.expect(problem.feasible(step.to), tag + " weakened " + to_string(step.to));
    for (const auto& [p, w] : run.result())
      closure.expect(problem.feasible(p), tag + " final " + to_string(p));
  }
  double exactSeconds = seconds_since(start);
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s (limit 60 s)", exactSeconds);
  exactness.expect(exactSeconds < 60, "runtime over 60 s");

  report(1, "exactness", exactness, std::string("200 instances, 400 runs, ") + timing);
  report(2, "epsilon-phase bound", epsilonBound, "iterations and per-step residuals");
  report(3, "reduction bound", reductionBound, "psi(dominating)*n + (n^2+n)/2");

  // Verifier extension against the brute-force relaxed bound.
  Tally extension;
  test_support::InstanceGenerator gen(99);
  std::size_t extensionInstances = 0;
  start = Clock::now();
  for (std::size_t i = 0; i < instances.size(); ++i)
  {
    const PackingProblem& problem = *instances[i].problem;
    const std::size_t n = problem.dimension();
    if (n > 12)
      continue;
    ++extensionInstances;
    ExtendedVerifier ev(problem.verifier(), problem.feasibility());
    for (int trial = 0; trial < 1000; ++trial)
    {
      RVector mu = gen.mixed_objective(n);
      BinaryPoint answer = ev.query(mu);
      bool ok = problem.alpha() * dot(mu, answer) >= brute_force_lp_bound(problem, mu);
      for (std::size_t k = 0; k < n; ++k)
        ok = ok && !(sgn(mu[k]) < 0 && answer[k]);
      extension.expect(ok, "instance " + std::to_string(i) + " mu " + to_string(mu));
    }
  }
  double extensionSeconds = seconds_since(start);
  extension.expect(extensionSeconds < 30, "runtime over 30 s");
  std::snprintf(timing, sizeof timing, "%.2f s (limit 30 s)", extensionSeconds);
  report(4, "verifier extension", extension, std::to_string(extensionInstances) + " instances, " + timing);

  report(5, "support linearity", support, "psi <= iterations + 1");
  report(6, "dominance", dominance, "sigma(dominating) >= target, mass 1");
  report(7, "packing closure", closure, "every created point feasible");

  // Broken verifier on a cube whose optimum is nonzero.
  Tally gap;
  {
    ExplicitProblem problem = cube(3);
    OriginVerifier broken(3);
    bool caught = false;
    try
    {
      decompose_exact(problem, broken, RVector{q(1), q(1), q(1)}, q(1, 10));
    }
    catch (const VerifierGapViolation& e)
    {
      caught = true;
      gap.expect(app::exit_code_for(e) == app::exit_code::verifierContract, "exit code " + std::to_string(app::exit_code_for(e)));
    }
    gap.expect(caught, "no VerifierGapViolation raised");
    gap.expect(broken.queries == 1, "queries before detection: " + std::to_string(broken.queries));

    app::RunConfig config;
    config.instance = std::string(CONVDEC_TEST_DATA) + "/cube2.json";
    config.objective = RVector{q(1), q(1)};
    config.verifier = app::VerifierChoice::origin;
    int status = app::exit_code::success;
    try
    {
      app::run(config);
    }
    catch (const std::exception& e)
    {
      status = app::exit_code_for(e);
    }
    gap.expect(status == 3, "runner exit code " + std::to_string(status));
  }
  report(8, "gap-violation detection", gap, "raised on first query, exit code 3");

  // Hand-derived first steps on the 2-cube.
  Tally oracle;
  {
    ExplicitProblem problem = cube(2);
    ExtendedVerifier ev(problem.verifier(), problem.feasibility());
    EpsilonRun center = decompose_epsilon(RVector{q(1, 2), q(1, 2)}, ev, q(1, 10));
    oracle.expect(center.trace.size() == 1, "center: expected one step");
    if (!center.trace.empty())
    {
      const EpsilonStep& s = center.trace[0];
      // mu^0 = target - origin, so the recorded residual is |mu^0|^2 = 1/2.
      oracle.expect(s.residual == q(1, 2), "center residual " + to_string(s.residual));
      oracle.expect(s.sampled == BinaryPoint{1, 1}, "center sampled " + to_string(s.sampled));
      oracle.expect(s.delta == q(1, 2), "center delta " + to_string(s.delta));
      oracle.expect(s.delta == test_support::parabola_delta(RVector(2), s.sampled, center.target), "center oracle delta");
    }
    oracle.expect(center.finalResidual == 0, "center final residual " + to_string(center.finalResidual));

    EpsilonRun edge = decompose_epsilon(RVector{q(1, 2), q(0)}, ev, q(1, 10));
    oracle.expect(!edge.trace.empty(), "edge: no steps");
    if (!edge.trace.empty())
    {
      oracle.expect(edge.trace[0].sampled == BinaryPoint{1, 0}, "edge sampled " + to_string(edge.trace[0].sampled));
      oracle.expect(edge.trace[0].delta == q(1, 2), "edge delta " + to_string(edge.trace[0].delta));
    }
  }
  report(9, "epsilon-phase oracle", oracle, "2-cube, targets (1/2,1/2) and (1/2,0)");

  Tally sampler;
  {
    ConvexCombination lambda(2, {{BinaryPoint{0, 0}, q(1, 2)}, {BinaryPoint{1, 1}, q(1, 2)}});
    const std::size_t draws = 10000;
    auto first = app::sample(lambda, draws, 2024);
    std::map<BinaryPoint, std::size_t> counts;
    for (const auto& p : first)
      ++counts[p];
    for (const auto& [p, w] : lambda)
    {
      double freq = static_cast<double>(counts[p]) / draws;
      sampler.expect(freq >= 0.48 && freq <= 0.52, to_string(p) + " frequency " + std::to_string(freq));
    }
    sampler.expect(counts.size() == 2, "draw outside support");
    sampler.expect(app::sample(lambda, draws, 2024) == first, "same seed gave a different sequence");
  }
  report(10, "sampler statistics", sampler, "10^4 draws, +-0.02, seeded replay");

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
