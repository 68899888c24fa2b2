#include "decompose/runner.hpp"

#include <chrono>

#include <convdec/errors.hpp>
#include <convdec/exactification.hpp>
#include <convdec/problems.hpp>

#include "decompose/sampler.hpp"

namespace convdec::app {

std::string_view mode_name(Mode mode)
{
  switch (mode)
  {
  case Mode::epsilonOnly:
    return "epsilon";
  case Mode::exact:
    return "exact";
  case Mode::exactOverall:
    return "exact-overall";
  }
  return "?";
}

Mode parse_mode(std::string_view text)
{
  if (text == "epsilon")
    return Mode::epsilonOnly;
  if (text == "exact")
    return Mode::exact;
  if (text == "exact-overall")
    return Mode::exactOverall;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected epsilon, exact or exact-overall)");
}

namespace {

class OriginVerifier : public GapVerifier
{
public:
  OriginVerifier(std::size_t dim, Rational alpha) : _dim(dim), _alpha(std::move(alpha)) {}

  std::size_t dimension() const override { return _dim; }
  const Rational& alpha() const override { return _alpha; }
  BinaryPoint query(const RVector&) const override { return BinaryPoint::origin(_dim); }

private:
  std::size_t _dim;
  Rational _alpha;
};

RVector resolveXstar(const RunConfig& config, const PackingProblem& problem)
{
  const std::size_t n = problem.dimension();
  if (config.xstar)
  {
    if (config.xstar->dim() != n)
      throw DimensionMismatch(n, config.xstar->dim());
    for (const auto& c : config.xstar->components())
    {
      if (sgn(c) < 0 || c > 1)
        throw std::invalid_argument("supplied xstar is not inside the unit cube");
    }
    return *config.xstar;
  }
  if (!config.objective)
    throw std::invalid_argument("either an objective or an explicit xstar is required");
  if (config.objective->dim() != n)
    throw DimensionMismatch(n, config.objective->dim());
  for (const auto& c : config.objective->components())
  {
    if (sgn(c) < 0)
      throw std::invalid_argument("objective must be nonnegative");
  }
  return problem.relaxed_optimum(*config.objective);
}

void verifyContract(const PackingProblem& problem, const GapVerifier& verifier, const RVector& objective,
    VerificationResult& result)
{
  if (problem.dimension() > kDefaultEnumerationLimit)
    return;
  Rational bound = brute_force_lp_bound(problem, objective);
  Rational achieved = verifier.alpha() * dot(objective, verifier.query(objective));
  if (achieved < bound)
    result.failures.push_back("verifier misses its gap on the objective: alpha * value " + to_string(achieved) +
                              " < relaxed optimum " + to_string(bound));
}

} // namespace

DecompositionReport run(const RunConfig& config)
{
  auto problem = load_instance(config.instance);
  return run(config, *problem);
}

DecompositionReport run(const RunConfig& config, const PackingProblem& problem)
{
  if (sgn(config.epsilon) <= 0)
    throw std::invalid_argument("epsilon must be positive");
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = problem.dimension();

  OriginVerifier origin(n, problem.alpha());
  const GapVerifier& verifier =
      config.verifier == VerifierChoice::origin ? static_cast<const GapVerifier&>(origin) : problem.verifier();

  DecompositionReport report;
  report.problem = std::string(problem.kind());
  report.mode = std::string(mode_name(config.mode));
  report.alpha = verifier.alpha();
  report.epsilon = config.epsilon;
  report.objective = config.objective;
  report.xstar = resolveXstar(config, problem);

  const ConvexCombination* decomposition = nullptr;
  std::optional<EpsilonRun> epsilonRun;
  std::optional<ExactRun> exactRun;
  if (config.mode == Mode::epsilonOnly)
  {
    ExtendedVerifier extended(verifier, problem.feasibility());
    report.target = report.xstar / verifier.alpha();
    epsilonRun = decompose_epsilon(report.target, extended, config.epsilon, {config.stepRule});
    decomposition = &epsilonRun->result;
  }
  else
  {
    ExactOptions options;
    options.mode = config.mode == Mode::exactOverall ? ExactMode::overall : ExactMode::standard;
    options.epsilon.stepRule = config.stepRule;
    exactRun = decompose_exact(problem, verifier, report.xstar, config.epsilon, options);
    epsilonRun = exactRun->epsilonRun;
    decomposition = &exactRun->result();
    report.slack = exactRun->slack;
    report.target = exactRun->scaledTarget;

    const std::size_t psiDominating = psi(exactRun->dominating);
    report.stats.exactIterations = exactRun->reduction.iterations;
    report.stats.exactIterationBound = psiDominating * n + (n * n + n) / 2;
    report.stats.psiDominating = psiDominating;
    report.stats.psiExact = psi(exactRun->result());
  }

  report.stats.epsilonIterations = epsilonRun->iterations;
  report.stats.epsilonIterationBound = iteration_bound(n, epsilonRun->epsilon).get_str();
  report.stats.finalResidual = epsilonRun->finalResidual;
  report.stats.psiEpsilon = psi(epsilonRun->result);

  for (const auto& [point, weight] : *decomposition)
    report.support.push_back({point, weight});

  if (config.verify)
  {
    VerificationResult& v = report.verification;
    v.performed = true;
    if (config.mode == Mode::epsilonOnly)
    {
      // Only weights and feasibility can match exactly here.
      auto check = validate_decomposition(problem, *decomposition, sigma(*decomposition));
      v.failures = std::move(check.failures);
      if (epsilonRun->finalResidual > config.epsilon * config.epsilon)
        v.failures.push_back("squared residual " + to_string(epsilonRun->finalResidual) + " exceeds epsilon^2");
    }
    else
    {
      auto check = validate_decomposition(problem, *decomposition, report.target);
      v.failures = std::move(check.failures);
      if (!dominates(sigma(exactRun->dominating), report.target))
        v.failures.push_back("dominating combination does not dominate the scaled target");
      if (*report.stats.exactIterations > *report.stats.exactIterationBound)
        v.failures.push_back("reduction used more iterations than its bound");
      if (config.objective)
      {
        Rational expected = dot(*config.objective, report.target);
        Rational welfare = 0;
        for (const auto& [point, weight] : *decomposition)
          welfare += weight * dot(*config.objective, point);
        if (welfare != expected)
          v.failures.push_back("expected welfare " + to_string(welfare) + " differs from " + to_string(expected));
      }
    }
    if (Integer(static_cast<unsigned long>(epsilonRun->iterations)) > iteration_bound(n, epsilonRun->epsilon))
      v.failures.push_back("epsilon phase used more iterations than its bound");
    if (config.objective)
      verifyContract(problem, verifier, *config.objective, v);
  }

  if (config.sampleCount > 0)
    report.samples = sample(*decomposition, config.sampleCount, config.seed);

  report.stats.wallTimeMs =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

int exit_code_for(const std::exception& error)
{
  if (dynamic_cast<const VerifierGapViolation*>(&error) || dynamic_cast<const FeasibilityViolation*>(&error))
    return exit_code::verifierContract;
  if (dynamic_cast<const ParseError*>(&error) || dynamic_cast<const std::ios_base::failure*>(&error) ||
      dynamic_cast<const std::filesystem::filesystem_error*>(&error))
    return exit_code::io;
  if (dynamic_cast<const IneligibleInstance*>(&error) || dynamic_cast<const DimensionMismatch*>(&error) ||
      dynamic_cast<const std::invalid_argument*>(&error) || dynamic_cast<const Error*>(&error))
    return exit_code::validation;
  return exit_code::internal;
}

} // namespace convdec::app
