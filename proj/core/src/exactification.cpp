#include "convdec/exactification.hpp"

namespace convdec {

bool unit_points_feasible(const PackingProblem& problem)
{
  for (std::size_t k = 0; k < problem.dimension(); ++k)
  {
    if (!problem.feasible(BinaryPoint::unit(problem.dimension(), k)))
      return false;
  }
  return true;
}

Rational slack_for(std::size_t n, const Rational& epsilon)
{
  return epsilon * Rational(static_cast<unsigned long>(ceil_sqrt(n)));
}

ConvexCombination build_dominating(const ConvexCombination& lambda, const RVector& target, const Rational& slack)
{
  const std::size_t n = lambda.dim();
  if (target.dim() != n)
    throw DimensionMismatch(n, target.dim());
  if (sgn(slack) < 0)
    throw SlackTooSmall("slack must be nonnegative");

  RVector barycenter = sigma(lambda);
  std::vector<Rational> padding(n);
  Rational used = 0;
  for (std::size_t k = 0; k < n; ++k)
  {
    padding[k] = abs(target[k] - barycenter[k]);
    used += padding[k];
  }
  if (used > slack)
    throw SlackTooSmall("L1 gap " + to_string(used) + " exceeds slack " + to_string(slack));

  const Rational scale = 1 + slack;
  ConvexCombination::Support weights;
  for (const auto& [point, weight] : lambda)
    weights[point] += weight / scale;
  for (std::size_t k = 0; k < n; ++k)
  {
    if (sgn(padding[k]) > 0)
      weights[BinaryPoint::unit(n, k)] += padding[k] / scale;
  }
  Rational originWeight = (slack - used) / scale;
  if (sgn(originWeight) > 0)
    weights[BinaryPoint::origin(n)] += originWeight;
  return ConvexCombination(n, std::move(weights));
}

Reduction reduce_to_exact(const ConvexCombination& dominating, const RVector& x, const PackingProblem& problem)
{
  const std::size_t n = dominating.dim();
  if (x.dim() != n)
    throw DimensionMismatch(n, x.dim());
  if (problem.dimension() != n)
    throw DimensionMismatch(problem.dimension(), n);
  for (const auto& [point, weight] : dominating)
  {
    if (!problem.feasible(point))
      throw FeasibilityViolation("dominating support point " + to_string(point) + " is infeasible");
  }
  RVector current = sigma(dominating);
  for (std::size_t k = 0; k < n; ++k)
  {
    if (sgn(x[k]) < 0)
      throw DominanceViolation("target component " + std::to_string(k + 1) + " is negative");
    if (current[k] < x[k])
      throw DominanceViolation("barycenter " + to_string(current) + " does not dominate " + to_string(x));
  }

  Reduction reduction{dominating, 0, {}, {}};
  ConvexCombination& lambda = reduction.result;
  for (std::size_t k = 0; k < n; ++k)
  {
    while (current[k] > x[k])
    {
      Rational excess = current[k] - x[k];

      const BinaryPoint* chosen = nullptr;
      const Rational* chosenWeight = nullptr;
      for (const auto& [point, weight] : lambda)
      {
        if (point.bits()[k] && (chosen == nullptr || weight > *chosenWeight))
        {
          chosen = &point;
          chosenWeight = &weight;
        }
      }
      if (chosen == nullptr)
        throw DominanceViolation("no support point has component " + std::to_string(k + 1) +
                                 " set while the barycenter exceeds the target");

      BinaryPoint from = *chosen;
      BinaryPoint to = from.withBit(k, false);
      if (!problem.feasible(to))
        throw FeasibilityViolation("weakened point " + to_string(to) + " is infeasible; the set is not packing");

      bool split = *chosenWeight >= excess;
      Rational amount = split ? excess : *chosenWeight;
      lambda.transfer(from, to, amount);
      current[k] -= amount;
      reduction.trace.push_back({k, std::move(from), std::move(to), std::move(amount), split});
      ++reduction.iterations;
    }
    reduction.supportAfterPass.push_back(lambda.size());
  }
  return reduction;
}

ExactRun decompose_exact(const PackingProblem& problem, const RVector& xstar, const Rational& epsilon,
    const ExactOptions& options)
{
  return decompose_exact(problem, problem.verifier(), xstar, epsilon, options);
}

ExactRun decompose_exact(const PackingProblem& problem, const GapVerifier& verifier, const RVector& xstar,
    const Rational& epsilon, const ExactOptions& options)
{
  const std::size_t n = problem.dimension();
  if (xstar.dim() != n)
    throw DimensionMismatch(n, xstar.dim());
  if (verifier.dimension() != n)
    throw DimensionMismatch(n, verifier.dimension());
  if (sgn(epsilon) <= 0)
    throw std::invalid_argument("epsilon must be positive");
  for (std::size_t k = 0; k < n; ++k)
  {
    if (!problem.feasible(BinaryPoint::unit(n, k)))
      throw IneligibleInstance("unit point e^" + std::to_string(k + 1) +
                               " is infeasible; every unit vector must be feasible to decompose");
  }

  const Rational root(static_cast<unsigned long>(ceil_sqrt(n)));
  Rational phaseEpsilon = options.mode == ExactMode::overall ? epsilon / root : epsilon;
  Rational slack = options.mode == ExactMode::overall ? epsilon : slack_for(n, epsilon);

  const Rational& alpha = verifier.alpha();
  RVector target = xstar / alpha;
  RVector scaledTarget = xstar / (alpha * (1 + slack));

  ExtendedVerifier extended(verifier, problem.feasibility());
  EpsilonRun epsilonRun = decompose_epsilon(target, extended, phaseEpsilon, options.epsilon);
  ConvexCombination dominating = build_dominating(epsilonRun.result, target, slack);
  Reduction reduction = reduce_to_exact(dominating, scaledTarget, problem);

  return ExactRun{std::move(slack), std::move(phaseEpsilon), std::move(target), std::move(scaledTarget),
      std::move(epsilonRun), std::move(dominating), std::move(reduction)};
}

} // namespace convdec
