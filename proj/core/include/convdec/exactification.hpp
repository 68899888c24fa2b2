#pragma once

#include <vector>

#include "convdec/epsilon_decomposition.hpp"
#include "convdec/problem.hpp"

namespace convdec {

/// True iff every unit vector e^k is feasible. Decomposition requires it.
bool unit_points_feasible(const PackingProblem& problem);

/// Rational slack s >= epsilon * sqrt(n), fixed before decomposition starts.
/// Uses r = ceil(sqrt(n)), so any combination within L2 distance epsilon of
/// the target is within L1 distance s of it.
Rational slack_for(std::size_t n, const Rational& epsilon);

/// Pads lambda with |target_k - sigma_k| on each unit vector and the unused
/// slack on the origin, then scales by 1/(1+slack). The barycenter of the
/// result dominates target/(1+slack). Throws SlackTooSmall when the L1 gap
/// exceeds the slack.
ConvexCombination build_dominating(const ConvexCombination& lambda, const RVector& target, const Rational& slack);

struct ReductionStep
{
  std::size_t dimension;
  BinaryPoint from;
  BinaryPoint to;
  Rational amount;
  /// Partial move of weight; otherwise the whole weight of from moved.
  bool split;
};

struct Reduction
{
  ConvexCombination result;
  std::size_t iterations = 0;
  std::vector<ReductionStep> trace;
  /// Support size after finishing each dimension.
  std::vector<std::size_t> supportAfterPass;
};

/// Weakens support points one coordinate at a time until the barycenter
/// equals x exactly. For dimension k it repeatedly takes the heaviest point
/// with bit k set (lowest point on ties) and moves weight onto the point
/// with bit k cleared.
///
/// Requires sigma(dominating) >= x >= 0 and feasible support points. Throws
/// DominanceViolation if no point with bit k remains while sigma_k > x_k,
/// and FeasibilityViolation if a weakened point is rejected by the problem.
Reduction reduce_to_exact(const ConvexCombination& dominating, const RVector& x, const PackingProblem& problem);

enum class ExactMode
{
  /// Phase one at precision epsilon, slack epsilon * ceil(sqrt(n)).
  standard,
  /// Phase one at precision epsilon / ceil(sqrt(n)), slack epsilon, so the
  /// overall loss factor is (1 + epsilon).
  overall,
};

struct ExactOptions
{
  ExactMode mode = ExactMode::standard;
  EpsilonOptions epsilon;
};

struct ExactRun
{
  Rational slack;
  Rational phaseEpsilon;
  /// xstar / alpha, the phase one target.
  RVector target;
  /// xstar / (alpha * (1 + slack)).
  RVector scaledTarget;
  EpsilonRun epsilonRun;
  ConvexCombination dominating;
  Reduction reduction;

  const ConvexCombination& result() const { return reduction.result; }
};

/// Full pipeline: epsilon phase on xstar/alpha, dominating padding, then the
/// exact reduction onto xstar/(alpha(1+s)). Throws IneligibleInstance when
/// some unit vector is infeasible.
ExactRun decompose_exact(const PackingProblem& problem, const RVector& xstar, const Rational& epsilon,
    const ExactOptions& options = {});

/// Same, querying the given verifier instead of the problem's own.
ExactRun decompose_exact(const PackingProblem& problem, const GapVerifier& verifier, const RVector& xstar,
    const Rational& epsilon, const ExactOptions& options = {});

} // namespace convdec
