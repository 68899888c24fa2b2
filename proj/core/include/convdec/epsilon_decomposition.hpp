#pragma once

#include <vector>

#include "convdec/errors.hpp"
#include "convdec/geometry.hpp"
#include "convdec/verifier.hpp"

namespace convdec {

/// Raised when a sampled point fails mu . x >= mu . target, which no
/// verifier honouring its gap can produce. Carries the objective as a
/// certificate.
class VerifierGapViolation : public Error
{
public:
  VerifierGapViolation(RVector objective, BinaryPoint sampled, const std::string& reason);

  const RVector& objective() const { return _objective; }
  const BinaryPoint& sampled() const { return _sampled; }

private:
  RVector _objective;
  BinaryPoint _sampled;
};

/// How the mixing weight of each step is chosen.
enum class StepRule
{
  /// The exact minimizer over the segment.
  exact,
  /// The first continued-fraction convergent of the exact minimizer whose
  /// residual stays within 1/64 of the gap between the optimal residual and
  /// the per-step convergence bound r*n/(r+n). Keeps denominators growing
  /// linearly instead of geometrically.
  snapped,
};

struct EpsilonOptions
{
  StepRule stepRule = StepRule::snapped;
};

struct EpsilonStep
{
  /// Squared residual |target - sigma|^2 before the step.
  Rational residual;
  BinaryPoint sampled;
  /// Weight kept on the previous combination.
  Rational delta;
};

struct EpsilonRun
{
  RVector target;
  Rational epsilon;
  std::size_t iterations = 0;
  std::vector<EpsilonStep> trace;
  Rational finalResidual;
  ConvexCombination result;
};

/// Minimizer over delta in [0,1] of |target - (delta*current + (1-delta)*sampled)|^2,
/// clamped. Throws DegenerateSegment when current equals sampled.
Rational project_delta(const RVector& current, const BinaryPoint& sampled, const RVector& target);

/// Squared distance from target to delta*current + (1-delta)*sampled.
Rational segment_residual(const RVector& current, const BinaryPoint& sampled, const RVector& target,
    const Rational& delta);

/// Continued-fraction convergents of a nonnegative rational, ending with the
/// value itself.
std::vector<Rational> convergents(const Rational& value);

/// ceil(n / epsilon^2) - 1.
Integer iteration_bound(std::size_t n, const Rational& epsilon);

/// Builds a combination whose barycenter lies within L2 distance epsilon of
/// target, starting from the origin and querying the verifier on the
/// residual direction each step. target must lie in [0,1]^n.
EpsilonRun decompose_epsilon(const RVector& target, const ExtendedVerifier& verifier, const Rational& epsilon,
    const EpsilonOptions& options = {});

} // namespace convdec
