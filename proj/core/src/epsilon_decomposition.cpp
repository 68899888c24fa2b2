#include "convdec/epsilon_decomposition.hpp"

namespace convdec {

VerifierGapViolation::VerifierGapViolation(RVector objective, BinaryPoint sampled, const std::string& reason)
    : Error("verifier gap violation: " + reason + " (objective " + to_string(objective) + ", sampled " +
            to_string(sampled) + ")"),
      _objective(std::move(objective)), _sampled(std::move(sampled))
{
}

Rational project_delta(const RVector& current, const BinaryPoint& sampled, const RVector& target)
{
  if (current.dim() != sampled.dim())
    throw DimensionMismatch(current.dim(), sampled.dim());
  if (target.dim() != sampled.dim())
    throw DimensionMismatch(sampled.dim(), target.dim());

  RVector corner = sampled.toRVector();
  RVector direction = current - corner;
  Rational length = squared_l2(direction);
  if (sgn(length) == 0)
    throw DegenerateSegment("segment endpoints coincide at " + to_string(sampled));

  Rational delta = dot(target - corner, direction) / length;
  if (sgn(delta) < 0)
    return 0;
  if (delta > 1)
    return 1;
  return delta;
}

Rational segment_residual(const RVector& current, const BinaryPoint& sampled, const RVector& target,
    const Rational& delta)
{
  Rational keep = 1 - delta;
  Rational sum = 0;
  for (std::size_t k = 0; k < target.dim(); ++k)
  {
    Rational point = delta * current[k];
    if (sampled[k])
      point += keep;
    Rational diff = target[k] - point;
    sum += diff * diff;
  }
  return sum;
}

std::vector<Rational> convergents(const Rational& value)
{
  std::vector<Rational> result;
  Integer numerator = value.get_num();
  Integer denominator = value.get_den();
  Integer h = 1, hPrev = 0, k = 0, kPrev = 1;
  Integer quotient, remainder;
  while (denominator != 0)
  {
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    Integer hNext = quotient * h + hPrev;
    Integer kNext = quotient * k + kPrev;
    hPrev = std::move(h);
    kPrev = std::move(k);
    h = std::move(hNext);
    k = std::move(kNext);
    result.push_back(make_rational(h, k));
    numerator = std::move(denominator);
    denominator = std::move(remainder);
  }
  return result;
}

Integer iteration_bound(std::size_t n, const Rational& epsilon)
{
  if (sgn(epsilon) <= 0)
    throw std::invalid_argument("epsilon must be positive");
  return ceil(Rational(static_cast<unsigned long>(n)) / (epsilon * epsilon)) - 1;
}

namespace {

Rational chooseDelta(const RVector& current, const BinaryPoint& sampled, const RVector& target,
    const Rational& residual, std::size_t n, StepRule rule)
{
  Rational exact = project_delta(current, sampled, target);
  if (rule == StepRule::exact)
    return exact;

  Rational optimal = segment_residual(current, sampled, target, exact);
  Rational dimension(static_cast<unsigned long>(n));
  Rational stepBound = residual * dimension / (residual + dimension);
  if (optimal >= stepBound)
    return exact;
  Rational allowed = optimal + (stepBound - optimal) / 64;
  for (const Rational& candidate : convergents(exact))
  {
    if (segment_residual(current, sampled, target, candidate) <= allowed)
      return candidate;
  }
  return exact;
}

} // namespace

EpsilonRun decompose_epsilon(const RVector& target, const ExtendedVerifier& verifier, const Rational& epsilon,
    const EpsilonOptions& options)
{
  const std::size_t n = verifier.dimension();
  if (target.dim() != n)
    throw DimensionMismatch(n, target.dim());
  if (sgn(epsilon) <= 0)
    throw std::invalid_argument("epsilon must be positive");
  for (const Rational& c : target.components())
  {
    if (sgn(c) < 0 || c > 1)
      throw std::invalid_argument("target " + to_string(target) + " is not inside the unit cube");
  }

  const Rational threshold = epsilon * epsilon;
  const Integer bound = iteration_bound(n, epsilon);

  EpsilonRun run{target, epsilon, 0, {}, 0, tau(BinaryPoint::origin(n))};
  RVector current(n);
  RVector mu = target - current;
  Rational residual = squared_l2(mu);

  while (residual > threshold)
  {
    if (Integer(static_cast<unsigned long>(run.iterations)) >= bound)
      throw std::logic_error("iteration bound exceeded despite a consistent verifier");

    BinaryPoint sampled = verifier.query(mu);
    if (dot(mu, sampled) < dot(mu, target))
      throw VerifierGapViolation(mu, sampled, "sampled point is below the target along the residual");

    Rational delta = chooseDelta(current, sampled, target, residual, n, options.stepRule);
    Rational keep = 1 - delta;
    RVector next(n);
    for (std::size_t k = 0; k < n; ++k)
    {
      next[k] = delta * current[k];
      if (sampled[k])
        next[k] += keep;
    }
    RVector nextMu = target - next;
    Rational nextResidual = squared_l2(nextMu);
    if (nextResidual >= residual)
      throw VerifierGapViolation(mu, sampled, "step made no progress");

    run.trace.push_back({residual, sampled, delta});
    run.result = mix(run.result, delta, tau(sampled), keep);
    current = std::move(next);
    mu = std::move(nextMu);
    residual = std::move(nextResidual);
    ++run.iterations;
  }

  run.finalResidual = residual;
  return run;
}

} // namespace convdec
