#include "convdec/verifier.hpp"

#include "convdec/errors.hpp"

namespace convdec {

RVector clip_negative(const RVector& mu)
{
  RVector result(mu.dim());
  for (std::size_t k = 0; k < mu.dim(); ++k)
    result[k] = sgn(mu[k]) < 0 ? Rational(0) : mu[k];
  return result;
}

ExtendedVerifier::ExtendedVerifier(const GapVerifier& inner, FeasibilityPredicate feasible)
    : _inner(inner), _feasible(std::move(feasible))
{
}

BinaryPoint ExtendedVerifier::query(const RVector& mu) const
{
  if (mu.dim() != dimension())
    throw DimensionMismatch(dimension(), mu.dim());

  BinaryPoint answer = _inner.query(clip_negative(mu));
  if (answer.dim() != dimension())
    throw FeasibilityViolation("verifier returned a point of dimension " + std::to_string(answer.dim()) +
                               ", expected " + std::to_string(dimension()));
  if (!_feasible(answer))
    throw FeasibilityViolation("verifier returned infeasible point " + to_string(answer) + " for objective " +
                               to_string(mu));

  for (std::size_t k = 0; k < mu.dim(); ++k)
  {
    if (sgn(mu[k]) < 0 && answer[k])
      answer = answer.withBit(k, false);
  }
  return answer;
}

} // namespace convdec
