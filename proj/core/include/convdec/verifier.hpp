#pragma once

#include <functional>

#include "convdec/geometry.hpp"

namespace convdec {

/// An approximation algorithm that certifies an integrality gap of alpha:
/// for every nonnegative objective mu,
///   alpha * (mu . query(mu)) >= max over the relaxed polytope of mu . x.
/// Implementations must be stateless so that concurrent queries are safe.
class GapVerifier
{
public:
  virtual ~GapVerifier() = default;

  virtual std::size_t dimension() const = 0;
  virtual const Rational& alpha() const = 0;

  /// objective must be componentwise nonnegative.
  virtual BinaryPoint query(const RVector& objective) const = 0;
};

using FeasibilityPredicate = std::function<bool(const BinaryPoint&)>;

/// Componentwise max(mu_k, 0).
RVector clip_negative(const RVector& mu);

/// Extends a verifier to objectives of arbitrary sign. The inner verifier
/// answers on the clipped objective and every coordinate with a negative
/// objective entry is then zeroed, which stays feasible for packing sets.
/// Every answer is checked against the feasibility predicate.
class ExtendedVerifier
{
public:
  ExtendedVerifier(const GapVerifier& inner, FeasibilityPredicate feasible);

  std::size_t dimension() const { return _inner.dimension(); }
  const Rational& alpha() const { return _inner.alpha(); }

  /// Throws DimensionMismatch on a wrong-sized objective and
  /// FeasibilityViolation when the inner verifier returns an infeasible
  /// or wrongly sized point.
  BinaryPoint query(const RVector& mu) const;

private:
  const GapVerifier& _inner;
  FeasibilityPredicate _feasible;
};

} // namespace convdec
