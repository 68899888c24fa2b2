#pragma once

#include <string_view>

#include "convdec/geometry.hpp"
#include "convdec/verifier.hpp"

namespace convdec {

/// A downward-closed polytope inside [0,1]^n, seen through its integer
/// points, a gap verifier and an exact solver for the relaxed program.
class PackingProblem
{
public:
  virtual ~PackingProblem() = default;

  virtual std::string_view kind() const = 0;
  virtual std::size_t dimension() const = 0;

  /// Membership of a binary point in the integer hull.
  virtual bool feasible(const BinaryPoint& p) const = 0;

  virtual const GapVerifier& verifier() const = 0;
  const Rational& alpha() const { return verifier().alpha(); }

  /// An optimal point of the relaxed program for a nonnegative objective.
  virtual RVector relaxed_optimum(const RVector& objective) const = 0;

  /// Exact optimal value of the relaxed program for an objective of any sign.
  virtual Rational relaxed_value(const RVector& objective) const = 0;

  FeasibilityPredicate feasibility() const
  {
    return [this](const BinaryPoint& p) { return feasible(p); };
  }
};

} // namespace convdec
