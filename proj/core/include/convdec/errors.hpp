#pragma once

#include <stdexcept>
#include <string>

namespace convdec {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(actual))
  {
  }
};

class ParseError : public Error
{
public:
  using Error::Error;
};

class InvalidCombination : public Error
{
public:
  using Error::Error;
};

// The oracle produced a point outside the feasible set.
class FeasibilityViolation : public Error
{
public:
  using Error::Error;
};

// Segment projection called with coincident endpoints.
class DegenerateSegment : public Error
{
public:
  using Error::Error;
};

class SlackTooSmall : public Error
{
public:
  using Error::Error;
};

class DominanceViolation : public Error
{
public:
  using Error::Error;
};

// Some unit vector is infeasible, so the instance cannot be decomposed.
class IneligibleInstance : public Error
{
public:
  using Error::Error;
};

class EnumerationLimitExceeded : public Error
{
public:
  using Error::Error;
};

} // namespace convdec
