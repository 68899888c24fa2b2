#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "convdec/rational.hpp"

namespace convdec {

/// Dense vector of exact rationals. Every access is bounds-checked.
class RVector
{
public:
  RVector() = default;
  explicit RVector(std::size_t dim);
  explicit RVector(std::vector<Rational> components);
  RVector(std::initializer_list<Rational> components);

  std::size_t dim() const { return _components.size(); }

  const Rational& operator[](std::size_t k) const;
  Rational& operator[](std::size_t k);

  const std::vector<Rational>& components() const { return _components; }

  bool isZero() const;

  friend bool operator==(const RVector&, const RVector&) = default;

private:
  std::vector<Rational> _components;
};

RVector operator+(const RVector& a, const RVector& b);
RVector operator-(const RVector& a, const RVector& b);
RVector operator*(const Rational& scale, const RVector& v);
RVector operator/(const RVector& v, const Rational& divisor);

Rational dot(const RVector& a, const RVector& b);

/// True iff a_k >= b_k for every k.
bool dominates(const RVector& a, const RVector& b);

/// Exact sum of squared components.
Rational squared_l2(const RVector& v);

/// Exact sum of |a_k - b_k|.
Rational l1_distance(const RVector& a, const RVector& b);

/// Comma separated rationals, e.g. "3, 1/2, -4".
RVector parse_rvector(std::string_view text);
std::string to_string(const RVector& v);

/// A 0/1 vector; the integer points of a polytope inside the unit cube.
/// Ordered lexicographically with index 0 most significant.
class BinaryPoint
{
public:
  BinaryPoint() = default;
  explicit BinaryPoint(std::vector<std::uint8_t> bits);
  BinaryPoint(std::initializer_list<int> bits);

  static BinaryPoint origin(std::size_t dim);
  static BinaryPoint unit(std::size_t dim, std::size_t k);

  std::size_t dim() const { return _bits.size(); }
  bool operator[](std::size_t k) const;
  std::size_t count() const;
  bool isOrigin() const { return count() == 0; }

  BinaryPoint withBit(std::size_t k, bool value) const;

  /// True iff every set bit of this point is also set in other.
  bool isBelow(const BinaryPoint& other) const;

  RVector toRVector() const;
  const std::vector<std::uint8_t>& bits() const { return _bits; }

  friend auto operator<=>(const BinaryPoint&, const BinaryPoint&) = default;
  friend bool operator==(const BinaryPoint&, const BinaryPoint&) = default;

private:
  std::vector<std::uint8_t> _bits;
};

Rational dot(const RVector& objective, const BinaryPoint& point);

std::string to_string(const BinaryPoint& p);

/// A finite distribution over binary points: strictly positive weights that
/// sum to exactly one. Iteration order is the lexicographic point order.
class ConvexCombination
{
public:
  using Support = std::map<BinaryPoint, Rational>;

  /// Zero weights are dropped. Throws InvalidCombination on negative
  /// weights, mixed dimensions, empty support or a sum different from one.
  ConvexCombination(std::size_t dim, Support weights);

  std::size_t dim() const { return _dim; }
  const Support& support() const { return _support; }
  std::size_t size() const { return _support.size(); }

  /// Zero when p is not in the support.
  Rational weight(const BinaryPoint& p) const;
  bool contains(const BinaryPoint& p) const { return _support.count(p) != 0; }

  /// Moves amount of weight from one support point onto another point.
  /// Requires 0 < amount <= weight(from); a source emptied by the move
  /// leaves the support.
  void transfer(const BinaryPoint& from, const BinaryPoint& to, const Rational& amount);

  Support::const_iterator begin() const { return _support.begin(); }
  Support::const_iterator end() const { return _support.end(); }

  friend bool operator==(const ConvexCombination&, const ConvexCombination&) = default;

private:
  std::size_t _dim;
  Support _support;
};

/// Barycenter: sum of weight times point.
RVector sigma(const ConvexCombination& lambda);

/// Point mass on x.
ConvexCombination tau(const BinaryPoint& x);

/// Number of strictly positive weights.
inline std::size_t psi(const ConvexCombination& lambda) { return lambda.size(); }

/// wa * a + wb * b. Requires wa, wb >= 0 with wa + wb = 1.
ConvexCombination mix(const ConvexCombination& a, const Rational& wa, const ConvexCombination& b,
    const Rational& wb);

} // namespace convdec
