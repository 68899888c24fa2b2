#include "convdec/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "convdec/errors.hpp"

namespace convdec {

namespace {

void requireSameDim(std::size_t expected, std::size_t actual)
{
  if (expected != actual)
    throw DimensionMismatch(expected, actual);
}

void requireIndex(std::size_t k, std::size_t dim)
{
  if (k >= dim)
    throw std::out_of_range("index " + std::to_string(k) + " out of range for dimension " + std::to_string(dim));
}

} // namespace

RVector::RVector(std::size_t dim) : _components(dim) {}

RVector::RVector(std::vector<Rational> components) : _components(std::move(components)) {}

RVector::RVector(std::initializer_list<Rational> components) : _components(components) {}

const Rational& RVector::operator[](std::size_t k) const
{
  requireIndex(k, dim());
  return _components[k];
}

Rational& RVector::operator[](std::size_t k)
{
  requireIndex(k, dim());
  return _components[k];
}

bool RVector::isZero() const
{
  return std::all_of(_components.begin(), _components.end(), [](const Rational& c) { return sgn(c) == 0; });
}

RVector operator+(const RVector& a, const RVector& b)
{
  requireSameDim(a.dim(), b.dim());
  RVector result(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    result[k] = a[k] + b[k];
  return result;
}

RVector operator-(const RVector& a, const RVector& b)
{
  requireSameDim(a.dim(), b.dim());
  RVector result(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    result[k] = a[k] - b[k];
  return result;
}

RVector operator*(const Rational& scale, const RVector& v)
{
  RVector result(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k)
    result[k] = scale * v[k];
  return result;
}

RVector operator/(const RVector& v, const Rational& divisor)
{
  if (sgn(divisor) == 0)
    throw std::domain_error("division of vector by zero");
  RVector result(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k)
    result[k] = v[k] / divisor;
  return result;
}

Rational dot(const RVector& a, const RVector& b)
{
  requireSameDim(a.dim(), b.dim());
  Rational sum = 0;
  for (std::size_t k = 0; k < a.dim(); ++k)
    sum += a[k] * b[k];
  return sum;
}

bool dominates(const RVector& a, const RVector& b)
{
  requireSameDim(a.dim(), b.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
  {
    if (a[k] < b[k])
      return false;
  }
  return true;
}

Rational squared_l2(const RVector& v)
{
  Rational sum = 0;
  for (const Rational& c : v.components())
    sum += c * c;
  return sum;
}

Rational l1_distance(const RVector& a, const RVector& b)
{
  requireSameDim(a.dim(), b.dim());
  Rational sum = 0;
  for (std::size_t k = 0; k < a.dim(); ++k)
    sum += abs(a[k] - b[k]);
  return sum;
}

RVector parse_rvector(std::string_view text)
{
  std::vector<Rational> components;
  while (true)
  {
    auto comma = text.find(',');
    components.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  return RVector(std::move(components));
}

std::string to_string(const RVector& v)
{
  std::string out = "(";
  for (std::size_t k = 0; k < v.dim(); ++k)
  {
    if (k > 0)
      out += ", ";
    out += to_string(v[k]);
  }
  return out + ")";
}

BinaryPoint::BinaryPoint(std::vector<std::uint8_t> bits) : _bits(std::move(bits))
{
  for (auto b : _bits)
  {
    if (b > 1)
      throw std::invalid_argument("binary point component must be 0 or 1");
  }
}

BinaryPoint::BinaryPoint(std::initializer_list<int> bits)
{
  _bits.reserve(bits.size());
  for (int b : bits)
  {
    if (b != 0 && b != 1)
      throw std::invalid_argument("binary point component must be 0 or 1");
    _bits.push_back(static_cast<std::uint8_t>(b));
  }
}

BinaryPoint BinaryPoint::origin(std::size_t dim)
{
  return BinaryPoint(std::vector<std::uint8_t>(dim, 0));
}

BinaryPoint BinaryPoint::unit(std::size_t dim, std::size_t k)
{
  requireIndex(k, dim);
  std::vector<std::uint8_t> bits(dim, 0);
  bits[k] = 1;
  return BinaryPoint(std::move(bits));
}

bool BinaryPoint::operator[](std::size_t k) const
{
  requireIndex(k, dim());
  return _bits[k] != 0;
}

std::size_t BinaryPoint::count() const
{
  return static_cast<std::size_t>(std::count(_bits.begin(), _bits.end(), 1));
}

BinaryPoint BinaryPoint::withBit(std::size_t k, bool value) const
{
  requireIndex(k, dim());
  BinaryPoint result = *this;
  result._bits[k] = value ? 1 : 0;
  return result;
}

bool BinaryPoint::isBelow(const BinaryPoint& other) const
{
  requireSameDim(dim(), other.dim());
  for (std::size_t k = 0; k < dim(); ++k)
  {
    if (_bits[k] > other._bits[k])
      return false;
  }
  return true;
}

RVector BinaryPoint::toRVector() const
{
  RVector result(dim());
  for (std::size_t k = 0; k < dim(); ++k)
    result[k] = _bits[k];
  return result;
}

Rational dot(const RVector& objective, const BinaryPoint& point)
{
  requireSameDim(objective.dim(), point.dim());
  Rational sum = 0;
  for (std::size_t k = 0; k < point.dim(); ++k)
  {
    if (point.bits()[k])
      sum += objective[k];
  }
  return sum;
}

std::string to_string(const BinaryPoint& p)
{
  std::string out = "(";
  for (std::size_t k = 0; k < p.dim(); ++k)
  {
    if (k > 0)
      out += ",";
    out += p[k] ? '1' : '0';
  }
  return out + ")";
}

ConvexCombination::ConvexCombination(std::size_t dim, Support weights) : _dim(dim)
{
  Rational total = 0;
  for (auto& [point, weight] : weights)
  {
    if (point.dim() != dim)
      throw InvalidCombination("support point " + to_string(point) + " has dimension " +
                               std::to_string(point.dim()) + ", expected " + std::to_string(dim));
    if (sgn(weight) < 0)
      throw InvalidCombination("negative weight " + to_string(weight) + " on " + to_string(point));
    total += weight;
    if (sgn(weight) > 0)
      _support.emplace_hint(_support.end(), point, std::move(weight));
  }
  if (_support.empty())
    throw InvalidCombination("convex combination has empty support");
  if (total != 1)
    throw InvalidCombination("weights sum to " + to_string(total) + ", not 1");
}

Rational ConvexCombination::weight(const BinaryPoint& p) const
{
  auto it = _support.find(p);
  return it == _support.end() ? Rational(0) : it->second;
}

void ConvexCombination::transfer(const BinaryPoint& from, const BinaryPoint& to, const Rational& amount)
{
  requireSameDim(_dim, to.dim());
  auto source = _support.find(from);
  if (source == _support.end())
    throw InvalidCombination("transfer source " + to_string(from) + " is not in the support");
  if (sgn(amount) <= 0 || amount > source->second)
    throw InvalidCombination("transfer amount " + to_string(amount) + " outside (0, " +
                             to_string(source->second) + "]");
  if (from == to)
    return;
  source->second -= amount;
  if (sgn(source->second) == 0)
    _support.erase(source);
  _support[to] += amount;
}

RVector sigma(const ConvexCombination& lambda)
{
  RVector result(lambda.dim());
  for (const auto& [point, weight] : lambda)
  {
    for (std::size_t k = 0; k < point.dim(); ++k)
    {
      if (point.bits()[k])
        result[k] += weight;
    }
  }
  return result;
}

ConvexCombination tau(const BinaryPoint& x)
{
  return ConvexCombination(x.dim(), {{x, Rational(1)}});
}

ConvexCombination mix(const ConvexCombination& a, const Rational& wa, const ConvexCombination& b,
    const Rational& wb)
{
  requireSameDim(a.dim(), b.dim());
  if (sgn(wa) < 0 || sgn(wb) < 0 || wa + wb != 1)
    throw InvalidCombination("mixing weights " + to_string(wa) + ", " + to_string(wb) +
                             " are not a convex pair");
  ConvexCombination::Support merged;
  if (sgn(wa) > 0)
  {
    for (const auto& [point, weight] : a)
      merged[point] += wa * weight;
  }
  if (sgn(wb) > 0)
  {
    for (const auto& [point, weight] : b)
      merged[point] += wb * weight;
  }
  return ConvexCombination(a.dim(), std::move(merged));
}

} // namespace convdec
