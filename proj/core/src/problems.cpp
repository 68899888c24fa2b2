#include "convdec/problems.hpp"

#include <algorithm>
#include <numeric>

#include "convdec/errors.hpp"

namespace convdec {

namespace {

void requireDim(std::size_t expected, const RVector& v)
{
  if (v.dim() != expected)
    throw DimensionMismatch(expected, v.dim());
}

// Items with positive objective, best density first, ties by index.
std::vector<std::size_t> densityOrder(const KnapsackInstance& inst, const RVector& mu)
{
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < inst.dimension(); ++k)
  {
    if (sgn(mu[k]) > 0)
      order.push_back(k);
  }
  std::vector<Rational> density(inst.dimension());
  for (auto k : order)
    density[k] = mu[k] / inst.weights[k];
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return density[a] > density[b]; });
  return order;
}

} // namespace

bool KnapsackInstance::eligible() const
{
  return std::all_of(weights.begin(), weights.end(), [this](const Rational& w) { return w <= capacity; });
}

BinaryPoint knapsack_verifier(const KnapsackInstance& inst, const RVector& mu)
{
  requireDim(inst.dimension(), mu);
  if (!inst.eligible())
    throw IneligibleInstance("knapsack verifier needs every weight to fit the capacity");

  std::vector<std::uint8_t> prefix(inst.dimension(), 0);
  Rational prefixValue = 0;
  Rational used = 0;
  for (auto k : densityOrder(inst, mu))
  {
    if (used + inst.weights[k] > inst.capacity)
      break;
    used += inst.weights[k];
    prefixValue += mu[k];
    prefix[k] = 1;
  }

  std::size_t best = inst.dimension();
  for (std::size_t k = 0; k < inst.dimension(); ++k)
  {
    if (sgn(mu[k]) > 0 && (best == inst.dimension() || mu[k] > mu[best]))
      best = k;
  }
  if (best != inst.dimension() && mu[best] > prefixValue)
    return BinaryPoint::unit(inst.dimension(), best);
  return BinaryPoint(std::move(prefix));
}

RVector knapsack_lp(const KnapsackInstance& inst, const RVector& mu)
{
  requireDim(inst.dimension(), mu);
  RVector x(inst.dimension());
  Rational remaining = inst.capacity;
  for (auto k : densityOrder(inst, mu))
  {
    if (inst.weights[k] <= remaining)
    {
      x[k] = 1;
      remaining -= inst.weights[k];
    }
    else
    {
      x[k] = remaining / inst.weights[k];
      break;
    }
  }
  return x;
}

KnapsackProblem::KnapsackProblem(KnapsackInstance instance)
{
  if (instance.weights.empty())
    throw std::invalid_argument("knapsack needs at least one item");
  if (sgn(instance.capacity) <= 0)
    throw std::invalid_argument("knapsack capacity must be positive");
  for (const auto& w : instance.weights)
  {
    if (sgn(w) <= 0)
      throw std::invalid_argument("knapsack weights must be positive");
  }
  _verifier.instance = std::move(instance);
}

bool KnapsackProblem::feasible(const BinaryPoint& p) const
{
  if (p.dim() != dimension())
    return false;
  Rational load = 0;
  for (std::size_t k = 0; k < p.dim(); ++k)
  {
    if (p[k])
      load += instance().weights[k];
  }
  return load <= instance().capacity;
}

RVector KnapsackProblem::relaxed_optimum(const RVector& objective) const
{
  return knapsack_lp(instance(), objective);
}

Rational KnapsackProblem::relaxed_value(const RVector& objective) const
{
  // Negative entries are zero at some optimum of a packing program.
  RVector clipped = clip_negative(objective);
  return dot(clipped, knapsack_lp(instance(), clipped));
}

ExplicitPolytope::ExplicitPolytope(std::size_t dim, const std::vector<BinaryPoint>& generators) : _dim(dim)
{
  if (dim == 0)
    throw std::invalid_argument("explicit polytope needs a positive dimension");
  _points.insert(BinaryPoint::origin(dim));
  std::set<BinaryPoint> listed;
  for (const auto& g : generators)
  {
    if (g.dim() != dim)
      throw std::invalid_argument("point " + to_string(g) + " does not have dimension " + std::to_string(dim));
    listed.insert(g);
  }

  // Depth-first closure: clearing single bits reaches every dominated point.
  std::vector<BinaryPoint> stack(listed.begin(), listed.end());
  while (!stack.empty())
  {
    BinaryPoint p = std::move(stack.back());
    stack.pop_back();
    if (!_points.insert(p).second)
      continue;
    for (std::size_t k = 0; k < dim; ++k)
    {
      if (p[k])
      {
        BinaryPoint lower = p.withBit(k, false);
        if (_points.count(lower) == 0)
          stack.push_back(std::move(lower));
      }
    }
  }

  for (const auto& p : _points)
  {
    if (listed.count(p) == 0)
      ++_addedByClosure;
  }
}

BinaryPoint explicit_verifier(const ExplicitPolytope& poly, const RVector& mu)
{
  requireDim(poly.dimension(), mu);
  const BinaryPoint* best = nullptr;
  Rational bestValue;
  for (const auto& p : poly.points())
  {
    Rational value = dot(mu, p);
    if (best == nullptr || value > bestValue)
    {
      best = &p;
      bestValue = std::move(value);
    }
  }
  return *best;
}

ExplicitProblem::ExplicitProblem(ExplicitPolytope polytope) : _verifier(std::move(polytope)) {}

bool ExplicitProblem::feasible(const BinaryPoint& p) const
{
  return p.dim() == dimension() && polytope().contains(p);
}

RVector ExplicitProblem::relaxed_optimum(const RVector& objective) const
{
  // A linear objective over the hull of finitely many points peaks at one of them.
  return explicit_verifier(polytope(), objective).toRVector();
}

Rational ExplicitProblem::relaxed_value(const RVector& objective) const
{
  return dot(objective, explicit_verifier(polytope(), objective));
}

Rational brute_force_lp_bound(const PackingProblem& problem, const RVector& mu, std::size_t enumerationLimit)
{
  if (problem.dimension() > enumerationLimit)
    throw EnumerationLimitExceeded("dimension " + std::to_string(problem.dimension()) +
                                   " exceeds enumeration limit " + std::to_string(enumerationLimit));
  requireDim(problem.dimension(), mu);
  return problem.relaxed_value(mu);
}

bool is_downward_closed(const PackingProblem& problem, std::size_t enumerationLimit)
{
  const std::size_t n = problem.dimension();
  if (n > enumerationLimit)
    throw EnumerationLimitExceeded("dimension " + std::to_string(n) + " exceeds enumeration limit " +
                                   std::to_string(enumerationLimit));
  if (!problem.feasible(BinaryPoint::origin(n)))
    return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
  {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t k = 0; k < n; ++k)
      bits[k] = (mask >> k) & 1U;
    BinaryPoint p(std::move(bits));
    if (!problem.feasible(p))
      continue;
    for (std::size_t k = 0; k < n; ++k)
    {
      if (p[k] && !problem.feasible(p.withBit(k, false)))
        return false;
    }
  }
  return true;
}

ValidationReport validate_decomposition(const PackingProblem& problem, const WeightedPoints& support,
    const RVector& target)
{
  ValidationReport report;
  const std::size_t n = problem.dimension();
  if (target.dim() != n)
  {
    report.failures.push_back("target has dimension " + std::to_string(target.dim()) + ", expected " +
                              std::to_string(n));
    return report;
  }
  if (support.empty())
    report.failures.push_back("support is empty");

  Rational total = 0;
  RVector barycenter(n);
  for (const auto& [point, weight] : support)
  {
    if (point.dim() != n)
    {
      report.failures.push_back("point " + to_string(point) + " has wrong dimension");
      continue;
    }
    if (sgn(weight) <= 0)
      report.failures.push_back("weight of " + to_string(point) + " is not positive: " + to_string(weight));
    if (!problem.feasible(point))
      report.failures.push_back("point " + to_string(point) + " is infeasible");
    total += weight;
    for (std::size_t k = 0; k < n; ++k)
    {
      if (point[k])
        barycenter[k] += weight;
    }
  }
  if (total != 1)
    report.failures.push_back("weights sum to " + to_string(total) + ", not 1");
  for (std::size_t k = 0; k < n; ++k)
  {
    if (barycenter[k] != target[k])
      report.failures.push_back("component " + std::to_string(k + 1) + ": sigma is " + to_string(barycenter[k]) +
                                ", target is " + to_string(target[k]));
  }
  return report;
}

ValidationReport validate_decomposition(const PackingProblem& problem, const ConvexCombination& lambda,
    const RVector& target)
{
  WeightedPoints support(lambda.begin(), lambda.end());
  return validate_decomposition(problem, support, target);
}

} // namespace convdec
