#pragma once

#include <filesystem>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convdec/problem.hpp"

namespace convdec {

/// Single-constraint 0/1 knapsack: sum w_k x_k <= capacity.
struct KnapsackInstance
{
  std::vector<Rational> weights;
  Rational capacity;

  std::size_t dimension() const { return weights.size(); }

  /// Every item fits on its own, i.e. every unit vector is feasible.
  bool eligible() const;
};

/// Better of the density-greedy prefix and the best single item; verifies
/// a gap of 2. Items with zero objective are never taken and density ties
/// go to the lower index. Throws IneligibleInstance if some item does not
/// fit alone.
BinaryPoint knapsack_verifier(const KnapsackInstance& inst, const RVector& mu);

/// Fractional greedy optimum of the relaxation for mu >= 0.
RVector knapsack_lp(const KnapsackInstance& inst, const RVector& mu);

class KnapsackProblem : public PackingProblem
{
public:
  /// Throws std::invalid_argument on empty, nonpositive or malformed data.
  /// Ineligible instances are accepted here; decomposition rejects them.
  explicit KnapsackProblem(KnapsackInstance instance);

  const KnapsackInstance& instance() const { return _verifier.instance; }

  std::string_view kind() const override { return "knapsack"; }
  std::size_t dimension() const override { return instance().dimension(); }
  bool feasible(const BinaryPoint& p) const override;
  const GapVerifier& verifier() const override { return _verifier; }
  RVector relaxed_optimum(const RVector& objective) const override;
  Rational relaxed_value(const RVector& objective) const override;

private:
  struct Verifier : GapVerifier
  {
    KnapsackInstance instance;
    Rational gap = 2;

    std::size_t dimension() const override { return instance.dimension(); }
    const Rational& alpha() const override { return gap; }
    BinaryPoint query(const RVector& objective) const override { return knapsack_verifier(instance, objective); }
  };

  Verifier _verifier;
};

/// An explicitly enumerated set of binary points, closed downward on
/// construction.
class ExplicitPolytope
{
public:
  /// Throws std::invalid_argument if dim is zero or a point has the wrong
  /// dimension.
  ExplicitPolytope(std::size_t dim, const std::vector<BinaryPoint>& generators);

  std::size_t dimension() const { return _dim; }
  const std::set<BinaryPoint>& points() const { return _points; }
  bool contains(const BinaryPoint& p) const { return _points.count(p) != 0; }

  /// Points that were not listed but were added by the closure.
  std::size_t addedByClosure() const { return _addedByClosure; }

private:
  std::size_t _dim;
  std::set<BinaryPoint> _points;
  std::size_t _addedByClosure = 0;
};

/// Exact maximizer of mu . p over the stored points, lowest point on ties.
BinaryPoint explicit_verifier(const ExplicitPolytope& poly, const RVector& mu);

class ExplicitProblem : public PackingProblem
{
public:
  explicit ExplicitProblem(ExplicitPolytope polytope);

  const ExplicitPolytope& polytope() const { return _verifier.polytope; }

  std::string_view kind() const override { return "explicit"; }
  std::size_t dimension() const override { return polytope().dimension(); }
  bool feasible(const BinaryPoint& p) const override;
  const GapVerifier& verifier() const override { return _verifier; }
  RVector relaxed_optimum(const RVector& objective) const override;
  Rational relaxed_value(const RVector& objective) const override;

private:
  struct Verifier : GapVerifier
  {
    explicit Verifier(ExplicitPolytope p) : polytope(std::move(p)) {}

    ExplicitPolytope polytope;
    Rational gap = 1;

    std::size_t dimension() const override { return polytope.dimension(); }
    const Rational& alpha() const override { return gap; }
    BinaryPoint query(const RVector& objective) const override { return explicit_verifier(polytope, objective); }
  };

  Verifier _verifier;
};

inline constexpr std::size_t kDefaultEnumerationLimit = 16;

/// Exact max over the relaxed polytope of mu . x for any sign of mu, used
/// to audit verifier contracts. Throws EnumerationLimitExceeded above the
/// limit.
Rational brute_force_lp_bound(const PackingProblem& problem, const RVector& mu,
    std::size_t enumerationLimit = kDefaultEnumerationLimit);

/// True iff every feasible point's lower neighbours (one bit cleared) are
/// feasible too, checked over all 2^n points.
bool is_downward_closed(const PackingProblem& problem, std::size_t enumerationLimit = kDefaultEnumerationLimit);

struct ValidationReport
{
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

using WeightedPoints = std::vector<std::pair<BinaryPoint, Rational>>;

/// Checks positive weights summing to one, feasibility of every point and
/// sigma == target exactly. Every failure is itemized.
ValidationReport validate_decomposition(const PackingProblem& problem, const WeightedPoints& support,
    const RVector& target);
ValidationReport validate_decomposition(const PackingProblem& problem, const ConvexCombination& lambda,
    const RVector& target);

/// Instance files:
///   {"problem": "knapsack", "weights": ["2","3","4"], "capacity": "5"}
///   {"problem": "explicit", "n": 2, "points": [[1,0],[0,1]]}
/// Rationals may be "p/q" strings or JSON integers. Throws ParseError.
std::unique_ptr<PackingProblem> parse_instance(std::string_view json);
std::unique_ptr<PackingProblem> load_instance(const std::filesystem::path& path);

} // namespace convdec
