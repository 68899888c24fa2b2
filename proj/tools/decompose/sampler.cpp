#include "decompose/sampler.hpp"

#include <algorithm>
#include <random>

namespace convdec::app {

std::vector<BinaryPoint> sample(const ConvexCombination& lambda, std::size_t count, std::uint64_t seed)
{
  std::vector<const BinaryPoint*> points;
  // k / 2^64 < c  <=>  k < ceil(c * 2^64) for integer k.
  std::vector<Integer> thresholds;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 64);
  Rational cumulative = 0;
  for (const auto& [point, weight] : lambda)
  {
    cumulative += weight;
    points.push_back(&point);
    thresholds.push_back(ceil(cumulative * scale));
  }

  std::mt19937_64 engine(seed);
  std::vector<BinaryPoint> draws;
  draws.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
  {
    Integer k;
    std::uint64_t raw = engine();
    mpz_import(k.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
    auto it = std::upper_bound(thresholds.begin(), thresholds.end(), k);
    draws.push_back(*points[static_cast<std::size_t>(it - thresholds.begin())]);
  }
  return draws;
}

} // namespace convdec::app
