#pragma once

#include <cstdint>
#include <vector>

#include <convdec/geometry.hpp>

namespace convdec::app {

/// Independent draws from lambda read as a categorical distribution.
/// Each draw takes one 64-bit output k of a mt19937_64 seeded with seed and
/// returns the first support point (lexicographic order) whose cumulative
/// weight exceeds k / 2^64, compared exactly.
std::vector<BinaryPoint> sample(const ConvexCombination& lambda, std::size_t count, std::uint64_t seed);

} // namespace convdec::app
