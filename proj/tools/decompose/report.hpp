#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <convdec/geometry.hpp>

namespace convdec::app {

struct SupportEntry
{
  BinaryPoint point;
  Rational weight;

  friend bool operator==(const SupportEntry&, const SupportEntry&) = default;
};

struct ReportStats
{
  std::size_t epsilonIterations = 0;
  std::string epsilonIterationBound;
  Rational finalResidual;
  std::size_t psiEpsilon = 0;
  std::optional<std::size_t> exactIterations;
  std::optional<std::size_t> exactIterationBound;
  std::optional<std::size_t> psiDominating;
  std::optional<std::size_t> psiExact;
  double wallTimeMs = 0;

  friend bool operator==(const ReportStats&, const ReportStats&) = default;
};

struct VerificationResult
{
  bool performed = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }

  friend bool operator==(const VerificationResult&, const VerificationResult&) = default;
};

/// Everything a run produces. Rationals travel as "p/q" strings.
struct DecompositionReport
{
  std::string problem;
  std::string mode;
  Rational alpha;
  Rational epsilon;
  std::optional<Rational> slack;
  std::optional<RVector> objective;
  RVector xstar;
  /// The point the support decomposes: xstar/(alpha(1+s)) for exact modes,
  /// xstar/alpha for the epsilon-only mode.
  RVector target;
  std::vector<SupportEntry> support;
  ReportStats stats;
  VerificationResult verification;
  std::vector<BinaryPoint> samples;

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

nlohmann::json to_json(const DecompositionReport& report);

/// Throws ParseError on missing or malformed fields.
DecompositionReport report_from_json(const nlohmann::json& doc);

std::string serialize(const DecompositionReport& report);
DecompositionReport parse_report(std::string_view text);

} // namespace convdec::app
