#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string_view>

#include <convdec/epsilon_decomposition.hpp>
#include <convdec/problem.hpp>

#include "decompose/report.hpp"

namespace convdec::app {

enum class Mode
{
  epsilonOnly,
  exact,
  exactOverall,
};

std::string_view mode_name(Mode mode);
/// Accepts "epsilon", "exact" and "exact-overall".
Mode parse_mode(std::string_view text);

/// Which oracle feeds the decomposition. origin always answers the zero
/// point; it exists to exercise the gap-violation path end to end.
enum class VerifierChoice
{
  instance,
  origin,
};

struct RunConfig
{
  std::filesystem::path instance;
  /// Nonnegative objective; xstar is then the relaxed optimum.
  std::optional<RVector> objective;
  /// Relaxed solution supplied directly, bypassing the solver.
  std::optional<RVector> xstar;
  Rational epsilon{1, 10};
  Mode mode = Mode::exact;
  bool verify = false;
  std::size_t sampleCount = 0;
  std::uint64_t seed = 0;
  VerifierChoice verifier = VerifierChoice::instance;
  StepRule stepRule = StepRule::snapped;
};

/// Loads the instance named in config and runs it.
DecompositionReport run(const RunConfig& config);

/// Runs the selected mode on an already loaded problem. Errors propagate as
/// exceptions; a failed verification is recorded in the report instead.
DecompositionReport run(const RunConfig& config, const PackingProblem& problem);

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int internal = 1;
inline constexpr int validation = 2;
inline constexpr int verifierContract = 3;
inline constexpr int io = 4;
} // namespace exit_code

/// Maps an exception thrown by run to the process exit status.
int exit_code_for(const std::exception& error);

} // namespace convdec::app
