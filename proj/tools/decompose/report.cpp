#include "decompose/report.hpp"

#include <convdec/errors.hpp>

namespace convdec::app {

using nlohmann::json;

namespace {

json vectorJson(const RVector& v)
{
  json out = json::array();
  for (const auto& c : v.components())
    out.push_back(to_string(c));
  return out;
}

json pointJson(const BinaryPoint& p)
{
  json out = json::array();
  for (auto bit : p.bits())
    out.push_back(static_cast<int>(bit));
  return out;
}

const json& field(const json& doc, const char* name)
{
  auto it = doc.find(name);
  if (it == doc.end())
    throw ParseError(std::string("report is missing field '") + name + "'");
  return *it;
}

Rational rationalOf(const json& value)
{
  if (!value.is_string())
    throw ParseError("expected a rational string, got " + value.dump());
  return parse_rational(value.get<std::string>());
}

RVector vectorOf(const json& value)
{
  if (!value.is_array())
    throw ParseError("expected an array of rationals");
  std::vector<Rational> components;
  for (const auto& c : value)
    components.push_back(rationalOf(c));
  return RVector(std::move(components));
}

BinaryPoint pointOf(const json& value)
{
  if (!value.is_array())
    throw ParseError("expected an array of bits");
  std::vector<std::uint8_t> bits;
  for (const auto& b : value)
  {
    if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
      throw ParseError("point components must be 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
  }
  return BinaryPoint(std::move(bits));
}

template <typename T>
std::optional<T> optionalOf(const json& doc, const char* name)
{
  auto it = doc.find(name);
  if (it == doc.end() || it->is_null())
    return std::nullopt;
  return it->get<T>();
}

} // namespace

json to_json(const DecompositionReport& report)
{
  json doc;
  doc["problem"] = report.problem;
  doc["mode"] = report.mode;
  doc["alpha"] = to_string(report.alpha);
  doc["epsilon"] = to_string(report.epsilon);
  doc["s"] = report.slack ? json(to_string(*report.slack)) : json(nullptr);
  doc["objective"] = report.objective ? vectorJson(*report.objective) : json(nullptr);
  doc["xstar"] = vectorJson(report.xstar);
  doc["target"] = vectorJson(report.target);

  json support = json::array();
  for (const auto& entry : report.support)
    support.push_back({{"point", pointJson(entry.point)}, {"weight", to_string(entry.weight)}});
  doc["support"] = std::move(support);

  const ReportStats& s = report.stats;
  json stats;
  stats["epsilon_iterations"] = s.epsilonIterations;
  stats["epsilon_iteration_bound"] = s.epsilonIterationBound;
  stats["final_squared_residual"] = to_string(s.finalResidual);
  stats["psi_epsilon"] = s.psiEpsilon;
  stats["exact_iterations"] = s.exactIterations ? json(*s.exactIterations) : json(nullptr);
  stats["exact_iteration_bound"] = s.exactIterationBound ? json(*s.exactIterationBound) : json(nullptr);
  stats["psi_dominating"] = s.psiDominating ? json(*s.psiDominating) : json(nullptr);
  stats["psi_exact"] = s.psiExact ? json(*s.psiExact) : json(nullptr);
  stats["wall_time_ms"] = s.wallTimeMs;
  doc["stats"] = std::move(stats);

  doc["verification"] = {{"performed", report.verification.performed},
      {"passed", report.verification.passed()},
      {"failures", report.verification.failures}};

  json samples = json::array();
  for (const auto& p : report.samples)
    samples.push_back(pointJson(p));
  doc["samples"] = std::move(samples);
  return doc;
}

DecompositionReport report_from_json(const json& doc)
{
  try
  {
    DecompositionReport report;
    report.problem = field(doc, "problem").get<std::string>();
    report.mode = field(doc, "mode").get<std::string>();
    report.alpha = rationalOf(field(doc, "alpha"));
    report.epsilon = rationalOf(field(doc, "epsilon"));
    if (const json& s = field(doc, "s"); !s.is_null())
      report.slack = rationalOf(s);
    if (const json& mu = field(doc, "objective"); !mu.is_null())
      report.objective = vectorOf(mu);
    report.xstar = vectorOf(field(doc, "xstar"));
    report.target = vectorOf(field(doc, "target"));
    for (const auto& entry : field(doc, "support"))
      report.support.push_back({pointOf(field(entry, "point")), rationalOf(field(entry, "weight"))});

    const json& stats = field(doc, "stats");
    ReportStats& s = report.stats;
    s.epsilonIterations = field(stats, "epsilon_iterations").get<std::size_t>();
    s.epsilonIterationBound = field(stats, "epsilon_iteration_bound").get<std::string>();
    s.finalResidual = rationalOf(field(stats, "final_squared_residual"));
    s.psiEpsilon = field(stats, "psi_epsilon").get<std::size_t>();
    s.exactIterations = optionalOf<std::size_t>(stats, "exact_iterations");
    s.exactIterationBound = optionalOf<std::size_t>(stats, "exact_iteration_bound");
    s.psiDominating = optionalOf<std::size_t>(stats, "psi_dominating");
    s.psiExact = optionalOf<std::size_t>(stats, "psi_exact");
    s.wallTimeMs = field(stats, "wall_time_ms").get<double>();

    const json& verification = field(doc, "verification");
    report.verification.performed = field(verification, "performed").get<bool>();
    report.verification.failures = field(verification, "failures").get<std::vector<std::string>>();

    for (const auto& p : field(doc, "samples"))
      report.samples.push_back(pointOf(p));
    return report;
  }
  catch (const json::exception& e)
  {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const DecompositionReport& report)
{
  return to_json(report).dump(2);
}

DecompositionReport parse_report(std::string_view text)
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error& e)
  {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
  return report_from_json(doc);
}

} // namespace convdec::app
