#include <fstream>
#include <sstream>

#include <json.hpp>

#include "convdec/errors.hpp"
#include "convdec/problems.hpp"

namespace convdec {

namespace {

using nlohmann::json;

Rational rationalFrom(const json& value, const std::string& field)
{
  if (value.is_string())
    return parse_rational(value.get<std::string>());
  if (value.is_number_integer())
    return Rational(Integer(value.dump(), 10));
  throw ParseError("field '" + field + "' must hold rationals as \"p/q\" strings or integers");
}

const json& require(const json& doc, const char* field)
{
  auto it = doc.find(field);
  if (it == doc.end())
    throw ParseError(std::string("instance is missing field '") + field + "'");
  return *it;
}

std::unique_ptr<PackingProblem> parseKnapsack(const json& doc)
{
  const json& weights = require(doc, "weights");
  if (!weights.is_array() || weights.empty())
    throw ParseError("'weights' must be a nonempty array");
  KnapsackInstance instance;
  for (const auto& w : weights)
    instance.weights.push_back(rationalFrom(w, "weights"));
  instance.capacity = rationalFrom(require(doc, "capacity"), "capacity");
  try
  {
    return std::make_unique<KnapsackProblem>(std::move(instance));
  }
  catch (const std::invalid_argument& e)
  {
    throw ParseError(e.what());
  }
}

std::unique_ptr<PackingProblem> parseExplicit(const json& doc)
{
  const json& dim = require(doc, "n");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    throw ParseError("'n' must be a positive integer");
  const std::size_t n = dim.get<std::size_t>();
  const json& points = require(doc, "points");
  if (!points.is_array())
    throw ParseError("'points' must be an array");

  std::vector<BinaryPoint> generators;
  for (const auto& p : points)
  {
    if (!p.is_array() || p.size() != n)
      throw ParseError("every point must be an array of " + std::to_string(n) + " bits");
    std::vector<std::uint8_t> bits;
    for (const auto& b : p)
    {
      if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
        throw ParseError("point components must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
    }
    generators.emplace_back(std::move(bits));
  }
  return std::make_unique<ExplicitProblem>(ExplicitPolytope(n, generators));
}

} // namespace

std::unique_ptr<PackingProblem> parse_instance(std::string_view text)
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error& e)
  {
    throw ParseError(std::string("malformed instance JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("instance must be a JSON object");

  const json& kind = require(doc, "problem");
  if (kind == "knapsack")
    return parseKnapsack(doc);
  if (kind == "explicit")
    return parseExplicit(doc);
  throw ParseError("unknown problem kind " + kind.dump());
}

std::unique_ptr<PackingProblem> load_instance(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

} // namespace convdec
