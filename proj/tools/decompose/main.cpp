#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <convdec/errors.hpp>

#include "decompose/runner.hpp"

using namespace convdec;

int main(int argc, char** argv)
{
  CLI::App cli{"Exact convex decomposition of a scaled relaxed packing solution into feasible integer points"};

  app::RunConfig config;
  std::string instance;
  std::string objective;
  std::string xstar;
  std::string epsilon = "1/10";
  std::string mode = "exact";
  std::string verifier = "instance";
  std::string out;
  bool exactSteps = false;

  cli.add_option("--instance", instance, "Instance JSON file")->required();
  auto* muOption = cli.add_option("--mu", objective, "Nonnegative objective, comma separated rationals");
  cli.add_option("--xstar", xstar, "Relaxed solution to decompose instead of solving for --mu")->excludes(muOption);
  cli.add_option("--epsilon", epsilon, "Precision of the first phase, as p/q")->capture_default_str();
  cli.add_option("--mode", mode, "epsilon | exact | exact-overall")->capture_default_str();
  cli.add_flag("--verify", config.verify, "Check the decomposition and the verifier contract");
  cli.add_option("--sample", config.sampleCount, "Number of outcomes to draw from the decomposition");
  cli.add_option("--seed", config.seed, "Seed for sampling");
  cli.add_option("--out", out, "Report path (default: stdout)");
  cli.add_option("--verifier", verifier, "instance | origin (diagnostic: always answer the zero point)")
      ->capture_default_str();
  cli.add_flag("--exact-steps", exactSteps, "Use the unrounded segment minimizer in the first phase");

  CLI11_PARSE(cli, argc, argv);

  try
  {
    config.instance = instance;
    config.epsilon = parse_rational(epsilon);
    config.mode = app::parse_mode(mode);
    if (!objective.empty())
      config.objective = parse_rvector(objective);
    if (!xstar.empty())
      config.xstar = parse_rvector(xstar);
    if (verifier == "origin")
      config.verifier = app::VerifierChoice::origin;
    else if (verifier != "instance")
      throw ParseError("unknown verifier '" + verifier + "'");
    config.stepRule = exactSteps ? StepRule::exact : StepRule::snapped;

    app::DecompositionReport report = app::run(config);
    std::string text = app::serialize(report) + "\n";
    if (out.empty())
    {
      std::cout << text;
    }
    else
    {
      std::ofstream file(out);
      if (!(file << text))
        throw ParseError("cannot write report to " + out);
    }

    if (config.verify && !report.verification.passed())
    {
      for (const auto& failure : report.verification.failures)
        std::cerr << "verification failed: " << failure << "\n";
      return app::exit_code::validation;
    }
    return app::exit_code::success;
  }
  catch (const std::exception& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return app::exit_code_for(e);
  }
}
