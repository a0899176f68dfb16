#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qpd/errors.hpp"
#include "qpd/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

int cmd_run(const std::string& config_path, const std::optional<std::uint64_t>& seed,
            const std::optional<long>& trials, const std::optional<std::string>& mode,
            const std::optional<std::string>& out, const std::optional<std::string>& format,
            const std::optional<int>& threads) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config file: " << config_path << "\n";
    return kExitConfig;
  }
  qpd::Json j;
  try {
    in >> j;
  } catch (const qpd::Json::exception& e) {
    std::cerr << "error: bad config JSON: " << e.what() << "\n";
    return kExitConfig;
  }
  qpd::ExperimentConfig config = qpd::parse_config(j);
  if (seed) config.seed = *seed;
  if (trials) config.trials = *trials;
  if (mode) config.mode = *mode;
  if (out) config.out = *out;
  if (format) config.format = *format;
  if (threads) config.threads = *threads;
  if (config.mode != "exact" && config.mode != "sample")
    throw qpd::ConfigError("mode must be exact or sample");
  if (config.format != "json" && config.format != "csv")
    throw qpd::ConfigError("format must be json or csv");

  const qpd::Json report = qpd::run(config);
  qpd::emit(report, config.format, config.out);
  return 0;
}

int cmd_plan(const std::string& a, const std::string& b, const std::string& format,
             const std::string& out) {
  qpd::ExperimentConfig config;
  config.protocol = "plan";
  config.plan_a = a;
  config.plan_b = b;
  config.format = format;
  const qpd::Json report = qpd::run(config);
  qpd::emit(report, format, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum process discrimination experiment runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> trials;
  std::optional<std::string> mode, out, format;
  std::optional<int> threads;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment described by a JSON config");
  run_cmd->add_option("--config", config_path, "Config file path")->required();
  run_cmd->add_option("--seed", seed, "Override the config seed");
  run_cmd->add_option("--trials", trials, "Override the trial count");
  run_cmd->add_option("--mode", mode, "Override the mode (exact|sample)");
  run_cmd->add_option("--out", out, "Output path (default stdout)");
  run_cmd->add_option("--format", format, "Output format (json|csv)");
  run_cmd->add_option("--threads", threads, "Worker threads for sampled trials");

  auto* list_cmd = app.add_subcommand("list-protocols", "Print the protocol catalog");

  std::string plan_a = "z", plan_b = "h", plan_format = "json", plan_out;
  auto* plan_cmd = app.add_subcommand("plan", "Minimal parallel uses for a unitary pair");
  plan_cmd->add_option("--a", plan_a, "First unitary: name (i,x,y,z,h) or JSON file")->required();
  plan_cmd->add_option("--b", plan_b, "Second unitary: name (i,x,y,z,h) or JSON file")->required();
  plan_cmd->add_option("--format", plan_format, "Output format (json|csv)");
  plan_cmd->add_option("--out", plan_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(config_path, seed, trials, mode, out, format, threads);
    if (list_cmd->parsed()) {
      qpd::emit(qpd::list_protocols(), "json", "");
      return 0;
    }
    if (plan_cmd->parsed()) return cmd_plan(plan_a, plan_b, plan_format, plan_out);
  } catch (const qpd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qpd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
