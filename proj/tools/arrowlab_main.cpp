#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "arrowlab/arrow.hpp"
#include "arrowlab/scenario.hpp"

namespace {

constexpr int kInputError = 3;

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw arrowlab::ScenarioError(path + ": cannot open");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw arrowlab::ScenarioError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw arrowlab::ScenarioError(path + ": cannot write");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-category Ramsey laboratory"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, envelope_path;
  arrowlab::RunOverrides ov;
  std::string mode, variant;
  std::uint64_t budget = 0;
  int jobs = 0, k = 0;
  bool deterministic = false;

  const std::vector<std::string> run_commands = {"arrow", "search", "transport", "laws", "fraisse", "ordering"};
  for (const auto& name : run_commands) {
    auto* sub = app.add_subcommand(name, "Run a " + name + " scenario");
    sub->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    sub->add_option("--mode", mode, "exhaustive | backtracking");
    sub->add_option("--budget", budget, "Coloring or node budget");
    sub->add_option("--jobs", jobs, "Worker cap (0 = all cores)");
    sub->add_flag("--deterministic", deterministic, "Deterministic run");
    sub->add_option("--k", k, "Number of colors");
    sub->add_option("--variant", variant, "hom | subobject");
    sub->add_option("--out", out_path, "Envelope output file (default: stdout)");
  }
  auto* reval = app.add_subcommand("revalidate", "Re-check the certificate of an envelope");
  reval->add_option("envelope", envelope_path, "Envelope JSON file")->required();
  auto* rep = app.add_subcommand("report", "Render an envelope as text");
  rep->add_option("envelope", envelope_path, "Envelope JSON file")->required();
  rep->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  const auto* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    if (command == "revalidate") {
      const auto result = arrowlab::revalidate(read_json(envelope_path));
      std::cout << (result.valid ? "valid: " : "invalid: ") << result.reason << "\n";
      return result.valid ? 0 : 1;
    }
    if (command == "report") {
      write_text(out_path, arrowlab::report(read_json(envelope_path)));
      return 0;
    }

    if (chosen->count("--mode")) ov.mode = mode;
    if (chosen->count("--budget")) ov.budget = budget;
    if (chosen->count("--jobs")) ov.jobs = jobs;
    if (deterministic) ov.deterministic = true;
    if (chosen->count("--k")) ov.k = k;
    if (chosen->count("--variant")) ov.variant = variant;

    auto scenario = read_json(scenario_path);
    if (!scenario.is_object() || !scenario.contains("kind") || !scenario["kind"].is_string()) {
      throw arrowlab::ScenarioError("scenario.kind: missing required field");
    }
    const auto expected = arrowlab::command_for_kind(scenario["kind"].get<std::string>());
    if (expected != command) {
      throw arrowlab::ScenarioError("scenario.kind: '" + scenario["kind"].get<std::string>() +
                                    "' scenarios run under '" + expected + "'");
    }
    if (out_path.empty() && scenario.contains("out") && scenario["out"].is_string()) {
      out_path = scenario["out"].get<std::string>();
    }
    const auto result = arrowlab::run_scenario(scenario, ov);
    write_text(out_path, result.envelope.dump(2) + "\n");
    if (!out_path.empty()) std::cout << arrowlab::report(result.envelope);
    return result.exit_code;
  } catch (const arrowlab::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
