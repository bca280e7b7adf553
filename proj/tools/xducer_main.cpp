#include <iostream>

#include <CLI11.hpp>

#include "xducer/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"xducer - piezo-optomechanical microwave-to-optical transducer "
               "analysis and matching-network design"};
  app.require_subcommand(1);

  xducer::io::AnalyzeOptions analyze;
  auto* cmd_analyze = app.add_subcommand(
      "analyze", "Evaluate the figures of merit of a scenario file");
  cmd_analyze->add_option("scenario", analyze.scenario_path, "scenario (.scn) file")
      ->required();
  std::string direction = "forward";
  cmd_analyze->add_option("--direction", direction, "forward | reverse")
      ->check(CLI::IsMember({"forward", "reverse"}));
  cmd_analyze->add_flag("--json", analyze.json, "machine-readable output");

  xducer::io::MatchOptions match;
  auto* cmd_match = app.add_subcommand(
      "match", "Synthesize a matching network for a device scenario");
  cmd_match->add_option("scenario", match.scenario_path, "scenario (.scn) file")
      ->required();
  cmd_match->add_option("--mode", match.mode, "max-eta | min-noise")
      ->required()
      ->check(CLI::IsMember({"max-eta", "min-noise"}));
  cmd_match->add_option("--emit", match.emit_path, "write the designed scenario here");
  cmd_match->add_flag("--json", match.json, "machine-readable output");

  xducer::io::SweepOptions sweep;
  auto* cmd_sweep =
      app.add_subcommand("sweep", "Sample eta, N, Z and S11 over a frequency grid");
  cmd_sweep->add_option("scenario", sweep.scenario_path, "scenario (.scn) file")
      ->required();
  cmd_sweep->add_option("--from-hz", sweep.from_hz, "grid start, Hz")->required();
  cmd_sweep->add_option("--to-hz", sweep.to_hz, "grid end, Hz")->required();
  cmd_sweep->add_option("--points", sweep.points, "number of samples")->required();
  cmd_sweep->add_option("--out", sweep.out_path, "CSV output file (default: stdout)");

  xducer::io::TablesOptions tables;
  auto* cmd_tables =
      app.add_subcommand("tables", "Evaluate the bundled device tables");
  cmd_tables->add_option("--which", tables.which, "table number")
      ->required()
      ->check(CLI::IsMember({1, 2, 3, 4}));
  cmd_tables->add_flag("--check", tables.check,
                       "compare against recorded values; exit 2 on any breach");

  CLI11_PARSE(app, argc, argv);

  if (cmd_analyze->parsed()) {
    analyze.reverse = direction == "reverse";
    return xducer::io::run_analyze(analyze, std::cout, std::cerr);
  }
  if (cmd_match->parsed()) return xducer::io::run_match(match, std::cout, std::cerr);
  if (cmd_sweep->parsed()) return xducer::io::run_sweep(sweep, std::cout, std::cerr);
  if (cmd_tables->parsed()) return xducer::io::run_tables(tables, std::cout, std::cerr);
  return 1;
}
