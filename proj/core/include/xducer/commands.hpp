#pragma once

#include <ostream>
#include <string>

namespace xducer::io {

struct AnalyzeOptions {
  std::string scenario_path;
  bool reverse = false;  // adds optical-to-electrical noise rows
  bool json = false;
};

struct MatchOptions {
  std::string scenario_path;
  std::string mode;  // "max-eta" | "min-noise"
  std::string emit_path;  // optional re-usable scenario output
  bool json = false;
};

struct SweepOptions {
  std::string scenario_path;
  double from_hz = 0;
  double to_hz = 0;
  int points = 0;
  std::string out_path;
};

struct TablesOptions {
  int which = 0;
  bool check = false;
};

// Exit codes: 0 ok, 1 validation/convergence/file diagnostics,
// 2 regression tolerance breach (tables --check).
int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int run_match(const MatchOptions& opts, std::ostream& out, std::ostream& err);
int run_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int run_tables(const TablesOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace xducer::io
