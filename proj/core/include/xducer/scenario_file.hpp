#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "xducer/scenario.hpp"

namespace xducer::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parsed scenario plus its run metadata.
struct ScenarioDocument {
  TransducerScenario scenario;
  std::string label;
};

// Sectioned key-value scenario format (.scn). Keys carry explicit unit
// suffixes (_hz, _ohm, _f, _h, _k, _kg, _pct); frequencies are ordinary Hz.
// Unknown keys or sections are hard errors.
ScenarioDocument parse_scenario_text(const std::string& text,
                                     const std::string& origin = "<string>");
ScenarioDocument parse_scenario(const std::filesystem::path& path);

std::string emit_scenario(const ScenarioDocument& doc);
void emit_scenario(const ScenarioDocument& doc, const std::filesystem::path& path);

// Bundled-scenario directory: $XDUCER_SCENARIO_DIR when set, else the
// directory configured at build time.
std::filesystem::path bundled_scenario_dir();
std::filesystem::path bundled_table_dir();
std::filesystem::path resolve_scenario_path(const std::string& name);

}  // namespace xducer::io
