#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xducer/report.hpp"
#include "xducer/scenario_file.hpp"

namespace xducer::io {

// Reference cell from the bundled regression manifest. `value` is the
// published number; `check_value`, when present, is the verified expectation
// the regression compares against instead (the note says why they differ).
struct CellRef {
  double value = 0;
  std::optional<double> check_value;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::string note;
  bool skip = false;

  double expected() const { return check_value.value_or(value); }
};

struct TableRowSpec {
  std::string key;
  std::string label;
  std::string unit;
  bool checked = false;
  double rel_tol = 0.05;
  std::map<std::string, CellRef> refs;  // column key -> reference
};

struct TableColumnSpec {
  std::string key;
  std::string title;
  std::string scenario;                    // bundled scenario file name
  std::map<std::string, double> overrides; // q_i, n_phot_cap, g_0_hz, m_eff_kg
};

struct TableSpec {
  int which = 0;
  std::string title;
  std::string mode;  // analyze | max-eta | min-noise
  std::vector<TableColumnSpec> columns;
  std::vector<TableRowSpec> rows;
};

struct CellOutcome {
  std::string row_key;
  std::string column_key;
  std::optional<double> computed;
  CellRef ref;
  double tolerance = 0;  // absolute tolerance actually applied
  bool pass = true;
};

struct TableRun {
  TableSpec spec;
  std::vector<ReportTable> reports;   // one per column
  std::vector<CellOutcome> checks;    // filled when checking
  bool all_pass = true;
};

TableSpec load_table_spec(int which);

// Evaluate every column of a bundled table (columns are independent).
TableRun run_table(const TableSpec& spec, bool check);

// Human rendering; when `check` ran, appends a PASS/FAIL summary listing
// every breached cell.
void write_table_run(const TableRun& run, std::ostream& out);

}  // namespace xducer::io
