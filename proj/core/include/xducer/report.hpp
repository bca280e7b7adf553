#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xducer/figures.hpp"

namespace xducer::io {

// One figure-of-merit row. `value` is empty for rows that are genuinely
// undefined (printed as "-"), e.g. the bandwidth under normal-mode
// splitting or the LC rows of an RC network.
struct ReportRow {
  std::string key;
  std::string label;
  std::optional<double> value;
  std::string unit;
  std::string text;  // non-numeric rows (network variant)
};

struct ReportTable {
  std::string title;
  std::vector<ReportRow> rows;

  const ReportRow* find(const std::string& key) const;
};

// Full report in the bundled-table row order. Frequencies are ordinary Hz.
ReportTable build_report(const TransducerScenario& scenario, const FiguresOfMerit& fom,
                         const std::string& title);

// 4 significant digits, aligned columns.
void write_text(const ReportTable& table, std::ostream& out);
// label,value,unit CSV at 9 significant digits.
void write_csv(const ReportTable& table, std::ostream& out);
// Flat slug -> value object.
void write_json(const ReportTable& table, std::ostream& out);

// Several reports side by side (bundled tables).
void write_text_columns(const std::vector<ReportTable>& tables, std::ostream& out);

std::string format_sig(double v, int digits);
std::string slugify(const std::string& label);

}  // namespace xducer::io
