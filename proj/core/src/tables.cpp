#include "xducer/tables.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

#include <nlohmann/json.hpp>

#include "xducer/designer.hpp"

namespace xducer::io {

namespace {

using nlohmann::json;

CellRef parse_ref(const json& j) {
  CellRef ref;
  if (j.is_number()) {
    ref.value = j.get<double>();
    return ref;
  }
  ref.value = j.at("value").get<double>();
  if (j.contains("check_value")) ref.check_value = j["check_value"].get<double>();
  if (j.contains("rel_tol")) ref.rel_tol = j["rel_tol"].get<double>();
  if (j.contains("abs_tol")) ref.abs_tol = j["abs_tol"].get<double>();
  if (j.contains("note")) ref.note = j["note"].get<std::string>();
  if (j.contains("skip")) ref.skip = j["skip"].get<bool>();
  return ref;
}

TransducerScenario apply_overrides(TransducerScenario s,
                                   const std::map<std::string, double>& overrides) {
  for (const auto& [key, value] : overrides) {
    if (key == "q_i") {
      s.optics.kappa_i = s.optics.omega_o / value;
    } else if (key == "n_phot_cap") {
      s.optics.n_phot_cap = value;
      s.optics.n_phot = std::min(s.optics.n_phot, value);
    } else if (key == "g_0_hz") {
      s.optics.g0 = two_pi * value;
    } else if (key == "m_eff_kg") {
      s.mechanical.m_eff = value;
    } else {
      throw ParseError("table manifest: unknown override '" + key + "'");
    }
  }
  return s;
}

DesignRequest to_request(const TransducerScenario& s, DesignMode mode) {
  DesignRequest req;
  req.mechanical = s.mechanical;
  req.bvd = s.bvd;
  req.optics = s.optics;
  req.env = s.env;
  req.mode = mode;
  req.z_tx = s.network.z_tx;
  req.r_l = s.network.r_l;
  return req;
}

}  // namespace

TableSpec load_table_spec(int which) {
  const auto path = bundled_table_dir() / ("table" + std::to_string(which) + ".json");
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": table manifest not found");
  json j;
  in >> j;

  TableSpec spec;
  spec.which = j.at("table").get<int>();
  spec.title = j.at("title").get<std::string>();
  spec.mode = j.at("mode").get<std::string>();
  for (const auto& jc : j.at("columns")) {
    TableColumnSpec col;
    col.key = jc.at("key").get<std::string>();
    col.title = jc.at("title").get<std::string>();
    col.scenario = jc.at("scenario").get<std::string>();
    if (jc.contains("overrides"))
      for (const auto& [k, v] : jc["overrides"].items())
        col.overrides[k] = v.get<double>();
    spec.columns.push_back(std::move(col));
  }
  for (const auto& jr : j.at("rows")) {
    TableRowSpec row;
    row.key = jr.at("key").get<std::string>();
    row.label = jr.value("label", "");
    row.unit = jr.value("unit", "");
    row.checked = jr.value("check", false);
    row.rel_tol = jr.value("rel_tol", 0.05);
    if (jr.contains("refs"))
      for (const auto& [k, v] : jr["refs"].items()) row.refs[k] = parse_ref(v);
    spec.rows.push_back(std::move(row));
  }
  return spec;
}

TableRun run_table(const TableSpec& spec, bool check) {
  TableRun run;
  run.spec = spec;

  for (const auto& col : spec.columns) {
    const ScenarioDocument doc = parse_scenario(resolve_scenario_path(col.scenario));
    TransducerScenario scenario = apply_overrides(doc.scenario, col.overrides);

    if (spec.mode == "analyze") {
      run.reports.push_back(build_report(scenario, evaluate(scenario), col.title));
    } else if (spec.mode == "max-eta") {
      const DesignResult result =
          design_max_eta(to_request(scenario, DesignMode::maximize_eta));
      run.reports.push_back(build_report(result.scenario, result.fom, col.title));
    } else if (spec.mode == "min-noise") {
      const DesignResult result =
          design_rl_min_noise(to_request(scenario, DesignMode::minimize_noise));
      run.reports.push_back(build_report(result.scenario, result.fom, col.title));
    } else {
      throw ParseError("table manifest: unknown mode '" + spec.mode + "'");
    }
  }

  if (!check) return run;

  for (const auto& row : spec.rows) {
    if (!row.checked) continue;
    for (size_t c = 0; c < spec.columns.size(); ++c) {
      const auto it = row.refs.find(spec.columns[c].key);
      if (it == row.refs.end() || it->second.skip) continue;
      const CellRef& ref = it->second;

      CellOutcome outcome;
      outcome.row_key = row.key;
      outcome.column_key = spec.columns[c].key;
      outcome.ref = ref;
      const ReportRow* computed = run.reports[c].find(row.key);
      if (computed && computed->value) outcome.computed = computed->value;

      const double expected = ref.expected();
      const double rel = ref.rel_tol.value_or(row.rel_tol);
      double tol = std::abs(expected) * rel;
      if (ref.abs_tol) tol = std::max(tol, *ref.abs_tol);
      outcome.tolerance = tol;
      outcome.pass = outcome.computed && std::abs(*outcome.computed - expected) <= tol;
      if (!outcome.pass) run.all_pass = false;
      run.checks.push_back(std::move(outcome));
    }
  }
  return run;
}

void write_table_run(const TableRun& run, std::ostream& out) {
  out << run.spec.title << "\n";

  // Column-major table restricted to the manifest rows, in manifest order.
  out << std::left << std::setw(36) << "Parameter";
  for (const auto& col : run.spec.columns) out << std::right << std::setw(14) << col.title;
  out << "  unit\n";
  for (const auto& row : run.spec.rows) {
    out << std::left << std::setw(36) << row.label;
    for (const auto& report : run.reports) {
      const ReportRow* r = report.find(row.key);
      out << std::right << std::setw(14);
      if (r && !r->text.empty())
        out << r->text;
      else if (r && r->value)
        out << format_sig(*r->value, 4);
      else
        out << "-";
    }
    out << "  " << row.unit << "\n";
  }

  if (run.checks.empty()) return;
  size_t failed = 0;
  for (const auto& c : run.checks)
    if (!c.pass) ++failed;
  out << "check: " << (run.checks.size() - failed) << "/" << run.checks.size()
      << " cells within tolerance\n";
  for (const auto& c : run.checks) {
    if (c.pass && c.ref.note.empty()) continue;
    out << (c.pass ? "  note " : "  FAIL ") << c.row_key << "[" << c.column_key << "]: ";
    if (c.computed)
      out << "computed " << format_sig(*c.computed, 6);
    else
      out << "computed -";
    out << " vs expected " << format_sig(c.ref.expected(), 6) << " +/- "
        << format_sig(c.tolerance, 3);
    if (c.ref.check_value)
      out << " (published " << format_sig(c.ref.value, 6) << ")";
    if (!c.ref.note.empty()) out << "  [" << c.ref.note << "]";
    out << "\n";
  }
}

}  // namespace xducer::io
