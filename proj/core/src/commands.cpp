#include "xducer/commands.hpp"

#include <fstream>
#include <vector>

#include "xducer/designer.hpp"
#include "xducer/tables.hpp"

namespace xducer::io {

namespace {

ScenarioDocument load(const std::string& path) {
  return parse_scenario(resolve_scenario_path(path));
}

void write_report(const ReportTable& report, bool json, std::ostream& out) {
  if (json)
    write_json(report, out);
  else
    write_text(report, out);
}

}  // namespace

int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    ScenarioDocument doc = load(opts.scenario_path);
    if (opts.reverse) doc.scenario.direction = Direction::optical_to_electrical;
    const FiguresOfMerit fom = evaluate(doc.scenario);
    write_report(build_report(doc.scenario, fom,
                              doc.label.empty() ? opts.scenario_path : doc.label),
                 opts.json, out);
    return 0;
  } catch (const std::exception& e) {
    err << "analyze: " << e.what() << "\n";
    return 1;
  }
}

int run_match(const MatchOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const ScenarioDocument doc = load(opts.scenario_path);
    const TransducerScenario& base = doc.scenario;

    DesignRequest req;
    req.mechanical = base.mechanical;
    req.bvd = base.bvd;
    req.optics = base.optics;
    req.env = base.env;
    req.z_tx = base.network.z_tx;
    req.r_l = base.network.r_l;

    DesignResult result;
    if (opts.mode == "max-eta") {
      req.mode = DesignMode::maximize_eta;
      result = design_max_eta(req);
    } else if (opts.mode == "min-noise") {
      req.mode = DesignMode::minimize_noise;
      result = design_rl_min_noise(req);
    } else {
      err << "match: unknown mode '" << opts.mode << "'\n";
      return 1;
    }

    const std::string title =
        (doc.label.empty() ? opts.scenario_path : doc.label) + " [" + opts.mode + "]";
    write_report(build_report(result.scenario, result.fom, title), opts.json, out);
    for (const auto& note : result.feasibility_notes) out << "note: " << note << "\n";

    if (!opts.emit_path.empty()) {
      ScenarioDocument designed;
      designed.scenario = result.scenario;
      designed.label = title;
      emit_scenario(designed, opts.emit_path);
      out << "wrote " << opts.emit_path << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "match: " << e.what() << "\n";
    return 1;
  }
}

int run_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (!(opts.from_hz < opts.to_hz)) {
      err << "sweep: --from-hz must be below --to-hz\n";
      return 1;
    }
    if (opts.points < 2) {
      err << "sweep: --points must be >= 2\n";
      return 1;
    }
    const ScenarioDocument doc = load(opts.scenario_path);

    std::vector<double> grid(opts.points);
    const double step = (opts.to_hz - opts.from_hz) / (opts.points - 1);
    for (int i = 0; i < opts.points; ++i)
      grid[i] = two_pi * (opts.from_hz + step * i);

    const Spectrum spec = spectrum(doc.scenario, grid);

    std::ofstream file;
    std::ostream* csv = &out;
    if (!opts.out_path.empty()) {
      file.open(opts.out_path, std::ios::binary);  // "\n" endings on all platforms
      if (!file) {
        err << "sweep: cannot open " << opts.out_path << "\n";
        return 1;
      }
      csv = &file;
    }
    *csv << "omega_hz,eta,N,re_z_ohm,im_z_ohm,s11\n";
    for (size_t i = 0; i < spec.omega.size(); ++i) {
      *csv << format_sig(spec.omega[i] / two_pi, 9) << "," << format_sig(spec.eta[i], 9)
           << "," << format_sig(spec.noise[i], 9) << ","
           << format_sig(spec.z[i].real(), 9) << "," << format_sig(spec.z[i].imag(), 9)
           << "," << format_sig(spec.s11[i], 9) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "sweep: " << e.what() << "\n";
    return 1;
  }
}

int run_tables(const TablesOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const TableSpec spec = load_table_spec(opts.which);
    const TableRun run = run_table(spec, opts.check);
    write_table_run(run, out);
    if (opts.check && !run.all_pass) return 2;
    return 0;
  } catch (const std::exception& e) {
    err << "tables: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace xducer::io
