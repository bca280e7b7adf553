#include "xducer/report.hpp"

#include <cctype>
#include <cstdio>
#include <iomanip>

#include <nlohmann/json.hpp>

#include "xducer/constants.hpp"

namespace xducer::io {

namespace {

double hz(double omega) { return omega / two_pi; }

}  // namespace

const ReportRow* ReportTable::find(const std::string& key) const {
  for (const auto& row : rows)
    if (row.key == key) return &row;
  return nullptr;
}

ReportTable build_report(const TransducerScenario& s, const FiguresOfMerit& fom,
                         const std::string& title) {
  ReportTable t;
  t.title = title;
  auto num = [&](const std::string& key, const std::string& label, double value,
                 const std::string& unit) {
    t.rows.push_back({key, label, value, unit, ""});
  };
  auto opt = [&](const std::string& key, const std::string& label,
                 std::optional<double> value, const std::string& unit) {
    t.rows.push_back({key, label, value, unit, ""});
  };
  auto txt = [&](const std::string& key, const std::string& label,
                 const std::string& value) {
    t.rows.push_back({key, label, std::nullopt, "", value});
  };

  // Device inputs.
  num("omega_s_hz", "Series mechanical frequency", hz(s.bvd.omega_s), "Hz");
  num("t_k", "Effective temperature", s.env.temperature, "K");
  if (s.mechanical.m_eff > 0) num("m_eff_kg", "Effective mass", s.mechanical.m_eff, "kg");
  num("r_m_ohm", "Motional resistance", s.bvd.r_m, "Ohm");
  num("l_m_h", "Motional inductance", s.bvd.l_m, "H");
  num("c_m_f", "Motional capacitance", s.bvd.c_m, "F");
  num("c_0_f", "Static capacitance", s.bvd.c_0, "F");
  num("k2_pct", "Piezoelectric coupling coefficient", 100.0 * s.bvd.k2, "%");
  num("r_l_ohm", "Load resistance", s.network.r_l, "Ohm");
  num("z_tx_ohm", "Line impedance", s.network.z_tx, "Ohm");
  num("gamma_m_hz", "Acoustic loss rate", hz(s.bvd.gamma_m), "Hz");
  num("q_m", "Mechanical quality factor", s.bvd.omega_s / s.bvd.gamma_m, "");
  num("q_i", "Optical quality factor (intrinsic)", s.optics.q_i(), "");
  num("g_0_hz", "Optomechanical coupling rate", hz(s.optics.g0), "Hz");
  num("n_phot", "Intra-cavity photon number", fom.n_phot, "photons");
  num("g_om_hz", "Enhanced optomech. coupling rate", hz(fom.g_om), "Hz");
  num("eta_e", "Electrical coupling efficiency", fom.eta_e, "");

  // Network and operating point.
  txt("network", "Matching network", to_string(s.network.variant));
  const bool has_ct = s.network.variant == NetworkVariant::rc ||
                      s.network.variant == NetworkVariant::rlc;
  const bool has_l = s.network.has_series_inductor();
  opt("c_t_f", "Tuning capacitance",
      has_ct ? std::optional<double>(s.network.c_t) : std::nullopt, "F");
  opt("l_h", "Matching inductance",
      has_l ? std::optional<double>(s.network.l) : std::nullopt, "H");
  num("omega_m_hz", "Effective mechanical frequency", hz(fom.omega_m), "Hz");
  num("n_m", "Thermal phonon number", fom.n_m, "phonons");
  opt("g_em_hz", "Piezoelectric coupling rate",
      fom.g_em ? std::optional<double>(hz(*fom.g_em)) : std::nullopt, "Hz");
  num("kappa_e_hz",
      fom.kappa_e_resonant ? "Electrical coupling rate" : "Electrical decay rate",
      hz(fom.kappa_e), "Hz");
  num("kappa_ext_hz", "Optical coupling rate", hz(s.optics.kappa_ext), "Hz");
  num("kappa_o_hz", "Optical decay rate", hz(fom.kappa_o), "Hz");
  num("q_o", "Optical quality factor (loaded)", fom.q_o, "");
  num("eta_o", "Optical coupling efficiency", fom.eta_o, "");
  num("c_em", "Electromechanical cooperativity", fom.c_em, "");
  num("c_om", "Optomechanical cooperativity", fom.c_om, "");
  num("re_z_ohm", "Impedance (real part)", fom.z_at_wm.real(), "Ohm");
  num("im_z_ohm", "Impedance (imaginary part)", fom.z_at_wm.imag(), "Ohm");
  num("s11", "Reflection", fom.s11_at_wm, "");

  // Transduction figures of merit.
  num("eta_peak_pct", "Peak transfer efficiency", 100.0 * fom.eta_peak, "%");
  opt("delta_omega_hz", "Transduction bandwidth",
      fom.bandwidth.delta_omega ? std::optional<double>(hz(*fom.bandwidth.delta_omega))
                                : std::nullopt,
      "Hz");
  num("n_added", "Added total noise", fom.noise.total, "photons");
  num("n_added_optical", "Added optical noise", fom.noise.optical, "photons");
  num("n_added_mechanical", "Added mechanical noise", fom.noise.mechanical, "photons");
  if (fom.noise_reverse) {
    num("n_added_rev", "Added total noise (reverse)", fom.noise_reverse->total,
        "photons");
    num("n_added_rev_optical", "Added optical noise (reverse)",
        fom.noise_reverse->optical, "photons");
    num("n_added_rev_mechanical", "Added mechanical noise (reverse)",
        fom.noise_reverse->mechanical, "photons");
  }
  return t;
}

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string slugify(const std::string& label) {
  std::string out;
  bool last_us = false;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      last_us = false;
    } else if (!last_us && !out.empty()) {
      out.push_back('_');
      last_us = true;
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

void write_text(const ReportTable& table, std::ostream& out) {
  if (!table.title.empty()) out << table.title << "\n";
  for (const auto& row : table.rows) {
    out << "  " << std::left << std::setw(36) << row.label << std::right
        << std::setw(12);
    if (!row.text.empty())
      out << row.text;
    else if (row.value)
      out << format_sig(*row.value, 4);
    else
      out << "-";
    if (!row.unit.empty()) out << " " << row.unit;
    out << "\n";
  }
}

void write_csv(const ReportTable& table, std::ostream& out) {
  out << "label,value,unit\n";
  for (const auto& row : table.rows) {
    out << row.label << ",";
    if (!row.text.empty())
      out << row.text;
    else if (row.value)
      out << format_sig(*row.value, 9);
    out << "," << row.unit << "\n";
  }
}

void write_json(const ReportTable& table, std::ostream& out) {
  nlohmann::ordered_json j;
  for (const auto& row : table.rows) {
    const std::string key = slugify(row.label);
    if (!row.text.empty())
      j[key] = row.text;
    else if (row.value)
      j[key] = *row.value;
    else
      j[key] = nullptr;
  }
  out << j.dump(2) << "\n";
}

void write_text_columns(const std::vector<ReportTable>& tables, std::ostream& out) {
  if (tables.empty()) return;
  const ReportTable& first = tables.front();
  out << std::left << std::setw(38) << "Parameter";
  for (const auto& t : tables) out << std::right << std::setw(14) << t.title;
  out << std::setw(10) << "unit" << "\n";
  for (size_t r = 0; r < first.rows.size(); ++r) {
    out << std::left << std::setw(38) << first.rows[r].label;
    for (const auto& t : tables) {
      const ReportRow* row = t.find(first.rows[r].key);
      out << std::right << std::setw(14);
      if (!row)
        out << "-";
      else if (!row->text.empty())
        out << row->text;
      else if (row->value)
        out << format_sig(*row->value, 4);
      else
        out << "-";
    }
    out << std::setw(10) << first.rows[r].unit << "\n";
  }
}

}  // namespace xducer::io
