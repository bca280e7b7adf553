#include "xducer/scenario_file.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "xducer/constants.hpp"

namespace xducer::io {

namespace {

struct KeyValue {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, KeyValue>;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
  throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

class SectionReader {
 public:
  SectionReader(const std::string& origin, const std::string& name, Section* section)
      : origin_(origin), name_(name), section_(section) {}

  bool has(const std::string& key) const {
    return section_ && section_->count(key) > 0;
  }

  std::optional<double> number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    KeyValue& kv = (*section_)[key];
    kv.used = true;
    try {
      size_t pos = 0;
      const double v = std::stod(kv.value, &pos);
      if (pos != kv.value.size())
        fail(origin_, kv.line, "malformed number for '" + key + "'");
      return v;
    } catch (const std::invalid_argument&) {
      fail(origin_, kv.line, "malformed number for '" + key + "'");
    } catch (const std::out_of_range&) {
      fail(origin_, kv.line, "number out of range for '" + key + "'");
    }
  }

  double required(const std::string& key) {
    auto v = number(key);
    if (!v) {
      const int line = section_ && !section_->empty() ? section_->begin()->second.line : 0;
      fail(origin_, line, "[" + name_ + "] missing required key '" + key + "'");
    }
    return *v;
  }

  std::optional<std::string> text(const std::string& key) {
    if (!has(key)) return std::nullopt;
    KeyValue& kv = (*section_)[key];
    kv.used = true;
    return kv.value;
  }

  int line_of(const std::string& key) const {
    return has(key) ? section_->at(key).line : 0;
  }

 private:
  std::string origin_;
  std::string name_;
  Section* section_;
};

const std::set<std::string> known_sections = {"mechanical", "piezo", "network",
                                              "optics", "environment", "run"};

const std::map<std::string, std::set<std::string>> known_keys = {
    {"mechanical", {"omega_s_hz", "gamma_m_hz", "m_eff_kg"}},
    {"piezo", {"c_0_f", "k2_pct", "c_m_f"}},
    {"network", {"variant", "c_t_f", "l_h", "r_l_ohm", "z_tx_ohm"}},
    {"optics",
     {"q_i", "kappa_i_hz", "kappa_ext_hz", "g_0_hz", "n_phot", "n_phot_cap",
      "delta_hz", "wavelength_m"}},
    {"environment", {"t_k"}},
    {"run", {"label", "direction"}},
};

}  // namespace

ScenarioDocument parse_scenario_text(const std::string& text, const std::string& origin) {
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(origin, line_no, "unterminated section header");
      current = trim(line.substr(1, line.size() - 2));
      if (!known_sections.count(current))
        fail(origin, line_no, "unknown section [" + current + "]");
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(origin, line_no, "expected 'key = value'");
    if (current.empty()) fail(origin, line_no, "key outside any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_keys.at(current).count(key))
      fail(origin, line_no, "unknown key '" + key + "' in [" + current + "]");
    if (sections[current].count(key))
      fail(origin, line_no, "duplicate key '" + key + "' in [" + current + "]");
    sections[current][key] = {value, line_no, false};
    if (value.empty()) fail(origin, line_no, "empty value for '" + key + "'");
  }

  for (const char* name : {"mechanical", "piezo", "optics", "environment", "run"})
    if (!sections.count(name))
      fail(origin, line_no, std::string("missing required section [") + name + "]");

  ScenarioDocument doc;
  TransducerScenario& s = doc.scenario;

  {
    SectionReader mech(origin, "mechanical", &sections["mechanical"]);
    s.mechanical.omega_s = two_pi * mech.required("omega_s_hz");
    s.mechanical.gamma_m = two_pi * mech.required("gamma_m_hz");
    s.mechanical.m_eff = mech.number("m_eff_kg").value_or(0.0);
  }

  {
    SectionReader piezo(origin, "piezo", &sections["piezo"]);
    const double c_0 = piezo.required("c_0_f");
    const bool has_k2 = piezo.has("k2_pct");
    const bool has_cm = piezo.has("c_m_f");
    if (has_k2 == has_cm)
      fail(origin, piezo.line_of(has_k2 ? "k2_pct" : "c_0_f"),
           "mutually exclusive keys: give exactly one of k2_pct, c_m_f");
    try {
      if (has_k2) {
        s.bvd = bvd_from_physical(s.mechanical.omega_s, s.mechanical.gamma_m, c_0,
                                  *piezo.number("k2_pct") / 100.0);
      } else {
        const double c_m = *piezo.number("c_m_f");
        const double l_m = 1.0 / (s.mechanical.omega_s * s.mechanical.omega_s * c_m);
        s.bvd = bvd_from_elements(s.mechanical.gamma_m * l_m, l_m, c_m, c_0);
      }
    } catch (const std::domain_error& e) {
      fail(origin, piezo.line_of(has_k2 ? "k2_pct" : "c_m_f"), e.what());
    }
  }

  {
    Section* net = sections.count("network") ? &sections["network"] : nullptr;
    Section empty;
    SectionReader network(origin, "network", net ? net : &empty);
    const std::string variant = network.text("variant").value_or("bare");
    const double c_t = network.number("c_t_f").value_or(0.0);
    const double l = network.number("l_h").value_or(0.0);
    const double r_l = network.number("r_l_ohm").value_or(0.0);
    const double z_tx = network.number("z_tx_ohm").value_or(50.0);
    try {
      if (variant == "bare") {
        s.network = MatchingNetwork::make_bare(z_tx, r_l);
        if (c_t != 0 || l != 0)
          fail(origin, network.line_of("variant"), "bare network carries no elements");
      } else if (variant == "rc") {
        s.network = MatchingNetwork::make_rc(c_t, z_tx, r_l);
      } else if (variant == "rl") {
        s.network = MatchingNetwork::make_rl(l, z_tx, r_l);
      } else if (variant == "rlc") {
        s.network = MatchingNetwork::make_rlc(l, c_t, z_tx, r_l);
      } else {
        fail(origin, network.line_of("variant"), "unknown network variant '" + variant + "'");
      }
    } catch (const std::domain_error& e) {
      fail(origin, network.line_of("variant"), e.what());
    }
  }

  {
    SectionReader optics(origin, "optics", &sections["optics"]);
    const double wavelength = optics.number("wavelength_m").value_or(default_wavelength);
    s.optics.omega_o = omega_from_wavelength(wavelength);
    const bool has_qi = optics.has("q_i");
    const bool has_ki = optics.has("kappa_i_hz");
    if (has_qi == has_ki)
      fail(origin, optics.line_of(has_qi ? "q_i" : "g_0_hz"),
           "mutually exclusive keys: give exactly one of q_i, kappa_i_hz");
    s.optics.kappa_i = has_qi ? s.optics.omega_o / *optics.number("q_i")
                              : two_pi * *optics.number("kappa_i_hz");
    s.optics.kappa_ext = two_pi * optics.number("kappa_ext_hz").value_or(0.0);
    s.optics.g0 = two_pi * optics.required("g_0_hz");
    s.optics.n_phot = optics.required("n_phot");
    s.optics.n_phot_cap = optics.number("n_phot_cap").value_or(s.optics.n_phot);
    if (auto delta = optics.number("delta_hz")) {
      s.optics.delta = two_pi * *delta;
      s.optics.red_locked = false;
    } else {
      s.optics.red_locked = true;
    }
  }

  {
    SectionReader env(origin, "environment", &sections["environment"]);
    s.env.temperature = env.required("t_k");
  }

  {
    SectionReader run(origin, "run", &sections["run"]);
    doc.label = run.text("label").value_or("");
    const std::string dir = run.text("direction").value_or("e2o");
    if (dir == "e2o")
      s.direction = Direction::electrical_to_optical;
    else if (dir == "o2e")
      s.direction = Direction::optical_to_electrical;
    else
      fail(origin, run.line_of("direction"), "direction must be e2o or o2e");
  }

  try {
    s.validate();
  } catch (const std::domain_error& e) {
    fail(origin, 0, std::string("invalid scenario: ") + e.what());
  }
  return doc;
}

ScenarioDocument parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": file not found");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path.string());
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// File value whose parse-side conversion reproduces the stored quantity
// exactly, when such a value exists; otherwise the rounded seed.
template <typename Op>
double inverse_for_emit(double target, double seed, Op parse_op) {
  double up = seed, down = seed;
  if (parse_op(seed) == target) return seed;
  for (int i = 0; i < 2; ++i) {
    up = std::nextafter(up, INFINITY);
    if (parse_op(up) == target) return up;
    down = std::nextafter(down, -INFINITY);
    if (parse_op(down) == target) return down;
  }
  return seed;
}

double hz_for_emit(double omega) {
  return inverse_for_emit(omega, omega / two_pi, [](double v) { return v * two_pi; });
}

double pct_for_emit(double fraction) {
  return inverse_for_emit(fraction, fraction * 100.0,
                          [](double v) { return v / 100.0; });
}

double wavelength_for_emit(double omega_o) {
  return inverse_for_emit(omega_o, two_pi * PhysicalConstants::c_light / omega_o,
                          [](double v) { return omega_from_wavelength(v); });
}

}  // namespace

std::string emit_scenario(const ScenarioDocument& doc) {
  const TransducerScenario& s = doc.scenario;
  std::ostringstream out;
  out << "[mechanical]\n";
  out << "omega_s_hz = " << fmt(hz_for_emit(s.mechanical.omega_s)) << "\n";
  out << "gamma_m_hz = " << fmt(hz_for_emit(s.mechanical.gamma_m)) << "\n";
  if (s.mechanical.m_eff > 0) out << "m_eff_kg = " << fmt(s.mechanical.m_eff) << "\n";
  out << "\n[piezo]\n";
  out << "c_0_f = " << fmt(s.bvd.c_0) << "\n";
  if (s.bvd.parameterized_by_k2)
    out << "k2_pct = " << fmt(pct_for_emit(s.bvd.k2)) << "\n";
  else
    out << "c_m_f = " << fmt(s.bvd.c_m) << "\n";
  out << "\n[network]\n";
  out << "variant = " << to_string(s.network.variant) << "\n";
  if (s.network.variant == NetworkVariant::rc || s.network.variant == NetworkVariant::rlc)
    out << "c_t_f = " << fmt(s.network.c_t) << "\n";
  if (s.network.variant == NetworkVariant::rl || s.network.variant == NetworkVariant::rlc)
    out << "l_h = " << fmt(s.network.l) << "\n";
  out << "r_l_ohm = " << fmt(s.network.r_l) << "\n";
  out << "z_tx_ohm = " << fmt(s.network.z_tx) << "\n";
  out << "\n[optics]\n";
  out << "wavelength_m = " << fmt(wavelength_for_emit(s.optics.omega_o)) << "\n";
  out << "kappa_i_hz = " << fmt(hz_for_emit(s.optics.kappa_i)) << "\n";
  out << "kappa_ext_hz = " << fmt(hz_for_emit(s.optics.kappa_ext)) << "\n";
  out << "g_0_hz = " << fmt(hz_for_emit(s.optics.g0)) << "\n";
  out << "n_phot = " << fmt(s.optics.n_phot) << "\n";
  out << "n_phot_cap = " << fmt(s.optics.n_phot_cap) << "\n";
  if (!s.optics.red_locked) out << "delta_hz = " << fmt(hz_for_emit(s.optics.delta)) << "\n";
  out << "\n[environment]\n";
  out << "t_k = " << fmt(s.env.temperature) << "\n";
  out << "\n[run]\n";
  if (!doc.label.empty()) out << "label = " << doc.label << "\n";
  out << "direction = "
      << (s.direction == Direction::electrical_to_optical ? "e2o" : "o2e") << "\n";
  return out.str();
}

void emit_scenario(const ScenarioDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot open for writing");
  out << emit_scenario(doc);
}

std::filesystem::path bundled_scenario_dir() {
  if (const char* env = std::getenv("XDUCER_SCENARIO_DIR")) return env;
  return std::filesystem::path(XDUCER_BUNDLED_DATA_DIR) / "scenarios";
}

std::filesystem::path bundled_table_dir() {
  return std::filesystem::path(XDUCER_BUNDLED_DATA_DIR) / "tables";
}

std::filesystem::path resolve_scenario_path(const std::string& name) {
  std::filesystem::path direct(name);
  if (std::filesystem::exists(direct)) return direct;
  const auto bundled = bundled_scenario_dir() / name;
  if (std::filesystem::exists(bundled)) return bundled;
  return direct;  // let the open fail with the user-facing name
}

}  // namespace xducer::io
