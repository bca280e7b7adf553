#include "xducer/figures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace xducer {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Thevenin impedance of the electrical branch seen by the mechanical loop
// (series inductor form; the L = 0 limit covers bare/RC networks).
complexd electrical_branch_impedance(const TransducerScenario& s, double omega) {
  const double c_shunt = s.network.total_shunt_capacitance(s.bvd.c_0);
  complexd z(s.network.line_resistance(), 0.0);
  if (s.network.has_series_inductor())
    z += inductor_impedance(omega, s.network.l);
  return z + capacitor_impedance(omega, c_shunt);
}

// Effective impedance governing the mechanical loop current.
complexd mechanical_loop_impedance(const TransducerScenario& s, double omega,
                                   const OmResistances& loading) {
  const double c_shunt = s.network.total_shunt_capacitance(s.bvd.c_0);
  const complexd z_om =
      motional_arm_impedance(s.bvd, omega, loading.plus - loading.minus);
  const double x_shunt = 1.0 / (omega * c_shunt);
  return z_om + capacitor_impedance(omega, c_shunt) +
         complexd(x_shunt * x_shunt, 0.0) / electrical_branch_impedance(s, omega);
}

}  // namespace

double reduced_coupling_kt2(const BvdParams& bvd, double c_t) {
  if (c_t < 0) throw std::domain_error("reduced_coupling_kt2: c_t must be >= 0");
  return bvd.c_m / (bvd.c_m + bvd.c_0 + c_t);
}

double g_em(double k_t2, double omega_m) { return g_em(k_t2, omega_m, omega_m); }

double g_em(double k_t2, double omega_m, double omega_lc) {
  if (k_t2 < 0 || k_t2 >= 1) throw std::domain_error("g_em: k_t2 out of [0,1)");
  return std::sqrt(k_t2) * std::sqrt(omega_m * omega_lc) / 2.0;
}

double cooperativity_em(const MatchingNetwork& network, const BvdParams& bvd,
                        double omega_m) {
  return electrical_summary(network, bvd, omega_m).r_em / bvd.r_m;
}

double eta_peak_from_coops(double eta_e, double eta_o, double c_em, double c_om,
                           double lp2, double lm2) {
  const double denom = 1.0 + c_em + c_om * (lp2 - lm2);
  return eta_e * eta_o * 4.0 * c_em * c_om * lp2 / (denom * denom);
}

double eta_peak(const TransducerScenario& scenario) {
  const double wm = scenario.omega_m();
  const ElectricalSummary es = electrical_summary(scenario.network, scenario.bvd, wm);
  const SidebandAmplitudes lorentz = scenario.sidebands();
  const double c_em = es.r_em / scenario.bvd.r_m;
  const double c_om = scenario.c_om();
  const double eta_o = eta_optical(scenario.optics.kappa_ext, scenario.optics.kappa_i);
  return eta_peak_from_coops(es.eta_e, eta_o, c_em, c_om, lorentz.upper, lorentz.lower);
}

NoiseBreakdown added_noise(const TransducerScenario& scenario) {
  const double wm = scenario.omega_m();
  const ElectricalSummary es = electrical_summary(scenario.network, scenario.bvd, wm);
  const double c_em = es.r_em / scenario.bvd.r_m;
  if (c_em == 0) return {inf, inf, inf};
  const SidebandAmplitudes lorentz = scenario.sidebands();
  const double c_om = scenario.c_om();
  const double n_m = scenario.n_thermal();

  NoiseBreakdown n;
  n.optical = c_om * lorentz.lower / (es.eta_e * c_em);
  n.mechanical = n_m / (es.eta_e * c_em);
  n.total = n.optical + n.mechanical;
  return n;
}

NoiseBreakdown reverse_noise(const TransducerScenario& scenario) {
  const SidebandAmplitudes lorentz = scenario.sidebands();
  const double c_om = scenario.c_om();
  const double eta_o = eta_optical(scenario.optics.kappa_ext, scenario.optics.kappa_i);
  if (c_om == 0 || eta_o == 0) return {inf, inf, inf};
  const double n_m = scenario.n_thermal();

  NoiseBreakdown n;
  n.optical = lorentz.lower / (eta_o * lorentz.upper);
  n.mechanical = n_m / (eta_o * lorentz.upper * c_om);
  n.total = n.optical + n.mechanical;
  return n;
}

BandwidthInfo bandwidth(const TransducerScenario& scenario) {
  const double wm = scenario.omega_m();
  const ElectricalSummary es = electrical_summary(scenario.network, scenario.bvd, wm);
  const double c_em = es.r_em / scenario.bvd.r_m;
  const SidebandAmplitudes lorentz = scenario.sidebands();
  const double c_om = scenario.c_om();
  const double dw =
      scenario.bvd.gamma_m * (1.0 + c_em + c_om * (lorentz.upper - lorentz.lower));

  BandwidthInfo info;
  if (es.resonant) {
    info.kappa_limit = es.kappa_e;
    const double g = g_em(reduced_coupling_kt2(scenario.bvd, scenario.network.c_t), wm,
                          scenario.omega_lc());
    if (2.0 * g > es.kappa_e) {
      info.mode_splitting = true;
      info.adiabatic = false;
      return info;  // delta_omega left empty: not uniquely defined
    }
  } else {
    // Without an LC resonance the electrical pole sits at 1/tau_RC.
    const double tau = scenario.network.line_resistance() *
                       scenario.network.total_shunt_capacitance(scenario.bvd.c_0);
    info.kappa_limit = 1.0 / tau;
  }
  info.delta_omega = dw;
  info.adiabatic = dw < info.kappa_limit / 3.0;
  return info;
}

AmplificationLimits amplification_limits(const TransducerScenario& scenario) {
  const SidebandAmplitudes lorentz = scenario.sidebands();
  if (lorentz.upper <= lorentz.lower)
    throw std::domain_error("amplification_limits: requires L+^2 > L-^2");
  const ElectricalSummary es =
      electrical_summary(scenario.network, scenario.bvd, scenario.omega_m());
  const double eta_o = eta_optical(scenario.optics.kappa_ext, scenario.optics.kappa_i);
  const double net = lorentz.upper - lorentz.lower;
  return {es.eta_e * eta_o * lorentz.upper / net, lorentz.lower / (es.eta_e * net)};
}

Spectrum spectrum(const TransducerScenario& scenario, std::span<const double> omega_grid) {
  const double wm = scenario.omega_m();
  for (size_t i = 0; i < omega_grid.size(); ++i) {
    if (!(omega_grid[i] > 0) || !(omega_grid[i] < 2.0 * wm))
      throw std::domain_error("spectrum: grid must lie inside (0, 2 omega_m)");
    if (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))
      throw std::domain_error("spectrum: grid must be strictly increasing");
  }

  const ElectricalSummary es = electrical_summary(scenario.network, scenario.bvd, wm);
  const OmResistances loading = scenario.om_loading();
  const double eta_o = eta_optical(scenario.optics.kappa_ext, scenario.optics.kappa_i);
  const double line = scenario.network.line_resistance();
  const double c_shunt = scenario.network.total_shunt_capacitance(scenario.bvd.c_0);

  Spectrum out;
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  out.eta.resize(omega_grid.size());
  out.noise.resize(omega_grid.size());
  out.z.resize(omega_grid.size());
  out.s11.resize(omega_grid.size());

  // Points are independent; order of evaluation does not matter.
  for (size_t i = 0; i < omega_grid.size(); ++i) {
    const double w = omega_grid[i];
    const complexd z_e = electrical_branch_impedance(scenario, w);
    const complexd z_m = mechanical_loop_impedance(scenario, w, loading);
    const double drive = std::norm(w * c_shunt * z_e);  // |w C z_e|^2

    out.eta[i] = es.eta_e * eta_o * 4.0 * line * loading.plus * (wm / w) /
                 (drive * std::norm(z_m));
    const double n_m_w = thermal_occupancy(w, scenario.env.temperature);
    out.noise[i] = drive * (n_m_w * scenario.bvd.r_m * w + wm * loading.minus) /
                   (es.eta_e * w * line);
    out.z[i] = input_impedance(scenario, w);
    out.s11[i] = reflection_s11(out.z[i], scenario.network.z_tx);
  }
  return out;
}

FiguresOfMerit evaluate(const TransducerScenario& scenario) {
  scenario.validate();

  FiguresOfMerit fom;
  fom.omega_m = scenario.omega_m();
  fom.omega_lc = scenario.omega_lc();
  fom.matched = scenario.matched();

  const ElectricalSummary es =
      electrical_summary(scenario.network, scenario.bvd, fom.omega_m);
  fom.eta_e = es.eta_e;
  fom.kappa_e = es.kappa_e;
  fom.kappa_e_resonant = es.resonant;
  fom.z_lc = es.z_lc;
  fom.q_lc = es.q_lc;
  fom.c_em = es.r_em / scenario.bvd.r_m;

  fom.kappa_o = scenario.optics.kappa_o();
  fom.q_o = scenario.optics.q_o();
  fom.eta_o = eta_optical(scenario.optics.kappa_ext, scenario.optics.kappa_i);
  const SidebandAmplitudes lorentz = scenario.sidebands();
  fom.lp2 = lorentz.upper;
  fom.lm2 = lorentz.lower;
  fom.g_om = scenario.g_om();
  fom.c_om = scenario.c_om();
  fom.n_phot = scenario.optics.n_phot;
  if (es.resonant)
    fom.g_em = g_em(reduced_coupling_kt2(scenario.bvd, scenario.network.c_t),
                    fom.omega_m, fom.omega_lc);

  fom.n_m = scenario.n_thermal();
  fom.eta_peak = eta_peak(scenario);
  fom.unstable = 1.0 + fom.c_em + fom.c_om * (fom.lp2 - fom.lm2) <= 0.0;
  fom.noise = added_noise(scenario);
  if (scenario.direction == Direction::optical_to_electrical)
    fom.noise_reverse = reverse_noise(scenario);
  fom.bandwidth = bandwidth(scenario);

  fom.z_at_wm = input_impedance(scenario, fom.omega_m);
  fom.s11_at_wm = reflection_s11(fom.z_at_wm, scenario.network.z_tx);
  return fom;
}

}  // namespace xducer
