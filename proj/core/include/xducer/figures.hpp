#pragma once

#include <optional>
#include <span>
#include <vector>

#include "xducer/scenario.hpp"

namespace xducer {

struct NoiseBreakdown {
  double total = 0;
  double optical = 0;
  double mechanical = 0;
};

struct BandwidthInfo {
  std::optional<double> delta_omega;  // empty when normal-mode split
  bool mode_splitting = false;
  bool adiabatic = true;        // delta_omega < kappa_limit/3
  double kappa_limit = 0;       // electrical linewidth used for the guards
};

struct AmplificationLimits {
  double eta_sat = 0;
  double n_o_sat = 0;
};

struct FiguresOfMerit {
  double omega_m = 0;
  double omega_lc = 0;  // 0 without an inductor
  bool matched = false;

  double eta_e = 0;
  double eta_o = 0;
  double kappa_o = 0;
  double q_o = 0;
  double lp2 = 0;
  double lm2 = 0;
  double g_om = 0;
  double c_om = 0;
  double c_em = 0;
  std::optional<double> g_em;  // empty for bare/RC networks
  double kappa_e = 0;
  bool kappa_e_resonant = false;
  double z_lc = 0;
  double q_lc = 0;
  double n_phot = 0;
  double n_m = 0;

  double eta_peak = 0;
  bool unstable = false;  // net negative circuit damping (amplifying regime)
  NoiseBreakdown noise;   // electrical -> optical
  std::optional<NoiseBreakdown> noise_reverse;  // filled for reverse direction
  BandwidthInfo bandwidth;

  complexd z_at_wm;
  double s11_at_wm = 0;
};

struct Spectrum {
  std::vector<double> omega;  // rad/s, strictly increasing
  std::vector<double> eta;
  std::vector<double> noise;
  std::vector<complexd> z;
  std::vector<double> s11;
};

// Reduced piezoelectric coupling c_m/(c_m + c_0 + c_t).
double reduced_coupling_kt2(const BvdParams& bvd, double c_t);

// Electromechanical coupling rate sqrt(k_T^2) sqrt(omega_m omega_lc) / 2.
double g_em(double k_t2, double omega_m);
double g_em(double k_t2, double omega_m, double omega_lc);

// C_em = R_em / R_m with R_em from electrical_summary.
double cooperativity_em(const MatchingNetwork& network, const BvdParams& bvd,
                        double omega_m);

// Peak transfer efficiency from the cooperativity form; used by eta_peak and
// directly testable against its argmax/limit properties.
double eta_peak_from_coops(double eta_e, double eta_o, double c_em, double c_om,
                           double lp2, double lm2);

double eta_peak(const TransducerScenario& scenario);

// Added noise referenced to the electrical input (electrical -> optical).
NoiseBreakdown added_noise(const TransducerScenario& scenario);

// Added noise for optical -> electrical conversion (the efficiency itself is
// direction-independent).
NoiseBreakdown reverse_noise(const TransducerScenario& scenario);

BandwidthInfo bandwidth(const TransducerScenario& scenario);

AmplificationLimits amplification_limits(const TransducerScenario& scenario);

// Exact spectral response of the equivalent circuit over the given grid.
// Grid points must be strictly increasing and inside (0, 2 omega_m).
Spectrum spectrum(const TransducerScenario& scenario, std::span<const double> omega_grid);

// Full report for one scenario; deterministic.
FiguresOfMerit evaluate(const TransducerScenario& scenario);

}  // namespace xducer
