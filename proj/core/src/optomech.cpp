#include "xducer/optomech.hpp"

#include <cmath>
#include <stdexcept>

#include "xducer/numeric.hpp"

namespace xducer {

void OpticalSubsystem::validate() const {
  if (!(omega_o > 0)) throw std::domain_error("optics: omega_o must be > 0");
  if (!(kappa_i > 0)) throw std::domain_error("optics: kappa_i must be > 0");
  if (kappa_ext < 0) throw std::domain_error("optics: kappa_ext must be >= 0");
  if (!(g0 >= 0)) throw std::domain_error("optics: g0 must be >= 0");
  if (n_phot < 0) throw std::domain_error("optics: n_phot must be >= 0");
  if (n_phot_cap < n_phot)
    throw std::domain_error("optics: n_phot exceeds n_phot_cap");
}

SidebandAmplitudes sideband_amplitudes(double kappa_o, double delta, double omega_m) {
  if (!(kappa_o > 0)) throw std::domain_error("sidebands: kappa_o must be > 0");
  if (!(omega_m > 0)) throw std::domain_error("sidebands: omega_m must be > 0");
  const double half2 = 0.25 * kappa_o * kappa_o;
  const double up = delta + omega_m;
  const double lo = delta - omega_m;
  return {half2 / (half2 + up * up), half2 / (half2 + lo * lo)};
}

double enhanced_coupling(double g0, double n_phot) {
  if (n_phot < 0) throw std::domain_error("enhanced_coupling: n_phot must be >= 0");
  return g0 * std::sqrt(n_phot);
}

double cooperativity_om(double g_om, double gamma_m, double kappa_o) {
  if (!(gamma_m > 0) || !(kappa_o > 0))
    throw std::domain_error("cooperativity_om: rates must be > 0");
  return 4.0 * g_om * g_om / (gamma_m * kappa_o);
}

OmResistances om_resistances(double r_m, double c_om, const SidebandAmplitudes& lorentz) {
  if (r_m < 0 || c_om < 0)
    throw std::domain_error("om_resistances: inputs must be >= 0");
  return {r_m * c_om * lorentz.upper, r_m * c_om * lorentz.lower};
}

double eta_optical(double kappa_ext, double kappa_i) {
  if (!(kappa_i > 0)) throw std::domain_error("eta_optical: kappa_i must be > 0");
  if (kappa_ext < 0) throw std::domain_error("eta_optical: kappa_ext must be >= 0");
  return kappa_ext / (kappa_ext + kappa_i);
}

double matched_eta_objective(const OpticalSubsystem& optics, double gamma_m,
                             double omega_m, double kappa_ext) {
  const double kappa_o = optics.kappa_i + kappa_ext;
  const double g_om = enhanced_coupling(optics.g0, optics.n_phot);
  const double c_om = cooperativity_om(g_om, gamma_m, kappa_o);
  const auto lorentz = sideband_amplitudes(kappa_o, -omega_m, omega_m);
  const double eta_o = eta_optical(kappa_ext, optics.kappa_i);
  return eta_o * c_om * lorentz.upper /
         (1.0 + c_om * (lorentz.upper - lorentz.lower));
}

double kappa_ext_max_eta_seed(const OpticalSubsystem& optics, double gamma_m) {
  const double g_om = enhanced_coupling(optics.g0, optics.n_phot);
  const double c_om_i = cooperativity_om(g_om, gamma_m, optics.kappa_i);
  return optics.kappa_i * std::sqrt(1.0 + c_om_i);
}

double kappa_ext_max_eta(const OpticalSubsystem& optics, double gamma_m, double omega_m) {
  const double lo = optics.kappa_i / 100.0;
  const double hi = optics.kappa_i * 100.0;
  auto objective = [&](double k) {
    return matched_eta_objective(optics, gamma_m, omega_m, k);
  };
  const ScalarOptimum best = golden_section_maximize(objective, lo, hi, 1e-6, 200);
  if (!best.converged)
    throw NoConvergence("kappa_ext_max_eta: golden section did not converge");
  if (best.value <= 1.0) return best.x;

  // The unconstrained optimum amplifies (objective > 1). Back off to the
  // smallest kappa_ext that reaches unity so the Stokes gain is not used to
  // inflate the efficiency.
  return bisect_root([&](double k) { return objective(k) - 1.0; }, lo, best.x,
                     1e-10, 200);
}

MinNoiseOpticalPoint kappa_ext_min_noise(const OpticalSubsystem& optics, double gamma_m,
                                         double omega_m, double n_m) {
  OpticalSubsystem capped = optics;
  capped.n_phot = optics.n_phot_cap;

  // Critical coupling with the pump at its cap.
  const double kappa_crit = optics.kappa_i;
  const double kappa_o_crit = optics.kappa_i + kappa_crit;
  const double c_om_crit = cooperativity_om(enhanced_coupling(capped.g0, capped.n_phot),
                                            gamma_m, kappa_o_crit);
  const double lm2_crit = sideband_amplitudes(kappa_o_crit, -omega_m, omega_m).lower;
  if (c_om_crit * lm2_crit < n_m) return {kappa_crit, capped.n_phot, true};

  // Optical amplification noise would dominate: move to kappa_i/2 and lower
  // the pump until C_om L-^2 matches the thermal occupancy.
  const double kappa_ext = optics.kappa_i / 2.0;
  const double kappa_o = optics.kappa_i + kappa_ext;
  const double lm2 = sideband_amplitudes(kappa_o, -omega_m, omega_m).lower;
  const double c_om_target = n_m / lm2;
  const double n_phot = c_om_target * gamma_m * kappa_o / (4.0 * capped.g0 * capped.g0);
  return {kappa_ext, std::min(n_phot, capped.n_phot), false};
}

}  // namespace xducer
