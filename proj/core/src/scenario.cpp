#include "xducer/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace xducer {

const char* to_string(Direction d) {
  return d == Direction::electrical_to_optical ? "electrical-to-optical"
                                               : "optical-to-electrical";
}

double TransducerScenario::omega_m() const {
  if (network.has_series_inductor()) return effective_resonance(bvd, network.c_t);
  return rc_effective_resonance(bvd, network.c_t, network.line_resistance());
}

double TransducerScenario::omega_lc() const {
  if (!network.has_series_inductor()) return 0.0;
  return 1.0 / std::sqrt(network.l * network.total_shunt_capacitance(bvd.c_0));
}

bool TransducerScenario::matched() const {
  if (!network.has_series_inductor()) return false;
  const double wm = omega_m();
  return std::abs(omega_lc() - wm) / wm < 1e-6;
}

SidebandAmplitudes TransducerScenario::sidebands() const {
  const double wm = omega_m();
  return sideband_amplitudes(optics.kappa_o(), optics.detuning(wm), wm);
}

double TransducerScenario::c_om() const {
  return cooperativity_om(g_om(), bvd.gamma_m, optics.kappa_o());
}

OmResistances TransducerScenario::om_loading() const {
  return om_resistances(bvd.r_m, c_om(), sidebands());
}

double TransducerScenario::n_thermal() const {
  return thermal_occupancy(omega_m(), env.temperature);
}

void TransducerScenario::validate() const {
  mechanical.validate();
  bvd.validate();
  network.validate();
  optics.validate();
  env.validate();
}

complexd input_impedance(const TransducerScenario& scenario, double omega) {
  if (!(omega > 0)) throw std::domain_error("input_impedance: omega must be > 0");

  const OmResistances loading = scenario.om_loading();
  // Loaded motional arm: extra series resistance R_OM,+ - R_OM,-.
  const complexd z_mot =
      motional_arm_impedance(scenario.bvd, omega, loading.plus - loading.minus);
  const complexd z_c0 = capacitor_impedance(omega, scenario.bvd.c_0);

  complexd z_shunt = parallel(z_c0, z_mot);
  if (scenario.network.c_t > 0)
    z_shunt = parallel(z_shunt, capacitor_impedance(omega, scenario.network.c_t));

  complexd z = z_shunt + complexd(scenario.network.r_l, 0.0);
  if (scenario.network.has_series_inductor())
    z += inductor_impedance(omega, scenario.network.l);
  return z;
}

}  // namespace xducer
