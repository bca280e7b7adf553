#pragma once

#include "xducer/circuit.hpp"
#include "xducer/optomech.hpp"

namespace xducer {

enum class Direction { electrical_to_optical, optical_to_electrical };

const char* to_string(Direction d);

// One fully specified operating point: device, network, pump and bath.
// All accessors are pure; scenarios are value types and safe to share
// across threads.
struct TransducerScenario {
  MechanicalMode mechanical;
  BvdParams bvd;
  MatchingNetwork network;
  OpticalSubsystem optics;
  Environment env;
  Direction direction = Direction::electrical_to_optical;

  // Effective mechanical resonance. Networks with a series inductor close
  // the mechanical loop over c_t + c_0; bare/RC networks see the line
  // shunting the static arm instead.
  double omega_m() const;

  // LC resonance 1/sqrt(L (c_0+c_t)); 0 when there is no inductor.
  double omega_lc() const;

  bool matched() const;

  double delta() const { return optics.detuning(omega_m()); }
  SidebandAmplitudes sidebands() const;
  double g_om() const { return enhanced_coupling(optics.g0, optics.n_phot); }
  double c_om() const;
  OmResistances om_loading() const;
  double n_thermal() const;  // bath occupancy at omega_m

  void validate() const;
};

// Impedance seen from the transmission-line terminals: series r_l and L
// (when present), then c_t in parallel with the static arm and the
// optomechanically loaded motional arm. The loading resistances are the
// adiabatic (frequency-independent) values taken at omega_m.
complexd input_impedance(const TransducerScenario& scenario, double omega);

}  // namespace xducer
