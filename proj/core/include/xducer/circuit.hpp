#pragma once

#include <complex>

#include "xducer/constants.hpp"

namespace xducer {

using complexd = std::complex<double>;

// Impedances follow the e^{-i w t} sign convention, so an inductor is
// -i w L and a capacitor is 1/(-i w C) = +i/(w C). Capacitive reactances
// therefore carry a positive imaginary part.
inline complexd inductor_impedance(double omega, double inductance) {
  return complexd(0.0, -omega * inductance);
}

inline complexd capacitor_impedance(double omega, double capacitance) {
  return complexd(0.0, 1.0 / (omega * capacitance));
}

inline complexd parallel(complexd a, complexd b) { return a * b / (a + b); }

struct MechanicalMode {
  double omega_s = 0;  // series resonance, rad/s
  double gamma_m = 0;  // energy loss rate, rad/s
  double m_eff = 0;    // effective mass, kg; informational only

  double q_m() const { return omega_s / gamma_m; }
  void validate() const;
};

// Butterworth-van Dyke representation of the piezoelectric resonator:
// motional arm (r_m, l_m, c_m) in parallel with the static capacitance c_0.
// Canonical inputs are (omega_s, gamma_m, c_0, k2); the element values are
// derived. bvd_from_elements back-derives the canonical set instead.
struct BvdParams {
  double r_m = 0;
  double l_m = 0;
  double c_m = 0;
  double c_0 = 0;

  double k2 = 0;       // electromechanical coupling, c_m/(c_m+c_0)
  double omega_s = 0;  // 1/sqrt(l_m c_m)
  double omega_p = 0;  // omega_s/sqrt(1-k2)
  double gamma_m = 0;  // r_m/l_m

  // Which parameterization the values were constructed from; the I/O layer
  // emits the same one so a round trip reproduces the struct bit for bit.
  bool parameterized_by_k2 = false;

  void validate() const;
};

BvdParams bvd_from_physical(double omega_s, double gamma_m, double c_0, double k2);
BvdParams bvd_from_elements(double r_m, double l_m, double c_m, double c_0);

// Impedance of the full BVD circuit (motional arm parallel to c_0).
complexd bvd_impedance(const BvdParams& bvd, double omega);

// Series impedance of the motional arm alone, with optional extra series
// resistance (used for the optomechanically loaded arm).
complexd motional_arm_impedance(const BvdParams& bvd, double omega,
                                double extra_series_resistance = 0.0);

// Effective mechanical resonance when c_t + c_0 closes the mechanical loop
// (networks with a series inductor): w_m^2 = (1/l_m)(1/c_m + 1/(c_t+c_0)).
// Decreases monotonically from omega_p (c_t = 0) to omega_s (c_t -> inf).
double effective_resonance(const BvdParams& bvd, double c_t);

// Effective mechanical resonance when the line is connected without a series
// inductor (bare / RC networks). The line resistance shunts the static
// capacitance, leaving a resonance just above omega_s; positive root of
//   w^2 = w_s^2 (1 + w^2 tau c_m (z_line) / (1 + w^2 tau^2)),
// with tau = z_line (c_0 + c_t).
double rc_effective_resonance(const BvdParams& bvd, double c_t, double z_line);

enum class NetworkVariant { bare, rc, rl, rlc };

const char* to_string(NetworkVariant v);

// Input matching network between the transmission line and the BVD circuit.
// bare == rc with c_t = 0 == rlc with l = 0, c_t = 0; the three
// representations evaluate identically.
struct MatchingNetwork {
  NetworkVariant variant = NetworkVariant::bare;
  double c_t = 0;   // tuning capacitance, F
  double l = 0;     // series inductance, H
  double r_l = 0;   // Ohmic loss in series with the line, Ohm
  double z_tx = 50; // line characteristic impedance, Ohm

  bool has_series_inductor() const {
    return (variant == NetworkVariant::rl || variant == NetworkVariant::rlc) && l > 0;
  }
  double line_resistance() const { return z_tx + r_l; }
  double total_shunt_capacitance(double c_0) const { return c_0 + c_t; }

  static MatchingNetwork make_bare(double z_tx = 50, double r_l = 0);
  static MatchingNetwork make_rc(double c_t, double z_tx = 50, double r_l = 0);
  static MatchingNetwork make_rl(double l, double z_tx = 50, double r_l = 0);
  static MatchingNetwork make_rlc(double l, double c_t, double z_tx = 50, double r_l = 0);

  void validate() const;
};

struct Environment {
  double temperature = 0;  // effective bath temperature, K
  void validate() const;
};

// Electrical-side summary at the operating frequency. For networks with a
// series inductor kappa_e = (z_tx+r_l)/L is the LC linewidth; otherwise
// kappa_e is the non-resonant coupling rate r_em/l_m (often written
// kappa_tx) and resonant == false.
struct ElectricalSummary {
  double eta_e = 0;
  double kappa_e = 0;
  bool resonant = false;
  double z_lc = 0;
  double q_lc = 0;
  double r_em = 0;
};

ElectricalSummary electrical_summary(const MatchingNetwork& network,
                                     const BvdParams& bvd, double omega_m);

// Bose-Einstein occupancy of the mechanical bath.
double thermal_occupancy(double omega, double temperature);

// |Gamma| with Gamma = (z - z_tx)/(z + z_tx). May exceed 1 for active
// (negative-resistance) loads; not clamped.
double reflection_s11(complexd z, double z_tx);

}  // namespace xducer
