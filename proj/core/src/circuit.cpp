#include "xducer/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xducer {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

void MechanicalMode::validate() const {
  require(omega_s > 0, "mechanical: omega_s must be > 0");
  require(gamma_m > 0, "mechanical: gamma_m must be > 0");
  require(std::isfinite(omega_s / gamma_m), "mechanical: Q_m must be finite");
}

void BvdParams::validate() const {
  require(r_m > 0 && l_m > 0 && c_m > 0 && c_0 > 0,
          "bvd: element values must be > 0");
  require(k2 > 0 && k2 < 1, "bvd: k2 out of (0,1)");
  require(omega_s > 0 && omega_p > 0 && gamma_m > 0, "bvd: derived rates must be > 0");
}

BvdParams bvd_from_physical(double omega_s, double gamma_m, double c_0, double k2) {
  require(k2 > 0 && k2 < 1, "bvd: k2 out of (0,1)");
  require(omega_s > 0, "bvd: omega_s must be > 0");
  require(gamma_m > 0, "bvd: gamma_m must be > 0");
  require(c_0 > 0, "bvd: c_0 must be > 0");

  BvdParams bvd;
  bvd.c_0 = c_0;
  bvd.k2 = k2;
  bvd.omega_s = omega_s;
  bvd.gamma_m = gamma_m;
  bvd.c_m = c_0 * k2 / (1.0 - k2);
  bvd.l_m = 1.0 / (omega_s * omega_s * bvd.c_m);
  bvd.r_m = gamma_m * bvd.l_m;
  bvd.omega_p = omega_s / std::sqrt(1.0 - k2);
  bvd.parameterized_by_k2 = true;
  bvd.validate();
  return bvd;
}

BvdParams bvd_from_elements(double r_m, double l_m, double c_m, double c_0) {
  require(r_m > 0 && l_m > 0 && c_m > 0 && c_0 > 0,
          "bvd: element values must be > 0");

  BvdParams bvd;
  bvd.r_m = r_m;
  bvd.l_m = l_m;
  bvd.c_m = c_m;
  bvd.c_0 = c_0;
  bvd.k2 = c_m / (c_m + c_0);
  bvd.omega_s = 1.0 / std::sqrt(l_m * c_m);
  bvd.omega_p = bvd.omega_s / std::sqrt(1.0 - bvd.k2);
  bvd.gamma_m = r_m / l_m;
  bvd.validate();
  return bvd;
}

complexd motional_arm_impedance(const BvdParams& bvd, double omega,
                                double extra_series_resistance) {
  return complexd(bvd.r_m + extra_series_resistance, 0.0) +
         inductor_impedance(omega, bvd.l_m) + capacitor_impedance(omega, bvd.c_m);
}

complexd bvd_impedance(const BvdParams& bvd, double omega) {
  require(omega > 0, "bvd_impedance: omega must be > 0");
  // Closed form of the two-arm parallel combination:
  //   Z = [1/(-i w c_0)] * [(w_s^2 - w^2) - i w r_m/l_m] /
  //                        [(w_p^2 - w^2) - i w r_m/l_m]
  const double ws2 = bvd.omega_s * bvd.omega_s;
  const double wp2 = bvd.omega_p * bvd.omega_p;
  const double w2 = omega * omega;
  const double damping = omega * bvd.r_m / bvd.l_m;
  const complexd num(ws2 - w2, -damping);
  const complexd den(wp2 - w2, -damping);
  return capacitor_impedance(omega, bvd.c_0) * num / den;
}

double effective_resonance(const BvdParams& bvd, double c_t) {
  if (c_t < 0) throw std::domain_error("effective_resonance: c_t must be >= 0");
  const double c_shunt = c_t + bvd.c_0;
  return std::sqrt((1.0 / bvd.l_m) * (1.0 / bvd.c_m + 1.0 / c_shunt));
}

double rc_effective_resonance(const BvdParams& bvd, double c_t, double z_line) {
  if (c_t < 0) throw std::domain_error("rc_effective_resonance: c_t must be >= 0");
  if (z_line < 0) throw std::domain_error("rc_effective_resonance: z_line must be >= 0");
  const double tau = z_line * (bvd.c_0 + c_t);
  double omega = bvd.omega_s;
  // Contraction with a tiny correction term; a handful of sweeps suffices.
  for (int i = 0; i < 64; ++i) {
    const double wt = omega * tau;
    const double next = bvd.omega_s *
        std::sqrt(1.0 + omega * omega * tau * bvd.c_m * z_line / (1.0 + wt * wt));
    if (std::abs(next - omega) <= 1e-15 * omega) return next;
    omega = next;
  }
  return omega;
}

const char* to_string(NetworkVariant v) {
  switch (v) {
    case NetworkVariant::bare: return "bare";
    case NetworkVariant::rc: return "rc";
    case NetworkVariant::rl: return "rl";
    case NetworkVariant::rlc: return "rlc";
  }
  return "?";
}

MatchingNetwork MatchingNetwork::make_bare(double z_tx, double r_l) {
  MatchingNetwork n;
  n.variant = NetworkVariant::bare;
  n.z_tx = z_tx;
  n.r_l = r_l;
  n.validate();
  return n;
}

MatchingNetwork MatchingNetwork::make_rc(double c_t, double z_tx, double r_l) {
  MatchingNetwork n;
  n.variant = NetworkVariant::rc;
  n.c_t = c_t;
  n.z_tx = z_tx;
  n.r_l = r_l;
  n.validate();
  return n;
}

MatchingNetwork MatchingNetwork::make_rl(double l, double z_tx, double r_l) {
  MatchingNetwork n;
  n.variant = NetworkVariant::rl;
  n.l = l;
  n.z_tx = z_tx;
  n.r_l = r_l;
  n.validate();
  return n;
}

MatchingNetwork MatchingNetwork::make_rlc(double l, double c_t, double z_tx, double r_l) {
  MatchingNetwork n;
  n.variant = NetworkVariant::rlc;
  n.l = l;
  n.c_t = c_t;
  n.z_tx = z_tx;
  n.r_l = r_l;
  n.validate();
  return n;
}

void MatchingNetwork::validate() const {
  require(z_tx > 0, "network: z_tx must be > 0");
  require(r_l >= 0, "network: r_l must be >= 0");
  require(c_t >= 0, "network: c_t must be >= 0");
  require(l >= 0, "network: l must be >= 0");
  switch (variant) {
    case NetworkVariant::bare:
      require(c_t == 0 && l == 0, "network: bare variant carries no elements");
      break;
    case NetworkVariant::rc:
      require(l == 0, "network: rc variant carries no inductor");
      break;
    case NetworkVariant::rl:
      require(c_t == 0, "network: rl variant carries no tuning capacitor");
      require(l > 0, "network: rl variant requires l > 0");
      break;
    case NetworkVariant::rlc:
      break;
  }
}

void Environment::validate() const {
  require(temperature > 0, "environment: temperature must be > 0");
}

ElectricalSummary electrical_summary(const MatchingNetwork& network,
                                     const BvdParams& bvd, double omega_m) {
  if ((network.variant == NetworkVariant::rl || network.variant == NetworkVariant::rlc) &&
      network.l <= 0)
    throw std::domain_error("electrical_summary: rl/rlc variants require l > 0");

  ElectricalSummary s;
  const double line = network.line_resistance();
  s.eta_e = network.z_tx / line;
  if (network.has_series_inductor()) {
    s.resonant = true;
    s.z_lc = std::sqrt(network.l / network.total_shunt_capacitance(bvd.c_0));
    s.q_lc = s.z_lc / line;
    s.r_em = s.z_lc * s.z_lc / line;
    s.kappa_e = line / network.l;
  } else {
    s.resonant = false;
    const double tau = line * network.total_shunt_capacitance(bvd.c_0);
    s.r_em = line / (1.0 + tau * tau * omega_m * omega_m);
    s.kappa_e = s.r_em / bvd.l_m;
  }
  return s;
}

double thermal_occupancy(double omega, double temperature) {
  require(omega > 0, "thermal_occupancy: omega must be > 0");
  require(temperature > 0, "thermal_occupancy: temperature must be > 0");
  const double x = PhysicalConstants::hbar * omega /
                   (PhysicalConstants::k_boltzmann * temperature);
  if (x > 700.0) return 0.0;  // exp would overflow; occupancy is dead zero
  return 1.0 / std::expm1(x);
}

double reflection_s11(complexd z, double z_tx) {
  require(z_tx > 0, "reflection_s11: z_tx must be > 0");
  return std::abs((z - z_tx) / (z + z_tx));
}

}  // namespace xducer
