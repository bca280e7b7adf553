#include "xducer/designer.hpp"

#include <cmath>
#include <utility>

namespace xducer {

namespace {

void validate_request(const DesignRequest& req) {
  req.mechanical.validate();
  req.bvd.validate();
  req.env.validate();
  if (!(req.z_tx > 0)) throw std::domain_error("design: z_tx must be > 0");
  if (req.r_l < 0) throw std::domain_error("design: r_l must be >= 0");
  if (!(req.optics.n_phot_cap > 0))
    throw std::domain_error("design: n_phot_cap must be > 0");
}

OpticalSubsystem pumped_at_cap(const OpticalSubsystem& optics) {
  OpticalSubsystem out = optics;
  out.n_phot = out.n_phot_cap;
  out.red_locked = true;
  return out;
}

TransducerScenario assemble(const DesignRequest& req, MatchingNetwork network,
                            double kappa_ext, double n_phot) {
  TransducerScenario s;
  s.mechanical = req.mechanical;
  s.bvd = req.bvd;
  s.network = std::move(network);
  s.optics = req.optics;
  s.optics.kappa_ext = kappa_ext;
  s.optics.n_phot = n_phot;
  s.optics.n_phot_cap = std::max(req.optics.n_phot_cap, n_phot);
  s.optics.red_locked = true;
  s.env = req.env;
  return s;
}

DesignResult finish(const DesignRequest& req, MatchingNetwork network,
                    double kappa_ext, double n_phot,
                    std::vector<std::string> notes) {
  DesignResult result;
  result.network = network;
  result.kappa_ext = kappa_ext;
  result.n_phot = n_phot;
  result.scenario = assemble(req, std::move(network), kappa_ext, n_phot);
  result.omega_m = result.scenario.omega_m();
  result.fom = evaluate(result.scenario);
  result.feasibility_notes = std::move(notes);
  return result;
}

// Cooperativity-matched mechanical-side load at the given frequency and
// external coupling: r_m (1 + C_om (L+^2 - L-^2)).
double matched_load(const DesignRequest& req, const OpticalSubsystem& optics,
                    double omega_m) {
  const double kappa_o = optics.kappa_o();
  const double c_om = cooperativity_om(enhanced_coupling(optics.g0, optics.n_phot),
                                       req.bvd.gamma_m, kappa_o);
  const SidebandAmplitudes lorentz = sideband_amplitudes(kappa_o, -omega_m, omega_m);
  return req.bvd.r_m * (1.0 + c_om * (lorentz.upper - lorentz.lower));
}

}  // namespace

DesignResult design_rlc_max_eta(const DesignRequest& request) {
  validate_request(request);
  const OpticalSubsystem optics = pumped_at_cap(request.optics);
  const double line = request.z_tx + request.r_l;

  double omega_m = request.bvd.omega_s;
  double kappa_ext = 0;
  double c_t = 0;
  double prev_step = 0;
  bool converged = false;

  for (int i = 0; i < 100; ++i) {
    kappa_ext = kappa_ext_max_eta(optics, request.bvd.gamma_m, omega_m);
    OpticalSubsystem coupled = optics;
    coupled.kappa_ext = kappa_ext;
    const double r_opt = matched_load(request, coupled, omega_m);

    if (r_opt <= line)
      throw InfeasibleUptransform(
          "rlc design: matched load below the line resistance (down-transform "
          "regime, Q_LC < 1)");
    c_t = 1.0 / (omega_m * std::sqrt(r_opt * line)) - request.bvd.c_0;
    if (c_t < 0)
      throw InfeasibleUptransform(
          "rlc design: c_t >= 0 cannot reach the matched load");

    const double omega_next = effective_resonance(request.bvd, c_t);
    double step = omega_next - omega_m;
    if (prev_step != 0 && (step > 0) != (prev_step > 0)) step *= 0.5;  // damp oscillation
    prev_step = step;
    if (std::abs(step) <= 1e-10 * omega_m) {
      omega_m = omega_next;
      converged = true;
      break;
    }
    omega_m += step;
  }
  if (!converged)
    throw NoConvergence("rlc design: fixed point did not converge in 100 iterations");

  const double l = 1.0 / (omega_m * omega_m * (request.bvd.c_0 + c_t));
  MatchingNetwork network =
      MatchingNetwork::make_rlc(l, c_t, request.z_tx, request.r_l);
  return finish(request, network, kappa_ext, optics.n_phot, {});
}

DesignResult design_rc(const DesignRequest& request, double target_r_em) {
  validate_request(request);
  if (!(target_r_em > 0)) throw std::domain_error("rc design: target must be > 0");
  const double line = request.z_tx + request.r_l;

  double omega_m = request.bvd.omega_s;
  double c_t = 0;
  bool converged = false;
  for (int i = 0; i < 100; ++i) {
    const double ratio = line / target_r_em - 1.0;
    if (ratio < 0)
      throw InfeasibleDowntransform("rc design: target above the line resistance");
    c_t = std::sqrt(ratio) / (omega_m * line) - request.bvd.c_0;
    if (c_t < 0)
      throw InfeasibleDowntransform(
          "rc design: target above the c_t = 0 loading of this device");
    const double omega_next = rc_effective_resonance(request.bvd, c_t, line);
    if (std::abs(omega_next - omega_m) <= 1e-10 * omega_m) {
      omega_m = omega_next;
      converged = true;
      break;
    }
    omega_m = omega_next;
  }
  if (!converged)
    throw NoConvergence("rc design: fixed point did not converge in 100 iterations");

  const OpticalSubsystem optics = pumped_at_cap(request.optics);
  const double kappa_ext = kappa_ext_max_eta(optics, request.bvd.gamma_m, omega_m);
  MatchingNetwork network = MatchingNetwork::make_rc(c_t, request.z_tx, request.r_l);
  return finish(request, network, kappa_ext, optics.n_phot, {});
}

DesignResult design_max_eta(const DesignRequest& request) {
  std::vector<std::string> notes;
  try {
    return design_rlc_max_eta(request);
  } catch (const InfeasibleUptransform& e) {
    notes.push_back(std::string("rlc infeasible: ") + e.what() +
                    "; falling back to an rc network");
  }

  // RC fallback: make the matched target self-consistent with the RC
  // effective resonance (it moves by parts in 1e5 at most).
  const OpticalSubsystem optics = pumped_at_cap(request.optics);
  double omega_m = request.bvd.omega_s;
  for (int i = 0; i < 20; ++i) {
    const double kappa_ext = kappa_ext_max_eta(optics, request.bvd.gamma_m, omega_m);
    OpticalSubsystem coupled = optics;
    coupled.kappa_ext = kappa_ext;
    const double target = matched_load(request, coupled, omega_m);
    try {
      DesignResult result = design_rc(request, target);
      if (std::abs(result.omega_m - omega_m) <= 1e-10 * omega_m) {
        result.feasibility_notes = notes;
        return result;
      }
      omega_m = result.omega_m;
    } catch (const InfeasibleDowntransform& e) {
      notes.push_back(std::string("rc infeasible: ") + e.what() +
                      "; falling back to a c_t = 0 rl network");
      // Closest approach: maximum resonant enhancement at c_t = 0.
      const double omega_p = effective_resonance(request.bvd, 0.0);
      const double l = 1.0 / (omega_p * omega_p * request.bvd.c_0);
      MatchingNetwork network = MatchingNetwork::make_rl(l, request.z_tx, request.r_l);
      const double k_ext = kappa_ext_max_eta(optics, request.bvd.gamma_m, omega_p);
      return finish(request, network, k_ext, optics.n_phot, std::move(notes));
    }
  }
  throw NoConvergence("rc fallback: matched target did not settle");
}

DesignResult design_rl_min_noise(const DesignRequest& request) {
  validate_request(request);
  const OpticalSubsystem optics = pumped_at_cap(request.optics);

  const double omega_p = effective_resonance(request.bvd, 0.0);
  const double l = 1.0 / (omega_p * omega_p * request.bvd.c_0);
  MatchingNetwork network = MatchingNetwork::make_rl(l, request.z_tx, request.r_l);

  const double c_em_max = cooperativity_em(network, request.bvd, omega_p);
  const double n_m = thermal_occupancy(omega_p, request.env.temperature);
  std::vector<std::string> notes;

  // Cooperativity-matched branch (rarely reachable): requires the full
  // C_om = (1 + C_em_max)/(L+^2 - L-^2) within the pump cap, deep sideband
  // resolution, and optical noise below thermal at that point.
  {
    const double kappa_o = 2.0 * optics.kappa_i;  // critical coupling
    const double c_om_crit = cooperativity_om(
        enhanced_coupling(optics.g0, optics.n_phot_cap), request.bvd.gamma_m, kappa_o);
    const SidebandAmplitudes lorentz = sideband_amplitudes(kappa_o, -omega_p, omega_p);
    const double c_om_matched =
        (1.0 + c_em_max) / (lorentz.upper - lorentz.lower);
    if (c_om_matched <= c_om_crit && lorentz.lower < 0.01 &&
        c_om_matched * lorentz.lower < n_m) {
      const double n_phot = optics.n_phot_cap * c_om_matched / c_om_crit;
      notes.push_back("min-noise: cooperativity-matched optical branch");
      return finish(request, network, optics.kappa_i, n_phot, std::move(notes));
    }
  }

  const MinNoiseOpticalPoint point =
      kappa_ext_min_noise(optics, request.bvd.gamma_m, omega_p, n_m);
  if (!point.photon_limited)
    notes.push_back("min-noise: pump reduced to keep optical noise at the thermal level");
  return finish(request, network, point.kappa_ext, point.n_phot, std::move(notes));
}

}  // namespace xducer
