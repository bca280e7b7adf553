#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xducer/figures.hpp"
#include "xducer/numeric.hpp"

namespace xducer {

enum class DesignMode { maximize_eta, minimize_noise };

struct DesignRequest {
  MechanicalMode mechanical;
  BvdParams bvd;
  OpticalSubsystem optics;  // kappa_ext and n_phot are chosen by the design
  Environment env;
  DesignMode mode = DesignMode::maximize_eta;
  double z_tx = 50;
  double r_l = 0;
};

struct DesignResult {
  MatchingNetwork network;
  double kappa_ext = 0;
  double n_phot = 0;
  double omega_m = 0;
  TransducerScenario scenario;  // the designed operating point
  FiguresOfMerit fom;           // evaluated from `scenario`, never cached
  std::vector<std::string> feasibility_notes;
};

struct InfeasibleUptransform : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleDowntransform : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maximize-efficiency RLC synthesis: kappa_ext from kappa_ext_max_eta,
// n_phot at its cap, then a damped fixed point on (omega_m, c_t, L, L±^2)
// with the cooperativity-matching uptransform
//   c_t = 1/(omega_m sqrt(R_em_opt (z_tx+r_l))) - c_0,
//   L   = sqrt(R_em_opt (z_tx+r_l)) / omega_m.
// Throws InfeasibleUptransform when the network cannot up-transform to
// R_em_opt (target below the line resistance, or c_t < 0 required).
DesignResult design_rlc_max_eta(const DesignRequest& request);

// Minimize-noise RL synthesis: c_t = 0, L = 1/(omega_p^2 c_0), pump point
// from kappa_ext_min_noise (or the C_om-matched branch when reachable).
DesignResult design_rl_min_noise(const DesignRequest& request);

// RC down-transform to a given mechanical-side load target. Throws
// InfeasibleDowntransform when the target exceeds the c_t = 0 loading.
DesignResult design_rc(const DesignRequest& request, double target_r_em);

// Total maximize-eta flow: RLC first, falling back to RC and finally to a
// c_t = 0 RL network, annotating feasibility_notes. Never throws for a
// valid request.
DesignResult design_max_eta(const DesignRequest& request);

}  // namespace xducer
