#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "xducer/designer.hpp"

using namespace xducer;
using xducer::testing::load_device;
using xducer::testing::request_from;
using doctest::Approx;

TEST_CASE("max-eta design for the GaAs two-electrode device") {
  const auto r = design_max_eta(
      request_from(load_device("gaas_2el.scn"), DesignMode::maximize_eta));
  CHECK(r.network.variant == NetworkVariant::rlc);
  CHECK(r.network.c_t == Approx(39.41e-15).epsilon(0.02));
  CHECK(r.network.l == Approx(117e-9).epsilon(0.02));
  CHECK(100.0 * r.fom.eta_peak == Approx(3.9).epsilon(0.03));
  CHECK(r.fom.noise.total == Approx(0.48).epsilon(0.03));
  CHECK(r.fom.s11_at_wm < 1e-6);
  CHECK(r.fom.matched);
  CHECK(r.feasibility_notes.empty());
  // Self-consistency of the returned resonance with the returned network.
  CHECK(r.omega_m == Approx(effective_resonance(r.scenario.bvd, r.network.c_t))
                         .epsilon(1e-9));
}

TEST_CASE("max-eta design for the hybrid device approaches unit efficiency") {
  const auto r = design_max_eta(
      request_from(load_device("aln_on_si.scn"), DesignMode::maximize_eta));
  CHECK(100.0 * r.fom.eta_peak == Approx(99.95).epsilon(0.01));
  CHECK(r.fom.eta_peak <= 1.0 + 1e-9);
  REQUIRE(r.fom.bandwidth.delta_omega.has_value());
  CHECK(*r.fom.bandwidth.delta_omega / two_pi == Approx(288e3).epsilon(0.03));
}

TEST_CASE("low-impedance LiNbO3 device falls back to an rc network") {
  const DesignRequest req =
      request_from(load_device("linbo3.scn"), DesignMode::maximize_eta);
  CHECK_THROWS_AS(design_rlc_max_eta(req), InfeasibleUptransform);

  const auto r = design_max_eta(req);
  CHECK(r.network.variant == NetworkVariant::rc);
  REQUIRE_FALSE(r.feasibility_notes.empty());
  CHECK(r.network.c_t == Approx(2.666e-12).epsilon(0.02));
  CHECK(r.fom.kappa_e / two_pi == Approx(80e3).epsilon(0.02));
  CHECK(100.0 * r.fom.eta_peak == Approx(10.3).epsilon(0.02));
  CHECK(r.fom.s11_at_wm < 1e-6);  // rc matching nulls the reflection too
}

TEST_CASE("rc design hits the requested load transform") {
  const DesignRequest req =
      request_from(load_device("linbo3.scn"), DesignMode::maximize_eta);
  const double target = 9.9;
  const auto r = design_rc(req, target);
  const double c_em =
      cooperativity_em(r.network, req.bvd, r.omega_m);
  CHECK(c_em * req.bvd.r_m == Approx(target).epsilon(1e-6));

  // Brute-force sweep oracle: no tuning capacitance does better.
  const double line = req.z_tx + req.r_l;
  auto miss = [&](double c_t) {
    const auto s = electrical_summary(MatchingNetwork::make_rc(c_t), req.bvd,
                                      rc_effective_resonance(req.bvd, c_t, line));
    return std::abs(s.r_em - target);
  };
  const double best = miss(r.network.c_t);
  for (int i = 0; i < 10000; ++i) {
    const double c_t = r.network.c_t * std::pow(100.0, i / 9999.0 - 0.5);
    CHECK(miss(c_t) >= best - 1e-9 * target);
  }
}

TEST_CASE("rc design degenerates to the bare network in the short-RC-time limit") {
  const DesignRequest req =
      request_from(load_device("gaas_2el.scn"), DesignMode::maximize_eta);
  const double line = req.z_tx + req.r_l;
  const double omega = rc_effective_resonance(req.bvd, 0.0, line);
  const double tau0 = line * req.bvd.c_0;
  REQUIRE(tau0 * omega < 1e-3);
  const double target = line / (1.0 + tau0 * tau0 * omega * omega);
  const auto r = design_rc(req, target);
  CHECK(std::abs(r.network.c_t) < 1e-4 * req.bvd.c_0);
}

TEST_CASE("rc design refuses an unreachable down-transform target") {
  const DesignRequest req =
      request_from(load_device("linbo3.scn"), DesignMode::maximize_eta);
  CHECK_THROWS_AS(design_rc(req, 49.999), InfeasibleDowntransform);
  CHECK_THROWS_AS(design_rc(req, 80.0), InfeasibleDowntransform);
}

TEST_CASE("design flow never aborts: extreme up-transform lands on an rl network") {
  // A strongly pumped, high-Q, large-c_0 device whose matched load exceeds
  // what any c_t >= 0 reaches; the flow must settle on c_t = 0 with notes.
  DesignRequest req;
  req.mechanical.omega_s = two_pi * 2.4e9;
  req.mechanical.gamma_m = two_pi * 1e3;
  req.bvd = bvd_from_physical(req.mechanical.omega_s, req.mechanical.gamma_m,
                              10e-15, 1e-4);
  req.optics.omega_o = omega_from_wavelength(default_wavelength);
  req.optics.kappa_i = two_pi * 1e9;
  req.optics.g0 = two_pi * 2e6;
  req.optics.n_phot = 0;
  req.optics.n_phot_cap = 1e4;
  req.env.temperature = 0.1;
  req.mode = DesignMode::maximize_eta;

  const auto r = design_max_eta(req);
  CHECK(r.network.variant == NetworkVariant::rl);
  CHECK(r.feasibility_notes.size() >= 2);
  CHECK(r.fom.eta_peak > 0.0);
}

TEST_CASE("matching optimality: perturbing c_t cannot improve the design") {
  const auto r = design_max_eta(
      request_from(load_device("gaas_2el.scn"), DesignMode::maximize_eta));
  for (double scale : {0.99, 1.01}) {
    TransducerScenario perturbed = r.scenario;
    const double c_t = r.network.c_t * scale;
    const double wm = effective_resonance(perturbed.bvd, c_t);
    const double l = 1.0 / (wm * wm * (perturbed.bvd.c_0 + c_t));  // re-resonate
    perturbed.network = MatchingNetwork::make_rlc(l, c_t);
    CHECK(eta_peak(perturbed) <= r.fom.eta_peak * (1 + 1e-9));
  }
}

TEST_CASE("min-noise design for the GaAs two-electrode device") {
  const auto r = design_rl_min_noise(
      request_from(load_device("gaas_2el.scn"), DesignMode::minimize_noise));
  CHECK(r.network.variant == NetworkVariant::rl);
  CHECK(r.network.l == Approx(7.909e-6).epsilon(0.05));
  CHECK(r.fom.c_em == Approx(4860.0).epsilon(0.02));
  CHECK(r.fom.noise.total == Approx(1e-4).epsilon(0.10));
  CHECK(100.0 * r.fom.eta_peak == Approx(0.0034).epsilon(0.05));
  CHECK(r.n_phot == 280);
  CHECK(r.kappa_ext == r.scenario.optics.kappa_i);  // critical coupling
  CHECK(r.fom.bandwidth.mode_splitting);
  CHECK_FALSE(r.fom.bandwidth.delta_omega.has_value());
}

TEST_CASE("min-noise design reduces the pump when Raman noise would dominate") {
  const auto r = design_rl_min_noise(
      request_from(load_device("aln_on_si.scn"), DesignMode::minimize_noise));
  CHECK(r.n_phot == Approx(794.0).epsilon(0.01));
  CHECK(r.fom.noise.total == Approx(4.8e-8).epsilon(0.10));
  // The branch equates the two noise contributions.
  CHECK(r.fom.noise.optical == Approx(r.fom.noise.mechanical).epsilon(1e-9));
  CHECK(r.fom.eta_o == Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("min-noise design takes the cooperativity-matched branch when reachable") {
  DesignRequest req;
  req.mechanical.omega_s = two_pi * 2.4e9;
  req.mechanical.gamma_m = two_pi * 1e6;
  req.bvd = bvd_from_physical(req.mechanical.omega_s, req.mechanical.gamma_m,
                              50e-15, 1e-5);
  req.optics.omega_o = omega_from_wavelength(default_wavelength);
  req.optics.kappa_i = two_pi * 20e6;  // deeply resolved sidebands
  req.optics.g0 = two_pi * 100e3;
  req.optics.n_phot = 0;
  req.optics.n_phot_cap = 1e4;
  req.env.temperature = 0.1;
  req.mode = DesignMode::minimize_noise;

  const auto r = design_rl_min_noise(req);
  REQUIRE_FALSE(r.feasibility_notes.empty());
  CHECK(r.feasibility_notes.front().find("cooperativity-matched") != std::string::npos);
  CHECK(r.kappa_ext == req.optics.kappa_i);
  CHECK(r.n_phot < req.optics.n_phot_cap);
  const double expected_c_om =
      (1.0 + r.fom.c_em) / (r.fom.lp2 - r.fom.lm2);
  CHECK(r.fom.c_om == Approx(expected_c_om).epsilon(1e-6));
}

TEST_CASE("min-noise designs never add more noise than max-eta designs") {
  for (const char* name : {"gaas_2el.scn", "gaas_10el.scn", "gaas_pot.scn", "aln.scn",
                           "linbo3.scn", "aln_on_si.scn"}) {
    const TransducerScenario dev = load_device(name);
    const auto quiet = design_rl_min_noise(request_from(dev, DesignMode::minimize_noise));
    const auto loud = design_max_eta(request_from(dev, DesignMode::maximize_eta));
    CHECK(quiet.fom.noise.total <= loud.fom.noise.total);
  }
}

TEST_CASE("vanishing piezoelectric coupling starves the electrical interface") {
  DesignRequest req = request_from(load_device("gaas_2el.scn"), DesignMode::minimize_noise);
  req.bvd = bvd_from_physical(req.bvd.omega_s, req.bvd.gamma_m, req.bvd.c_0, 1e-12);
  const auto r = design_rl_min_noise(req);
  CHECK(r.fom.c_em < 1e-4);
  CHECK(r.fom.noise.total > 1e3);  // noise blows up as k2 -> 0
}

TEST_CASE("design results are reproducible") {
  const DesignRequest req =
      request_from(load_device("aln.scn"), DesignMode::maximize_eta);
  const auto a = design_max_eta(req);
  const auto b = design_max_eta(req);
  CHECK(a.network.c_t == b.network.c_t);
  CHECK(a.network.l == b.network.l);
  CHECK(a.kappa_ext == b.kappa_ext);
  CHECK(a.fom.eta_peak == b.fom.eta_peak);
}
