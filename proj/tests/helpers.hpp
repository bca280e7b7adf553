#pragma once

#include <string>

#include "xducer/designer.hpp"
#include "xducer/scenario_file.hpp"

namespace xducer::testing {

inline TransducerScenario load_device(const std::string& name) {
  return io::parse_scenario(io::bundled_scenario_dir() / name).scenario;
}

inline DesignRequest request_from(const TransducerScenario& s, DesignMode mode) {
  DesignRequest req;
  req.mechanical = s.mechanical;
  req.bvd = s.bvd;
  req.optics = s.optics;
  req.env = s.env;
  req.mode = mode;
  req.z_tx = s.network.z_tx;
  req.r_l = s.network.r_l;
  return req;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::abs(b);
}

}  // namespace xducer::testing
