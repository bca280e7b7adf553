#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace xducer {

// Raised when a bounded iteration fails to reach its tolerance.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScalarOptimum {
  double x = 0;
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

// Golden-section search for the maximum of f on [lo, hi].
// Deterministic, derivative-free; rel_tol is on the bracket width.
ScalarOptimum golden_section_maximize(const std::function<double(double)>& f,
                                      double lo, double hi,
                                      double rel_tol = 1e-6,
                                      int max_iterations = 200);

// Bisection root of f on [lo, hi]; requires a sign change.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double rel_tol = 1e-12, int max_iterations = 200);

}  // namespace xducer
