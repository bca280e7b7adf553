#include "xducer/numeric.hpp"

namespace xducer {

namespace {
constexpr double inv_phi = 0.6180339887498948482;  // 1/golden ratio
}

ScalarOptimum golden_section_maximize(const std::function<double(double)>& f,
                                      double lo, double hi, double rel_tol,
                                      int max_iterations) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_maximize: empty bracket");

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);

  ScalarOptimum out;
  for (int i = 0; i < max_iterations; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    out.iterations = i + 1;
    double mid = 0.5 * (a + b);
    if ((b - a) <= rel_tol * std::abs(mid)) {
      out.converged = true;
      out.x = fc > fd ? c : d;
      out.value = fc > fd ? fc : fd;
      return out;
    }
  }
  out.converged = false;
  out.x = fc > fd ? c : d;
  out.value = fc > fd ? fc : fd;
  return out;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double rel_tol, int max_iterations) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw std::invalid_argument("bisect_root: no sign change on bracket");

  double a = lo, b = hi;
  for (int i = 0; i < max_iterations; ++i) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0 || (b - a) <= rel_tol * std::abs(m)) return m;
    if ((fm > 0) == (flo > 0)) {
      a = m;
      flo = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace xducer
