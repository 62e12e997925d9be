#pragma once

#include <functional>
#include <vector>

namespace cgme::quad {

struct Config {
  double rel_tol = 1e-8;
  double abs_floor = 1e-14;
  int max_panels = 200000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

// 15-point Kronrod / 7-point Gauss pair on [a, b].
Result gk15(const Integrand& f, double a, double b);

// Globally adaptive bisection over the panels defined by `breakpoints`
// (ascending). Refines the worst panel until the summed error estimate
// drops below max(rel_tol*|value|, abs_floor) or the panel budget runs out.
Result integrate(const Integrand& f, std::vector<double> breakpoints,
                 const Config& cfg = {});

// integral of p(w)*cos(psi - freq*w) over [a, b], with p the quadratic
// interpolant of `envelope` at the endpoints and midpoint. Exact moments,
// stable for freq*(b-a) >> 1.
double filon3_cos(const Integrand& envelope, double psi, double freq, double a,
                  double b);

}  // namespace cgme::quad
