#include <cmath>
#include <sstream>

#include "cgme/operators.hpp"

namespace cgme {

double bessel_j(int n, double x) {
  if (n < -16 || n > 16) {
    std::ostringstream os;
    os << "bessel_j: order " << n << " outside [-16, 16]";
    throw invalid_input(os.str());
  }
  if (!std::isfinite(x) || std::abs(x) > 50.0) {
    std::ostringstream os;
    os << "bessel_j: argument " << x << " outside [-50, 50]";
    throw invalid_input(os.str());
  }
  const int m = std::abs(n);
  const double ax = std::abs(x);
  double v = std::cyl_bessel_j(static_cast<double>(m), ax);
  // J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x).
  int flips = (n < 0 ? 1 : 0) + (x < 0 ? 1 : 0);
  if ((m % 2) != 0 && (flips % 2) != 0) v = -v;
  return v;
}

}  // namespace cgme
