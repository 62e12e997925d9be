#include <unsupported/Eigen/MatrixFunctions>

#include "cgme/operators.hpp"

namespace cgme {

Superoperator matrix_exp(const Superoperator& m, double s) {
  if (!m.allFinite() || !std::isfinite(s))
    throw invalid_input("matrix_exp: non-finite input");
  if (s == 0.0) return Superoperator::Identity();
  return Superoperator(s * m).exp();
}

}  // namespace cgme
