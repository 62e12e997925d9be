#include "cgme/operators.hpp"

#include <cmath>
#include <sstream>

namespace cgme {

bool is_hermitian(const Operator2& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= 2 * tol;
}

bool is_unitary(const Operator2& m, double tol) {
  return ((m.adjoint() * m) - Operator2::Identity()).cwiseAbs().maxCoeff() <=
         tol;
}

Vector4 vectorize(const Operator2& m) {
  Vector4 v;
  v << m(0, 0), m(1, 0), m(0, 1), m(1, 1);
  return v;
}

Operator2 devectorize(const Vector4& v) {
  Operator2 m;
  m << v(0), v(2), v(1), v(3);
  return m;
}

Superoperator kron2(const Operator2& a, const Operator2& b) {
  Superoperator s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      s.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return s;
}

bool is_trace_preserving(const Superoperator& s, double tol) {
  // tr(devectorize(S e_j)) = S(0,j) + S(3,j) must vanish for every column.
  for (int j = 0; j < 4; ++j) {
    if (std::abs(s(0, j) + s(3, j)) > tol) return false;
  }
  return true;
}

Operator2 lgks_apply(const Eigen::MatrixXcd& kossakowski,
                     std::span<const Operator2> jumps, const Operator2& rho,
                     const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(jumps.size());
  if (kossakowski.rows() != n || kossakowski.cols() != n)
    throw invalid_input("lgks_apply: Kossakowski matrix is " +
                        std::to_string(kossakowski.rows()) + "x" +
                        std::to_string(kossakowski.cols()) + " but there are " +
                        std::to_string(jumps.size()) + " jump operators");
  if (n > 0 &&
      (kossakowski - kossakowski.adjoint()).cwiseAbs().maxCoeff() >
          2 * tol.kossakowski_hermiticity)
    throw invalid_input("lgks_apply: Kossakowski matrix is not Hermitian");

  Operator2 out = Operator2::Zero();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const complex w = kossakowski(j, k);
      if (w == complex(0, 0)) continue;
      const Operator2 jd_k = jumps[j].adjoint() * jumps[k];
      out += w * (jumps[k] * rho * jumps[j].adjoint() -
                  0.5 * (jd_k * rho + rho * jd_k));
    }
  }
  return out;
}

std::array<double, 2> hermitian_eigenvalues(const Operator2& m) {
  const double a = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double d = 0.5 * (m(0, 0).real() - m(1, 1).real());
  const double r = std::hypot(d, std::abs(m(0, 1)));
  return {a - r, a + r};
}

DensityMatrix::DensityMatrix(const Operator2& m, const Tolerances& tol)
    : m_(m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 2 * tol.hermiticity) {
    std::ostringstream os;
    os << "DensityMatrix: Hermiticity defect " << herm;
    throw invalid_input(os.str());
  }
  const double tr_err = std::abs(m.trace() - complex(1, 0));
  if (tr_err > tol.trace) {
    std::ostringstream os;
    os << "DensityMatrix: trace deviates from 1 by " << tr_err;
    throw invalid_input(os.str());
  }
  const Operator2 h = 0.5 * (m + m.adjoint());
  const double lo = hermitian_eigenvalues(h)[0];
  if (lo < tol.state_min_eigenvalue) {
    std::ostringstream os;
    os << "DensityMatrix: minimum eigenvalue " << lo;
    throw invalid_input(os.str());
  }
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z,
                                        const Tolerances& tol) {
  Operator2 m = 0.5 * (identity2() + x * sigma_x() + y * sigma_y() +
                       z * sigma_z());
  return DensityMatrix(m, tol);
}

std::array<double, 3> DensityMatrix::bloch() const {
  return {(sigma_x() * m_).trace().real(), (sigma_y() * m_).trace().real(),
          (sigma_z() * m_).trace().real()};
}

double DensityMatrix::min_eigenvalue() const {
  return hermitian_eigenvalues(0.5 * (m_ + m_.adjoint()))[0];
}

}  // namespace cgme
