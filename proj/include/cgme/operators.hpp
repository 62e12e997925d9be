#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <span>

#include "cgme/errors.hpp"
#include "cgme/tolerances.hpp"

namespace cgme {

using complex = std::complex<double>;
using Operator2 = Eigen::Matrix2cd;

// 4x4 matrix acting on column-stacked two-level operators.
using Superoperator = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

inline Operator2 identity2() { return Operator2::Identity(); }

inline Operator2 sigma_x() {
  Operator2 m;
  m << 0, 1, 1, 0;
  return m;
}

inline Operator2 sigma_y() {
  Operator2 m;
  m << 0, complex(0, -1), complex(0, 1), 0;
  return m;
}

inline Operator2 sigma_z() {
  Operator2 m;
  m << 1, 0, 0, -1;
  return m;
}

inline Operator2 sigma_plus() {
  Operator2 m;
  m << 0, 1, 0, 0;
  return m;
}

inline Operator2 sigma_minus() {
  Operator2 m;
  m << 0, 0, 1, 0;
  return m;
}

bool is_hermitian(const Operator2& m, double tol);
bool is_unitary(const Operator2& m, double tol);

// Column-stacking: vec = (m00, m10, m01, m11). Fixed repo-wide.
Vector4 vectorize(const Operator2& m);
Operator2 devectorize(const Vector4& v);

// Kronecker product on 2x2 blocks, consistent with the vectorization above:
// vec(A rho B) = kron(B^T, A) vec(rho).
Superoperator kron2(const Operator2& a, const Operator2& b);

// True when tr(S vec(rho)) == 0 for every operator rho (checked on a basis).
bool is_trace_preserving(const Superoperator& s, double tol);

// exp(s*M) for a 4x4 superoperator. Throws invalid_input on non-finite input.
Superoperator matrix_exp(const Superoperator& m, double s);

// Bessel function of the first kind J_n(x), |n| <= 16, |x| <= 50.
double bessel_j(int n, double x);

// Dissipative LGKS action:
//   sum_{jk} K_{jk} ( L_k rho L_j^dag - 1/2 {L_j^dag L_k, rho} ).
// K must be Hermitian within tol.kossakowski_hermiticity and match jumps in size.
Operator2 lgks_apply(const Eigen::MatrixXcd& kossakowski,
                     std::span<const Operator2> jumps, const Operator2& rho,
                     const Tolerances& tol = default_tolerances());

// Two-level density matrix; validates Hermiticity, unit trace and
// positivity on construction.
class DensityMatrix {
public:
  explicit DensityMatrix(const Operator2& m,
                         const Tolerances& tol = default_tolerances());
  static DensityMatrix from_bloch(double x, double y, double z,
                                  const Tolerances& tol = default_tolerances());

  const Operator2& matrix() const { return m_; }
  std::array<double, 3> bloch() const;
  double min_eigenvalue() const;

private:
  Operator2 m_;
};

// Eigenvalues of a Hermitian 2x2 matrix, ascending.
std::array<double, 2> hermitian_eigenvalues(const Operator2& m);

}  // namespace cgme
