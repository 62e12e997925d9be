#pragma once

namespace cgme {

// Numerical tolerances used across the library. Acceptance checks sweep
// these, so they live in one record instead of being scattered literals.
struct Tolerances {
  double hermiticity = 1e-12;             // per-entry, absolute
  double trace = 1e-10;                   // |tr(rho) - 1|
  double state_min_eigenvalue = -1e-9;    // density matrices
  double kossakowski_hermiticity = 1e-10;
  double kossakowski_min_eigenvalue = -1e-9;
  double trace_preservation = 1e-10;      // flattened generator column sums
  double unitarity = 1e-9;                // propagator / kick samples
  double quasienergy_degeneracy = 1e-10;  // relative to the driving frequency
  double kick_periodicity = 1e-8;
  double bloch_norm_excess = 1e-8;        // x^2+y^2+z^2 <= 1 + this
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace cgme
