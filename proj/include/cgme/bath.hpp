#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <string>

#include "cgme/errors.hpp"
#include "cgme/quadrature.hpp"

namespace cgme {

// Ohmic reservoir with exponential cutoff: Gamma(w) = Gamma0 * w * exp(-|w|/wc),
// continued to the full axis as an odd function.
struct OhmicBath {
  double gamma0;   // dimensionless coupling strength
  double omega_c;  // cutoff (energy)
  double beta;     // inverse temperature (1/energy)
  void validate() const;
};

double spectral_density(const OhmicBath& bath, double omega);
double bose_occupation(double beta, double omega);

// Even Fourier transform of the reservoir correlation function,
// gamma(w) = Gamma(w) [1 + n_B(w)]; smooth analytic limit Gamma0/beta at w=0.
double gamma_ft(const OhmicBath& bath, double omega);

// Arguments of the nascent-delta kernel f_{t0}^tau(alpha, beta, w).
struct KernelSpec {
  double t0 = 0.0;
  double tau = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  void validate() const;
};

// f = (tau/2pi) e^{i(alpha-beta)t0} e^{i(alpha-beta)tau/2}
//       sinc[(alpha-w)tau/2] sinc[(beta-w)tau/2]
std::complex<double> f_kernel(const KernelSpec& spec, double omega);

// sin(x)/x with a series branch near zero.
double sinc(double x);

// A correlation-function Fourier transform together with the metadata the
// frequency integrator needs: a stable identity for caching, the support
// (Theta-restricted transforms live on a half axis) and the decay scale
// used for domain truncation.
struct SpectralFunction {
  std::string label;
  std::function<double(double)> fn;
  double support_min = -std::numeric_limits<double>::infinity();
  double support_max = std::numeric_limits<double>::infinity();
  double decay_scale = 1.0;  // cutoff scale; truncation uses 12x this
  double operator()(double w) const { return fn(w); }
};

SpectralFunction make_gamma(const OhmicBath& bath);
// Theta(w) Gamma(w) [1 + n_B(w)]   (emission into the bath)
SpectralFunction make_gamma_emission(const OhmicBath& bath);
// Theta(-w) Gamma(-w) n_B(-w)      (absorption from the bath)
SpectralFunction make_gamma_absorption(const OhmicBath& bath);

// Default quadrature settings; CGME_QUAD_RELTOL overrides the relative
// tolerance for exploratory runs.
quad::Config default_quadrature();

// integral of gamma(w) f_{t0}^tau(alpha, beta, w) dw over the truncated
// domain |w| <= max(12*decay_scale, |alpha|+|beta|+80pi/tau). Results are
// cached by (label, alpha, beta, tau). Throws accuracy_error when the
// adaptive scheme cannot reach the tolerance.
std::complex<double> freq_integral(const SpectralFunction& gamma,
                                   const KernelSpec& spec,
                                   const quad::Config& cfg = default_quadrature());
std::complex<double> freq_integral(const OhmicBath& bath, const KernelSpec& spec,
                                   const quad::Config& cfg = default_quadrature());

// (4/pi) * integral of gamma(w) sin^2(w t / 2) / w^2 dw  (>= 0, zero at t=0).
double decoherence_integral(const OhmicBath& bath, double t,
                            const quad::Config& cfg = default_quadrature());

// (t/tau) * decoherence_integral(bath, tau).
double cg_exponent(const OhmicBath& bath, double t, double tau,
                   const quad::Config& cfg = default_quadrature());

void clear_freq_integral_cache();

}  // namespace cgme
