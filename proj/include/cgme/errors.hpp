#pragma once

#include <stdexcept>
#include <string>

namespace cgme {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or malformed inputs (dimension mismatch, out-of-range
// parameters, non-Hermitian samples, ...).
class invalid_input : public error {
public:
  using error::error;
};

// Quadrature did not reach the requested tolerance; carries the last
// error estimate so callers can decide whether the result is usable.
class accuracy_error : public error {
public:
  accuracy_error(const std::string& msg, double estimate)
      : error(msg), estimate_(estimate) {}
  double estimate() const { return estimate_; }

private:
  double estimate_;
};

// Quasienergy spectrum too close to degenerate for a well-defined
// Floquet eigenbasis.
class degenerate_spectrum_error : public error {
public:
  using error::error;
};

// Requested harmonic order cannot be resolved by the available kick samples.
class aliasing_error : public invalid_input {
public:
  using invalid_input::invalid_input;
};

// A structural invariant failed where theory guarantees it; signals an
// assembly bug rather than bad user input.
class consistency_error : public error {
public:
  using error::error;
};

}  // namespace cgme
