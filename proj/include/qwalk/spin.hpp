#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace qwalk {

/// Qubit on the Bloch sphere: alpha in [0, pi], beta stored in [-pi, pi].
/// Any real beta is accepted and wrapped; alpha is clamped against
/// floating-point spill just outside the poles.
class SpinState {
 public:
  SpinState(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Spinor components (cos(alpha/2), e^{i beta} sin(alpha/2)); unit norm.
std::pair<std::complex<double>, std::complex<double>> bloch_spinor(
    const SpinState& spin);

/// Cartesian grid alpha in {0, step, ..., <= pi} x beta in {0, step, ..., <= 2pi}.
/// step = 0.1 reproduces the 32 x 63 = 2016 ensemble.
std::vector<SpinState> spin_grid(double step);

}  // namespace qwalk
