#include "qwalk/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {
constexpr double kPi = std::numbers::pi;
}

SpinState::SpinState(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("SpinState: angles must be finite");
  }
  alpha_ = std::clamp(alpha, 0.0, kPi);
  // remainder() lands in [-pi, pi] directly
  beta_ = std::remainder(beta, 2.0 * kPi);
}

std::pair<std::complex<double>, std::complex<double>> bloch_spinor(
    const SpinState& spin) {
  const std::complex<double> i(0.0, 1.0);
  return {std::cos(spin.alpha() / 2.0),
          std::exp(i * spin.beta()) * std::sin(spin.alpha() / 2.0)};
}

std::vector<SpinState> spin_grid(double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("spin_grid: step must be positive");
  }
  // Tolerate i*step overshooting the bound by rounding only.
  const double slack = step * 1e-9;
  std::vector<double> alphas, betas;
  for (int i = 0;; ++i) {
    const double a = i * step;
    if (a > kPi + slack) break;
    alphas.push_back(std::min(a, kPi));
  }
  for (int i = 0;; ++i) {
    const double b = i * step;
    if (b > 2.0 * kPi + slack) break;
    betas.push_back(b);
  }
  std::vector<SpinState> grid;
  grid.reserve(alphas.size() * betas.size());
  for (double a : alphas) {
    for (double b : betas) {
      grid.emplace_back(a, b);
    }
  }
  return grid;
}

}  // namespace qwalk
