#include "qwalk/analytic/laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwalk::analytic {

namespace {

double spin_bracket(const SpinState& spin, double theta) {
  return std::cos(spin.alpha()) +
         std::sin(spin.alpha()) * std::cos(spin.beta() + theta);
}

}  // namespace

double long_time_mean_coeff(double I, const SpinState& spin, double theta) {
  return I * spin_bracket(spin, theta);
}

LongTimeLaw long_time_variance_coeff(double I, const SpinState& spin,
                                     double theta) {
  const double bracket = spin_bracket(spin, theta);
  // Clamp the rare exact-zero case that rounds a hair negative
  // (I = 1/2 with bracket^2 = 2).
  const double var = std::max(0.0, I * (1.0 - I * bracket * bracket));
  return {I, I * bracket, var, std::sqrt(var)};
}

double family_spectral_integral(const VarianceFamily& family, double delta,
                                const FitTable& table, double tol) {
  switch (family.kind) {
    case SpectralDensity::Kind::local:
      return spectral_integral(SpectralDensity::local(), delta, tol);
    case SpectralDensity::Kind::gaussian:
      if (family.method == GaussianMethod::fit_table) {
        return gauss_I_fitted(delta, family.sigma0, table);
      }
      return spectral_integral(SpectralDensity::gaussian(family.sigma0),
                               delta, tol);
    case SpectralDensity::Kind::uniform_limit:
      return spectral_integral(SpectralDensity::uniform_limit(), delta, tol);
  }
  throw std::logic_error("family_spectral_integral: unreachable");
}

double avg_variance_coeff(const VarianceFamily& family, double delta,
                          const FitTable& table, double tol) {
  switch (family.kind) {
    case SpectralDensity::Kind::local:
      return (2.0 * std::sqrt(2.0) - 1.0) / 8.0;
    case SpectralDensity::Kind::gaussian: {
      const double I = family_spectral_integral(family, delta, table, tol);
      return (1.0 - 0.75 * I) * I;
    }
    case SpectralDensity::Kind::uniform_limit: {
      const double c2 = cos_sq(delta);
      const double onepc2 = 1.0 + c2;
      return (4.0 * c2 + c2 * c2) / (4.0 * onepc2 * onepc2);
    }
  }
  throw std::logic_error("avg_variance_coeff: unreachable");
}

std::vector<SurfacePoint> velocity_surface(const VarianceFamily& family,
                                           const CoinParams& coin,
                                           const std::vector<SpinState>& grid,
                                           const FitTable& table, double tol) {
  const double I = family_spectral_integral(family, coin.delta(), table, tol);
  std::vector<SurfacePoint> surface;
  surface.reserve(grid.size());
  for (const SpinState& spin : grid) {
    const LongTimeLaw law = long_time_variance_coeff(I, spin, coin.theta());
    surface.push_back({spin.alpha(), spin.beta(), law.velocity});
  }
  return surface;
}

}  // namespace qwalk::analytic
