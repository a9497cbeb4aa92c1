#pragma once

#include <vector>

#include "qwalk/analytic/fit_table.hpp"
#include "qwalk/analytic/spectral.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/spin.hpp"

namespace qwalk::analytic {

/// Long-time coefficients of a single walk:
///   <j>_t       -> mean_coeff * t
///   sigma^2(t)  -> var_coeff * t^2,   velocity = sqrt(var_coeff).
/// var_coeff = I (1 - I [cos a + sin a cos(b + theta)]^2), always >= 0
/// since I <= 1/2 and the bracket squared is at most 2.
struct LongTimeLaw {
  double I;
  double mean_coeff;
  double var_coeff;
  double velocity;
};

/// I [cos(alpha) + sin(alpha) cos(beta + theta)], the drift velocity.
double long_time_mean_coeff(double I, const SpinState& spin, double theta);

LongTimeLaw long_time_variance_coeff(double I, const SpinState& spin,
                                     double theta);

enum class GaussianMethod { quadrature, fit_table };

/// Which initial-profile family a law refers to, plus how the Gaussian
/// spectral integral is evaluated.
struct VarianceFamily {
  SpectralDensity::Kind kind;
  double sigma0 = 0.0;
  GaussianMethod method = GaussianMethod::quadrature;

  static VarianceFamily local() {
    return {SpectralDensity::Kind::local};
  }
  static VarianceFamily gaussian(double sigma0,
                                 GaussianMethod method = GaussianMethod::quadrature) {
    return {SpectralDensity::Kind::gaussian, sigma0, method};
  }
  static VarianceFamily uniform_limit() {
    return {SpectralDensity::Kind::uniform_limit};
  }
};

/// I(delta) for a family, honoring the Gaussian method choice.
double family_spectral_integral(const VarianceFamily& family, double delta,
                                const FitTable& table = FitTable::published(),
                                double tol = 1e-10);

/// Spin-averaged quadratic coefficient of the variance:
///   local:         (2 sqrt(2) - 1) / 8, coin independent
///   gaussian:      [1 - (3/4) I_G] I_G
///   uniform limit: (4 cos^2 d + cos^4 d) / (4 (1 + cos^2 d)^2)
double avg_variance_coeff(const VarianceFamily& family, double delta,
                          const FitTable& table = FitTable::published(),
                          double tol = 1e-10);

struct SurfacePoint {
  double alpha;
  double beta;
  double velocity;
};

/// Dispersion velocity v = sqrt(var_coeff) on a spin grid, for contour
/// plots over the Bloch angles.
std::vector<SurfacePoint> velocity_surface(
    const VarianceFamily& family, const CoinParams& coin,
    const std::vector<SpinState>& grid,
    const FitTable& table = FitTable::published(), double tol = 1e-10);

}  // namespace qwalk::analytic
