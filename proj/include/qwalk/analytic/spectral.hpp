#pragma once

#include <cstdint>

namespace qwalk::analytic {

/// k-space probability density |f~(k)|^2 of an initial profile.
///  - local:         constant 1
///  - gaussian:      sqrt(8 pi) sigma0 e^{-2 k^2 sigma0^2}   (sigma0 >= 1,
///                   so the tails beyond the Brillouin zone are negligible
///                   and the density integrates to 1 under dk/2pi)
///  - uniform_limit: delta spike at k = 0; handled analytically and never
///                   sampled (operator() throws)
class SpectralDensity {
 public:
  enum class Kind { local, gaussian, uniform_limit };

  static SpectralDensity local() { return SpectralDensity(Kind::local, 0.0); }
  static SpectralDensity gaussian(double sigma0);
  static SpectralDensity uniform_limit() {
    return SpectralDensity(Kind::uniform_limit, 0.0);
  }

  Kind kind() const { return kind_; }
  double sigma0() const { return sigma0_; }

  double operator()(double k) const;

 private:
  SpectralDensity(Kind kind, double sigma0) : kind_(kind), sigma0_(sigma0) {}

  Kind kind_;
  double sigma0_;
};

/// cos^2(x) through the double angle, exact at multiples of pi/2.
double cos_sq(double x);

/// I(delta) = (1/2pi) int dk |f~(k)|^2 cos^2(k-delta) / (1+cos^2(k-delta)).
/// Local: 1 - sqrt(2)/2 in closed form (delta independent).
/// Gaussian: adaptive quadrature over the Brillouin zone at tolerance tol.
/// Uniform limit: cos^2(delta) / (1 + cos^2(delta)) in closed form.
double spectral_integral(const SpectralDensity& density, double delta,
                         double tol = 1e-10);

}  // namespace qwalk::analytic
