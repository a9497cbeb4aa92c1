#include "qwalk/analytic/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/numerics/quadrature.hpp"

namespace qwalk::analytic {

SpectralDensity SpectralDensity::gaussian(double sigma0) {
  if (!(sigma0 >= 1.0)) {
    throw std::invalid_argument(
        "SpectralDensity: the Gaussian k-space density requires sigma0 >= 1 "
        "(below that the tails spill outside the Brillouin zone), got " +
        std::to_string(sigma0));
  }
  return SpectralDensity(Kind::gaussian, sigma0);
}

double SpectralDensity::operator()(double k) const {
  switch (kind_) {
    case Kind::local:
      return 1.0;
    case Kind::gaussian:
      return std::sqrt(8.0 * std::numbers::pi) * sigma0_ *
             std::exp(-2.0 * k * k * sigma0_ * sigma0_);
    case Kind::uniform_limit:
      break;
  }
  throw std::logic_error(
      "SpectralDensity: the uniform-limit density is a delta spike and "
      "cannot be sampled");
}

double cos_sq(double x) { return 0.5 * (1.0 + std::cos(2.0 * x)); }

double spectral_integral(const SpectralDensity& density, double delta,
                         double tol) {
  switch (density.kind()) {
    case SpectralDensity::Kind::local:
      return 1.0 - std::sqrt(2.0) / 2.0;
    case SpectralDensity::Kind::gaussian:
      return numerics::integrate_periodic(
          [&density, delta](double k) {
            const double c2 = cos_sq(k - delta);
            return density(k) * c2 / (1.0 + c2);
          },
          tol);
    case SpectralDensity::Kind::uniform_limit: {
      const double c2 = cos_sq(delta);
      return c2 / (1.0 + c2);
    }
  }
  throw std::logic_error("spectral_integral: unreachable");
}

}  // namespace qwalk::analytic
