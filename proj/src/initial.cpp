#include "qwalk/initial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

InitialDistribution InitialDistribution::local() {
  return {Kind::local, 0.0, 0};
}

InitialDistribution InitialDistribution::gaussian(double sigma0) {
  if (!(sigma0 > 0.0)) {
    throw std::invalid_argument(
        "InitialDistribution: sigma0 must be positive, got " +
        std::to_string(sigma0));
  }
  return {Kind::gaussian, sigma0, 0};
}

InitialDistribution InitialDistribution::uniform_box(std::int64_t width) {
  if (width <= 0) {
    throw std::invalid_argument("InitialDistribution: box width must be positive");
  }
  if (width % 2 == 0) {
    throw std::invalid_argument(
        "InitialDistribution: box width must be odd so the box centers on j=0, got " +
        std::to_string(width));
  }
  return {Kind::uniform_box, 0.0, width};
}

std::int64_t InitialDistribution::support_radius() const {
  switch (kind_) {
    case Kind::local:
      return 0;
    case Kind::gaussian:
      return static_cast<std::int64_t>(std::ceil(6.0 * sigma0_));
    case Kind::uniform_box:
      return (box_width_ - 1) / 2;
  }
  return 0;
}

std::vector<double> InitialDistribution::profile() const {
  const std::int64_t r = support_radius();
  std::vector<double> f(static_cast<std::size_t>(2 * r + 1), 0.0);
  switch (kind_) {
    case Kind::local:
      f[0] = 1.0;
      return f;
    case Kind::gaussian: {
      double norm_sq = 0.0;
      for (std::int64_t j = 0; j <= r; ++j) {
        const double v = std::exp(-static_cast<double>(j * j) /
                                  (4.0 * sigma0_ * sigma0_));
        f[static_cast<std::size_t>(r + j)] = v;
        f[static_cast<std::size_t>(r - j)] = v;
        norm_sq += (j == 0 ? 1.0 : 2.0) * v * v;
      }
      const double scale = 1.0 / std::sqrt(norm_sq);
      for (double& v : f) v *= scale;
      return f;
    }
    case Kind::uniform_box: {
      const double u = 1.0 / std::sqrt(static_cast<double>(box_width_));
      for (double& v : f) v = u;
      return f;
    }
  }
  return f;
}

}  // namespace qwalk
