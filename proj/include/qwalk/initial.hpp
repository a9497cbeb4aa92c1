#pragma once

#include <cstdint>
#include <vector>

namespace qwalk {

/// Initial position profile f(j): a delta at the origin, a discrete
/// Gaussian of dispersion sigma0, or a flat box of odd width W centered
/// on j = 0. Profiles are renormalized by the explicit discrete sum, so
/// sum_j f(j)^2 == 1 for every parameter choice.
class InitialDistribution {
 public:
  enum class Kind { local, gaussian, uniform_box };

  static InitialDistribution local();
  static InitialDistribution gaussian(double sigma0);
  static InitialDistribution uniform_box(std::int64_t width);

  Kind kind() const { return kind_; }
  double sigma0() const { return sigma0_; }
  std::int64_t box_width() const { return box_width_; }

  /// Half-width of the nonzero support: 0 local, ceil(6 sigma0) Gaussian,
  /// (W-1)/2 box. Beyond this the profile is exactly zero.
  std::int64_t support_radius() const;

  /// Samples f(j) for j in [-r, r], r = support_radius(). Even in j by
  /// construction (mirrored, not re-evaluated).
  std::vector<double> profile() const;

 private:
  InitialDistribution(Kind kind, double sigma0, std::int64_t width)
      : kind_(kind), sigma0_(sigma0), box_width_(width) {}

  Kind kind_;
  double sigma0_;
  std::int64_t box_width_;
};

}  // namespace qwalk
