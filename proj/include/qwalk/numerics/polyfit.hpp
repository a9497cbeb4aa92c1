#pragma once

#include <stdexcept>
#include <vector>

namespace qwalk::numerics {

struct FitPoint {
  double t;
  double y;
};

/// Coefficients of y = A + B t + C t^2 and the RMS of the residuals over
/// the fitted points.
struct FitResult {
  double A;
  double B;
  double C;
  double residual_rms;
};

/// Fewer than three distinct abscissae after the burn-in discard.
class RankDeficientFit : public std::invalid_argument {
 public:
  explicit RankDeficientFit(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Ordinary least squares for the quadratic model, using only points with
/// t >= burn_in_fraction * t_max. Points are sorted internally, so the
/// result is exactly invariant under input reordering. The abscissa is
/// scaled to [0, 1] before forming the 3x3 normal equations and the
/// coefficients are transformed back.
FitResult quadratic_fit(std::vector<FitPoint> points,
                        double burn_in_fraction = 0.1);

}  // namespace qwalk::numerics
