#include "qwalk/numerics/polyfit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace qwalk::numerics {

namespace {

// Solves the symmetric 3x3 system M x = rhs by unpivoted Cholesky. The
// centered/scaled normal matrix is well conditioned; a vanishing pivot
// means the data are rank deficient.
std::array<double, 3> solve_spd3(const std::array<double, 6>& m,
                                 const std::array<double, 3>& rhs) {
  // m packs the lower triangle: [m00, m10, m11, m20, m21, m22]
  if (!(m[0] > 0.0)) throw RankDeficientFit("quadratic_fit: singular normal matrix");
  const double l00 = std::sqrt(m[0]);
  const double l10 = m[1] / l00;
  const double l20 = m[3] / l00;
  const double d11 = m[2] - l10 * l10;
  if (!(d11 > 1e-13 * m[2])) throw RankDeficientFit("quadratic_fit: singular normal matrix");
  const double l11 = std::sqrt(d11);
  const double l21 = (m[4] - l20 * l10) / l11;
  const double d22 = m[5] - l20 * l20 - l21 * l21;
  if (!(d22 > 1e-13 * m[5])) throw RankDeficientFit("quadratic_fit: singular normal matrix");
  const double l22 = std::sqrt(d22);

  // forward then backward substitution
  const double z0 = rhs[0] / l00;
  const double z1 = (rhs[1] - l10 * z0) / l11;
  const double z2 = (rhs[2] - l20 * z0 - l21 * z1) / l22;
  const double x2 = z2 / l22;
  const double x1 = (z1 - l21 * x2) / l11;
  const double x0 = (z0 - l10 * x1 - l20 * x2) / l00;
  return {x0, x1, x2};
}

}  // namespace

FitResult quadratic_fit(std::vector<FitPoint> points, double burn_in_fraction) {
  if (!(burn_in_fraction >= 0.0 && burn_in_fraction < 1.0)) {
    throw std::invalid_argument(
        "quadratic_fit: burn_in_fraction must lie in [0, 1)");
  }
  if (points.empty()) {
    throw std::invalid_argument("quadratic_fit: no points");
  }

  std::sort(points.begin(), points.end(), [](const FitPoint& a, const FitPoint& b) {
    return a.t != b.t ? a.t < b.t : a.y < b.y;
  });

  const double t_max = points.back().t;
  const double cutoff = burn_in_fraction * t_max;
  const auto first = std::find_if(points.begin(), points.end(),
                                  [&](const FitPoint& p) { return p.t >= cutoff; });
  points.erase(points.begin(), first);

  if (points.size() < 3) {
    throw std::invalid_argument(
        "quadratic_fit: need at least 3 points after burn-in, have " +
        std::to_string(points.size()));
  }
  std::size_t distinct = 1;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].t != points[i - 1].t) ++distinct;
  }
  if (distinct < 3) {
    throw RankDeficientFit(
        "quadratic_fit: need at least 3 distinct t values, have " +
        std::to_string(distinct));
  }

  // Centered abscissa u = (2t - (lo+hi)) / (hi-lo) in [-1, 1].
  const double lo = points.front().t;
  const double hi = points.back().t;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double inv_half = 1.0 / half;

  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  double b0 = 0, b1 = 0, b2 = 0;
  for (const FitPoint& p : points) {
    const double u = (p.t - mid) * inv_half;
    const double u2 = u * u;
    s1 += u;
    s2 += u2;
    s3 += u2 * u;
    s4 += u2 * u2;
    b0 += p.y;
    b1 += u * p.y;
    b2 += u2 * p.y;
  }
  const double n = static_cast<double>(points.size());
  const auto [p0, p1, p2] =
      solve_spd3({n, s1, s2, s2, s3, s4}, {b0, b1, b2});

  // y = p0 + p1 u + p2 u^2 back in terms of t.
  FitResult fit;
  const double c1 = p1 * inv_half;
  const double c2 = p2 * inv_half * inv_half;
  fit.C = c2;
  fit.B = c1 - 2.0 * c2 * mid;
  fit.A = p0 - c1 * mid + c2 * mid * mid;

  // Residuals evaluated in the scaled basis, where the model was solved.
  double ss = 0.0;
  for (const FitPoint& p : points) {
    const double u = (p.t - mid) * inv_half;
    const double r = p.y - (p0 + p1 * u + p2 * u * u);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  return fit;
}

}  // namespace qwalk::numerics
