#include "qwalk/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double clamp_variance(double m1, double m2) {
  const double v = m2 - m1 * m1;
  // Single-site distributions can land a hair below zero.
  return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

}  // namespace

DistributionSnapshot probability_distribution(const WalkState& state) {
  const auto [lo, hi] = state.support();
  DistributionSnapshot snap;
  snap.t = state.t;
  snap.j0 = state.site(lo);
  const std::size_t n = hi - lo + 1;
  snap.p_up.resize(n);
  snap.p_down.resize(n);
  snap.p_total.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    snap.p_up[i] = std::norm(state.up[lo + i]);
    snap.p_down[i] = std::norm(state.down[lo + i]);
    snap.p_total[i] = snap.p_up[i] + snap.p_down[i];
  }
  return snap;
}

double moment(const DistributionSnapshot& snapshot, int m) {
  if (m < 0 || m > 4) {
    throw std::invalid_argument("moment: order must be in [0, 4]");
  }
  KahanSum acc;
  for (std::size_t i = 0; i < snapshot.size(); ++i) {
    const double j = static_cast<double>(snapshot.site(i));
    double jm = 1.0;
    for (int p = 0; p < m; ++p) jm *= j;
    acc.add(jm * snapshot.p_total[i]);
  }
  return acc.sum;
}

double variance(const DistributionSnapshot& snapshot) {
  return clamp_variance(moment(snapshot, 1), moment(snapshot, 2));
}

double side_ratio(const DistributionSnapshot& snapshot, Side side) {
  KahanSum mass_up, mass_down;
  for (std::size_t i = 0; i < snapshot.size(); ++i) {
    const std::int64_t j = snapshot.site(i);
    const bool in_side = (side == Side::negative) ? (j < 0) : (j > 0);
    if (!in_side) continue;
    mass_up.add(snapshot.p_up[i]);
    mass_down.add(snapshot.p_down[i]);
  }
  const double minority = std::min(mass_up.sum, mass_down.sum);
  const double majority = std::max(mass_up.sum, mass_down.sum);
  if (majority == 0.0) {
    throw UndefinedRatioError(
        "side_ratio: no probability mass on the requested half-line");
  }
  return minority / majority;
}

VariancePoint walk_moments(const WalkState& state) {
  KahanSum m1, m2;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state.up[i]) + std::norm(state.down[i]);
    if (p == 0.0) continue;
    const double j = static_cast<double>(state.site(i));
    m1.add(j * p);
    m2.add(j * j * p);
  }
  return {state.t, m1.sum, m2.sum, clamp_variance(m1.sum, m2.sum)};
}

}  // namespace qwalk
