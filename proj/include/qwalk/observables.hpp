#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Per-site probabilities at one time step, trimmed to the support.
/// Element i describes site j = j0 + i.
struct DistributionSnapshot {
  std::int64_t t = 0;
  std::int64_t j0 = 0;
  std::vector<double> p_up;
  std::vector<double> p_down;
  std::vector<double> p_total;

  std::size_t size() const { return p_total.size(); }
  std::int64_t site(std::size_t index) const {
    return j0 + static_cast<std::int64_t>(index);
  }
};

struct VariancePoint {
  std::int64_t t;
  double mean;
  double second_moment;
  double variance;
};

/// sigma^2(t) trajectory; one row per recorded step.
struct VarianceSeries {
  std::vector<VariancePoint> points;
};

enum class Side { negative, positive };

DistributionSnapshot probability_distribution(const WalkState& state);

/// sum_j j^m p_total(j), m <= 4. Compensated summation keeps the
/// 1e4-site windows within the stated tolerances.
double moment(const DistributionSnapshot& snapshot, int m);

/// moment(2) - moment(1)^2, clamped against negative round-off.
double variance(const DistributionSnapshot& snapshot);

/// Minority-to-majority spin probability mass ratio on one half-line,
/// excluding j = 0. Throws UndefinedRatioError when the half-line holds
/// no probability at all.
double side_ratio(const DistributionSnapshot& snapshot, Side side);

/// Mean and second moment straight off the amplitudes (no snapshot
/// allocation); the workhorse for per-step recording.
VariancePoint walk_moments(const WalkState& state);

/// Recorder that appends a VariancePoint at t = 0 (via prime()), then
/// every `every`-th step and always at `final_step`.
class VarianceRecorder {
 public:
  explicit VarianceRecorder(std::int64_t every = 1, std::int64_t final_step = -1)
      : every_(every <= 0 ? 1 : every), final_step_(final_step) {}

  void prime(const WalkState& initial) { series_.points.push_back(walk_moments(initial)); }

  void operator()(const WalkState& state) {
    if (state.t % every_ == 0 || state.t == final_step_) {
      series_.points.push_back(walk_moments(state));
    }
  }

  const VarianceSeries& series() const { return series_; }

 private:
  std::int64_t every_;
  std::int64_t final_step_;
  VarianceSeries series_;
};

}  // namespace qwalk
