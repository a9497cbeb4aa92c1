#include "qwalk/walk_state.hpp"

#include <stdexcept>

namespace qwalk {

double WalkState::total_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < up.size(); ++i) {
    s += std::norm(up[i]) + std::norm(down[i]);
  }
  return s;
}

std::pair<std::size_t, std::size_t> WalkState::support() const {
  std::size_t lo = 0, hi = up.size() - 1;
  const auto occupied = [&](std::size_t i) {
    return up[i] != std::complex<double>(0.0) ||
           down[i] != std::complex<double>(0.0);
  };
  while (lo < up.size() && !occupied(lo)) ++lo;
  if (lo == up.size()) {
    throw std::logic_error("WalkState::support: state is identically zero");
  }
  while (!occupied(hi)) --hi;
  return {lo, hi};
}

WalkState build_initial_state(const InitialDistribution& dist,
                              const SpinState& spin, std::int64_t horizon) {
  if (horizon < 1) {
    throw std::invalid_argument("build_initial_state: horizon must be >= 1");
  }
  const std::int64_t r = dist.support_radius();
  const std::int64_t half = horizon + r;
  const std::size_t n = static_cast<std::size_t>(2 * half + 1);

  WalkState state;
  state.t = 0;
  state.offset = -half;
  state.up.assign(n, 0.0);
  state.down.assign(n, 0.0);

  const auto [a0, b0] = bloch_spinor(spin);
  const std::vector<double> f = dist.profile();
  const std::size_t center = static_cast<std::size_t>(half);
  for (std::int64_t j = -r; j <= r; ++j) {
    const double fj = f[static_cast<std::size_t>(j + r)];
    state.up[center + j] = fj * a0;
    state.down[center + j] = fj * b0;
  }
  return state;
}

}  // namespace qwalk
