#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qwalk/initial.hpp"
#include "qwalk/spin.hpp"

namespace qwalk {

/// Spin-up/down amplitude arrays over a finite lattice window.
/// Array element i holds the amplitudes of site j = offset + i.
struct WalkState {
  std::int64_t t = 0;
  std::int64_t offset = 0;
  std::vector<std::complex<double>> up;
  std::vector<std::complex<double>> down;

  std::size_t size() const { return up.size(); }
  std::int64_t site(std::size_t index) const {
    return offset + static_cast<std::int64_t>(index);
  }

  /// sum_j |up|^2 + |down|^2
  double total_norm() const;

  /// Indices of the first/last site holding any amplitude.
  /// Amplitudes outside the support are exact zeros.
  std::pair<std::size_t, std::size_t> support() const;
};

/// t = 0 state f(j) * (a0, b0) on a window spanning [-(T+r), T+r],
/// r = support radius of the profile. One step moves amplitude by one
/// site, so T steps never reach the window edge.
WalkState build_initial_state(const InitialDistribution& dist,
                              const SpinState& spin, std::int64_t horizon);

}  // namespace qwalk
