#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/initial.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/spin.hpp"

namespace qwalk {

struct EnsembleOptions {
  /// 0 = use hardware concurrency.
  unsigned workers = 0;
  /// Record the variance series at t = 0, every `record_every` steps, and
  /// at the final step.
  std::int64_t record_every = 1;
};

struct EnsembleResult {
  /// Mean of the member per-site distributions at the final step.
  DistributionSnapshot avg_distribution;
  /// Mean of the member variance series (average of variances, not the
  /// variance of the averaged distribution).
  VarianceSeries avg_variance;
};

/// Evolves one walk per grid member and averages. Members run
/// concurrently; partial sums merge in a fixed member order, so the
/// result is bit-identical for any worker count. A failure in any member
/// aborts the whole ensemble.
EnsembleResult ensemble_average(const InitialDistribution& dist,
                                const CoinParams& coin,
                                const std::vector<SpinState>& grid,
                                std::int64_t steps,
                                const EnsembleOptions& options = {});

}  // namespace qwalk
