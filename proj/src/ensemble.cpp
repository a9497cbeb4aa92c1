#include "qwalk/ensemble.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qwalk/evolution.hpp"

namespace qwalk {

namespace {

// Fixed scheduling unit. Partial sums are produced per block and merged
// in block order, which keeps the floating-point result independent of
// the worker count.
constexpr std::size_t kBlockSize = 8;

struct BlockPartial {
  std::vector<double> sum_up;        // per window site, final step
  std::vector<double> sum_down;
  std::vector<VariancePoint> sums;   // per recorded step, summed over members
};

struct MemberGeometry {
  std::int64_t r = 0;
  std::int64_t half = 0;
  std::size_t window = 0;
};

}  // namespace

EnsembleResult ensemble_average(const InitialDistribution& dist,
                                const CoinParams& coin,
                                const std::vector<SpinState>& grid,
                                std::int64_t steps,
                                const EnsembleOptions& options) {
  if (grid.empty()) {
    throw std::invalid_argument("ensemble_average: spin grid is empty");
  }
  if (steps < 1) {
    throw std::invalid_argument("ensemble_average: steps must be >= 1");
  }

  MemberGeometry geom;
  geom.r = dist.support_radius();
  geom.half = steps + geom.r;
  geom.window = static_cast<std::size_t>(2 * geom.half + 1);

  const std::size_t n_members = grid.size();
  const std::size_t n_blocks = (n_members + kBlockSize - 1) / kBlockSize;

  unsigned workers = options.workers;
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, n_blocks));

  // Global accumulators, written only in block order.
  std::vector<double> total_up(geom.window, 0.0);
  std::vector<double> total_down(geom.window, 0.0);
  std::vector<VariancePoint> total_var;

  std::mutex merge_mutex;
  std::condition_variable merge_cv;
  std::size_t next_block = 0;
  std::atomic<std::size_t> block_counter{0};
  std::exception_ptr failure;
  bool aborted = false;

  auto run_member = [&](const SpinState& spin, BlockPartial& partial) {
    WalkState state = build_initial_state(dist, spin, steps);
    VarianceRecorder recorder(options.record_every, steps);
    recorder.prime(state);
    const WalkState final_state = evolve(state, coin, steps, std::ref(recorder));

    const auto& pts = recorder.series().points;
    if (partial.sums.empty()) {
      partial.sums = pts;
    } else {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        partial.sums[i].mean += pts[i].mean;
        partial.sums[i].second_moment += pts[i].second_moment;
        partial.sums[i].variance += pts[i].variance;
      }
    }
    for (std::size_t i = 0; i < geom.window; ++i) {
      partial.sum_up[i] += std::norm(final_state.up[i]);
      partial.sum_down[i] += std::norm(final_state.down[i]);
    }
  };

  auto worker_loop = [&]() {
    for (;;) {
      const std::size_t block = block_counter.fetch_add(1);
      if (block >= n_blocks) return;
      {
        std::lock_guard<std::mutex> lk(merge_mutex);
        if (aborted) return;
      }

      BlockPartial partial;
      partial.sum_up.assign(geom.window, 0.0);
      partial.sum_down.assign(geom.window, 0.0);
      try {
        const std::size_t begin = block * kBlockSize;
        const std::size_t end = std::min(begin + kBlockSize, n_members);
        for (std::size_t m = begin; m < end; ++m) {
          run_member(grid[m], partial);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(merge_mutex);
        if (!failure) failure = std::current_exception();
        aborted = true;
        merge_cv.notify_all();
        return;
      }

      // Merge strictly in block order.
      std::unique_lock<std::mutex> lk(merge_mutex);
      merge_cv.wait(lk, [&] { return aborted || next_block == block; });
      if (aborted) return;
      for (std::size_t i = 0; i < geom.window; ++i) {
        total_up[i] += partial.sum_up[i];
        total_down[i] += partial.sum_down[i];
      }
      if (total_var.empty()) {
        total_var = std::move(partial.sums);
      } else {
        for (std::size_t i = 0; i < partial.sums.size(); ++i) {
          total_var[i].mean += partial.sums[i].mean;
          total_var[i].second_moment += partial.sums[i].second_moment;
          total_var[i].variance += partial.sums[i].variance;
        }
      }
      ++next_block;
      merge_cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_loop);
  for (auto& th : pool) th.join();

  if (failure) std::rethrow_exception(failure);

  const double inv_n = 1.0 / static_cast<double>(n_members);
  EnsembleResult result;
  result.avg_variance.points = std::move(total_var);
  for (auto& p : result.avg_variance.points) {
    p.mean *= inv_n;
    p.second_moment *= inv_n;
    p.variance *= inv_n;
  }

  // Trim the averaged distribution to its support, like a single-walk
  // snapshot.
  std::size_t lo = 0, hi = geom.window - 1;
  const auto occupied = [&](std::size_t i) {
    return total_up[i] != 0.0 || total_down[i] != 0.0;
  };
  while (lo < geom.window && !occupied(lo)) ++lo;
  while (hi > lo && !occupied(hi)) --hi;

  DistributionSnapshot& snap = result.avg_distribution;
  snap.t = steps;
  snap.j0 = -geom.half + static_cast<std::int64_t>(lo);
  const std::size_t n_sites = hi - lo + 1;
  snap.p_up.resize(n_sites);
  snap.p_down.resize(n_sites);
  snap.p_total.resize(n_sites);
  for (std::size_t i = 0; i < n_sites; ++i) {
    snap.p_up[i] = total_up[lo + i] * inv_n;
    snap.p_down[i] = total_down[lo + i] * inv_n;
    snap.p_total[i] = snap.p_up[i] + snap.p_down[i];
  }
  return result;
}

}  // namespace qwalk
