#include "qwalk/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

struct StepCoeffs {
  double rq;        // sqrt(q)
  Complex w_theta;  // sqrt(1-q) e^{i theta}
  Complex w_phi;    // sqrt(1-q) e^{i phi}
  Complex w_both;   // sqrt(q) e^{i (theta+phi)}
};

StepCoeffs make_coeffs(const CoinParams& coin) {
  const double rq = std::sqrt(coin.q());
  const double rp = std::sqrt(1.0 - coin.q());
  const Complex i(0.0, 1.0);
  return {rq, rp * std::exp(i * coin.theta()), rp * std::exp(i * coin.phi()),
          rq * std::exp(i * (coin.theta() + coin.phi()))};
}

// Norm drift of this size is far beyond summation noise and means the
// update itself is broken.
constexpr double kNormGuard = 1e-9;

// Writes the advanced amplitudes of `src` into `dst` (distinct buffers)
// and returns the new total norm. Sites outside the window are exact
// zeros on the infinite lattice, so edge reads are dropped.
double step_into(const WalkState& src, WalkState& dst, const StepCoeffs& c) {
  const std::size_t n = src.size();
  double norm = 0.0;
  dst.down[n - 1] = 0.0;
  dst.up[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    dst.up[i] = c.rq * src.up[i - 1] + c.w_theta * src.down[i - 1];
    dst.down[i - 1] = c.w_phi * src.up[i] - c.w_both * src.down[i];
    norm += std::norm(dst.up[i]) + std::norm(dst.down[i - 1]);
  }
  dst.t = src.t + 1;
  dst.offset = src.offset;
  return norm;
}

void check_headroom(const WalkState& state, std::size_t lo, std::size_t hi) {
  if (lo == 0 || hi + 1 >= state.size()) {
    throw WindowOverflowError(
        "step: support would touch the window edge at t = " +
        std::to_string(state.t + 1) +
        " (window sized for a shorter horizon)");
  }
}

void check_norm(double norm, std::int64_t t) {
  if (std::abs(norm - 1.0) > kNormGuard) {
    throw NormDriftError("evolve: total norm drifted to " +
                             std::to_string(norm) + " at t = " +
                             std::to_string(t),
                         norm);
  }
}

}  // namespace

WalkState step(const WalkState& state, const CoinParams& coin) {
  const auto [lo, hi] = state.support();
  check_headroom(state, lo, hi);
  WalkState next;
  next.up.assign(state.size(), 0.0);
  next.down.assign(state.size(), 0.0);
  const double norm = step_into(state, next, make_coeffs(coin));
  check_norm(norm, next.t);
  return next;
}

WalkState evolve(const WalkState& state, const CoinParams& coin,
                 std::int64_t steps, const StepRecorder& record) {
  if (steps < 0) {
    throw std::invalid_argument("evolve: steps must be >= 0");
  }
  WalkState cur = state;
  if (steps == 0) return cur;

  WalkState buf;
  buf.up.assign(cur.size(), 0.0);
  buf.down.assign(cur.size(), 0.0);

  const StepCoeffs coeffs = make_coeffs(coin);
  auto [lo, hi] = cur.support();
  for (std::int64_t s = 0; s < steps; ++s) {
    check_headroom(cur, lo, hi);
    const double norm = step_into(cur, buf, coeffs);
    check_norm(norm, buf.t);
    std::swap(cur, buf);
    --lo;
    ++hi;
    if (record) record(cur);
  }
  return cur;
}

}  // namespace qwalk
