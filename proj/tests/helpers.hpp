#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>

#include "qwalk/coin.hpp"
#include "qwalk/spin.hpp"

namespace testutil {

// Independent reference walker: sparse map over sites, scatter-form
// update (each source site pushes its contributions), as opposed to the
// library's dense gather-form stencil. Used as the brute-force oracle.
struct NaiveWalk {
  using Amp = std::complex<double>;
  std::map<std::int64_t, std::pair<Amp, Amp>> sites;  // j -> (up, down)

  static NaiveWalk local(const qwalk::SpinState& spin) {
    NaiveWalk w;
    const auto [a0, b0] = qwalk::bloch_spinor(spin);
    w.sites[0] = {a0, b0};
    return w;
  }

  void step(const qwalk::CoinParams& coin) {
    const double rq = std::sqrt(coin.q());
    const double rp = std::sqrt(1.0 - coin.q());
    const Amp i(0.0, 1.0);
    const Amp w_theta = rp * std::exp(i * coin.theta());
    const Amp w_phi = rp * std::exp(i * coin.phi());
    const Amp w_both = rq * std::exp(i * (coin.theta() + coin.phi()));

    std::map<std::int64_t, std::pair<Amp, Amp>> next;
    for (const auto& [j, amps] : sites) {
      const auto& [a, b] = amps;
      next[j + 1].first += rq * a + w_theta * b;
      next[j - 1].second += w_phi * a - w_both * b;
    }
    sites = std::move(next);
  }

  double probability(std::int64_t j) const {
    const auto it = sites.find(j);
    if (it == sites.end()) return 0.0;
    return std::norm(it->second.first) + std::norm(it->second.second);
  }
};

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::abs(b);
}

}  // namespace testutil
