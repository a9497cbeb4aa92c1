#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"

using namespace qwalk;
constexpr double kPi = std::numbers::pi;

namespace {

WalkState local_walk(double alpha, double beta, std::int64_t horizon) {
  return build_initial_state(InitialDistribution::local(),
                             SpinState(alpha, beta), horizon);
}

double prob_at(const WalkState& s, std::int64_t j) {
  const std::size_t i = static_cast<std::size_t>(j - s.offset);
  return std::norm(s.up[i]) + std::norm(s.down[i]);
}

}  // namespace

TEST_CASE("single Hadamard step from local spin-up") {
  const WalkState s1 = step(local_walk(0.0, 0.0, 4), CoinParams::hadamard());
  CHECK(s1.t == 1);
  CHECK(prob_at(s1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(prob_at(s1, -1) == doctest::Approx(0.5).epsilon(1e-14));
  const std::size_t i1 = static_cast<std::size_t>(1 - s1.offset);
  CHECK(std::abs(s1.up[i1] - 1.0 / std::sqrt(2.0)) < 1e-15);
  const std::size_t im1 = static_cast<std::size_t>(-1 - s1.offset);
  CHECK(std::abs(s1.down[im1] - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("three Hadamard steps reproduce the hand-iterated distribution") {
  WalkState s = local_walk(0.0, 0.0, 4);
  const CoinParams h = CoinParams::hadamard();
  for (int i = 0; i < 3; ++i) s = step(s, h);
  CHECK(prob_at(s, 3) == doctest::Approx(1.0 / 8).epsilon(1e-13));
  CHECK(prob_at(s, 1) == doctest::Approx(5.0 / 8).epsilon(1e-13));
  CHECK(prob_at(s, -1) == doctest::Approx(1.0 / 8).epsilon(1e-13));
  CHECK(prob_at(s, -3) == doctest::Approx(1.0 / 8).epsilon(1e-13));
}

TEST_CASE("norm is conserved per step for arbitrary coins") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> uq(0.05, 0.95), uang(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const CoinParams c(uq(rng), uang(rng), uang(rng));
    WalkState s = build_initial_state(InitialDistribution::gaussian(1.5),
                                      SpinState(uang(rng) / 2.0, uang(rng)), 30);
    for (int t = 0; t < 30; ++t) {
      const double before = s.total_norm();
      s = step(s, c);
      CHECK(std::abs(s.total_norm() - before) < 1e-12);
    }
  }
}

TEST_CASE("norm conservation over 1e4 steps stays within 1e-10") {
  WalkState s = local_walk(kPi / 3, 1.1, 10000);
  s = evolve(s, CoinParams::hadamard(), 10000);
  CHECK(std::abs(s.total_norm() - 1.0) < 1e-10);
}

TEST_CASE("parity: odd sites of a local walk carry no probability") {
  WalkState s = local_walk(1.0, 0.5, 9);
  s = evolve(s, CoinParams(0.5, 0.7, 1.9), 7);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((s.site(i) + 7) % 2 != 0) {
      CHECK(prob_at(s, s.site(i)) == 0.0);
    }
  }
}

TEST_CASE("evolve is deterministic bit for bit") {
  const CoinParams c(0.5, 2.2, 0.9);
  const WalkState s0 = build_initial_state(InitialDistribution::gaussian(2.0),
                                           SpinState(0.9, 4.0), 200);
  const WalkState a = evolve(s0, c, 200);
  const WalkState b = evolve(s0, c, 200);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.up.data(), b.up.data(), a.size() * sizeof(Complex)) == 0);
  CHECK(std::memcmp(a.down.data(), b.down.data(), a.size() * sizeof(Complex)) == 0);
}

TEST_CASE("evolve with zero steps returns the input unchanged") {
  const WalkState s0 = local_walk(0.3, 0.2, 3);
  const WalkState s = evolve(s0, CoinParams::hadamard(), 0);
  CHECK(s.t == 0);
  CHECK(s.up == s0.up);
  CHECK(s.down == s0.down);
}

TEST_CASE("evolve matches the scatter-form oracle walker") {
  const CoinParams c(0.5, 1.3, 2.6);
  const SpinState spin(2.0, 5.5);
  WalkState s = local_walk(spin.alpha(), spin.beta(), 40);
  testutil::NaiveWalk oracle = testutil::NaiveWalk::local(spin);
  s = evolve(s, c, 40);
  for (int t = 0; t < 40; ++t) oracle.step(c);
  for (std::int64_t j = -40; j <= 40; ++j) {
    CHECK(std::abs(prob_at(s, j) - oracle.probability(j)) < 1e-13);
  }
}

TEST_CASE("reflection: local spin-down walk mirrors the spin-up walk") {
  const CoinParams h = CoinParams::hadamard();
  WalkState up = evolve(local_walk(0.0, 0.0, 100), h, 100);
  WalkState down = evolve(local_walk(kPi, 0.0, 100), h, 100);
  for (std::int64_t j = -100; j <= 100; ++j) {
    CHECK(std::abs(prob_at(up, j) - prob_at(down, -j)) < 1e-13);
  }
}

TEST_CASE("variance recorder on the 3-step walk") {
  WalkState s = local_walk(0.0, 0.0, 3);
  VarianceRecorder rec(1, 3);
  rec.prime(s);
  evolve(s, CoinParams::hadamard(), 3, std::ref(rec));
  const auto& pts = rec.series().points;
  REQUIRE(pts.size() == 4);
  CHECK(pts[3].t == 3);
  CHECK(pts[3].mean == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(pts[3].second_moment == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(pts[3].variance == doctest::Approx(2.75).epsilon(1e-13));
}

TEST_CASE("symmetric local Hadamard walk: ballistic ratio is steady") {
  // (pi/2, pi/2) zeroes the drift bracket; sigma^2(t)/t^2 settles fast
  WalkState s = local_walk(kPi / 2, kPi / 2, 1000);
  VarianceRecorder rec(1, 1000);
  evolve(s, CoinParams::hadamard(), 1000, std::ref(rec));
  const auto& pts = rec.series().points;
  const auto ratio_at = [&](std::int64_t t) {
    for (const auto& p : pts) {
      if (p.t == t) return p.variance / static_cast<double>(t * t);
    }
    FAIL("missing time step");
    return 0.0;
  };
  const double r250 = ratio_at(250), r500 = ratio_at(500), r1000 = ratio_at(1000);
  CHECK(std::abs(r500 - r250) / r250 < 0.02);
  CHECK(std::abs(r1000 - r500) / r500 < 0.02);
  CHECK(std::abs(r1000 - r250) / r250 < 0.02);
}

TEST_CASE("window overflow is a hard error, not a truncation") {
  WalkState s = local_walk(0.0, 0.0, 2);
  const CoinParams h = CoinParams::hadamard();
  s = step(s, h);
  s = step(s, h);
  CHECK_THROWS_AS(step(s, h), WindowOverflowError);
  // and through evolve
  CHECK_THROWS_AS(evolve(local_walk(0.0, 0.0, 2), h, 3), WindowOverflowError);
  CHECK_NOTHROW(evolve(local_walk(0.0, 0.0, 2), h, 2));
}
