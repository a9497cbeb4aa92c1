#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"

using namespace qwalk;
constexpr double kPi = std::numbers::pi;

namespace {

DistributionSnapshot hadamard_local_t3() {
  WalkState s = build_initial_state(InitialDistribution::local(),
                                    SpinState(0.0, 0.0), 3);
  s = evolve(s, CoinParams::hadamard(), 3);
  return probability_distribution(s);
}

double p_total_at(const DistributionSnapshot& snap, std::int64_t j) {
  for (std::size_t i = 0; i < snap.size(); ++i) {
    if (snap.site(i) == j) return snap.p_total[i];
  }
  return 0.0;
}

}  // namespace

TEST_CASE("probability_distribution trivial and hand-iterated cases") {
  {
    const WalkState s = build_initial_state(InitialDistribution::local(),
                                            SpinState(0.0, 0.0), 2);
    const auto snap = probability_distribution(s);
    CHECK(snap.t == 0);
    REQUIRE(snap.size() == 1);
    CHECK(snap.site(0) == 0);
    CHECK(snap.p_total[0] == doctest::Approx(1.0));
  }
  {
    const auto snap = hadamard_local_t3();
    CHECK(p_total_at(snap, -3) == doctest::Approx(1.0 / 8).epsilon(1e-13));
    CHECK(p_total_at(snap, -1) == doctest::Approx(1.0 / 8).epsilon(1e-13));
    CHECK(p_total_at(snap, 1) == doctest::Approx(5.0 / 8).epsilon(1e-13));
    CHECK(p_total_at(snap, 3) == doctest::Approx(1.0 / 8).epsilon(1e-13));
  }
}

TEST_CASE("snapshot normalization and pointwise consistency") {
  WalkState s = build_initial_state(InitialDistribution::gaussian(1.5),
                                    SpinState(1.2, 0.7), 50);
  s = evolve(s, CoinParams(0.5, 0.3, 1.1), 50);
  const auto snap = probability_distribution(s);
  double total = 0.0;
  for (std::size_t i = 0; i < snap.size(); ++i) {
    CHECK(snap.p_total[i] == snap.p_up[i] + snap.p_down[i]);
    total += snap.p_total[i];
  }
  CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("discrete-renormalized Gaussian at t=0: origin weight and width") {
  // direct-sum oracle: p(0) = 1 / sum_j e^{-j^2/2} for sigma0 = 1
  double denom = 1.0;
  for (int j = 1; j <= 60; ++j) denom += 2.0 * std::exp(-0.5 * j * j);
  const double expected_p0 = 1.0 / denom;
  CHECK(expected_p0 == doctest::Approx(0.3989422).epsilon(1e-6));

  const WalkState s = build_initial_state(InitialDistribution::gaussian(1.0),
                                          SpinState(0.4, 2.0), 1);
  const auto snap = probability_distribution(s);
  CHECK(p_total_at(snap, 0) == doctest::Approx(expected_p0).epsilon(1e-12));

  // sigma0 = 10 at t = 0: the discrete second moment reproduces sigma0^2
  const WalkState g10 = build_initial_state(InitialDistribution::gaussian(10.0),
                                            SpinState(0.4, 2.0), 1);
  CHECK(variance(probability_distribution(g10)) ==
        doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("moments of the t=3 Hadamard distribution") {
  const auto snap = hadamard_local_t3();
  CHECK(moment(snap, 0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(moment(snap, 1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(moment(snap, 2) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(variance(snap) == doctest::Approx(2.75).epsilon(1e-13));
  CHECK_THROWS_AS(moment(snap, 5), std::invalid_argument);
  CHECK_THROWS_AS(moment(snap, -1), std::invalid_argument);
}

TEST_CASE("variance of any single-site distribution is zero") {
  const WalkState s = build_initial_state(InitialDistribution::local(),
                                          SpinState(0.9, 0.1), 2);
  CHECK(variance(probability_distribution(s)) == 0.0);
}

TEST_CASE("walk_moments agrees with the snapshot path") {
  WalkState s = build_initial_state(InitialDistribution::gaussian(2.0),
                                    SpinState(0.8, 1.3), 64);
  s = evolve(s, CoinParams(0.5, 1.0, 0.2), 64);
  const auto vp = walk_moments(s);
  const auto snap = probability_distribution(s);
  CHECK(vp.mean == doctest::Approx(moment(snap, 1)).epsilon(1e-12));
  CHECK(vp.second_moment == doctest::Approx(moment(snap, 2)).epsilon(1e-12));
  CHECK(vp.t == 64);
}

TEST_CASE("side_ratio basics") {
  // t = 0 local state: nothing on either half-line
  const WalkState s0 = build_initial_state(InitialDistribution::local(),
                                           SpinState(0.0, 0.0), 2);
  CHECK_THROWS_AS(side_ratio(probability_distribution(s0), Side::negative),
                  UndefinedRatioError);

  // after a couple of Hadamard steps both spins populate both sides
  WalkState s = build_initial_state(InitialDistribution::local(),
                                    SpinState(kPi / 2, kPi / 2), 6);
  s = evolve(s, CoinParams::hadamard(), 6);
  const auto snap = probability_distribution(s);
  const double rn = side_ratio(snap, Side::negative);
  const double rp = side_ratio(snap, Side::positive);
  CHECK(rn >= 0.0);
  CHECK(rn <= 1.0);
  CHECK(rp >= 0.0);
  CHECK(rp <= 1.0);
}
