#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double x) {
  double w = x - kTwoPi * std::floor(x / kTwoPi);
  if (w >= kTwoPi) w = 0.0;  // floor rounding at the seam
  return w;
}

}  // namespace

CoinParams::CoinParams(double q, double theta, double phi)
    : q_(q), theta_(wrap_angle(theta)), phi_(wrap_angle(phi)) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("CoinParams: q must lie in [0, 1], got " +
                                std::to_string(q));
  }
}

CoinParams CoinParams::fourier() {
  return {0.5, std::numbers::pi / 2.0, std::numbers::pi / 2.0};
}

bool CoinParams::balanced(double tol) const {
  return std::abs(q_ - 0.5) <= tol;
}

Mat2c coin_matrix(const CoinParams& coin) {
  const double rq = std::sqrt(coin.q());
  const double rp = std::sqrt(1.0 - coin.q());
  const Complex i(0.0, 1.0);
  return Mat2c{rq, rp * std::exp(i * coin.theta()),
               rp * std::exp(i * coin.phi()),
               -rq * std::exp(i * (coin.theta() + coin.phi()))};
}

double unitarity_defect(const Mat2c& c) {
  // rows of C†C - I
  const Complex g00 = std::conj(c.m00) * c.m00 + std::conj(c.m10) * c.m10 - 1.0;
  const Complex g01 = std::conj(c.m00) * c.m01 + std::conj(c.m10) * c.m11;
  const Complex g10 = std::conj(c.m01) * c.m00 + std::conj(c.m11) * c.m10;
  const Complex g11 = std::conj(c.m01) * c.m01 + std::conj(c.m11) * c.m11 - 1.0;
  return std::max(std::max(std::abs(g00), std::abs(g01)),
                  std::max(std::abs(g10), std::abs(g11)));
}

}  // namespace qwalk
