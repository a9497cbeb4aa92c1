#include "qwalk/analytic/kspace.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk::analytic {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_balanced(const CoinParams& coin, const char* fn) {
  if (!coin.balanced()) {
    throw std::invalid_argument(std::string(fn) +
                                ": the k-space eigensystem assumes a balanced coin (q = 1/2)");
  }
}

}  // namespace

std::pair<Complex, Complex> eigenvalues_k(double k, double delta) {
  const double c = std::cos(k - delta);
  const double s = std::sin(k - delta);
  const double root = std::sqrt(1.0 + c * c);
  const Complex phase = std::exp(kI * delta) * kInvSqrt2;
  return {phase * Complex(root, -s), -phase * Complex(root, s)};
}

double eigenvector_norm_sq(double k, double delta, Branch branch) {
  const double c = std::cos(k - delta);
  const double s = std::sin(k - delta);
  const double root = std::sqrt(1.0 + c * c);
  return branch == Branch::plus ? 4.0 - 2.0 * (c * root + s * s)
                                : 4.0 + 2.0 * (c * root - s * s);
}

std::array<Complex, 2> eigenvector_k(double k, const CoinParams& coin,
                                     Branch branch) {
  require_balanced(coin, "eigenvector_k");
  const double delta = coin.delta();
  const auto [lp, lm] = eigenvalues_k(k, delta);
  // The eigenvector paired with branch +- under this phase convention is
  // built from -lambda_mp; that choice keeps {phi+, phi-} orthonormal
  // with the norms of eigenvector_norm_sq.
  const Complex lam = branch == Branch::plus ? -lm : -lp;
  const double inv_n =
      1.0 / std::sqrt(eigenvector_norm_sq(k, delta, branch));
  const Complex top = std::exp(kI * k);
  const Complex bottom =
      std::exp(-kI * (delta + coin.eta())) * (std::sqrt(2.0) * lam - top);
  return {inv_n * top, inv_n * bottom};
}

double expect_z(double k, double delta, Branch branch) {
  const double c = std::cos(k - delta);
  const double root = std::sqrt(1.0 + c * c);
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  const double bracket = root - sign * c;
  return sign * c * bracket / (1.0 + c * bracket);
}

std::pair<Complex, Complex> ck_coefficients(double k, Complex f_tilde,
                                            const SpinState& spin,
                                            const CoinParams& coin) {
  require_balanced(coin, "ck_coefficients");
  const double delta = coin.delta();
  const double eta = coin.eta();
  const Complex a_k = f_tilde * std::cos(spin.alpha() / 2.0);
  const Complex b_k =
      f_tilde * std::exp(kI * spin.beta()) * std::sin(spin.alpha() / 2.0);

  const auto [lp, lm] = eigenvalues_k(k, delta);
  const Complex common = b_k * std::exp(kI * eta);
  const Complex shift = std::exp(kI * (k - delta));
  const Complex base = std::exp(kI * delta);
  const Complex ephase = std::exp(-kI * k);

  const Complex cp = ephase / std::sqrt(eigenvector_norm_sq(k, delta, Branch::plus)) *
                     (a_k - common * (base - std::sqrt(2.0) * lp * shift));
  const Complex cm = ephase / std::sqrt(eigenvector_norm_sq(k, delta, Branch::minus)) *
                     (a_k - common * (base - std::sqrt(2.0) * lm * shift));
  return {cp, cm};
}

}  // namespace qwalk::analytic
