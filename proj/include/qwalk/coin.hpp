#pragma once

#include <array>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

/// Column-major-free tiny 2x2 complex matrix, indexed (row, col).
struct Mat2c {
  Complex m00, m01, m10, m11;

  Complex operator()(int row, int col) const {
    return row == 0 ? (col == 0 ? m00 : m01) : (col == 0 ? m10 : m11);
  }
};

/// Max-norm of C†C - I; zero for a unitary matrix.
double unitarity_defect(const Mat2c& c);

/// SU(2) coin with split parameter q and phases theta, phi.
///
/// Phases are wrapped into [0, 2pi). The derived half-sum/half-difference
/// phases delta and eta are always recomputed from the wrapped values.
class CoinParams {
 public:
  CoinParams(double q, double theta, double phi);

  static CoinParams hadamard() { return {0.5, 0.0, 0.0}; }
  static CoinParams fourier();

  double q() const { return q_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }
  double delta() const { return 0.5 * (theta_ + phi_); }
  double eta() const { return 0.5 * (theta_ - phi_); }

  bool balanced(double tol = 1e-12) const;

 private:
  double q_;
  double theta_;
  double phi_;
};

/// [[sqrt(q), sqrt(1-q) e^{i theta}], [sqrt(1-q) e^{i phi}, -sqrt(q) e^{i(theta+phi)}]]
Mat2c coin_matrix(const CoinParams& coin);

}  // namespace qwalk
