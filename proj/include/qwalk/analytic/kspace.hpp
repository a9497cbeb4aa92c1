#pragma once

#include <array>
#include <complex>
#include <utility>

#include "qwalk/coin.hpp"
#include "qwalk/spin.hpp"

namespace qwalk::analytic {

enum class Branch { plus, minus };

/// Eigenvalues of the balanced-coin walk operator in k-space:
///   lambda_pm = +- (e^{i delta}/sqrt(2)) [sqrt(1+cos^2(k-delta)) -+ i sin(k-delta)]
/// Both are unit modulus; their product is -e^{2 i delta}.
std::pair<std::complex<double>, std::complex<double>> eigenvalues_k(
    double k, double delta);

/// Squared normalization N_k+-^2 of the k-space eigenvectors:
///   4 -+ 2 [cos(k-delta) sqrt(1+cos^2(k-delta)) +- sin^2(k-delta)]
double eigenvector_norm_sq(double k, double delta, Branch branch);

/// Normalized k-space eigenvector (spin-up, spin-down components).
/// The pair {plus, minus} is orthonormal for every (k, coin).
/// Requires a balanced coin (q = 1/2).
std::array<std::complex<double>, 2> eigenvector_k(double k,
                                                  const CoinParams& coin,
                                                  Branch branch);

/// Z expectation on the eigenvector branches,
///   +- cos(k-d) [sqrt(1+cos^2(k-d)) -+ cos(k-d)]
///   --------------------------------------------,  d = delta,
///   1 + cos(k-d) [sqrt(1+cos^2(k-d)) -+ cos(k-d)]
/// entering the drift term of the long-time laws. On the principal
/// half-period |k - delta| <= pi/2 the plus branch dominates the minus
/// branch, with equality exactly at cos(k-delta) = 0.
double expect_z(double k, double delta, Branch branch);

/// Expansion coefficients (c+, c-) of the initial k-space spinor
/// (f~ cos(a/2), f~ e^{i b} sin(a/2)) over the eigenvector pair.
/// For a unit f~, |c+|^2 + |c-|^2 = 1, and
/// c+ |phi+> + c- |phi-> reconstructs the spinor exactly.
std::pair<std::complex<double>, std::complex<double>> ck_coefficients(
    double k, std::complex<double> f_tilde, const SpinState& spin,
    const CoinParams& coin);

}  // namespace qwalk::analytic
