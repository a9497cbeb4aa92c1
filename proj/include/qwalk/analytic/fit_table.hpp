#pragma once

#include <array>
#include <string>

#include <json.hpp>

namespace qwalk::analytic {

/// Fitted 1/sigma0 expansion of the three coefficients mu, nu, xi in the
/// approximate Gaussian spectral integral; each column holds a_0..a_4 of
/// sum_n a_n / sigma0^n, together with its standard errors.
struct FitTable {
  std::array<double, 5> mu;
  std::array<double, 5> nu;
  std::array<double, 5> xi;
  std::array<double, 5> mu_err;
  std::array<double, 5> nu_err;
  std::array<double, 5> xi_err;

  /// Compiled-in table of the published values.
  static const FitTable& published();

  /// Schema: {"rows": ["a0"... "a4"],
  ///          "mu": {"value": [...], "error": [...]}, "nu": ..., "xi": ...}
  static FitTable from_json(const nlohmann::json& doc);
  nlohmann::ordered_json to_json() const;

  double mu_at(double sigma0) const { return poly(mu, sigma0); }
  double nu_at(double sigma0) const { return poly(nu, sigma0); }
  double xi_at(double sigma0) const { return poly(xi, sigma0); }

 private:
  static double poly(const std::array<double, 5>& a, double sigma0);
};

/// Fitted-model spectral integral for Gaussian states:
///   (2 sigma0 / sqrt(2 pi)) (mu cos^4 d + nu cos^2 d + xi) / (1 + cos^2 d).
/// Only valid in the fitted regime sigma0 >= 1; smaller values throw
/// rather than extrapolate.
double gauss_I_fitted(double delta, double sigma0,
                      const FitTable& table = FitTable::published());

}  // namespace qwalk::analytic
