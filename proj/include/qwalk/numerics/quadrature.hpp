#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace qwalk::numerics {

/// Thrown when adaptive refinement hits the panel budget before the
/// requested tolerance; carries the best estimate reached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_estimate,
                  double error_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

/// Integral of f over one period of the Brillouin zone with the measure
/// dk / 2pi:   (1/2pi) * int_{-pi}^{pi} f(k) dk.
///
/// Globally adaptive 15-point Gauss-Kronrod bisection; panels are refined
/// worst-first until the summed error estimate drops below
/// tol * |integral| (with a round-off floor for integrals that cancel to
/// zero). Narrow peaks well inside the interval are found by the initial
/// 8-panel split plus refinement.
double integrate_periodic(const std::function<double(double)>& f,
                          double tol = 1e-10);

}  // namespace qwalk::numerics
