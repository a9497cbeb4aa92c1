#include "qwalk/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace qwalk::numerics {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 rule;
// nodes/weights evaluated to 80 decimal digits by L. W. Fullerton).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double result;
  double abserr;
  double resabs;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  double fv1[7], fv2[7];
  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;  // Gauss nodes sit at the odd Kronrod slots
    const double absc = hlgth * kXgk[jtw];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  resasc *= std::abs(hlgth);
  resabs *= std::abs(hlgth);

  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  const double epmach = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * epmach)) {
    abserr = std::max(epmach * 50.0 * resabs, abserr);
  }
  return {a, b, resk * hlgth, abserr, resabs};
}

constexpr std::size_t kInitialPanels = 8;
constexpr std::size_t kMaxPanels = 4096;

bool worse(const Panel& x, const Panel& y) { return x.abserr < y.abserr; }

}  // namespace

double integrate_periodic(const std::function<double(double)>& f, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("integrate_periodic: tol must be positive");
  }
  constexpr double kPi = std::numbers::pi;
  const double epmach = std::numeric_limits<double>::epsilon();

  std::vector<Panel> panels;
  panels.reserve(256);
  for (std::size_t i = 0; i < kInitialPanels; ++i) {
    const double a = -kPi + 2.0 * kPi * static_cast<double>(i) / kInitialPanels;
    const double b = -kPi + 2.0 * kPi * static_cast<double>(i + 1) / kInitialPanels;
    panels.push_back(gk15(f, a, b));
  }
  std::make_heap(panels.begin(), panels.end(), worse);

  const auto totals = [&panels]() {
    double value = 0.0, err = 0.0, abs_val = 0.0;
    for (const Panel& p : panels) {
      value += p.result;
      err += p.abserr;
      abs_val += p.resabs;
    }
    return std::array<double, 3>{value, err, abs_val};
  };

  for (;;) {
    const auto [value, err, abs_val] = totals();
    // Round-off floor: integrands that cancel to ~0 are accepted once the
    // error estimate reaches the noise level of the data.
    const double target = std::max(tol * std::abs(value),
                                   50.0 * epmach * abs_val);
    if (err <= target) {
      return value / (2.0 * kPi);
    }
    if (panels.size() >= kMaxPanels) {
      throw QuadratureError(
          "integrate_periodic: no convergence after " +
              std::to_string(kMaxPanels) + " panels (estimated error " +
              std::to_string(err) + ")",
          value / (2.0 * kPi), err / (2.0 * kPi));
    }
    std::pop_heap(panels.begin(), panels.end(), worse);
    const Panel top = panels.back();
    panels.pop_back();
    const double mid = 0.5 * (top.a + top.b);
    panels.push_back(gk15(f, top.a, mid));
    std::push_heap(panels.begin(), panels.end(), worse);
    panels.push_back(gk15(f, mid, top.b));
    std::push_heap(panels.begin(), panels.end(), worse);
  }
}

}  // namespace qwalk::numerics
