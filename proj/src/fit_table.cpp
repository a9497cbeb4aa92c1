#include "qwalk/analytic/fit_table.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwalk/analytic/spectral.hpp"

namespace qwalk::analytic {

const FitTable& FitTable::published() {
  static const FitTable table{
      // a_0 .. a_4
      {0.0022, -0.0492, 0.2938, 0.5030, -0.4612},   // mu
      {-0.0020, 1.2995, -0.2668, -1.0016, 0.5991},  // nu
      {0.0002, -0.0053, 0.0296, 0.2548, -0.1049},   // xi
      {0.0004, 0.0077, 0.0361, 0.0596, 0.0312},     // mu std. errors
      {0.0005, 0.0085, 0.0400, 0.0661, 0.0346},     // nu std. errors
      {0.0001, 0.0020, 0.0095, 0.0157, 0.0082},     // xi std. errors
  };
  return table;
}

double FitTable::poly(const std::array<double, 5>& a, double sigma0) {
  // Horner in x = 1/sigma0
  const double x = 1.0 / sigma0;
  double acc = a[4];
  for (int n = 3; n >= 0; --n) acc = acc * x + a[static_cast<std::size_t>(n)];
  return acc;
}

namespace {

std::array<double, 5> read_column(const nlohmann::json& doc,
                                  const std::string& name,
                                  const std::string& field) {
  const auto& arr = doc.at(name).at(field);
  if (!arr.is_array() || arr.size() != 5) {
    throw std::invalid_argument("FitTable: '" + name + "." + field +
                                "' must hold 5 numbers (a0..a4)");
  }
  std::array<double, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = arr[i].get<double>();
  return out;
}

}  // namespace

FitTable FitTable::from_json(const nlohmann::json& doc) {
  FitTable t;
  t.mu = read_column(doc, "mu", "value");
  t.nu = read_column(doc, "nu", "value");
  t.xi = read_column(doc, "xi", "value");
  t.mu_err = read_column(doc, "mu", "error");
  t.nu_err = read_column(doc, "nu", "error");
  t.xi_err = read_column(doc, "xi", "error");
  return t;
}

nlohmann::ordered_json FitTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["rows"] = {"a0", "a1", "a2", "a3", "a4"};
  doc["mu"] = {{"value", mu}, {"error", mu_err}};
  doc["nu"] = {{"value", nu}, {"error", nu_err}};
  doc["xi"] = {{"value", xi}, {"error", xi_err}};
  return doc;
}

double gauss_I_fitted(double delta, double sigma0, const FitTable& table) {
  if (!(sigma0 >= 1.0)) {
    throw std::invalid_argument(
        "gauss_I_fitted: the published fit covers sigma0 >= 1; refusing to "
        "extrapolate below");
  }
  const double c2 = cos_sq(delta);
  const double num = table.mu_at(sigma0) * c2 * c2 +
                     table.nu_at(sigma0) * c2 + table.xi_at(sigma0);
  return 2.0 * sigma0 / std::sqrt(2.0 * std::numbers::pi) * num / (1.0 + c2);
}

}  // namespace qwalk::analytic
