#include "turan/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "turan/errors.hpp"
#include "turan/scalar_special.hpp"
#include "turan/turanian.hpp"

namespace turan {

namespace {

AsymptoticCheck make_check(double parameter, double exact, double approx) {
  const double ratio =
      approx != 0.0 ? exact / approx : std::numeric_limits<double>::quiet_NaN();
  return {parameter, exact, approx, ratio};
}

}  // namespace

std::string_view to_string(ExponentMode mode) noexcept {
  return mode == ExponentMode::as_printed ? "as_printed" : "squared";
}

double delta_large_n(int n, double x) {
  if (n < 0) throw DomainError("delta_large_n: n must be non-negative");
  if (n == 0) return 1.0;
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  return std::exp(2.0 * n * std::log(0.5 * ax) - log_gamma(n + 1.0) - log_gamma(n + 2.0));
}

double large_nu_bracket(double nu) {
  if (!(nu > 1.0)) throw DomainError("large_nu_bracket: nu must exceed 1");
  // (2nu+1) ln nu splits as (nu-1/2) ln nu + (nu+3/2) ln nu.
  const double log_ratio =
      -(nu - 0.5) * std::log1p(-1.0 / nu) - (nu + 1.5) * std::log1p(1.0 / nu);
  return -std::expm1(log_ratio);
}

double delta_large_nu(double nu, double x, ExponentMode mode) {
  if (!(nu > 1.0)) throw DomainError("delta_large_nu: nu must exceed 1");
  const double ax = std::abs(x);
  if (ax == 0.0) throw DomainError("delta_large_nu: x must be non-zero");
  const double power = mode == ExponentMode::as_printed ? nu : 2.0 * nu;
  const double log_value =
      -std::log(2.0 * kPi * nu) + power * (1.0 + std::log(ax / (2.0 * nu)));
  return std::exp(log_value) * large_nu_bracket(nu);
}

double t_large_m(long long m) {
  if (m < 1) throw DomainError("t_large_m: m must be positive");
  return 1.0 / std::sqrt(kPi * static_cast<double>(m));
}

std::vector<AsymptoticCheck> large_n_table(const std::vector<int>& orders, double x, double tol) {
  std::vector<AsymptoticCheck> out;
  out.reserve(orders.size());
  for (int n : orders) {
    out.push_back(make_check(n, delta_series_integer(n, x, tol).value, delta_large_n(n, x)));
  }
  return out;
}

std::vector<AsymptoticCheck> large_nu_table(const std::vector<double>& orders, double x,
                                            ExponentMode mode, double tol) {
  std::vector<AsymptoticCheck> out;
  out.reserve(orders.size());
  for (double nu : orders) {
    out.push_back(
        make_check(nu, delta_series_real(nu, x, tol).value, delta_large_nu(nu, x, mode)));
  }
  return out;
}

std::vector<AsymptoticCheck> large_m_table(int n, const std::vector<long long>& ms) {
  std::vector<AsymptoticCheck> out;
  out.reserve(ms.size());
  for (long long m : ms) {
    out.push_back(make_check(static_cast<double>(m), t_coefficient(n, m), t_large_m(m)));
  }
  return out;
}

ExponentAdjudication adjudicate_exponent(const std::vector<double>& orders, double x,
                                         double band, double tol) {
  if (orders.empty()) throw DomainError("adjudicate_exponent: no orders given");
  ExponentAdjudication a;
  a.final_ratio_as_printed = large_nu_table(orders, x, ExponentMode::as_printed, tol).back().ratio;
  a.final_ratio_squared = large_nu_table(orders, x, ExponentMode::squared, tol).back().ratio;
  a.as_printed_converges = std::abs(a.final_ratio_as_printed - 1.0) <= band;
  a.squared_converges = std::abs(a.final_ratio_squared - 1.0) <= band;
  if (a.as_printed_converges && a.squared_converges) {
    a.convergent_mode = "both";
  } else if (a.as_printed_converges) {
    a.convergent_mode = to_string(ExponentMode::as_printed);
  } else if (a.squared_converges) {
    a.convergent_mode = to_string(ExponentMode::squared);
  }
  return a;
}

}  // namespace turan
