#include "turan/bounds.hpp"

#include <cmath>
#include <limits>

#include "series_sum.hpp"
#include "turan/bessel.hpp"
#include "turan/errors.hpp"
#include "turan/scalar_special.hpp"
#include "turan/turanian.hpp"

namespace turan {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_nu(double nu, const char* who) {
  if (!(nu > -1.0) || !std::isfinite(nu)) {
    throw DomainError(std::string(who) + ": order must exceed -1");
  }
}

void check_positive_n(int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": n must be a positive integer");
}

// A sum of logarithms that also tracks the summed magnitude of its parts,
// which is what bounds its rounding (see exp_rounding).
struct LogSum {
  double value = 0.0;
  double magnitude = 0.0;
  LogSum& operator+=(double part) {
    value += part;
    magnitude += std::abs(part);
    return *this;
  }
  LogSum& operator-=(double part) { return *this += -part; }
};

EvalResult from_log(const LogSum& log_value, Method m = Method::bound) {
  const double v = std::exp(log_value.value);
  return {v, detail::exp_rounding(log_value.magnitude, v), m, 1, false};
}

// Leading factor x^{2n} / (n! (n+1)!) in log form, x != 0.
LogSum log_integer_prefactor(int n, double ax) {
  LogSum s;
  s += 2.0 * n * std::log(ax);
  s -= log_gamma(n + 1.0);
  s -= log_gamma(n + 2.0);
  return s;
}

}  // namespace

std::string_view to_string(BoundSide side) noexcept {
  return side == BoundSide::lower ? "lower" : "upper";
}

bool BoundReport::all_satisfied() const noexcept {
  for (const auto& b : bounds) {
    if (!b.satisfied) return false;
  }
  return true;
}

const BoundEntry* BoundReport::find(std::string_view id) const noexcept {
  for (const auto& b : bounds) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

namespace detail {

EvalResult lower_one_term_eval(double nu, double x) {
  check_nu(nu, "lower_one_term");
  const double ax = std::abs(x);
  if (ax == 0.0) {
    if (is_integer_order(nu) && std::nearbyint(nu) == 0.0) return {1.0, 0.0, Method::bound, 1, false};
    return {nu > 0.0 ? 0.0 : kInf, 0.0, Method::bound, 1, false};
  }
  LogSum l;
  l += 2.0 * nu * std::log(0.5 * ax);
  l -= log_gamma(nu + 1.0);
  l -= log_gamma(nu + 2.0);
  return from_log(l);
}

EvalResult lower_two_term_eval(double nu, double x) {
  EvalResult first = lower_one_term_eval(nu, x);
  const double ax = std::abs(x);
  if (ax == 0.0 || !std::isfinite(first.value)) return first;
  LogSum l;
  l += std::log(2.0);
  l += (2.0 * nu + 2.0) * std::log(0.5 * ax);
  l -= log_gamma(nu + 1.0);
  l -= log_gamma(nu + 3.0);
  const EvalResult second = from_log(l);
  return {first.value + second.value,
          first.abs_error_est + second.abs_error_est + kEps * (first.value + second.value),
          Method::bound, 2, false};
}

EvalResult upper_hypergeom_eval(int n, double x, double tol) {
  check_positive_n(n, "upper_hypergeom");
  const double ax = std::abs(x);
  if (ax == 0.0) return {0.0, 0.0, Method::bound, 1, false};
  LogSum log_pref = log_integer_prefactor(n, ax);
  log_pref += std::log(rho(n));
  const double pref = std::exp(log_pref.value);
  const EvalResult f = hyp1f2(n + 1.0, n + 2.0, ax * ax, tol);
  const double value = pref * f.value;
  return {value, pref * f.abs_error_est + exp_rounding(log_pref.magnitude, value), Method::bound,
          f.work, false};
}

EvalResult upper_sqrt_series_eval(int n, double x, double tol) {
  check_positive_n(n, "upper_sqrt_series");
  if (!(tol > 0.0)) throw DomainError("upper_sqrt_series: tol must be positive");
  const double ax = std::abs(x);
  if (ax == 0.0) return {0.0, 0.0, Method::bound, 1, false};
  LogSum log_first = log_integer_prefactor(n, ax);
  log_first -= 0.5 * std::log(kPi * n);
  const double x2 = ax * ax;
  auto ratio = [=](int k) {
    const double m = n + k;
    return x2 / ((m + 1.0) * (m + 2.0)) * std::sqrt(m / (m + 1.0));
  };
  EvalResult r = sum_series(std::exp(log_first.value), ratio, tol, "upper_sqrt_series")
                     .as_result(Method::bound);
  r.abs_error_est += exp_rounding(log_first.magnitude, r.value);
  return r;
}

EvalResult upper_classical_eval(int n, double x, double tol) {
  if (n < 0) throw DomainError("upper_classical: n must be non-negative");
  const EvalResult i = bessel_i(n, x, tol);
  const double value = i.value * i.value / (n + 1.0);
  return {value, (2.0 * std::abs(i.value) * i.abs_error_est) / (n + 1.0) + 2.0 * kEps * value,
          Method::bound, i.work, false};
}

}  // namespace detail

double lower_one_term(double nu, double x) { return detail::lower_one_term_eval(nu, x).value; }

double lower_two_term(double nu, double x) { return detail::lower_two_term_eval(nu, x).value; }

double upper_hypergeom(int n, double x, double tol) {
  return detail::upper_hypergeom_eval(n, x, tol).value;
}

double upper_sqrt_series(int n, double x, double tol) {
  return detail::upper_sqrt_series_eval(n, x, tol).value;
}

double upper_classical(int n, double x) {
  return detail::upper_classical_eval(n, x, 1e-16).value;
}

BoundReport evaluate_all(double nu, double x, double tol) {
  check_nu(nu, "evaluate_all");
  const EvalResult delta = delta_series_real(nu, x, tol);
  BoundReport report;
  report.nu = nu;
  report.x = x;
  report.delta = delta.value;
  report.delta_error_est = delta.abs_error_est;

  auto add = [&](std::string_view id, BoundSide side, const EvalResult& b) {
    BoundEntry e;
    e.id = std::string(id);
    e.side = side;
    e.value = b.value;
    e.error_est = b.abs_error_est;
    if (std::isinf(b.value) && std::isinf(delta.value)) {
      e.margin = 0.0;  // x = 0, nu < 0: both sides diverge together
    } else {
      e.margin = side == BoundSide::lower ? delta.value - b.value : b.value - delta.value;
    }
    const double allowance =
        delta.abs_error_est + b.abs_error_est +
        (std::isfinite(delta.value) ? 4.0 * kEps * std::abs(delta.value) : 0.0);
    e.satisfied = e.margin >= -allowance;
    e.strict = e.margin > 0.0;
    report.bounds.push_back(std::move(e));
  };

  add(kLowerOneTerm, BoundSide::lower, detail::lower_one_term_eval(nu, x));
  add(kLowerTwoTerm, BoundSide::lower, detail::lower_two_term_eval(nu, x));
  if (is_integer_order(nu) && std::nearbyint(nu) >= 0.0) {
    const int n = static_cast<int>(std::nearbyint(nu));
    if (n >= 1) {
      add(kUpperHypergeom, BoundSide::upper, detail::upper_hypergeom_eval(n, x, tol));
      add(kUpperSqrtSeries, BoundSide::upper, detail::upper_sqrt_series_eval(n, x, tol));
    }
    add(kUpperClassical, BoundSide::upper, detail::upper_classical_eval(n, x, tol));
  }
  return report;
}

}  // namespace turan
