#include "turan/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "series_sum.hpp"
#include "turan/errors.hpp"
#include "turan/quadrature.hpp"
#include "turan/scalar_special.hpp"

namespace turan {

namespace {

constexpr double kSeriesTol = 1e-17;

// Shared ascending-series kernel: sign = +1 for I, -1 for J.
EvalResult ascending_series(double nu, double x, double tol, double sign) {
  if (!std::isfinite(nu) || !std::isfinite(x)) {
    throw DomainError("Bessel series: non-finite argument");
  }
  double reflect = 1.0;
  if (is_integer_order(nu)) {
    const double n = std::nearbyint(nu);
    nu = n;
    if (n < 0) {
      nu = -n;
      // I_{-n} = I_n, J_{-n} = (-1)^n J_n
      if (sign < 0 && std::fmod(n, 2.0) != 0.0) reflect = -1.0;
    }
    if (x < 0) {
      x = -x;
      if (std::fmod(nu, 2.0) != 0.0) reflect = -reflect;
    }
  } else if (x < 0) {
    throw DomainError("Bessel series: negative argument needs an integer order");
  }

  if (x == 0.0) {
    if (nu == 0.0) return {reflect, 0.0, Method::series, 1, false};
    if (nu > 0.0) return {0.0, 0.0, Method::series, 1, false};
    const LogValue g = log_gamma_signed(nu + 1.0);
    return {g.sign * std::numeric_limits<double>::infinity(), 0.0, Method::series, 1, false};
  }

  const double half = 0.5 * x;
  const LogValue g = log_gamma_signed(nu + 1.0);
  const double log_first = nu * std::log(half) - g.log_magnitude;
  if (log_first > 700.0) throw OverflowError("Bessel series: leading term overflows");
  const double first = g.sign * std::exp(log_first);
  const double q = sign * half * half;
  auto ratio = [=](int m) { return q / ((m + 1.0) * (m + nu + 1.0)); };
  EvalResult r = detail::sum_series(first, ratio, tol, "Bessel series").as_result(Method::series);
  r.abs_error_est +=
      detail::exp_rounding(std::abs(nu * std::log(half)) + std::abs(g.log_magnitude), r.value);
  r.value *= reflect;
  return r;
}

void check_order_domain(double nu, const char* who) {
  if (!(nu > -1.0) && !is_integer_order(nu)) {
    throw DomainError(std::string(who) + ": order must exceed -1 or be a negative integer, got " +
                      std::to_string(nu));
  }
}

}  // namespace

bool is_integer_order(double nu) noexcept {
  return std::abs(nu - std::nearbyint(nu)) < kIntegerOrderTolerance;
}

void check_envelope(double nu, double x, const char* who) {
  if (!std::isfinite(nu) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": non-finite argument");
  }
  if (std::abs(x) > kMaxAbsX || std::abs(nu) > kMaxOrder) {
    throw EnvelopeError(std::string(who) + ": (nu, x) = (" + std::to_string(nu) + ", " +
                        std::to_string(x) + ") outside the envelope |x| <= 100, nu <= 60");
  }
}

namespace detail {

EvalResult bessel_i_series(double nu, double x, double tol) {
  return ascending_series(nu, x, tol, +1.0);
}

EvalResult bessel_j_series(double nu, double x, double tol) {
  return ascending_series(nu, x, tol, -1.0);
}

EvalResult scaled_i_sum(double mu, double u, double tol) {
  if (!(mu > -1.0)) throw DomainError("scaled_i_sum: mu must exceed -1");
  const double q = 0.25 * u * u;
  auto ratio = [=](int m) { return q / ((m + 1.0) * (mu + 1.0 + m)); };
  return sum_series(1.0, ratio, tol, "scaled I series").as_result(Method::series);
}

}  // namespace detail

EvalResult bessel_i(double nu, double x, double tol) {
  if (!(tol > 0.0)) throw DomainError("bessel_i: tol must be positive");
  check_order_domain(nu, "bessel_i");
  check_envelope(nu, x, "bessel_i");
  return detail::bessel_i_series(nu, x, tol);
}

double bessel_i1_over_z(double z) {
  const double q = 0.25 * z * z;
  auto ratio = [=](int m) { return q / ((m + 1.0) * (m + 2.0)); };
  return detail::sum_series(0.5, ratio, kSeriesTol, "I1(z)/z").value;
}

EvalResult bessel_j(double nu, double x, double tol) {
  if (!(tol > 0.0)) throw DomainError("bessel_j: tol must be positive");
  check_order_domain(nu, "bessel_j");
  check_envelope(nu, x, "bessel_j");
  EvalResult r = detail::bessel_j_series(nu, x, tol);
  r.cancellation = std::abs(x) > nu + kJSeriesSafeMargin;
  return r;
}

EvalResult bessel_j_integral(double nu, double x) {
  if (!std::isfinite(nu) || !std::isfinite(x) || !(x > 0.0)) {
    throw DomainError("bessel_j_integral: requires finite nu and x > 0");
  }
  const QuadratureRule& rule = gauss_legendre(32);
  const int panels = 2 + static_cast<int>(std::ceil((x + std::abs(nu)) / 4.0));
  EvalResult oscill = integrate_panels(
      [=](double t) { return std::cos(nu * t - x * std::sin(t)); }, 0.0, kPi, panels, rule);
  double value = oscill.value / kPi;
  double err = oscill.abs_error_est / kPi;
  int work = oscill.work;

  const double s = sin_pi(nu);
  if (s != 0.0) {
    // Cut the decaying tail where x sinh t + nu t exceeds 45.
    double upper = 1.0;
    while (x * std::sinh(upper) + nu * upper < 45.0) upper *= 1.5;
    EvalResult tail = integrate_panels(
        [=](double t) { return std::exp(-x * std::sinh(t) - nu * t); }, 0.0, upper, 8, rule);
    value -= s / kPi * tail.value;
    err += std::abs(s) / kPi * tail.abs_error_est;
    work += tail.work;
  }
  return {value, err, Method::integral, work, false};
}

namespace {

constexpr double kSeriesSwitchX = 12.0;

double j_for_roots(double nu, double x) {
  if (x <= kSeriesSwitchX) return detail::bessel_j_series(nu, x, kSeriesTol).value;
  return bessel_j_integral(nu, x).value;
}

double mcmahon_seed(double nu, int k) {
  const double beta = (k + 0.5 * nu - 0.25) * kPi;
  const double mu = 4.0 * nu * nu;
  return beta - (mu - 1.0) / (8.0 * beta);
}

// Safeguarded Newton on [a, b] where J changes sign.
double refine_zero(double nu, int k, double a, double fa, double b) {
  double x = mcmahon_seed(nu, k);
  if (!(x > a && x < b)) x = 0.5 * (a + b);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = j_for_roots(nu, x);
    if (f == 0.0) return x;
    if ((f > 0.0) == (fa > 0.0)) {
      a = x;
      fa = f;
    } else {
      b = x;
    }
    const double d = 0.5 * (j_for_roots(nu - 1.0, x) - j_for_roots(nu + 1.0, x));
    const double step = f / d;
    const bool inside = d != 0.0 && x - step > a && x - step < b;
    // A sub-tolerance Newton step means convergence even when J's sign at x is
    // rounding noise and the step leaves the bracket.
    if (d != 0.0 && std::abs(step) < 1e-12 * x) return inside ? x - step : x;
    const double next = inside ? x - step : 0.5 * (a + b);
    if ((b - a) < 4.0 * std::numeric_limits<double>::epsilon() * x) return next;
    x = next;
  }
  throw InternalError("bessel_j_zero: refinement did not converge for nu = " +
                      std::to_string(nu) + ", k = " + std::to_string(k));
}

}  // namespace

std::vector<double> bessel_j_zeros(double nu, int count) {
  if (!(nu > -1.0) || nu > 50.0) throw DomainError("bessel_j_zeros: nu must lie in (-1, 50]");
  if (count < 1 || count > 1000) throw DomainError("bessel_j_zeros: count must lie in [1, 1000]");

  // Consecutive zeros of J_nu are more than 2.4 apart for every nu > -1, so a
  // 0.5 scan step can never straddle two of them. j_{nu,1} > nu for nu > 0.
  constexpr double kStep = 0.5;
  constexpr double kSkipAfterZero = 1.0;
  std::vector<double> zeros;
  zeros.reserve(count);
  double a = nu > 0.0 ? nu : 1e-8;
  double fa = j_for_roots(nu, a);
  while (static_cast<int>(zeros.size()) < count) {
    const double b = a + kStep;
    const double fb = j_for_roots(nu, b);
    if (fb == 0.0 || (fa > 0.0) != (fb > 0.0)) {
      const int k = static_cast<int>(zeros.size()) + 1;
      const double z = fb == 0.0 ? b : refine_zero(nu, k, a, fa, b);
      zeros.push_back(z);
      a = z + kSkipAfterZero;
      fa = j_for_roots(nu, a);
      continue;
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

double bessel_j_zero(double nu, int k) { return bessel_j_zeros(nu, k).back(); }

double i_ratio(double nu, double x) {
  if (!(nu >= -0.5)) throw DomainError("i_ratio: nu must be >= -1/2");
  if (!(x > 0.0)) throw DomainError("i_ratio: x must be positive");
  check_envelope(nu, x, "i_ratio");
  // Both series scaled by Gamma(nu+1) (x/2)^{-nu}.
  const double num = detail::scaled_i_sum(nu + 1.0, x, kSeriesTol).value;
  const double den = detail::scaled_i_sum(nu, x, kSeriesTol).value;
  return 0.5 * x / (nu + 1.0) * num / den;
}

}  // namespace turan
