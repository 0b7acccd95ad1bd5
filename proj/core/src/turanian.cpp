#include "turan/turanian.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "series_sum.hpp"
#include "turan/bessel.hpp"
#include "turan/errors.hpp"
#include "turan/scalar_special.hpp"

namespace turan {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_real_order(double nu, const char* who) {
  if (!(nu > -1.0)) {
    throw DomainError(std::string(who) + ": order must exceed -1, got " + std::to_string(nu));
  }
}

void check_integer_order(int n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": order must be non-negative");
}

void check_tol(double tol, const char* who) {
  if (!(tol > 0.0)) throw DomainError(std::string(who) + ": tol must be positive");
}

// Value of Delta_nu at x = 0 for nu > -1.
EvalResult delta_at_origin(double nu, Method m) {
  if (is_integer_order(nu) && std::nearbyint(nu) == 0.0) return {1.0, 0.0, m, 1, false};
  if (nu > 0.0) return {0.0, 0.0, m, 1, false};
  return {std::numeric_limits<double>::infinity(), 0.0, m, 1, false};
}

// log of the first integer-order term x^{2n} / (4^n n! (n+1)!), x > 0.
// Log of a leading series term together with the summed magnitude of its
// parts, which bounds the rounding of the log (see exp_rounding).
struct LogTerm {
  double value;
  double magnitude;
};

LogTerm log_first_integer_term(int n, double ax) {
  const double power = 2.0 * n * (std::log(ax) - std::log(2.0));
  const double g1 = log_gamma(n + 1.0);
  const double g2 = log_gamma(n + 2.0);
  return {power - g1 - g2, std::abs(power) + g1 + g2};
}

auto integer_term_ratio(int n, double ax) {
  const double x2 = ax * ax;
  return [=](int k) {
    const double m = n + k;
    return x2 * (2.0 * m + 1.0) * (2.0 * m + 2.0) /
           (4.0 * (m + 1.0) * (m + 2.0) * (m + n + 1.0) * (m - n + 1.0));
  };
}

LogTerm log_first_real_term(double nu, double ax) {
  const double power = 2.0 * nu * std::log(0.5 * ax);
  const double g1 = log_gamma(nu + 1.0);
  const double g2 = log_gamma(nu + 2.0);
  return {power - g1 - g2, std::abs(power) + std::abs(g1) + std::abs(g2)};
}

auto real_term_ratio(double nu, double ax) {
  const double q = 0.25 * ax * ax;
  return [=](int m) {
    // (2nu+m+2)_{m+1} / (2nu+m+1)_m; the m = 0 case is written out because
    // 2nu+1 vanishes at nu = -1/2.
    const double poch = m == 0 ? 2.0 * nu + 2.0
                               : (2.0 * nu + 2.0 * m + 1.0) * (2.0 * nu + 2.0 * m + 2.0) /
                                     (2.0 * nu + m + 1.0);
    return q * poch / ((m + 1.0) * (nu + m + 1.0) * (nu + m + 2.0));
  };
}

}  // namespace

EvalResult delta_direct(double nu, double x, double tol) {
  check_real_order(nu, "delta_direct");
  check_tol(tol, "delta_direct");
  check_envelope(nu, x, "delta_direct");
  const double ax = std::abs(x);
  if (ax == 0.0) return delta_at_origin(nu, Method::direct);
  if (is_integer_order(nu)) nu = std::nearbyint(nu);
  const EvalResult center = detail::bessel_i_series(nu, ax, tol);
  const EvalResult below = detail::bessel_i_series(nu - 1.0, ax, tol);
  const EvalResult above = detail::bessel_i_series(nu + 1.0, ax, tol);
  const double square = center.value * center.value;
  const double product = below.value * above.value;
  const double propagated = 2.0 * std::abs(center.value) * center.abs_error_est +
                            std::abs(below.value) * above.abs_error_est +
                            std::abs(above.value) * below.abs_error_est;
  const double cancellation = 2.0 * kEps * (square + std::abs(product));
  return {square - product, propagated + cancellation, Method::direct,
          center.work + below.work + above.work, false};
}

EvalResult delta_series_integer(int n, double x, double tol) {
  check_integer_order(n, "delta_series_integer");
  check_tol(tol, "delta_series_integer");
  check_envelope(n, x, "delta_series_integer");
  const double ax = std::abs(x);
  if (ax == 0.0) return delta_at_origin(n, Method::series_integer);
  const LogTerm first = log_first_integer_term(n, ax);
  EvalResult r = detail::sum_series(std::exp(first.value), integer_term_ratio(n, ax), tol,
                                    "delta_series_integer")
                     .as_result(Method::series_integer);
  r.abs_error_est += detail::exp_rounding(first.magnitude, r.value);
  return r;
}

EvalResult delta_series_real(double nu, double x, double tol) {
  check_real_order(nu, "delta_series_real");
  check_tol(tol, "delta_series_real");
  check_envelope(nu, x, "delta_series_real");
  const double ax = std::abs(x);
  if (ax == 0.0) return delta_at_origin(nu, Method::series_real);
  const LogTerm first = log_first_real_term(nu, ax);
  EvalResult r = detail::sum_series(std::exp(first.value), real_term_ratio(nu, ax), tol,
                                    "delta_series_real")
                     .as_result(Method::series_real);
  r.abs_error_est += detail::exp_rounding(first.magnitude, r.value);
  return r;
}

std::vector<double> delta_series_integer_terms(int n, double x, int count) {
  check_integer_order(n, "delta_series_integer_terms");
  std::vector<double> terms;
  if (count <= 0) return terms;
  const double ax = std::abs(x);
  terms.reserve(count);
  double t = ax == 0.0 ? (n == 0 ? 1.0 : 0.0) : std::exp(log_first_integer_term(n, ax).value);
  const auto ratio = integer_term_ratio(n, ax);
  for (int k = 0; k < count; ++k) {
    terms.push_back(t);
    t *= ratio(k);
  }
  return terms;
}

std::vector<double> delta_series_real_terms(double nu, double x, int count) {
  check_real_order(nu, "delta_series_real_terms");
  std::vector<double> terms;
  if (count <= 0) return terms;
  const double ax = std::abs(x);
  terms.reserve(count);
  double t = ax == 0.0 ? delta_at_origin(nu, Method::series_real).value
                       : std::exp(log_first_real_term(nu, ax).value);
  const auto ratio = real_term_ratio(nu, ax);
  for (int k = 0; k < count; ++k) {
    terms.push_back(t);
    t = ax == 0.0 ? 0.0 : t * ratio(k);
  }
  return terms;
}

EvalResult delta_fourier(int n, double x, const QuadratureRule& rule) {
  check_integer_order(n, "delta_fourier");
  check_envelope(n, x, "delta_fourier");
  if (x == 0.0) throw DomainError("delta_fourier: x must be non-zero (use a series form)");
  const double two_n = 2.0 * n;
  auto integrand = [=](double t) {
    return bessel_i1_over_z(2.0 * x * std::sin(t)) * std::cos(two_n * t);
  };
  EvalResult q = integrate(integrand, -0.5 * kPi, 0.5 * kPi, rule);
  // Each sample of cos(2nt) carries the rounding of its argument, up to
  // n pi eps absolute, on top of the rounding integrate() already counts.
  double abs_integral = 0.0;
  detail::apply_rule(integrand, -0.5 * kPi, 0.5 * kPi, rule, &abs_integral);
  q.abs_error_est += (n * kPi + 4.0) * std::numeric_limits<double>::epsilon() * abs_integral;
  q.work += rule.order;
  const double scale = (n % 2 == 0 ? 2.0 : -2.0) / kPi;
  return {scale * q.value, std::abs(scale) * q.abs_error_est, Method::fourier, q.work, false};
}

EvalResult delta_neumann(double nu, double x, const QuadratureRule& rule) {
  if (!(nu > -0.5)) {
    throw DomainError("delta_neumann: requires nu > -1/2, got " + std::to_string(nu) +
                      "; use delta_series_real below that");
  }
  check_envelope(nu, x, "delta_neumann");
  const double ax = std::abs(x);
  if (ax == 0.0) return delta_at_origin(nu, Method::neumann);

  // I_{2nu}(2x cos th) = (x cos th)^{2nu} / Gamma(2nu+1) * S(2x cos th), where
  // S is the entire scaled series. The prefactor is pulled out in log form.
  const double mu = 2.0 * nu;
  const double log_power = mu * std::log(ax);
  const double log_norm = log_gamma(mu + 1.0);
  const double log_prefactor = log_power - log_norm;
  constexpr double kInnerTol = 1e-17;
  EvalResult q;
  if (is_integer_order(mu)) {
    const double k = std::nearbyint(mu);
    auto integrand = [=](double th) {
      const double c = std::cos(th);
      const double s = std::sin(th);
      return std::pow(c, k) * detail::scaled_i_sum(mu, 2.0 * ax * c, kInnerTol).value * s * s;
    };
    q = integrate(integrand, 0.0, 0.5 * kPi, rule);
  } else {
    // With phi = pi/2 - th the integrand is (sin phi)^{2nu} S(2x sin phi) cos^2 phi.
    // On [0, c] the substitution phi = c s^q turns the endpoint factor into
    // s^{(2nu+1)q - 1} with exponent >= 7; c <= 1/(1+2x) keeps S nearly
    // constant there. Beyond c, panels double in length so the phi = 0
    // singularity stays a fixed relative distance from each panel.
    const double qexp = std::max(1.0, std::ceil(8.0 / (mu + 1.0)));
    const double cut = std::min(0.25 * kPi, 1.0 / (1.0 + 2.0 * ax));
    auto in_phi = [=](double phi) {
      const double sp = std::sin(phi);
      const double cp = std::cos(phi);
      return std::pow(sp, mu) * detail::scaled_i_sum(mu, 2.0 * ax * sp, kInnerTol).value * cp * cp;
    };
    auto near_zero = [=](double s) {
      const double phi = cut * std::pow(s, qexp);
      const double sp = std::sin(phi);
      const double cp = std::cos(phi);
      // (sin phi)^{2nu} * d(phi)/ds in log form so the singular and vanishing
      // factors cannot under/overflow separately.
      const double weight =
          std::exp(mu * std::log(sp) + (qexp - 1.0) * std::log(s)) * cut * qexp;
      return weight * detail::scaled_i_sum(mu, 2.0 * ax * sp, kInnerTol).value * cp * cp;
    };
    q = integrate(near_zero, 0.0, 1.0, rule);
    for (double a = cut; a < 0.5 * kPi;) {
      const double b = std::min(2.0 * a, 0.5 * kPi);
      const EvalResult piece = integrate(in_phi, a, b, rule);
      q.value += piece.value;
      q.abs_error_est += piece.abs_error_est;
      q.work += piece.work;
      a = b;
    }
  }
  const double scale = 4.0 / kPi * std::exp(log_prefactor);
  const double value = scale * q.value;
  // The integrand is non-negative, so |value| is also its absolute integral;
  // the cos^{2nu} power and the inner sum each add O(2nu) eps per sample.
  const double sample_rounding =
      (mu + 8.0) * std::numeric_limits<double>::epsilon() * std::abs(value);
  const double rounding = sample_rounding +
                          detail::exp_rounding(std::abs(log_power) + std::abs(log_norm), value);
  return {value, scale * q.abs_error_est + rounding, Method::neumann, q.work, false};
}

std::vector<EvalResult> delta_auto(double nu, double x, double tol) {
  std::vector<EvalResult> out;
  out.push_back(delta_series_real(nu, x, tol));
  const EvalResult direct = delta_direct(nu, x, tol);
  const double reference = std::abs(out.front().value);
  if (reference > 0.0 && std::isfinite(reference) &&
      direct.abs_error_est <= tol * reference) {
    out.push_back(direct);
  }
  return out;
}

double t_coefficient(int n, std::int64_t m) {
  if (n < 0 || m < 0) throw DomainError("t_coefficient: n and m must be non-negative");
  if (m < n) return 0.0;
  if (auto c = exact_binomial(2 * m, m - n)) {
    return std::ldexp(static_cast<double>(*c), static_cast<int>(-2 * m));
  }
  // Stirling form of ln(C(2m, m-n) / 4^m); every piece is O(1) or O(n^2/m),
  // so the logarithm keeps full relative accuracy even for m ~ 1e4.
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double log_t = -(md - nd) * std::log1p(-nd / md) - (md + nd) * std::log1p(nd / md) -
                       0.5 * std::log(kPi * (md - nd) * (md + nd) / md) +
                       stirling_remainder(2 * m) - stirling_remainder(m - n) -
                       stirling_remainder(m + n);
  return std::exp(log_t);
}

double rho(int n) {
  if (n < 1) {
    throw DomainError("rho: n must be a positive integer (sup_m T_0(m) is kT0Supremum = 1)");
  }
  if (n > 60) throw DomainError("rho: n must be <= 60");
  return t_coefficient(n, 2LL * n * n - 1);
}

double rho_closed_form(int n) {
  if (n < 1 || n > 60) throw DomainError("rho_closed_form: n must lie in [1, 60]");
  const double n2 = static_cast<double>(n) * n;
  const double log_value = log_gamma(4.0 * n2 - 1.0) - log_gamma(2.0 * n2 + n) -
                           log_gamma(2.0 * n2 - n) - (4.0 * n2 - 2.0) * std::log(2.0);
  return std::exp(log_value);
}

EvalResult t_generating_integral(int n, double x, const QuadratureRule& rule) {
  check_integer_order(n, "t_generating_integral");
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("t_generating_integral: requires |x| < 1");
  }
  const double two_n = 2.0 * n;
  auto integrand = [=](double t) {
    const double s = std::sin(t);
    return std::cos(two_n * t) / (1.0 - x * s * s);
  };
  EvalResult q = integrate(integrand, -0.5 * kPi, 0.5 * kPi, rule);
  const double scale = (n % 2 == 0 ? 1.0 : -1.0) / kPi;
  return {scale * q.value, std::abs(scale) * q.abs_error_est, Method::quadrature, q.work, false};
}

}  // namespace turan
