#pragma once

#include <vector>

#include "turan/eval_result.hpp"

namespace turan {

/// Supported numeric envelope for I_nu and every Turanian evaluation.
inline constexpr double kMaxAbsX = 100.0;
inline constexpr double kMaxOrder = 60.0;
/// Orders within this distance of an integer take the integer code paths.
inline constexpr double kIntegerOrderTolerance = 1e-12;
/// J_nu's ascending series is flagged as cancellation-prone past |x| > nu + 20.
inline constexpr double kJSeriesSafeMargin = 20.0;

/// True when |nu - round(nu)| < kIntegerOrderTolerance.
bool is_integer_order(double nu) noexcept;

/// Throws EnvelopeError unless |x| <= 100 and nu <= 60.
void check_envelope(double nu, double x, const char* who);

/// Modified Bessel function I_nu(x) from its ascending series.
///
/// nu must exceed -1 or be a negative integer (I_{-n} = I_n). Negative x is
/// accepted for integer orders only.
EvalResult bessel_i(double nu, double x, double tol);

/// I_1(z) / z continued to 1/2 at z = 0; even and entire.
double bessel_i1_over_z(double z);

/// Bessel function J_nu(x) from its alternating ascending series.
///
/// The error estimate carries the rounding loss of the alternating sum; the
/// `cancellation` flag is raised when |x| > nu + 20.
EvalResult bessel_j(double nu, double x, double tol);

/// J_nu(x) for x > 0 and any real nu from Schlaefli's integral
///   (1/pi) int_0^pi cos(nu t - x sin t) dt
///     - (sin(nu pi)/pi) int_0^inf exp(-x sinh t - nu t) dt.
/// Accurate to ~1e-15 absolute for large x where the series is useless.
EvalResult bessel_j_integral(double nu, double x);

/// First `count` positive zeros of J_nu, nu in (-1, 50], count <= 1000.
std::vector<double> bessel_j_zeros(double nu, int count);

/// k-th positive zero j_{nu,k} of J_nu.
double bessel_j_zero(double nu, int k);

/// I_{nu+1}(x) / I_nu(x) for nu >= -1/2 and x > 0, from a series pair that
/// shares the (x/2)^nu / Gamma(nu+1) prefactor.
double i_ratio(double nu, double x);

namespace detail {

/// Ascending series for I_nu without envelope checks; any real nu
/// (negative non-integers included), x >= 0 for non-integer nu.
EvalResult bessel_i_series(double nu, double x, double tol);

/// Same for J_nu.
EvalResult bessel_j_series(double nu, double x, double tol);

/// Gamma(mu+1) (u/2)^{-mu} I_mu(u) = sum_m (u^2/4)^m / (m! (mu+1)_m), mu > -1.
EvalResult scaled_i_sum(double mu, double u, double tol);

}  // namespace detail

}  // namespace turan
