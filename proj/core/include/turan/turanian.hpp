#pragma once

#include <cstdint>
#include <vector>

#include "turan/eval_result.hpp"
#include "turan/quadrature.hpp"

namespace turan {

// The Turanian Delta_nu(x) = I_nu(x)^2 - I_{nu-1}(x) I_{nu+1}(x) by four
// independent routes. Every route is even in x. All of them enforce the
// envelope |x| <= 100, nu in (-1, 60].

/// Literal difference of products. The error estimate includes
/// eps * (I_nu^2 + |I_{nu-1} I_{nu+1}|), so callers can see when the
/// subtraction has eaten the digits.
EvalResult delta_direct(double nu, double x, double tol);

/// sum_{m>=n} T_n(m) x^{2m} / (m! (m+1)!), all terms positive.
EvalResult delta_series_integer(int n, double x, double tol);

/// sum_{m>=0} (2nu+m+1)_m / m! * (x/2)^{2nu+2m} / (Gamma(nu+m+1) Gamma(nu+m+2)),
/// valid and pole-free for every nu > -1. At x = 0 returns 0 (nu > 0),
/// 1 (nu = 0) or +inf (nu < 0).
EvalResult delta_series_real(double nu, double x, double tol);

/// ((-1)^n 2/pi) int_{-pi/2}^{pi/2} [I_1(u)/u]_{u = 2x sin t} cos(2nt) dt.
/// Requires x != 0.
EvalResult delta_fourier(int n, double x, const QuadratureRule& rule);

/// (4/pi) int_0^{pi/2} I_{2nu}(2x cos th) sin^2 th dth for nu > -1/2.
///
/// When 2nu is not an integer the (cos th)^{2nu} endpoint factor is removed
/// near th = pi/2 by th = pi/2 - c s^q, q = max(1, ceil(8 / (2nu+1))),
/// c = min(pi/4, 1/(1+2|x|)), which turns it into s^{(2nu+1)q - 1} with
/// exponent >= 7. The rest of the interval uses panels that double in length
/// away from the endpoint. Each panel uses `rule`.
EvalResult delta_neumann(double nu, double x, const QuadratureRule& rule);

/// Method auto-selection: the series_real result first, then the direct
/// result when its relative cancellation estimate is within `tol`.
std::vector<EvalResult> delta_auto(double nu, double x, double tol);

/// First `count` terms of the integer-order series (index 0 is m = n).
std::vector<double> delta_series_integer_terms(int n, double x, int count);

/// First `count` terms of the real-order series (index 0 is m = 0).
std::vector<double> delta_series_real_terms(double nu, double x, int count);

/// T_n(m) = 2^{-2m} C(2m, m-n); exactly zero for m < n.
double t_coefficient(int n, std::int64_t m);

/// rho_n = max_{m >= n} T_n(m) = T_n(2n^2 - 1), for 1 <= n <= 60.
double rho(int n);

/// rho_n from the factorial closed form
/// (4n^2-2)! / ((2n^2+n-1)! (2n^2-n-1)! 2^{4n^2-2}), via log-gamma.
double rho_closed_form(int n);

/// sup_{m >= 0} T_0(m) = T_0(0). Kept separate from rho, which is only
/// defined for n >= 1 (the argmax 2n^2 - 1 is negative at n = 0).
inline constexpr double kT0Supremum = 1.0;

/// ((-1)^n / pi) int_{-pi/2}^{pi/2} cos(2nt) / (1 - x sin^2 t) dt
/// = sum_{m>=0} T_n(m) x^m, for |x| < 1.
EvalResult t_generating_integral(int n, double x, const QuadratureRule& rule);

}  // namespace turan
