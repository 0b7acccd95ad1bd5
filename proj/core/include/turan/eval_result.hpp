#pragma once

#include <string_view>

namespace turan {

/// Which algorithm produced a value.
enum class Method {
  direct,          ///< I_nu^2 - I_{nu-1} I_{nu+1} formed literally
  series_integer,  ///< binomial-coefficient series, integer order
  series_real,     ///< Cauchy-product series, real order
  fourier,         ///< Fourier-cosine integral, integer order
  neumann,         ///< Neumann product integral, real order > -1/2
  bound,           ///< closed-form bound expression
  asymptotic,      ///< asymptotic approximation
  series,          ///< generic ascending power series (Bessel, 1F2)
  quadrature,      ///< generic Gauss-Legendre quadrature
  integral,        ///< Schlaefli integral representation of J
};

std::string_view to_string(Method m) noexcept;

/// A computed scalar with an error estimate and the work spent on it.
///
/// `abs_error_est` bounds truncation / quadrature error plus an estimate of
/// accumulated rounding; it says nothing about whether the formula itself is
/// the right model.
struct EvalResult {
  double value = 0.0;
  double abs_error_est = 0.0;
  Method method = Method::series;
  int work = 1;
  /// Set by J_nu evaluation when |x| > nu + 20 (ascending series loses digits).
  bool cancellation = false;
};

}  // namespace turan
