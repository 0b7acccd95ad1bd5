#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "turan/eval_result.hpp"

namespace turan {

/// Overflow-safe representation of a real number as sign * exp(log_magnitude).
///
/// sign == 0 exactly when the value is zero; log_magnitude is then -inf.
struct LogValue {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static LogValue zero() noexcept { return {}; }
  static LogValue from_linear(double v) noexcept;

  bool is_zero() const noexcept { return sign == 0; }
  /// True when exp(log_magnitude) is not representable as a finite double.
  bool overflows() const noexcept;
  /// Linear value; +-inf when it overflows.
  double to_linear() const noexcept;

  friend LogValue operator*(LogValue a, LogValue b) noexcept;
  /// Throws DomainError when b is zero.
  friend LogValue operator/(LogValue a, LogValue b);
};

/// ln Gamma(x) for x > 0. Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// Gamma(x). Uses reflection for x < 0.5. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// Gamma(x) in log form for any real x that is not a pole (sign carried).
LogValue log_gamma_signed(double x);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) noexcept;

/// Exact binomial coefficient when it (and every intermediate product)
/// fits in 53 bits; std::nullopt otherwise or for k outside [0, n].
std::optional<std::uint64_t> exact_binomial(std::int64_t n, std::int64_t k) noexcept;

/// ln C(n, k). sign 0 when k < 0 or k > n. Symmetric in k <-> n-k by
/// construction.
LogValue log_binomial(std::int64_t n, std::int64_t k);

/// ln(m!) - (m ln m - m + ln(2 pi m)/2), the Stirling remainder, for m >= 1.
double stirling_remainder(std::int64_t m);

/// Rising factorial (a)_m = a (a+1) ... (a+m-1); 1 for m == 0.
/// Throws OverflowError when the product leaves the double range.
double pochhammer(double a, int m);

/// 1F2(1; b1, b2; z) = sum_k z^k / ((b1)_k (b2)_k), summed by term ratios.
/// Throws DomainError unless b1, b2 > 0 and tol > 0; ConvergenceError past
/// the term cap.
EvalResult hyp1f2(double b1, double b2, double z, double tol);

/// Hard cap on the number of terms any series in the library may use.
inline constexpr int kMaxSeriesTerms = 100000;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

}  // namespace turan
