#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "turan/errors.hpp"
#include "turan/eval_result.hpp"
#include "turan/scalar_special.hpp"

namespace turan::detail {

struct SeriesSum {
  double value = 0.0;
  double truncation_est = 0.0;
  double abs_term_sum = 0.0;  // sum of |t_k|, drives the rounding estimate
  int terms = 0;

  double rounding_est() const noexcept {
    return 2.0 * std::numeric_limits<double>::epsilon() * abs_term_sum;
  }
  double error_est() const noexcept { return truncation_est + rounding_est(); }

  EvalResult as_result(Method m) const noexcept {
    return {value, error_est(), m, terms, false};
  }
};

// Rounding carried by a value whose scale was formed as exp(L), where L is a
// sum of logarithms whose magnitudes add up to `log_magnitude`. Each part is
// good to 4 eps relative (log_gamma included), so L is good to
// 4 eps * log_magnitude absolute even when the parts cancel, and exp turns
// that into a relative error.
inline double exp_rounding(double log_magnitude, double value) noexcept {
  return (4.0 * std::abs(log_magnitude) + 8.0) * std::numeric_limits<double>::epsilon() *
         std::abs(value);
}

// Sums t_0 + t_1 + ... where t_{k+1} = t_k * ratio(k).
//
// Stops at t_k once |t_k| <= tol |S_k| and |t_k| <= |t_{k-1}|. The
// truncation estimate is |t_{k+1}| / (1 - |r_{k+1}|) when the next ratio is
// below one, otherwise the bare next-term magnitude.
template <class Ratio>
SeriesSum sum_series(double first_term, Ratio&& ratio, double tol,
                     const char* what = "series") {
  SeriesSum s;
  double term = first_term;
  double prev_abs = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    s.value += term;
    s.abs_term_sum += std::abs(term);
    s.terms = k + 1;
    const double a = std::abs(term);
    if (!std::isfinite(s.value)) {
      throw OverflowError(std::string(what) + ": partial sum overflowed");
    }
    if (a == 0.0 || (a <= tol * std::abs(s.value) && a <= prev_abs)) {
      if (a == 0.0) return s;
      const double r = ratio(k);
      const double next = std::abs(term * r);
      const double r_next = std::abs(ratio(k + 1));
      s.truncation_est = r_next < 1.0 ? next / (1.0 - r_next) : next;
      return s;
    }
    prev_abs = a;
    term *= ratio(k);
  }
  throw ConvergenceError(std::string(what) + ": no convergence within " +
                         std::to_string(kMaxSeriesTerms) + " terms");
}

}  // namespace turan::detail
