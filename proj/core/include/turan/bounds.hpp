#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "turan/eval_result.hpp"

namespace turan {

// Bound identifiers as they appear in reports.
inline constexpr std::string_view kLowerOneTerm = "lower_one_term";
inline constexpr std::string_view kLowerTwoTerm = "lower_two_term";
inline constexpr std::string_view kUpperHypergeom = "upper_hypergeom";
inline constexpr std::string_view kUpperSqrtSeries = "upper_sqrt_series";
inline constexpr std::string_view kUpperClassical = "upper_classical";

enum class BoundSide { lower, upper };
std::string_view to_string(BoundSide side) noexcept;

struct BoundEntry {
  std::string id;
  BoundSide side = BoundSide::lower;
  double value = 0.0;
  double error_est = 0.0;
  /// delta - value for lower bounds, value - delta for upper bounds.
  double margin = 0.0;
  /// margin >= -(delta error + bound error + 4 eps |delta|)
  bool satisfied = false;
  /// margin > 0
  bool strict = false;
};

struct BoundReport {
  double nu = 0.0;
  double x = 0.0;
  double delta = 0.0;  // reference value from delta_series_real
  double delta_error_est = 0.0;
  std::vector<BoundEntry> bounds;

  bool all_satisfied() const noexcept;
  const BoundEntry* find(std::string_view id) const noexcept;
};

/// (x^2/4)^nu / (Gamma(nu+1) Gamma(nu+2)), nu > -1; +inf at x = 0 for nu < 0.
double lower_one_term(double nu, double x);

/// lower_one_term + 2 (x/2)^{2nu+2} / (Gamma(nu+1) Gamma(nu+3)).
double lower_two_term(double nu, double x);

/// rho_n x^{2n} / (n! (n+1)!) * 1F2(1; n+1, n+2; x^2), n >= 1.
double upper_hypergeom(int n, double x, double tol = 1e-15);

/// (1/sqrt(pi)) sum_{m>=n} x^{2m} / (m! (m+1)! sqrt(m)), n >= 1.
double upper_sqrt_series(int n, double x, double tol = 1e-15);

/// I_n(x)^2 / (n+1), n >= 0.
double upper_classical(int n, double x);

/// Reference Delta plus every bound that applies at (nu, x). The lower bounds
/// are always present; the three upper bounds only for non-negative integer
/// nu inside their own preconditions.
BoundReport evaluate_all(double nu, double x, double tol);

namespace detail {
EvalResult lower_one_term_eval(double nu, double x);
EvalResult lower_two_term_eval(double nu, double x);
EvalResult upper_hypergeom_eval(int n, double x, double tol);
EvalResult upper_sqrt_series_eval(int n, double x, double tol);
EvalResult upper_classical_eval(int n, double x, double tol);
}  // namespace detail

}  // namespace turan
