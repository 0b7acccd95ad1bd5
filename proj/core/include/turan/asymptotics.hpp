#pragma once

#include <string_view>
#include <vector>

namespace turan {

/// Which power of e x / (2 nu) multiplies the large-order formula.
enum class ExponentMode { as_printed, squared };
std::string_view to_string(ExponentMode mode) noexcept;

struct AsymptoticCheck {
  double parameter = 0.0;  // n, nu or m
  double exact = 0.0;
  double approx = 0.0;
  double ratio = 0.0;  // exact / approx
};

/// x^{2n} / (4^n n! (n+1)!), the leading behaviour of Delta_n(x) as n grows.
double delta_large_n(int n, double x);

/// 1/(2 pi nu) (e|x|/(2nu))^p (1 - nu^{2nu+1} / ((nu-1)^{nu-1/2} (nu+1)^{nu+3/2}))
/// with p = nu (as_printed) or 2 nu (squared). nu > 1, x != 0.
double delta_large_nu(double nu, double x, ExponentMode mode);

/// The bracket 1 - exp(L), L = (2nu+1) ln nu - (nu-1/2) ln(nu-1) - (nu+3/2) ln(nu+1),
/// evaluated through log1p and expm1. Positive for nu > 1.
double large_nu_bracket(double nu);

/// 1 / sqrt(pi m), the large-m limit of T_n(m) for every fixed n.
double t_large_m(long long m);

/// Delta_n(x) / delta_large_n(n, x) for each n.
std::vector<AsymptoticCheck> large_n_table(const std::vector<int>& orders, double x, double tol);

/// Delta_nu(x) / delta_large_nu(nu, x, mode) for each nu.
std::vector<AsymptoticCheck> large_nu_table(const std::vector<double>& orders, double x,
                                            ExponentMode mode, double tol);

/// T_n(m) / t_large_m(m) for each m.
std::vector<AsymptoticCheck> large_m_table(int n, const std::vector<long long>& ms);

struct ExponentAdjudication {
  /// Ratio at the largest order for each mode.
  double final_ratio_as_printed = 0.0;
  double final_ratio_squared = 0.0;
  bool as_printed_converges = false;
  bool squared_converges = false;
  /// "as_printed", "squared", or "none"/"both" when the table is inconclusive.
  std::string_view convergent_mode = "none";
};

/// Decides which exponent mode approaches ratio 1 within `band` at the last
/// order in `orders`.
ExponentAdjudication adjudicate_exponent(const std::vector<double>& orders, double x,
                                         double band, double tol);

}  // namespace turan
