#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "turan/errors.hpp"
#include "turan/eval_result.hpp"

namespace turan {

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive, sum to 2
};

inline constexpr int kMinQuadratureOrder = 2;
inline constexpr int kMaxQuadratureOrder = 512;
inline constexpr int kDefaultQuadratureOrder = 64;

/// The order-point Gauss-Legendre rule, 2 <= order <= 512.
///
/// Nodes are the roots of P_order found by Newton iteration from Chebyshev
/// guesses; weights are 2 / ((1 - x^2) P'_order(x)^2). Each rule is built
/// once and cached for the life of the process, so the reference stays
/// valid. Thread-safe.
const QuadratureRule& gauss_legendre(int order);

namespace detail {
// Same as gauss_legendre but also accepts order 1 (the midpoint rule), which
// serves as the embedded half rule for order 2 and 3.
const QuadratureRule& gauss_legendre_any(int order);

template <class F>
double apply_rule(F& f, double a, double b, const QuadratureRule& rule,
                  double* abs_sum) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  double asum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = mid + half * rule.nodes[i];
    const double v = f(t);
    if (!std::isfinite(v)) {
      throw EvaluationError("integrate: non-finite integrand at t = " + std::to_string(t), t);
    }
    sum += rule.weights[i] * v;
    asum += rule.weights[i] * std::abs(v);
  }
  if (abs_sum) *abs_sum = half * asum;
  return half * sum;
}
}  // namespace detail

/// Integral of f over [a, b] with `rule` mapped affinely.
///
/// The error estimate is |Q(order) - Q(order/2)| plus a rounding term
/// 4 eps * integral of |f|. Throws EvaluationError (carrying the offending
/// node) on a non-finite sample and DomainError unless a < b.
template <class F>
EvalResult integrate(F&& f, double a, double b, const QuadratureRule& rule) {
  if (!(a < b)) throw DomainError("integrate: requires a < b");
  double abs_integral = 0.0;
  const double full = detail::apply_rule(f, a, b, rule, &abs_integral);
  const auto& half_rule = detail::gauss_legendre_any(std::max(1, rule.order / 2));
  const double half = detail::apply_rule(f, a, b, half_rule, nullptr);
  const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * abs_integral;
  return {full, std::abs(full - half) + rounding, Method::quadrature,
          rule.order + half_rule.order, false};
}

/// Composite version of integrate over `panels` equal sub-intervals.
template <class F>
EvalResult integrate_panels(F&& f, double a, double b, int panels,
                            const QuadratureRule& rule) {
  if (panels < 1) throw DomainError("integrate_panels: panels must be >= 1");
  EvalResult total{0.0, 0.0, Method::quadrature, 0, false};
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == panels) ? b : lo + h;
    const EvalResult r = integrate(f, lo, hi, rule);
    total.value += r.value;
    total.abs_error_est += r.abs_error_est;
    total.work += r.work;
  }
  return total;
}

}  // namespace turan
