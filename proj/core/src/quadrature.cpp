#include "turan/quadrature.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace turan {

namespace {

QuadratureRule build_rule(int n) {
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  if (n == 1) {
    rule.weights[0] = 2.0;
    return rule;
  }
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-type guess for the i-th largest root.
    double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw InternalError("gauss_legendre: Newton iteration did not converge for order " +
                          std::to_string(n));
    }
    // One polishing step, then the derivative at the polished root.
    double p0 = 1.0;
    double p1 = x;
    for (int pass = 0; pass < 2; ++pass) {
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      if (pass == 0) x -= p1 / dp;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct RuleCache {
  std::array<std::once_flag, kMaxQuadratureOrder + 1> once;
  std::array<std::unique_ptr<const QuadratureRule>, kMaxQuadratureOrder + 1> rules;
};

RuleCache& cache() {
  static RuleCache c;
  return c;
}

}  // namespace

namespace detail {

const QuadratureRule& gauss_legendre_any(int order) {
  if (order < 1 || order > kMaxQuadratureOrder) {
    throw DomainError("gauss_legendre: order must be in [2, 512], got " +
                      std::to_string(order));
  }
  RuleCache& c = cache();
  std::call_once(c.once[order], [&] {
    c.rules[order] = std::make_unique<const QuadratureRule>(build_rule(order));
  });
  return *c.rules[order];
}

}  // namespace detail

const QuadratureRule& gauss_legendre(int order) {
  if (order < kMinQuadratureOrder || order > kMaxQuadratureOrder) {
    throw DomainError("gauss_legendre: order must be in [2, 512], got " +
                      std::to_string(order));
  }
  return detail::gauss_legendre_any(order);
}

}  // namespace turan
