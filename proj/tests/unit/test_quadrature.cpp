#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "turan/bessel.hpp"
#include "turan/errors.hpp"
#include "turan/quadrature.hpp"
#include "turan/scalar_special.hpp"

using namespace turan;

TEST(GaussLegendre, TwoPointRule) {
  const QuadratureRule& r = gauss_legendre(2);
  ASSERT_EQ(r.nodes.size(), 2u);
  constexpr double kInvSqrt3 = 0.57735026918962576451;  // correctly rounded 1/sqrt(3)
  EXPECT_EQ(r.nodes[0], -kInvSqrt3);
  EXPECT_EQ(r.nodes[1], kInvSqrt3);
  EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(r.weights[1], 1.0, 1e-15);
}

TEST(GaussLegendre, StructuralInvariants) {
  for (int order : {2, 3, 7, 32, 64, 101, 128, 257, 512}) {
    const QuadratureRule& r = gauss_legendre(order);
    ASSERT_EQ(r.order, order);
    ASSERT_EQ(static_cast<int>(r.nodes.size()), order);
    double wsum = 0.0;
    for (int i = 0; i < order; ++i) {
      EXPECT_GT(r.weights[i], 0.0);
      EXPECT_GT(r.nodes[i], -1.0);
      EXPECT_LT(r.nodes[i], 1.0);
      if (i > 0) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
      EXPECT_EQ(r.nodes[i], -r.nodes[order - 1 - i]) << order << " " << i;
      wsum += r.weights[i];
    }
    EXPECT_NEAR(wsum, 2.0, 1e-14) << order;
  }
}

TEST(GaussLegendre, OrderRange) {
  EXPECT_THROW(gauss_legendre(1), DomainError);
  EXPECT_THROW(gauss_legendre(513), DomainError);
}

TEST(GaussLegendre, CachedReferenceIsStable) {
  const QuadratureRule* first = &gauss_legendre(48);
  EXPECT_EQ(first, &gauss_legendre(48));
}

TEST(GaussLegendre, ConcurrentFirstUseBuildsOneRule) {
  std::vector<const QuadratureRule*> seen(8, nullptr);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&seen, i] { seen[i] = &gauss_legendre(333); });
  }
  for (auto& t : threads) t.join();
  for (auto* p : seen) EXPECT_EQ(p, seen.front());
}

TEST(GaussLegendre, MonomialExactness) {
  for (int order : {2, 3, 5, 16, 64}) {
    const QuadratureRule& r = gauss_legendre(order);
    for (int d = 0; d <= 2 * order - 1; ++d) {
      double q = 0.0;
      for (int i = 0; i < order; ++i) q += r.weights[i] * std::pow(r.nodes[i], d);
      const double exact = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
      EXPECT_NEAR(q, exact, 1e-13) << "order " << order << " degree " << d;
    }
  }
}

TEST(GaussLegendre, RandomPolynomialExactness) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 2 + trial % 20;
    const int degree = 2 * order - 1;
    std::vector<double> c(degree + 1);
    double scale = 0.0;
    for (auto& v : c) {
      v = coef(rng);
      scale += std::abs(v);
    }
    auto poly = [&](double t) {
      double s = 0.0;
      for (int k = degree; k >= 0; --k) s = s * t + c[k];
      return s;
    };
    // Exact integral over [-1, 2].
    double exact = 0.0;
    for (int k = 0; k <= degree; ++k) exact += c[k] * (std::pow(2.0, k + 1) - std::pow(-1.0, k + 1)) / (k + 1);
    const EvalResult q = integrate(poly, -1.0, 2.0, gauss_legendre(order));
    EXPECT_NEAR(q.value, exact, 1e-12 * scale * std::pow(2.0, degree + 1)) << trial;
  }
}

TEST(Integrate, SpecExamples) {
  const EvalResult quartic = integrate([](double t) { return t * t * t * t; }, -1.0, 1.0, gauss_legendre(3));
  EXPECT_NEAR(quartic.value, 0.4, 1e-14);

  const EvalResult sin2 = integrate([](double t) { return std::sin(t) * std::sin(t); }, 0.0, 0.5 * kPi,
                                    gauss_legendre(32));
  EXPECT_NEAR(sin2.value, 0.25 * kPi, 1e-13);

  const EvalResult one = integrate([](double) { return 1.0; }, 0.0, 3.0, gauss_legendre(8));
  EXPECT_NEAR(one.value, 3.0, 1e-14);

  const EvalResult cosine = integrate([](double t) { return std::cos(t); }, 0.0, 0.5 * kPi, gauss_legendre(32));
  EXPECT_NEAR(cosine.value, 1.0, 1e-13);
}

TEST(Integrate, EvenIntegrandSymmetry) {
  // I_1(2x sin t) / sin t at x = 1 written as 2 I_1(u)/u with u = 2 sin t.
  auto f = [](double t) { return 2.0 * bessel_i1_over_z(2.0 * std::sin(t)); };
  const QuadratureRule& r = gauss_legendre(64);
  const double full = integrate(f, -0.5 * kPi, 0.5 * kPi, r).value;
  const double half = integrate(f, 0.0, 0.5 * kPi, r).value;
  EXPECT_NEAR(full, 2.0 * half, 1e-13);
}

TEST(Integrate, DoublingOrderDoesNotIncreaseError) {
  struct Case {
    double (*f)(double);
    double a, b, exact;
  };
  const Case cases[] = {
      {[](double t) { return std::sin(t) * std::sin(t); }, 0.0, 0.5 * kPi, 0.25 * kPi},
      {[](double t) { return std::cos(t); }, 0.0, 0.5 * kPi, 1.0},
      {[](double t) { return std::exp(3.0 * t); }, 0.0, 2.0, (std::exp(6.0) - 1.0) / 3.0},
  };
  for (const auto& c : cases) {
    double prev = INFINITY;
    for (int order = 2; order <= 256; order *= 2) {
      const double err = std::abs(integrate(c.f, c.a, c.b, gauss_legendre(order)).value - c.exact);
      // Once converged the error sits at rounding level; allow that floor.
      EXPECT_LE(err, std::max(prev, 64 * 2.2e-16 * std::abs(c.exact))) << "order " << order;
      prev = err;
    }
  }
}

TEST(Integrate, ErrorEstimateBoundsActualError) {
  const double exact = (std::exp(6.0) - 1.0) / 3.0;
  for (int order : {4, 8, 16, 32}) {
    const EvalResult r = integrate([](double t) { return std::exp(3.0 * t); }, 0.0, 2.0, gauss_legendre(order));
    EXPECT_LE(std::abs(r.value - exact), r.abs_error_est + 1e-15 * exact) << order;
    EXPECT_GE(r.work, order);
  }
}

TEST(Integrate, NonFiniteSampleCarriesNode) {
  try {
    integrate([](double t) { return t > 0.5 ? std::nan("") : 1.0; }, 0.0, 1.0, gauss_legendre(8));
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& e) {
    EXPECT_GT(e.node(), 0.5);
    EXPECT_LT(e.node(), 1.0);
  }
}

TEST(Integrate, EmptyIntervalRejected) {
  EXPECT_THROW(integrate([](double) { return 1.0; }, 1.0, 1.0, gauss_legendre(4)), DomainError);
  EXPECT_THROW(integrate([](double) { return 1.0; }, 2.0, 1.0, gauss_legendre(4)), DomainError);
}
