#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "turan/bessel.hpp"
#include "turan/bounds.hpp"
#include "turan/errors.hpp"
#include "turan/scalar_special.hpp"
#include "turan/turanian.hpp"

using namespace turan;
using oracle::Big;

namespace {

const std::vector<double> kNuGrid = {-0.9, -0.5, -0.1, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
const std::vector<double> kXGrid = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};

// rho_n x^{2n}/(n!(n+1)!) 1F2(1; n+1, n+2; x^2) with every factor at 50 digits.
double hypergeom_bound_oracle(int n, double x_in) {
  const Big x = x_in;
  const Big q = x * x;
  Big term = 1, sum = 0;
  for (int k = 0; k < 2000; ++k) {
    sum += term;
    if (k > 5 && term < sum * Big("1e-40")) break;
    term *= q / ((n + 1 + k) * (n + 2 + k));
  }
  const std::int64_t peak = 2LL * n * n - 1;
  const Big pref = oracle::t_coefficient(n, peak) * pow(x, 2 * n) /
                   (boost::math::factorial<Big>(n) * boost::math::factorial<Big>(n + 1));
  return static_cast<double>(pref * sum);
}

double sqrt_bound_oracle(int n, double x_in) {
  const Big x = x_in;
  Big sum = 0;
  Big fact = boost::math::factorial<Big>(n) * boost::math::factorial<Big>(n + 1);
  Big pw = pow(x, 2 * n);
  for (int m = n; m < n + 3000; ++m) {
    const Big t = pw / (fact * sqrt(Big(m)));
    sum += t;
    if (m > n + 5 && t < sum * Big("1e-40")) break;
    pw *= x * x;
    fact *= Big(m + 1) * (m + 2);
  }
  return static_cast<double>(sum / sqrt(boost::math::constants::pi<Big>()));
}

}  // namespace

TEST(LowerOneTerm, SpecExamples) {
  for (double x : {0.0, 0.3, 4.0, 50.0}) EXPECT_DOUBLE_EQ(lower_one_term(0, x), 1.0);
  for (int n : {1, 2, 6}) {
    for (double x : {0.5, 3.0}) {
      const double expect =
          std::pow(x, 2 * n) / (std::pow(4.0, n) * std::tgamma(n + 1.0) * std::tgamma(n + 2.0));
      EXPECT_NEAR(lower_one_term(n, x) / expect, 1.0, 1e-14);
    }
  }
  EXPECT_LT(lower_one_term(1.5, 2), delta_series_real(1.5, 2, 1e-15).value);
  EXPECT_TRUE(std::isinf(lower_one_term(-0.3, 0.0)));
  EXPECT_EQ(lower_one_term(0.3, 0.0), 0.0);
  EXPECT_THROW(lower_one_term(-1.0, 1.0), DomainError);
}

TEST(LowerTwoTerm, SpecExamples) {
  for (int n : {0, 1, 4}) {
    const double x = 1.3;
    const double expect =
        std::pow(x, 2 * n) / (std::pow(4.0, n) * std::tgamma(n + 1.0) * std::tgamma(n + 2.0)) +
        std::pow(x, 2 * n + 2) / (std::pow(2.0, 2 * n + 1) * std::tgamma(n + 1.0) *
                                  std::tgamma(n + 3.0));
    EXPECT_NEAR(lower_two_term(n, x) / expect, 1.0, 1e-14) << n;
  }
  const double x = 1e-4;
  const double nu = 0.8;
  EXPECT_NEAR(lower_two_term(nu, x) / lower_one_term(nu, x) - 1.0, 0.0, 1e-8);
  const double d = delta_series_real(0.7, 3, 1e-15).value;
  EXPECT_GE(lower_two_term(0.7, 3), lower_one_term(0.7, 3));
  EXPECT_LE(lower_two_term(0.7, 3), d);
}

TEST(LowerBounds, HoldOnGridStrictly) {
  for (double nu : kNuGrid) {
    for (double x : kXGrid) {
      const double d = oracle::turanian(nu, x);
      const double one = lower_one_term(nu, x);
      const double two = lower_two_term(nu, x);
      EXPECT_LT(one, two) << nu << " " << x;
      EXPECT_LT(two, d) << nu << " " << x;
    }
  }
}

TEST(UpperHypergeom, SpecExamples) {
  EXPECT_EQ(upper_hypergeom(1, 0), 0.0);
  EXPECT_GE(upper_hypergeom(1, 2), delta_series_integer(1, 2, 1e-15).value);
  EXPECT_THROW(upper_hypergeom(0, 1), DomainError);
}

TEST(UpperHypergeom, AgainstMultiprecision) {
  for (int n : {1, 2, 5, 10}) {
    for (double x : {0.1, 1.0, 5.0, 20.0}) {
      EXPECT_LE(oracle::rel_diff(upper_hypergeom(n, x), hypergeom_bound_oracle(n, x)), 1e-13)
          << n << " " << x;
    }
  }
}

TEST(UpperSqrtSeries, SpecExamples) {
  EXPECT_EQ(upper_sqrt_series(1, 0), 0.0);
  EXPECT_GE(upper_sqrt_series(1, 1), delta_series_integer(1, 1, 1e-15).value);
  EXPECT_THROW(upper_sqrt_series(0, 1), DomainError);
  for (int n : {1, 3, 9}) {
    for (double x : {0.2, 2.0, 15.0}) {
      EXPECT_LE(oracle::rel_diff(upper_sqrt_series(n, x), sqrt_bound_oracle(n, x)), 1e-13)
          << n << " " << x;
    }
  }
}

TEST(UpperSqrtSeries, TermwiseDomination) {
  const double c = 1.0 / std::sqrt(kPi);
  for (int n = 1; n <= 10; ++n) {
    for (std::int64_t m = n; m <= 2000; ++m) {
      ASSERT_LE(t_coefficient(n, m), c / std::sqrt(static_cast<double>(m))) << n << " " << m;
    }
  }
}

TEST(UpperClassical, SpecExamples) {
  EXPECT_EQ(upper_classical(0, 0), 1.0);
  EXPECT_EQ(delta_series_real(0, 0, 1e-12).value, 1.0);
  EXPECT_GE(upper_classical(2, 1), oracle::turanian(2, 1));
  EXPECT_LT(upper_classical(10, 1), upper_hypergeom(10, 1));
  const double i = static_cast<double>(oracle::bessel_i(3, 4.0));
  EXPECT_NEAR(upper_classical(3, 4.0) / (i * i / 4.0), 1.0, 1e-14);
}

TEST(UpperBounds, HoldOnIntegerGrid) {
  for (int n = 1; n <= 10; ++n) {
    for (double x : kXGrid) {
      const double d = oracle::turanian(n, x);
      EXPECT_LE(d, upper_hypergeom(n, x)) << n << " " << x;
      EXPECT_LE(d, upper_sqrt_series(n, x)) << n << " " << x;
      EXPECT_LE(d, upper_classical(n, x)) << n << " " << x;
    }
  }
}

TEST(EvaluateAll, SpecExamples) {
  const BoundReport a = evaluate_all(1, 2, 1e-12);
  EXPECT_EQ(a.bounds.size(), 5u);
  EXPECT_TRUE(a.all_satisfied());

  const BoundReport b = evaluate_all(0.5, 1, 1e-12);
  ASSERT_EQ(b.bounds.size(), 2u);
  EXPECT_NE(b.find(kLowerOneTerm), nullptr);
  EXPECT_NE(b.find(kLowerTwoTerm), nullptr);
  EXPECT_EQ(b.find(kUpperClassical), nullptr);

  const BoundReport c = evaluate_all(3, 10, 1e-12);
  EXPECT_TRUE(c.all_satisfied());
  for (const auto& e : c.bounds) EXPECT_TRUE(std::isfinite(e.margin)) << e.id;
}

TEST(EvaluateAll, OrderZeroHasOnlyClassicalUpper) {
  const BoundReport r = evaluate_all(0, 2, 1e-12);
  EXPECT_EQ(r.bounds.size(), 3u);
  EXPECT_NE(r.find(kUpperClassical), nullptr);
  EXPECT_EQ(r.find(kUpperHypergeom), nullptr);
}

TEST(EvaluateAll, MarginsAreSideSigned) {
  const BoundReport r = evaluate_all(2, 3, 1e-13);
  for (const auto& e : r.bounds) {
    const double expect = e.side == BoundSide::lower ? r.delta - e.value : e.value - r.delta;
    EXPECT_EQ(e.margin, expect) << e.id;
    EXPECT_TRUE(e.strict) << e.id;
  }
}

TEST(EvaluateAll, OriginIsAnEqualityPoint) {
  const BoundReport zero = evaluate_all(0, 0, 1e-12);
  for (const auto& e : zero.bounds) EXPECT_TRUE(e.satisfied) << e.id;
  EXPECT_FALSE(zero.find(kLowerOneTerm)->strict);
  const BoundReport pos = evaluate_all(2, 0, 1e-12);
  EXPECT_TRUE(pos.all_satisfied());
  const BoundReport neg = evaluate_all(-0.5, 0, 1e-12);
  EXPECT_TRUE(neg.all_satisfied());
}

TEST(EvaluateAll, GridAllSatisfied) {
  for (double nu : kNuGrid) {
    for (double x : kXGrid) {
      EXPECT_TRUE(evaluate_all(nu, x, 1e-12).all_satisfied()) << nu << " " << x;
    }
  }
}
