#include "turan/scalar_special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "series_sum.hpp"
#include "turan/errors.hpp"

namespace turan {

namespace {

constexpr int kExactFactorialMax = 22;  // 22! is the last factorial exact in a double

const std::array<double, kExactFactorialMax + 1>& exact_factorials() {
  static const auto table = [] {
    std::array<double, kExactFactorialMax + 1> f{};
    f[0] = 1.0;
    for (int i = 1; i <= kExactFactorialMax; ++i) f[i] = f[i - 1] * i;
    return f;
  }();
  return table;
}

constexpr int kZetaMax = 64;

// zeta(k) for k = 2..kZetaMax by Euler-Maclaurin with cutoff N = 20.
const std::array<double, kZetaMax + 1>& zeta_table() {
  static const auto table = [] {
    // B_2j / (2j)!
    constexpr std::array<double, 6> kBernoulliOverFactorial = {
        1.0 / 6.0 / 2.0,
        -1.0 / 30.0 / 24.0,
        1.0 / 42.0 / 720.0,
        -1.0 / 30.0 / 40320.0,
        5.0 / 66.0 / 3628800.0,
        -691.0 / 2730.0 / 479001600.0,
    };
    constexpr int kN = 20;
    std::array<double, kZetaMax + 1> z{};
    for (int k = 2; k <= kZetaMax; ++k) {
      double tail = std::pow(kN, 1.0 - k) / (k - 1) + 0.5 * std::pow(kN, -k);
      // (k)_{2j-1} N^{-k-2j+1}
      double rising = k;
      double power = std::pow(kN, -k - 1.0);
      for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
        tail += kBernoulliOverFactorial[j] * rising * power;
        rising *= (k + 2.0 * j + 1.0) * (k + 2.0 * j + 2.0);
        power /= static_cast<double>(kN) * kN;
      }
      double head = 0.0;
      for (int n = kN - 1; n >= 1; --n) head += std::pow(n, -k);
      z[k] = head + tail;
    }
    return z;
  }();
  return table;
}

// ln Gamma(1 + z) for |z| <= 1/2 from the Taylor series about 1:
//   -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k
double log_gamma_1p(double z) {
  const auto& zeta = zeta_table();
  double acc = 0.0;
  for (int k = kZetaMax; k >= 2; --k) {
    const double c = ((k % 2 == 0) ? 1.0 : -1.0) * zeta[k] / k;
    acc = acc * z + c;
  }
  return z * (acc * z - kEulerGamma);
}

// Lanczos-type approximation (g = 671/128, 14 terms), good to ~1e-15 relative
// for x >= 2.5.
double log_gamma_lanczos(double x) {
  static constexpr std::array<double, 14> kCoef = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,
      -.210264441724104883e-3, .217439618115212643e-3,
      -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : kCoef) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

bool is_integer(double x) noexcept { return x == std::nearbyint(x); }

}  // namespace

LogValue LogValue::from_linear(double v) noexcept {
  if (v == 0.0) return zero();
  return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
}

bool LogValue::overflows() const noexcept {
  static const double kMaxLog = std::log(std::numeric_limits<double>::max());
  return sign != 0 && log_magnitude > kMaxLog;
}

double LogValue::to_linear() const noexcept {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

LogValue operator*(LogValue a, LogValue b) noexcept {
  if (a.sign == 0 || b.sign == 0) return LogValue::zero();
  return {a.log_magnitude + b.log_magnitude, a.sign * b.sign};
}

LogValue operator/(LogValue a, LogValue b) {
  if (b.sign == 0) throw DomainError("LogValue: division by zero");
  if (a.sign == 0) return LogValue::zero();
  return {a.log_magnitude - b.log_magnitude, a.sign * b.sign};
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_gamma: argument must be finite and positive, got " +
                      std::to_string(x));
  }
  if (is_integer(x) && x <= kExactFactorialMax + 1) {
    return std::log(exact_factorials()[static_cast<int>(x) - 1]);
  }
  if (x < 0.5) return log_gamma_1p(x) - std::log(x);
  if (x < 1.5) return log_gamma_1p(x - 1.0);
  if (x < 2.5) return std::log1p(x - 2.0) + log_gamma_1p(x - 2.0);
  return log_gamma_lanczos(x);
}

double sin_pi(double x) noexcept {
  const double n = std::nearbyint(x);
  const double s = std::sin(kPi * (x - n));
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (x <= 0.0 && is_integer(x)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
  }
  if (is_integer(x) && x <= kExactFactorialMax + 1) {
    return exact_factorials()[static_cast<int>(x) - 1];
  }
  if (x >= 0.5) return std::exp(log_gamma(x));
  return kPi / (sin_pi(x) * gamma(1.0 - x));
}

LogValue log_gamma_signed(double x) {
  if (!std::isfinite(x)) throw DomainError("log_gamma_signed: non-finite argument");
  if (x > 0.0) return {log_gamma(x), 1};
  if (is_integer(x)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
  }
  const double s = sin_pi(x);
  return {std::log(kPi) - std::log(std::abs(s)) - log_gamma(1.0 - x), s > 0.0 ? 1 : -1};
}

std::optional<std::uint64_t> exact_binomial(std::int64_t n, std::int64_t k) noexcept {
  if (n < 0 || k < 0 || k > n) return std::nullopt;
  k = std::min(k, n - k);
  constexpr std::uint64_t kProductLimit = std::uint64_t{1} << 62;
  constexpr std::uint64_t kExactLimit = std::uint64_t{1} << 53;
  std::uint64_t c = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    const auto factor = static_cast<std::uint64_t>(n - k + j);
    if (c > kProductLimit / factor) return std::nullopt;
    c = c * factor / static_cast<std::uint64_t>(j);  // C(n-k+j, j), exact
  }
  if (c > kExactLimit) return std::nullopt;
  return c;
}

double stirling_remainder(std::int64_t m) {
  if (m < 1) throw DomainError("stirling_remainder: m must be >= 1");
  const double x = static_cast<double>(m);
  if (m < 10) {
    return std::log(exact_factorials()[m]) -
           (x * std::log(x) - x + 0.5 * std::log(2.0 * kPi * x));
  }
  const double r = 1.0 / x;
  const double r2 = r * r;
  return r * (1.0 / 12.0 +
              r2 * (-1.0 / 360.0 +
                    r2 * (1.0 / 1260.0 +
                          r2 * (-1.0 / 1680.0 +
                                r2 * (1.0 / 1188.0 +
                                      r2 * (-691.0 / 360360.0 +
                                            r2 * (1.0 / 156.0 +
                                                  r2 * (-3617.0 / 122400.0))))))));
}

LogValue log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("log_binomial: n must be non-negative");
  if (k < 0 || k > n) return LogValue::zero();
  if (auto c = exact_binomial(n, k)) {
    return {std::log(static_cast<double>(*c)), 1};
  }
  // Stirling form with k <= n/2; each piece is O(n) at worst, never O(n ln n).
  const std::int64_t kk = std::min(k, n - k);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(kk);
  const double rest = nd - kd;
  const double log_c = -kd * std::log(kd / nd) - rest * std::log1p(-kd / nd) -
                       0.5 * std::log(2.0 * kPi * kd * rest / nd) +
                       stirling_remainder(n) - stirling_remainder(kk) -
                       stirling_remainder(n - kk);
  return {log_c, 1};
}

double pochhammer(double a, int m) {
  if (m < 0) throw DomainError("pochhammer: m must be non-negative");
  double p = 1.0;
  for (int j = 0; j < m; ++j) {
    p *= a + j;
    if (!std::isfinite(p)) {
      throw OverflowError("pochhammer: product overflows at factor " + std::to_string(j));
    }
  }
  return p;
}

EvalResult hyp1f2(double b1, double b2, double z, double tol) {
  if (!(b1 > 0.0) || !(b2 > 0.0)) throw DomainError("hyp1f2: b1 and b2 must be positive");
  if (!(tol > 0.0)) throw DomainError("hyp1f2: tol must be positive");
  if (!std::isfinite(z)) throw DomainError("hyp1f2: non-finite argument");
  auto ratio = [=](int k) { return z / ((b1 + k) * (b2 + k)); };
  return detail::sum_series(1.0, ratio, tol, "hyp1f2").as_result(Method::series);
}

}  // namespace turan
