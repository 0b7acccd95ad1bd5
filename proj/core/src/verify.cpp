#include "turan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string_view>
#include <thread>

#include "turan/bessel.hpp"
#include "turan/bounds.hpp"
#include "turan/errors.hpp"
#include "turan/quadrature.hpp"
#include "turan/scalar_special.hpp"
#include "turan/turanian.hpp"

namespace turan {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Relative accuracy of the computed zeros (Newton stops at |step| < 1e-12 x).
constexpr double kZeroRelativeError = 2e-12;
constexpr int kTermwiseZeroCount = 50;
constexpr double kClosedFormZeroTolerance = 1e-10;

struct Check {
  GridPoint point;
  double margin = 0.0;
  std::string diagnostics;  // filled only for failures
};

struct PointOutcome {
  std::vector<Check> checks;
  std::vector<Observation> observations;
};

double scale_of(double reference) {
  const double a = std::abs(reference);
  return (a > 0.0 && std::isfinite(a)) ? a : 1.0;
}

// Adds one check: passes iff raw + allowance >= 0.
void record(PointOutcome& out, GridPoint p, double raw, double allowance, double reference,
            std::string_view what) {
  Check c;
  c.point = p;
  c.margin = (raw + allowance) / scale_of(reference);
  if (std::isnan(c.margin)) c.margin = -std::numeric_limits<double>::infinity();
  if (c.margin < 0.0) {
    c.diagnostics = std::string(what);
  }
  out.checks.push_back(std::move(c));
}

void record_error(PointOutcome& out, GridPoint p, std::string_view what, const std::exception& e) {
  out.checks.push_back({p, kNaN, std::string(what) + ": " + e.what()});
}

bool failed(const Check& c) { return !(c.margin >= 0.0); }

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string property) { report_.property = std::move(property); }

  void add(PointOutcome&& outcome) {
    for (auto& c : outcome.checks) {
      ++report_.points_tested;
      if (!std::isnan(c.margin) && (!have_worst_ || c.margin < report_.worst_margin)) {
        report_.worst_margin = c.margin;
        report_.worst_point = c.point;
        have_worst_ = true;
      }
      if (failed(c)) {
        report_.failures.push_back({c.point.nu, c.point.x, c.margin, std::move(c.diagnostics)});
      }
    }
    for (auto& o : outcome.observations) report_.observations.push_back(std::move(o));
  }

  void tolerance(std::string name, double value) {
    report_.tolerances.emplace_back(std::move(name), value);
  }

  void observe(Observation o) { report_.observations.push_back(std::move(o)); }

  CertificationReport finish() && { return std::move(report_); }

 private:
  CertificationReport report_;
  bool have_worst_ = false;
};

// Evaluates fn(i) for i < count on up to `threads` workers; results are
// indexed, so the assembled order never depends on scheduling.
std::vector<PointOutcome> sweep(std::size_t count, int threads,
                                const std::function<PointOutcome(std::size_t)>& fn) {
  std::vector<PointOutcome> results(count);
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) results[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

ReportBuilder assemble(std::string property, std::vector<PointOutcome>&& outcomes) {
  ReportBuilder b(std::move(property));
  for (auto& o : outcomes) b.add(std::move(o));
  return b;
}

// Doubles the order until the quadrature estimate meets tol relative to the
// value, or the largest rule is reached.
template <class F>
EvalResult with_escalation(F&& integrate_with, int order, double tol) {
  for (;;) {
    EvalResult r = integrate_with(gauss_legendre(order));
    if (r.abs_error_est <= tol * std::max(1.0, std::abs(r.value)) ||
        2 * order > kMaxQuadratureOrder) {
      return r;
    }
    order *= 2;
  }
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct Turanian {
  double value;
  double error;
};

// J_nu^2 - J_{nu-1} J_{nu+1} with propagated error; also returns J_nu.
Turanian j_turanian(double nu, double x, double tol, EvalResult* j_nu) {
  const EvalResult j0 = detail::bessel_j_series(nu, x, tol);
  const EvalResult jm = detail::bessel_j_series(nu - 1.0, x, tol);
  const EvalResult jp = detail::bessel_j_series(nu + 1.0, x, tol);
  if (j_nu != nullptr) *j_nu = j0;
  const double sq = j0.value * j0.value;
  const double cross = jm.value * jp.value;
  const double err = 2.0 * std::abs(j0.value) * j0.abs_error_est +
                     std::abs(jp.value) * jm.abs_error_est +
                     std::abs(jm.value) * jp.abs_error_est + 2.0 * kEps * (sq + std::abs(cross));
  return {sq - cross, err};
}

// Upper bound on sum_{k>N} 1/j_{nu,k}^2. Consecutive zeros are at least pi
// apart when |nu| >= 1/2, and j_{nu,k} >= (k + nu/2 - 1/4) pi when |nu| < 1/2.
double zero_tail_bound(double nu, const std::vector<double>& zeros) {
  const double n = static_cast<double>(zeros.size());
  const double lead = std::abs(nu) >= 0.5 ? zeros.back() : (n + 0.5 * nu - 0.25) * kPi;
  return 1.0 / (kPi * lead);
}

}  // namespace

void GridSpec::validate() const {
  auto check_point = [](double nu, double x) {
    if (!(nu > -1.0)) throw DomainError("grid: every order must exceed -1");
    check_envelope(nu, x, "grid");
  };
  for (double nu : nu_values) {
    for (double x : x_values) check_point(nu, x);
  }
  if (random) {
    if (random->count < 0) throw DomainError("grid: negative random count");
    if (random->count > 0) {
      if (!(random->nu_min <= random->nu_max) || !(random->x_min <= random->x_max)) {
        throw DomainError("grid: empty random range");
      }
      check_point(random->nu_min, random->x_min);
      check_point(random->nu_max, random->x_max);
    }
  }
}

std::vector<GridPoint> GridSpec::points() const {
  std::vector<GridPoint> out;
  out.reserve(nu_values.size() * x_values.size() + (random ? random->count : 0));
  for (double nu : nu_values) {
    for (double x : x_values) out.push_back({nu, x});
  }
  if (random && random->count > 0) {
    std::mt19937_64 rng(random->seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < random->count; ++i) {
      const double nu = random->nu_min + uniform() * (random->nu_max - random->nu_min);
      const double x = random->x_min + uniform() * (random->x_max - random->x_min);
      out.push_back({nu, x});
    }
  }
  return out;
}

GridSpec GridSpec::default_grid(std::uint64_t seed) {
  GridSpec g;
  g.nu_values = {-0.9, -0.75, -0.5, -0.25, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0, 20.0};
  for (int n = 0; n <= 10; ++n) g.nu_values.push_back(n);
  g.nu_values = sorted_unique(std::move(g.nu_values));
  g.x_values = {0.1, 0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 10.0, 15.0, 20.0};
  RandomSampling r;
  r.count = 50;
  r.seed = seed;
  g.random = r;
  return g;
}

CertificationReport certify_cross_method(const GridSpec& grid, double tol,
                                         const CertifyOptions& options) {
  grid.validate();
  const auto pts = grid.points();
  auto outcomes = sweep(pts.size(), options.threads, [&](std::size_t i) {
    PointOutcome out;
    const GridPoint p = pts[i];
    std::vector<std::pair<std::string_view, EvalResult>> values;
    try {
      values.emplace_back("series_real", delta_series_real(p.nu, p.x, tol));
      values.emplace_back("direct", delta_direct(p.nu, p.x, tol));
      if (is_integer_order(p.nu)) {
        const int n = static_cast<int>(std::nearbyint(p.nu));
        values.emplace_back("series_integer", delta_series_integer(n, p.x, tol));
        if (p.x != 0.0) {
          values.emplace_back(
              "fourier", with_escalation([&](const QuadratureRule& r) { return delta_fourier(n, p.x, r); },
                                         options.quadrature_order, tol));
        }
      }
      if (p.nu > -0.5) {
        values.emplace_back(
            "neumann", with_escalation([&](const QuadratureRule& r) { return delta_neumann(p.nu, p.x, r); },
                                       options.quadrature_order, tol));
      }
    } catch (const std::exception& e) {
      record_error(out, p, "evaluation", e);
      return out;
    }
    const double reference = values.front().second.value;
    for (std::size_t a = 0; a < values.size(); ++a) {
      for (std::size_t b = a + 1; b < values.size(); ++b) {
        const EvalResult& ra = values[a].second;
        const EvalResult& rb = values[b].second;
        const std::string what =
            std::string(values[a].first) + " vs " + std::string(values[b].first);
        if (!std::isfinite(ra.value) || !std::isfinite(rb.value)) {
          record(out, p, ra.value == rb.value ? 0.0 : -1.0, 0.0, 1.0, what);
          continue;
        }
        record(out, p, -std::abs(ra.value - rb.value), ra.abs_error_est + rb.abs_error_est + tol,
               reference, what);
      }
    }
    return out;
  });
  ReportBuilder b = assemble("cross_method", std::move(outcomes));
  b.tolerance("tol", tol);
  b.tolerance("quadrature_order", options.quadrature_order);
  return std::move(b).finish();
}

CertificationReport certify_bounds(const GridSpec& grid, double tol,
                                   const CertifyOptions& options) {
  grid.validate();
  const auto pts = grid.points();
  auto outcomes = sweep(pts.size(), options.threads, [&](std::size_t i) {
    PointOutcome out;
    const GridPoint p = pts[i];
    BoundReport report;
    try {
      report = evaluate_all(p.nu, p.x, tol);
    } catch (const std::exception& e) {
      record_error(out, p, "evaluate_all", e);
      return out;
    }
    const double delta_slack =
        report.delta_error_est +
        (std::isfinite(report.delta) ? 4.0 * kEps * std::abs(report.delta) : 0.0);
    for (const auto& e : report.bounds) {
      record(out, p, e.margin, delta_slack + e.error_est, report.delta, e.id);
      if (p.x != 0.0 && e.side == BoundSide::lower && !e.strict) {
        out.observations.push_back({"non_strict:" + e.id, p.nu, p.x, e.margin});
      }
    }
    return out;
  });
  ReportBuilder b = assemble("bounds", std::move(outcomes));

  // Which integer-order upper bound is tighter, per grid x, and where it switches.
  std::vector<double> xs;
  for (double x : grid.x_values) {
    if (x > 0.0) xs.push_back(x);
  }
  xs = sorted_unique(std::move(xs));
  for (int n : {1, 10}) {
    const std::string suffix = "_n" + std::to_string(n);
    double previous = kNaN;
    double first_crossover = kNaN;
    for (double x : xs) {
      double ratio = kNaN;
      try {
        ratio = upper_hypergeom(n, x, tol) / upper_classical(n, x);
      } catch (const std::exception&) {
        continue;
      }
      b.observe({"hypergeom_over_classical" + suffix, double(n), x, ratio});
      if (!std::isnan(previous) && (previous < 1.0) != (ratio < 1.0)) {
        // value +1: hypergeometric bound becomes tighter; -1: classical does.
        b.observe({"tighter_switch" + suffix, double(n), x, ratio < 1.0 ? 1.0 : -1.0});
      }
      if (std::isnan(first_crossover) && ratio < 1.0) first_crossover = x;
      previous = ratio;
    }
    b.observe({"hypergeom_tighter_from_x" + suffix, double(n), first_crossover, first_crossover});
  }
  b.tolerance("tol", tol);
  b.tolerance("eps_factor", 4.0);
  return std::move(b).finish();
}

CertificationReport certify_j_comparison(const GridSpec& grid, double tol,
                                         const CertifyOptions& options) {
  grid.validate();
  std::vector<GridPoint> pts;
  for (const auto& p : grid.points()) {
    const double ax = std::abs(p.x);
    if (ax != 0.0 && ax <= p.nu + kJSeriesSafeMargin) pts.push_back({p.nu, ax});
  }
  auto outcomes = sweep(pts.size(), options.threads, [&](std::size_t i) {
    PointOutcome out;
    const GridPoint p = pts[i];
    try {
      const EvalResult di = delta_series_real(p.nu, p.x, tol);
      const EvalResult inu = bessel_i(p.nu, p.x, tol);
      EvalResult jnu;
      const Turanian dj = j_turanian(p.nu, p.x, tol, &jnu);
      if (is_integer_order(p.nu)) {
        record(out, p, di.value - dj.value, di.abs_error_est + dj.error + tol, di.value,
               "J turanian below I turanian");
      }
      if (std::abs(jnu.value) <= tol) {
        record(out, p, dj.value, dj.error + tol, dj.value, "J turanian non-negative at a zero");
      } else {
        const double weight = (jnu.value * jnu.value) / (inu.value * inu.value);
        const double rhs = weight * di.value;
        const double rhs_err =
            std::abs(rhs) * (2.0 * jnu.abs_error_est / std::abs(jnu.value) +
                             2.0 * inu.abs_error_est / inu.value + di.abs_error_est / di.value +
                             4.0 * kEps);
        record(out, p, dj.value - rhs, dj.error + rhs_err + tol, dj.value,
               "J turanian above weighted I turanian");
      }
    } catch (const std::exception& e) {
      record_error(out, p, "evaluation", e);
    }
    return out;
  });
  ReportBuilder b = assemble("j_comparison", std::move(outcomes));
  b.tolerance("tol", tol);
  b.tolerance("x_max_minus_nu", kJSeriesSafeMargin);
  return std::move(b).finish();
}

namespace {

PointOutcome zero_sum_checks(double nu, double x, int zero_count, double tol) {
  if (!(nu > -1.0)) throw DomainError("certify_zero_sums: nu must exceed -1");
  if (x == 0.0) throw DomainError("certify_zero_sums: x must be non-zero");
  if (zero_count < 1 || zero_count > 1000) {
    throw DomainError("certify_zero_sums: zero count must lie in [1, 1000]");
  }
  PointOutcome out;
  const GridPoint p{nu, x};
  const double x2 = x * x;
  try {
    const std::vector<double> zeros = bessel_j_zeros(nu, zero_count);
    const double tail = zero_tail_bound(nu, zeros);
    out.observations.push_back({"tail_bound", nu, x, tail});

    // Modified-Bessel identity.
    const EvalResult di = delta_series_real(nu, x, tol);
    const EvalResult inu = bessel_i(nu, x, tol);
    const double lhs = di.value / (4.0 * inu.value * inu.value);
    const double lhs_err =
        lhs * (di.abs_error_est / di.value + 2.0 * inu.abs_error_est / inu.value + 4.0 * kEps);
    double sum = 0.0;
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
      const double j2 = *it * *it;
      sum += j2 / ((x2 + j2) * (x2 + j2));
    }
    const double sum_err = sum * (zeros.size() * kEps + 4.0 * kZeroRelativeError);
    const double gap = lhs - sum;
    const double allowance = lhs_err + sum_err + tol;
    record(out, p, gap, allowance, lhs, "I identity: partial sum exceeds left side");
    record(out, p, tail - gap, allowance, lhs, "I identity: remainder exceeds tail bound");

    // Bessel identity, away from zeros and inside the series-safe region.
    double nearest = std::numeric_limits<double>::infinity();
    for (double j : zeros) nearest = std::min(nearest, std::abs(std::abs(x) - j));
    const double last = zeros.back();
    if (std::abs(x) <= nu + kJSeriesSafeMargin && nearest > 1e-6 && std::abs(x) < last) {
      EvalResult jnu;
      const Turanian dj = j_turanian(nu, std::abs(x), tol, &jnu);
      if (std::abs(jnu.value) > tol) {
        const double lhs_j = dj.value / (4.0 * jnu.value * jnu.value);
        const double lhs_j_err =
            std::abs(lhs_j) * (dj.error / std::abs(dj.value) +
                               2.0 * jnu.abs_error_est / std::abs(jnu.value) + 4.0 * kEps);
        double sum_j = 0.0;
        double sum_j_err = 0.0;
        for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
          const double j2 = *it * *it;
          const double d = x2 - j2;
          const double term = j2 / (d * d);
          sum_j += term;
          sum_j_err += term * (2.0 + 4.0 * j2 / std::abs(d)) * kZeroRelativeError;
        }
        sum_j_err += sum_j * zeros.size() * kEps;
        const double shrink = 1.0 - x2 / (last * last);
        const double tail_j = tail / (shrink * shrink);
        out.observations.push_back({"tail_bound_j", nu, x, tail_j});
        const double gap_j = lhs_j - sum_j;
        const double allowance_j = lhs_j_err + sum_j_err + tol;
        record(out, p, gap_j, allowance_j, lhs_j, "J identity: partial sum exceeds left side");
        record(out, p, tail_j - gap_j, allowance_j, lhs_j,
               "J identity: remainder exceeds tail bound");
      }
    }

    // Termwise comparison behind the weighted inequality.
    const std::size_t termwise = std::min<std::size_t>(kTermwiseZeroCount, zeros.size());
    for (std::size_t k = 0; k < termwise; ++k) {
      const double j2 = zeros[k] * zeros[k];
      const double d = x2 - j2;
      if (d == 0.0) continue;
      const double plus = 1.0 / ((x2 + j2) * (x2 + j2));
      const double minus = 1.0 / (d * d);
      record(out, p, minus - plus, 4.0 * kEps * minus, minus, "termwise comparison");
    }

    if (std::abs(nu - 0.5) < kIntegerOrderTolerance) {
      for (std::size_t k = 0; k < termwise; ++k) {
        const double exact = (k + 1.0) * kPi;
        record(out, p, kClosedFormZeroTolerance - std::abs(zeros[k] - exact), 0.0, 1.0,
               "closed-form zero k*pi");
      }
    }
  } catch (const std::exception& e) {
    record_error(out, p, "evaluation", e);
  }
  return out;
}

void zero_sum_tolerances(ReportBuilder& b, int zero_count, double tol) {
  b.tolerance("tol", tol);
  b.tolerance("zero_count", zero_count);
  b.tolerance("zero_relative_error", kZeroRelativeError);
  b.tolerance("closed_form_zero", kClosedFormZeroTolerance);
}

}  // namespace

CertificationReport certify_zero_sums(double nu, double x, int zero_count, double tol) {
  ReportBuilder b("zero_sums");
  b.add(zero_sum_checks(nu, x, zero_count, tol));
  zero_sum_tolerances(b, zero_count, tol);
  return std::move(b).finish();
}

CertificationReport certify_monotonicity(const GridSpec& grid, double step, double tol) {
  if (!(step > 0.0)) throw DomainError("certify_monotonicity: step must be positive");
  grid.validate();
  std::vector<double> orders;
  for (double nu : grid.nu_values) {
    if (nu >= 0.0) orders.push_back(nu);
  }
  orders = sorted_unique(std::move(orders));
  std::vector<double> xs = sorted_unique(grid.x_values);
  ReportBuilder b("monotonicity");

  if (!orders.empty()) {
    const double lo = orders.front();
    const double hi = orders.back();
    const int steps = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (double x : xs) {
      PointOutcome out;
      try {
        EvalResult prev = delta_series_real(lo, x, tol);
        for (int k = 1; k <= steps; ++k) {
          const double nu = lo + k * step;
          const EvalResult cur = delta_series_real(nu, x, tol);
          record(out, {nu, x}, prev.value - cur.value,
                 prev.abs_error_est + cur.abs_error_est + 4.0 * kEps * prev.value, prev.value,
                 "Delta increases in nu");
          prev = cur;
        }
        const int n_lo = static_cast<int>(std::ceil(lo));
        const int n_hi = static_cast<int>(std::floor(hi));
        if (n_lo < n_hi) {
          EvalResult prev_n = delta_series_integer(n_lo, x, tol);
          for (int n = n_lo + 1; n <= n_hi; ++n) {
            const EvalResult cur = delta_series_integer(n, x, tol);
            record(out, {double(n), x}, prev_n.value - cur.value,
                   prev_n.abs_error_est + cur.abs_error_est + 4.0 * kEps * prev_n.value,
                   prev_n.value, "integer sequence increases");
            if (!(cur.value < prev_n.value) && x != 0.0) {
              out.observations.push_back({"non_strict_integer", double(n), x, cur.value});
            }
            prev_n = cur;
          }
        }
      } catch (const std::exception& e) {
        record_error(out, {lo, x}, "evaluation", e);
      }
      b.add(std::move(out));
    }
  }

  constexpr int kRatioPoints = 100;
  constexpr double kRatioXMax = 30.0;
  std::vector<double> ratio_orders;
  for (double nu : grid.nu_values) {
    if (nu >= -0.5) ratio_orders.push_back(nu);
  }
  for (double nu : sorted_unique(std::move(ratio_orders))) {
    PointOutcome out;
    try {
      double prev = i_ratio(nu, kRatioXMax / kRatioPoints);
      for (int k = 2; k <= kRatioPoints; ++k) {
        const double x = kRatioXMax * k / kRatioPoints;
        const double cur = i_ratio(nu, x);
        record(out, {nu, x}, cur - prev, 16.0 * kEps * cur, cur, "I ratio decreases in x");
        prev = cur;
      }
    } catch (const std::exception& e) {
      record_error(out, {nu, 0.0}, "i_ratio", e);
    }
    b.add(std::move(out));
  }
  b.tolerance("tol", tol);
  b.tolerance("step", step);
  b.tolerance("eps_factor", 4.0);
  return std::move(b).finish();
}

CertificationReport certify_generating_function(int n_max, const std::vector<double>& x_values,
                                                int m_cut, double tol, int quadrature_order) {
  if (n_max < 0) throw DomainError("certify_generating_function: n_max must be non-negative");
  if (m_cut < 0) throw DomainError("certify_generating_function: m_cut must be non-negative");
  for (double x : x_values) {
    if (!(std::abs(x) < 1.0)) {
      throw DomainError("certify_generating_function: every |x| must be below 1");
    }
  }
  const QuadratureRule& rule = gauss_legendre(quadrature_order);
  ReportBuilder b("generating_function");
  for (int n = 0; n <= n_max; ++n) {
    const double sup = n == 0 ? kT0Supremum : rho(n);
    PointOutcome out;
    for (double x : x_values) {
      const GridPoint p{double(n), x};
      try {
        const EvalResult integral = t_generating_integral(n, x, rule);
        double sum = 0.0;
        double abs_sum = 0.0;
        for (int m = m_cut; m >= n; --m) {
          const double term = t_coefficient(n, m) * std::pow(x, m);
          sum += term;
          abs_sum += std::abs(term);
        }
        const double ax = std::abs(x);
        const double tail = sup * std::pow(ax, m_cut + 1) / (1.0 - ax);
        record(out, p, -std::abs(integral.value - sum),
               tail + integral.abs_error_est + 2.0 * (m_cut + 1) * kEps * abs_sum + tol, sum,
               "integral vs truncated sum");
      } catch (const std::exception& e) {
        record_error(out, p, "evaluation", e);
      }
    }
    b.add(std::move(out));
  }
  b.tolerance("tol", tol);
  b.tolerance("m_cut", m_cut);
  b.tolerance("quadrature_order", quadrature_order);
  return std::move(b).finish();
}

std::vector<CertificationReport> certify_all(const GridSpec& grid, double tol,
                                             const CertifyOptions& options) {
  std::vector<CertificationReport> out;
  out.push_back(certify_cross_method(grid, tol, options));
  out.push_back(certify_bounds(grid, tol, options));
  out.push_back(certify_j_comparison(grid, tol, options));

  ReportBuilder zeros("zero_sums");
  for (const GridPoint p : {GridPoint{0.0, 1.0}, GridPoint{0.5, 2.0}, GridPoint{1.0, 3.0}}) {
    zeros.add(zero_sum_checks(p.nu, p.x, 500, tol));
  }
  zero_sum_tolerances(zeros, 500, tol);
  out.push_back(std::move(zeros).finish());

  out.push_back(certify_monotonicity(grid, 0.25, tol));
  out.push_back(certify_generating_function(5, {-0.9, -0.5, 0.0, 0.5, 0.9}, 200, tol,
                                            options.quadrature_order));
  return out;
}

}  // namespace turan
