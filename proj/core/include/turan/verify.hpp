#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace turan {

struct RandomSampling {
  int count = 0;
  std::uint64_t seed = 1;
  double nu_min = -0.95;
  double nu_max = 20.0;
  double x_min = 0.05;
  double x_max = 20.0;
};

struct GridPoint {
  double nu = 0.0;
  double x = 0.0;
};

/// Cartesian product nu_values x x_values followed by `random.count` seeded
/// uniform points. Every nu must exceed -1.
struct GridSpec {
  std::vector<double> nu_values;
  std::vector<double> x_values;
  std::optional<RandomSampling> random;

  /// Throws DomainError on nu <= -1, EnvelopeError outside the envelope.
  void validate() const;
  /// Deterministic in the seed; product points come first in row-major order.
  std::vector<GridPoint> points() const;

  static GridSpec default_grid(std::uint64_t seed = 1);
};

struct CertificationFailure {
  double nu = 0.0;
  double x = 0.0;
  double margin = 0.0;
  std::string diagnostics;
};

/// A derived quantity worth recording, such as a tightness crossover.
/// `value` is NaN when the event did not occur on the grid.
struct Observation {
  std::string name;
  double nu = 0.0;
  double x = 0.0;
  double value = 0.0;
};

/// Margins are relative slack: (signed raw margin + allowance) / scale, where
/// the allowance is the combined error estimate plus the requested tolerance
/// and the scale is |reference| (1 when the reference is zero or infinite).
/// A check fails exactly when its margin is negative.
struct CertificationReport {
  std::string property;
  long long points_tested = 0;
  std::vector<CertificationFailure> failures;
  double worst_margin = 0.0;
  GridPoint worst_point;
  std::vector<std::pair<std::string, double>> tolerances;
  std::vector<Observation> observations;

  bool passed() const noexcept { return failures.empty(); }
};

/// Number of worker threads for the grid sweeps; 1 runs inline. Results are
/// assembled by grid index, so the output does not depend on this value.
struct CertifyOptions {
  int threads = 1;
  int quadrature_order = 64;
};

CertificationReport certify_cross_method(const GridSpec& grid, double tol,
                                         const CertifyOptions& options = {});

CertificationReport certify_bounds(const GridSpec& grid, double tol,
                                   const CertifyOptions& options = {});

/// Only points with 0 < x <= nu + 20 are used.
CertificationReport certify_j_comparison(const GridSpec& grid, double tol,
                                         const CertifyOptions& options = {});

CertificationReport certify_zero_sums(double nu, double x, int zero_count, double tol = 1e-12);

/// Delta non-increasing along nu = lo, lo + step, ... <= hi over the grid's
/// non-negative orders, Delta_n decreasing over integers in that range, and
/// I_{nu+1}/I_nu increasing on 100 points of (0, 30] for grid orders >= -1/2.
CertificationReport certify_monotonicity(const GridSpec& grid, double step, double tol = 1e-12);

CertificationReport certify_generating_function(int n_max, const std::vector<double>& x_values,
                                                int m_cut, double tol = 1e-12,
                                                int quadrature_order = 64);

/// Every suite on one grid, in the order cross, bounds, jcomp, zeros, mono, genfun.
std::vector<CertificationReport> certify_all(const GridSpec& grid, double tol,
                                             const CertifyOptions& options = {});

}  // namespace turan
