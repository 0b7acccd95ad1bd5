#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "output.hpp"
#include "turan/asymptotics.hpp"
#include "turan/bessel.hpp"
#include "turan/bounds.hpp"
#include "turan/errors.hpp"
#include "turan/quadrature.hpp"
#include "turan/turanian.hpp"
#include "turan/verify.hpp"

namespace turan::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad flag values the parser itself cannot see (file paths, list syntax).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  double tol = 1e-12;
  int order = kDefaultQuadratureOrder;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 1;
  int threads = 1;

  Format output_format() const { return format == "json" ? Format::json : Format::csv; }

  const QuadratureRule& rule() const { return gauss_legendre(order); }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--tol", o.tol, "Relative series tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--order", o.order, "Gauss-Legendre order")
      ->capture_default_str()
      ->check(CLI::Range(kMinQuadratureOrder, kMaxQuadratureOrder));
  cmd->add_option("--format", o.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--seed", o.seed, "Seed for the random grid points")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads for grid sweeps")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));
}

// Output goes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void emit(const std::vector<OutputRecord>& rows, const CommonOptions& common, std::ostream& out) {
  Sink sink(common.out_path, out);
  write_records(rows, common.output_format(), sink.stream());
}

void require_real_order(double nu) {
  if (!(nu > -1.0)) throw DomainError("nu must exceed -1");
}

int integer_order(double nu, const char* what) {
  if (!is_integer_order(nu) || nu < 0.0) {
    throw DomainError(std::string(what) + " requires a non-negative integer order");
  }
  return static_cast<int>(std::nearbyint(nu));
}

OutputRecord eval_row(double nu, double x, const EvalResult& r) {
  OutputRecord row;
  row.add("nu", nu)
      .add("x", x)
      .add("method", std::string(to_string(r.method)))
      .add("value", r.value)
      .add("err_est", r.abs_error_est)
      .add("work", static_cast<long long>(r.work));
  return row;
}

EvalResult series_for(double nu, double x, double tol) {
  if (is_integer_order(nu) && nu >= 0.0) {
    return delta_series_integer(static_cast<int>(std::nearbyint(nu)), x, tol);
  }
  return delta_series_real(nu, x, tol);
}

// ---- eval ---------------------------------------------------------------

struct EvalOptions {
  double nu = 0.0;
  double x = 0.0;
  std::string method = "auto";
};

int cmd_eval(const EvalOptions& o, const CommonOptions& common, std::ostream& out) {
  require_real_order(o.nu);
  std::vector<EvalResult> results;
  const bool integer = is_integer_order(o.nu) && o.nu >= 0.0;
  if (o.method == "auto") {
    results = delta_auto(o.nu, o.x, common.tol);
  } else if (o.method == "direct") {
    results.push_back(delta_direct(o.nu, o.x, common.tol));
  } else if (o.method == "series") {
    results.push_back(series_for(o.nu, o.x, common.tol));
  } else if (o.method == "fourier") {
    results.push_back(delta_fourier(integer_order(o.nu, "fourier"), o.x, common.rule()));
  } else if (o.method == "neumann") {
    results.push_back(delta_neumann(o.nu, o.x, common.rule()));
  } else {  // all: every method whose precondition holds
    results.push_back(delta_direct(o.nu, o.x, common.tol));
    results.push_back(series_for(o.nu, o.x, common.tol));
    if (integer && o.x != 0.0) {
      results.push_back(delta_fourier(integer_order(o.nu, "fourier"), o.x, common.rule()));
    }
    if (o.nu > -0.5) results.push_back(delta_neumann(o.nu, o.x, common.rule()));
  }
  std::vector<OutputRecord> rows;
  for (const auto& r : results) rows.push_back(eval_row(o.nu, o.x, r));
  emit(rows, common, out);
  return kExitSuccess;
}

// ---- grid flags -----------------------------------------------------------

struct GridOptions {
  std::string grid;
  std::string nu_values;
  std::string x_values;
  std::optional<int> random_count;
};

void add_grid(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--grid", g.grid, "Named grid")->check(CLI::IsMember({"default"}));
  cmd->add_option("--nu-values", g.nu_values, "Replace the grid orders (list or a..b)");
  cmd->add_option("--x-values", g.x_values, "Replace the grid arguments (list or a..b)");
  cmd->add_option("--random-count", g.random_count, "Number of seeded random points")
      ->check(CLI::NonNegativeNumber);
}

GridSpec build_grid(const GridOptions& g, std::uint64_t seed) {
  GridSpec grid = GridSpec::default_grid(seed);
  if (!g.nu_values.empty()) grid.nu_values = parse_real_list(g.nu_values);
  if (!g.x_values.empty()) grid.x_values = parse_real_list(g.x_values);
  if (g.random_count) grid.random->count = *g.random_count;
  grid.validate();
  return grid;
}

bool grid_requested(const GridOptions& g) {
  return !g.grid.empty() || !g.nu_values.empty() || !g.x_values.empty() || g.random_count;
}

Json grid_json(const GridSpec& grid) {
  Json j;
  j["nu_values"] = grid.nu_values;
  j["x_values"] = grid.x_values;
  if (grid.random) {
    j["random"] = {{"count", grid.random->count},   {"seed", grid.random->seed},
                   {"nu_min", grid.random->nu_min}, {"nu_max", grid.random->nu_max},
                   {"x_min", grid.random->x_min},   {"x_max", grid.random->x_max}};
  }
  return j;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsOptions {
  std::optional<double> nu;
  std::optional<double> x;
  GridOptions grid;
};

int cmd_bounds(const BoundsOptions& o, const CommonOptions& common, std::ostream& out) {
  std::vector<GridPoint> points;
  if (o.nu || o.x) {
    if (!o.nu || !o.x) throw UsageError("bounds: give both --nu and --x, or grid flags");
    if (grid_requested(o.grid)) throw UsageError("bounds: --nu/--x and grid flags are exclusive");
    require_real_order(*o.nu);
    points.push_back({*o.nu, *o.x});
  } else {
    points = build_grid(o.grid, common.seed).points();
  }
  std::vector<OutputRecord> rows;
  bool all_satisfied = true;
  for (const auto& p : points) {
    const BoundReport report = evaluate_all(p.nu, p.x, common.tol);
    for (const auto& b : report.bounds) {
      OutputRecord row;
      row.add("nu", p.nu)
          .add("x", p.x)
          .add("bound", b.id)
          .add("side", std::string(to_string(b.side)))
          .add("value", b.value)
          .add("err_est", b.error_est)
          .add("delta", report.delta)
          .add("margin", b.margin)
          .add("satisfied", b.satisfied)
          .add("strict", b.strict);
      rows.push_back(std::move(row));
      all_satisfied = all_satisfied && b.satisfied;
    }
  }
  emit(rows, common, out);
  return all_satisfied ? kExitSuccess : kExitCertificationFailed;
}

// ---- certify --------------------------------------------------------------

struct CertifyFlags {
  std::string suite = "all";
  GridOptions grid;
  std::optional<double> nu;
  std::optional<double> x;
  int count = 500;
  double step = 0.25;
  int n_max = 5;
  int m_cut = 200;
  std::string gf_x = "-0.9,-0.5,0,0.5,0.9";
};

Json observations_json(const std::vector<Observation>& obs) {
  Json arr = Json::array();
  for (const auto& o : obs) {
    Json j;
    j["name"] = o.name;
    j["nu"] = o.nu;
    j["x"] = std::isfinite(o.x) ? Json(o.x) : Json(nullptr);
    j["value"] = std::isfinite(o.value) ? Json(o.value) : Json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

int cmd_certify(const CertifyFlags& f, const CommonOptions& common, std::ostream& out,
                std::ostream& err) {
  const GridSpec grid = build_grid(f.grid, common.seed);
  CertifyOptions options;
  options.threads = common.threads;
  options.quadrature_order = common.order;

  const std::vector<double> gf_x = parse_real_list(f.gf_x);
  std::vector<CertificationReport> reports;
  Json extra = Json::object();
  if (f.suite == "all") {
    reports = certify_all(grid, common.tol, options);
  } else if (f.suite == "cross") {
    reports.push_back(certify_cross_method(grid, common.tol, options));
  } else if (f.suite == "bounds") {
    reports.push_back(certify_bounds(grid, common.tol, options));
  } else if (f.suite == "jcomp") {
    reports.push_back(certify_j_comparison(grid, common.tol, options));
  } else if (f.suite == "zeros") {
    std::vector<GridPoint> pts;
    if (f.nu || f.x) {
      if (!f.nu || !f.x) throw UsageError("certify zeros: give both --nu and --x");
      pts.push_back({*f.nu, *f.x});
    } else {
      pts = {{0.0, 1.0}, {0.5, 2.0}, {1.0, 3.0}};
    }
    Json jp = Json::array();
    for (const auto& p : pts) {
      reports.push_back(certify_zero_sums(p.nu, p.x, f.count, common.tol));
      jp.push_back({p.nu, p.x});
    }
    extra["zero_points"] = jp;
    extra["zero_count"] = f.count;
  } else if (f.suite == "mono") {
    reports.push_back(certify_monotonicity(grid, f.step, common.tol));
    extra["step"] = f.step;
  } else {
    reports.push_back(
        certify_generating_function(f.n_max, gf_x, f.m_cut, common.tol, common.order));
    extra["n_max"] = f.n_max;
    extra["m_cut"] = f.m_cut;
    extra["x_values"] = gf_x;
  }

  Json report;
  report["suite"] = f.suite;
  report["grid"] = grid_json(grid);
  if (!extra.empty()) report["grid"]["suite_parameters"] = extra;
  report["tolerances"] = {{"tol", common.tol}, {"quadrature_order", common.order}};
  Json results = Json::array();
  Json failures = Json::array();
  long long points = 0;
  std::size_t failure_count = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& r : reports) {
    Json tol = Json::object();
    for (const auto& [name, value] : r.tolerances) tol[name] = value;
    results.push_back({{"property", r.property},
                       {"points_tested", r.points_tested},
                       {"failures", r.failures.size()},
                       {"worst_margin", finite_or_null(r.worst_margin)},
                       {"worst_nu", r.worst_point.nu},
                       {"worst_x", r.worst_point.x},
                       {"tolerances", tol},
                       {"observations", observations_json(r.observations)}});
    for (const auto& fl : r.failures) {
      failures.push_back({{"property", r.property},
                          {"nu", fl.nu},
                          {"x", fl.x},
                          {"margin", finite_or_null(fl.margin)},
                          {"diagnostics", fl.diagnostics}});
    }
    points += r.points_tested;
    failure_count += r.failures.size();
    worst = std::min(worst, r.worst_margin);
  }
  report["results"] = results;
  report["failures"] = failures;

  std::ostringstream summary;
  summary << "certify suite=" << f.suite << " properties=" << reports.size()
          << " points=" << points << " failures=" << failure_count
          << " worst_margin=" << format_number(worst) << '\n';

  Sink sink(common.out_path, out);
  if (common.output_format() == Format::csv && !sink.to_file()) {
    std::vector<OutputRecord> rows;
    for (const auto& r : reports) {
      OutputRecord row;
      row.add("property", r.property)
          .add("points_tested", r.points_tested)
          .add("failures", static_cast<long long>(r.failures.size()))
          .add("worst_margin", r.worst_margin)
          .add("worst_nu", r.worst_point.nu)
          .add("worst_x", r.worst_point.x);
      rows.push_back(std::move(row));
    }
    write_csv(rows, sink.stream());
  } else {
    sink.stream() << report.dump(2) << '\n';
  }
  (sink.to_file() ? out : err) << summary.str();
  return failure_count == 0 ? kExitSuccess : kExitCertificationFailed;
}

// ---- table ----------------------------------------------------------------

struct TableOptions {
  std::string kind;
  std::string n = "1..5";
  std::string m = "1..10";
  std::string nu = "5,10,20,40";
  double x = 1.0;
  std::string mode = "both";
  double band = 0.02;
};

int cmd_table(const TableOptions& o, const CommonOptions& common, std::ostream& out,
              std::ostream& err) {
  std::vector<OutputRecord> rows;
  if (o.kind == "tcoeff") {
    for (long long n : parse_int_list(o.n)) {
      for (long long m : parse_int_list(o.m)) {
        OutputRecord row;
        row.add("n", n)
            .add("m", m)
            .add("value", t_coefficient(static_cast<int>(n), m))
            .add("is_peak", n >= 1 && m == 2 * n * n - 1);
        rows.push_back(std::move(row));
      }
    }
  } else if (o.kind == "rho") {
    for (long long n : parse_int_list(o.n)) {
      OutputRecord row;
      row.add("n", n)
          .add("argmax_m", 2 * n * n - 1)
          .add("value", rho(static_cast<int>(n)))
          .add("closed_form", rho_closed_form(static_cast<int>(n)));
      rows.push_back(std::move(row));
    }
  } else if (o.kind == "asymp-n") {
    std::vector<int> orders;
    for (long long n : parse_int_list(o.n)) orders.push_back(static_cast<int>(n));
    for (const auto& c : large_n_table(orders, o.x, common.tol)) {
      OutputRecord row;
      row.add("n", static_cast<long long>(c.parameter))
          .add("x", o.x)
          .add("exact", c.exact)
          .add("approx", c.approx)
          .add("ratio", c.ratio);
      rows.push_back(std::move(row));
    }
  } else if (o.kind == "asymp-m") {
    std::vector<long long> ms = parse_int_list(o.m);
    for (long long n : parse_int_list(o.n)) {
      for (const auto& c : large_m_table(static_cast<int>(n), ms)) {
        OutputRecord row;
        row.add("n", n)
            .add("m", static_cast<long long>(c.parameter))
            .add("exact", c.exact)
            .add("approx", c.approx)
            .add("ratio", c.ratio);
        rows.push_back(std::move(row));
      }
    }
  } else {  // asymp-nu
    const std::vector<double> orders = parse_real_list(o.nu);
    std::vector<ExponentMode> modes;
    if (o.mode != "squared") modes.push_back(ExponentMode::as_printed);
    if (o.mode != "as_printed") modes.push_back(ExponentMode::squared);
    std::vector<std::vector<AsymptoticCheck>> tables;
    for (auto mode : modes) tables.push_back(large_nu_table(orders, o.x, mode, common.tol));
    for (std::size_t i = 0; i < orders.size(); ++i) {
      OutputRecord row;
      row.add("nu", orders[i]).add("x", o.x).add("exact", tables.front()[i].exact);
      for (std::size_t k = 0; k < modes.size(); ++k) {
        const std::string suffix(to_string(modes[k]));
        row.add("approx_" + suffix, tables[k][i].approx).add("ratio_" + suffix, tables[k][i].ratio);
      }
      rows.push_back(std::move(row));
    }
    if (modes.size() == 2) {
      const ExponentAdjudication a = adjudicate_exponent(orders, o.x, o.band, common.tol);
      err << "convergent exponent mode: " << a.convergent_mode << " (band " << format_number(o.band)
          << ", final ratios as_printed=" << format_number(a.final_ratio_as_printed)
          << " squared=" << format_number(a.final_ratio_squared) << ")\n";
    }
  }
  emit(rows, common, out);
  return kExitSuccess;
}

// ---- zeros ----------------------------------------------------------------

struct ZerosOptions {
  double nu = 0.0;
  int count = 10;
};

int cmd_zeros(const ZerosOptions& o, const CommonOptions& common, std::ostream& out) {
  const std::vector<double> zeros = bessel_j_zeros(o.nu, o.count);
  std::vector<OutputRecord> rows;
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    OutputRecord row;
    row.add("nu", o.nu).add("k", static_cast<long long>(k + 1)).add("zero", zeros[k]);
    rows.push_back(std::move(row));
  }
  emit(rows, common, out);
  return kExitSuccess;
}

double parse_real(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw UsageError("not a number: '" + text + "'");
  }
  return v;
}

long long parse_int(const std::string& text) {
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw UsageError("not an integer: '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const long long lo = parse_int(text.substr(0, dots));
    const long long hi = parse_int(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + text + "'");
    if (hi - lo > 10'000'000) throw UsageError("range too long '" + text + "'");
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text, double step) {
  std::vector<double> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const double lo = parse_real(text.substr(0, dots));
    const double hi = parse_real(text.substr(dots + 2));
    if (!(hi >= lo) || !(step > 0.0)) throw UsageError("empty range '" + text + "'");
    const long long count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    if (count > 10'000'000) throw UsageError("range too long '" + text + "'");
    for (long long k = 0; k <= count; ++k) out.push_back(lo + k * step);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turan-type determinants of modified Bessel functions", "turan"};
  app.require_subcommand(1);

  CommonOptions common;

  EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate I_nu^2 - I_{nu-1} I_{nu+1} at a point");
  eval->add_option("--nu", eval_opts.nu, "Order (> -1)")->required();
  eval->add_option("--x", eval_opts.x, "Argument")->required();
  eval->add_option("--method", eval_opts.method, "Evaluation route")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "direct", "series", "fourier", "neumann", "all"}));
  add_common(eval, common);

  BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds with margins");
  bounds->add_option("--nu", bounds_opts.nu, "Order (> -1)");
  bounds->add_option("--x", bounds_opts.x, "Argument");
  add_grid(bounds, bounds_opts.grid);
  add_common(bounds, common);

  CertifyFlags certify_opts;
  auto* certify = app.add_subcommand("certify", "Run certification suites");
  certify->add_option("--suite", certify_opts.suite, "Suite to run")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "cross", "bounds", "jcomp", "zeros", "mono", "genfun"}));
  add_grid(certify, certify_opts.grid);
  certify->add_option("--nu", certify_opts.nu, "Order for the zeros suite");
  certify->add_option("--x", certify_opts.x, "Argument for the zeros suite");
  certify->add_option("--count", certify_opts.count, "Zeros used by the zeros suite")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  certify->add_option("--step", certify_opts.step, "Order step for the mono suite")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  certify->add_option("--n-max", certify_opts.n_max, "Largest n for the genfun suite")
      ->capture_default_str()
      ->check(CLI::Range(0, 60));
  certify->add_option("--m-cut", certify_opts.m_cut, "Truncation index for the genfun suite")
      ->capture_default_str()
      ->check(CLI::Range(0, 100000));
  certify->add_option("--gf-x", certify_opts.gf_x, "Arguments in (-1, 1) for the genfun suite")
      ->capture_default_str();
  add_common(certify, common);

  TableOptions table_opts;
  auto* table = app.add_subcommand("table", "Coefficient and asymptotic tables");
  table->add_option("--kind", table_opts.kind, "Table kind")
      ->required()
      ->check(CLI::IsMember({"tcoeff", "rho", "asymp-n", "asymp-nu", "asymp-m"}));
  table->add_option("--n", table_opts.n, "Integer orders (k, a..b or list)")->capture_default_str();
  table->add_option("--m", table_opts.m, "Coefficient indices (k, a..b or list)")
      ->capture_default_str();
  table->add_option("--nu", table_opts.nu, "Real orders for asymp-nu")->capture_default_str();
  table->add_option("--x", table_opts.x, "Argument")->capture_default_str();
  table->add_option("--mode", table_opts.mode, "Exponent mode for asymp-nu")
      ->capture_default_str()
      ->check(CLI::IsMember({"as_printed", "squared", "both"}));
  table->add_option("--band", table_opts.band, "Ratio band used to name the convergent mode")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_common(table, common);

  ZerosOptions zeros_opts;
  auto* zeros = app.add_subcommand("zeros", "Positive zeros of J_nu");
  zeros->add_option("--nu", zeros_opts.nu, "Order in (-1, 50]")->required();
  zeros->add_option("--count", zeros_opts.count, "Number of zeros")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  add_common(zeros, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_opts, common, out);
    if (*bounds) return cmd_bounds(bounds_opts, common, out);
    if (*certify) return cmd_certify(certify_opts, common, out, err);
    if (*table) return cmd_table(table_opts, common, out, err);
    if (*zeros) return cmd_zeros(zeros_opts, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  }
  return kExitUsage;
}

}  // namespace turan::cli
