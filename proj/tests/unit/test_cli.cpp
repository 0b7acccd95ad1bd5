#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "output.hpp"
#include "json.hpp"

using namespace turan::cli;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

// Rows of a CSV document as header-keyed maps.
std::vector<std::map<std::string, std::string>> table(const std::string& csv) {
  const auto ls = lines(csv);
  std::vector<std::map<std::string, std::string>> rows;
  if (ls.empty()) return rows;
  const auto header = split_csv_line(ls[0]);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto cells = split_csv_line(ls[i]);
    std::map<std::string, std::string> row;
    for (std::size_t k = 0; k < header.size() && k < cells.size(); ++k) row[header[k]] = cells[k];
    rows.push_back(row);
  }
  return rows;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST(CliEval, SeriesAtOrigin) {
  const CliRun r = run({"eval", "--nu", "0", "--x", "0", "--method", "series"});
  ASSERT_EQ(r.code, kExitSuccess) << r.err;
  const auto rows = table(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(num(rows[0].at("value")), 1.0);
}

TEST(CliEval, AllMethodsAgree) {
  const CliRun r = run({"eval", "--nu", "2", "--x", "3", "--method", "all"});
  ASSERT_EQ(r.code, kExitSuccess) << r.err;
  const auto rows = table(r.out);
  ASSERT_EQ(rows.size(), 4u);
  const double ref = num(rows[0].at("value"));
  for (const auto& row : rows) EXPECT_NEAR(num(row.at("value")), ref, 1e-11) << row.at("method");
}

TEST(CliEval, AutoSelection) {
  const auto rows = table(run({"eval", "--nu", "1", "--x", "2"}).out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("method"), "series_real");
  EXPECT_EQ(rows[1].at("method"), "direct");
}

TEST(CliEval, ExitCodes) {
  const CliRun neumann = run({"eval", "--nu", "-0.6", "--x", "1", "--method", "neumann"});
  EXPECT_EQ(neumann.code, kExitUsage);
  EXPECT_EQ(lines(neumann.err).size(), 1u);
  EXPECT_EQ(run({"eval", "--nu", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--nu", "1", "--x", "500"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "--nu", "1", "--x", "1", "--method", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitSuccess);
  EXPECT_EQ(run({"eval", "--nu", "1", "--x", "1", "--tol", "-1"}).code, kExitUsage);
}

TEST(CliEval, JsonFormat) {
  const CliRun r = run({"eval", "--nu", "1", "--x", "2", "--method", "series", "--format", "json"});
  ASSERT_EQ(r.code, kExitSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  EXPECT_EQ(doc[0]["method"], "series_integer");  // integer order picks the binomial series
  EXPECT_NEAR(doc[0]["value"].get<double>(), 0.95960884788922507, 1e-15);
}

TEST(CliBounds, PointMode) {
  const auto five = table(run({"bounds", "--nu", "1", "--x", "2"}).out);
  ASSERT_EQ(five.size(), 5u);
  for (const auto& row : five) EXPECT_EQ(row.at("satisfied"), "true") << row.at("bound");
  const auto two = table(run({"bounds", "--nu", "0.5", "--x", "1"}).out);
  EXPECT_EQ(two.size(), 2u);
}

TEST(CliBounds, GridMode) {
  const CliRun r = run({"bounds", "--grid", "default", "--format", "csv"});
  ASSERT_EQ(r.code, kExitSuccess) << r.err;
  const auto rows = table(r.out);
  // Every point carries the two lower bounds; integer orders carry more.
  EXPECT_GT(rows.size(), 2u * (19 * 11 + 50));
  EXPECT_EQ(lines(r.out)[0].substr(0, 5), "nu,x,");
}

TEST(CliTable, Rho) {
  const CliRun r = run({"table", "--kind", "rho", "--n", "1..5"});
  ASSERT_EQ(r.code, kExitSuccess);
  const auto rows = table(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(num(rows[0].at("value")), 0.25);
  EXPECT_EQ(rows[1].at("argmax_m"), "7");
}

TEST(CliTable, CoefficientPeak) {
  const auto rows = table(run({"table", "--kind", "tcoeff", "--n", "1", "--m", "1..10"}).out);
  ASSERT_EQ(rows.size(), 10u);
  int peaks = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].at("is_peak") == "true") {
      ++peaks;
      EXPECT_EQ(rows[i].at("m"), "1");
    }
    if (i > 0) EXPECT_LE(num(rows[i].at("value")), num(rows[i - 1].at("value")));
  }
  EXPECT_EQ(peaks, 1);
}

TEST(CliTable, AsymptoticOrderBothModes) {
  const CliRun r = run({"table", "--kind", "asymp-nu", "--x", "1", "--mode", "both"});
  ASSERT_EQ(r.code, kExitSuccess) << r.err;
  const auto header = split_csv_line(lines(r.out)[0]);
  int ratio_columns = 0;
  for (const auto& h : header) ratio_columns += h.rfind("ratio_", 0) == 0;
  EXPECT_EQ(ratio_columns, 2);
  EXPECT_NE(r.err.find("squared"), std::string::npos);
}

TEST(CliZeros, HalfOrderIsMultiplesOfPi) {
  const auto rows = table(run({"zeros", "--nu", "0.5", "--count", "5"}).out);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_NEAR(num(rows[k].at("zero")), (k + 1) * M_PI, 1e-12);
  }
  EXPECT_EQ(run({"zeros", "--nu", "0.5", "--count", "0"}).code, kExitUsage);
}

TEST(CliCertify, ZerosSuiteWritesReport) {
  const auto path = std::filesystem::temp_directory_path() / "turan_cli_zeros.json";
  const CliRun r = run({"certify", "--suite", "zeros", "--nu", "0", "--x", "1", "--count", "200",
                     "--out", path.string()});
  ASSERT_EQ(r.code, kExitSuccess) << r.err;
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  for (const char* key : {"suite", "grid", "tolerances", "results", "failures"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["suite"], "zeros");
  EXPECT_TRUE(doc["failures"].empty());
  EXPECT_NE(r.out.find("failures=0"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliCertify, SameSeedSameBytes) {
  const std::vector<std::string> args = {"certify", "--suite", "genfun", "--seed", "7",
                                         "--format", "json"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, kExitSuccess);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliCertify, UnknownSuite) { EXPECT_EQ(run({"certify", "--suite", "nope"}).code, kExitUsage); }

TEST(CliCsv, NumbersRoundTripBitIdentically) {
  const std::vector<double> values = {0.1, 1.0 / 3.0, 2.0 / 3.0 * 1e-300, 6.02214076e23,
                                      std::nextafter(1.0, 2.0), 5e-324, -123.456};
  std::vector<OutputRecord> records;
  for (double v : values) records.emplace_back().add("value", v).add("label", std::string("a,\"b\""));
  std::ostringstream out;
  write_csv(records, out);
  const auto rows = table(out.str());
  ASSERT_EQ(rows.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_EQ(num(rows[i].at("value")), values[i]);
    EXPECT_EQ(rows[i].at("label"), "a,\"b\"");
  }
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(CliCsv, EmittedEvalRoundTrips) {
  const CliRun r = run({"eval", "--nu", "0.3", "--x", "7", "--method", "all"});
  for (const auto& row : table(r.out)) {
    const double v = num(row.at("value"));
    EXPECT_EQ(format_number(v), row.at("value"));
  }
}

TEST(CliOutput, FormatNumber) {
  EXPECT_EQ(format_number(0.25), "0.25");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-HUGE_VAL), "-inf");
}

TEST(CliLists, Parsing) {
  EXPECT_EQ(parse_int_list("3"), (std::vector<long long>{3}));
  EXPECT_EQ(parse_int_list("1..4"), (std::vector<long long>{1, 2, 3, 4}));
  EXPECT_EQ(parse_int_list("1,2,7"), (std::vector<long long>{1, 2, 7}));
  EXPECT_EQ(parse_real_list("5,10"), (std::vector<double>{5, 10}));
  EXPECT_EQ(parse_real_list("0..1", 0.5), (std::vector<double>{0, 0.5, 1}));
}
