#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gramquad/errors.hpp"
#include "gramquad/weights.hpp"
#include "oracles.hpp"
#include "weight_table.hpp"

namespace gramquad::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "gramquad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

TEST(WeightTable, CsvLayout) {
  const auto doc = make_document(compute_rule(3), TableFormat::csv);
  const std::string text = write_table(doc);
  std::string expected = "x,w\n";
  for (std::size_t i = 0; i < 3; ++i) {
    char line[64];
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", doc.nodes[i], doc.weights[i]);
    expected += line;
  }
  EXPECT_EQ(text, expected);
  EXPECT_EQ(text.rfind("x,w\n-1,", 0), 0u);
  EXPECT_NE(text.find("\n0,"), std::string::npos);
  EXPECT_NE(text.find("\n1,"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(WeightTable, JsonKeys) {
  const auto doc = make_document(compute_rule(5), TableFormat::json);
  const auto back = read_table(write_table(doc), TableFormat::json);
  EXPECT_EQ(back.p_points, 5u);
  ASSERT_TRUE(back.degree.has_value());
  EXPECT_EQ(*back.degree, 2);
}

// Property: write then read is bit-exact for both formats.
TEST(WeightTable, RoundTripIsBitExact) {
  std::uniform_int_distribution<std::size_t> dist(2, 3000);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rule = compute_rule(dist(gramquad::testing::rng()));
    for (auto fmt : {TableFormat::csv, TableFormat::json}) {
      const auto doc = make_document(rule, fmt);
      const auto back = read_table(write_table(doc), fmt);
      ASSERT_EQ(back.nodes, doc.nodes);
      ASSERT_EQ(back.weights, doc.weights);
      ASSERT_EQ(back.p_points, doc.p_points);
    }
  }
}

TEST(WeightTable, MalformedInput) {
  EXPECT_THROW(read_table("a,b\n1,2\n", TableFormat::csv), DomainError);
  EXPECT_THROW(read_table("x,w\n1;2\n", TableFormat::csv), DomainError);
  EXPECT_THROW(read_table("{\"points\": 3}", TableFormat::json), DomainError);
  EXPECT_THROW(read_table("not json", TableFormat::json), DomainError);
}

TEST(Samples, ParsesLinesWithOptionalTrailingNewline) {
  EXPECT_EQ(parse_samples("1\n2.5\n-3e-2\n"), (std::vector<double>{1.0, 2.5, -0.03}));
  EXPECT_EQ(parse_samples("1\r\n2"), (std::vector<double>{1.0, 2.0}));
  EXPECT_THROW(parse_samples("1\n\n2\n"), DomainError);
  EXPECT_THROW(parse_samples("1\nabc\n"), DomainError);
}

TEST(CmdWeights, ThreePointsCsv) {
  const auto r = run_args({"weights", "--points", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = read_table(r.out, TableFormat::csv);
  ASSERT_EQ(doc.p_points, 3u);
  EXPECT_EQ(doc.nodes, (std::vector<double>{-1.0, 0.0, 1.0}));
  for (double w : doc.weights) EXPECT_NEAR(w, 0.6666666666666666, 1e-15);
}

TEST(CmdWeights, RejectsSinglePoint) {
  const auto r = run_args({"weights", "--points", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("at least 2 points"), std::string::npos) << r.err;
}

TEST(CmdWeights, JsonDegree) {
  const auto r = run_args({"weights", "--points", "101", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = read_table(r.out, TableFormat::json);
  EXPECT_EQ(doc.degree, 10);
  EXPECT_EQ(doc.p_points, 101u);
}

TEST(CmdWeights, ExplicitDegreeAndOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "gramquad_weights_test.csv";
  const auto r = run_args({"weights", "--points", "50", "--degree", "3", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto doc = read_table(text, TableFormat::csv);
  EXPECT_EQ(doc.weights, compute_rule(50, 3).weights);
  std::filesystem::remove(path);
}

TEST(CmdWeights, UsageErrors) {
  EXPECT_EQ(run_args({"weights"}).code, 2);
  EXPECT_EQ(run_args({"weights", "--points", "abc"}).code, 2);
  EXPECT_EQ(run_args({"weights", "--points", "5", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_args({}).code, 2);
  EXPECT_EQ(run_args({"frobnicate"}).code, 2);
  EXPECT_EQ(run_args({"weights", "--points", "101", "--degree", "11"}).code, 1);
}

TEST(CmdWeights, Deterministic) {
  const auto a = run_args({"weights", "--points", "257", "--format", "json"});
  const auto b = run_args({"weights", "--points", "257", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CmdIntegrate, AppendixPolynomial) {
  const auto r = run_args({"integrate", "--points", "101", "--builtin", "appendix-poly"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), 12.4, 1e-10);
}

TEST(CmdIntegrate, ConstantBuiltin) {
  const auto r = run_args({"integrate", "--points", "11", "--builtin", "one"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), 2.0, 1e-12);
}

TEST(CmdIntegrate, IntervalMapping) {
  const auto r = run_args({"integrate", "--points", "101", "--builtin", "x2", "--interval", "0", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), 1.0 / 3.0, 1e-10);
}

TEST(CmdIntegrate, SamplesFile) {
  const auto rule = compute_rule(11);
  std::string text;
  for (double x : rule.nodes) text += format_real(x * x) + "\n";
  const auto path = temp_file("gramquad_samples_ok.txt", text);
  const auto r = run_args({"integrate", "--points", "11", "--samples", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), 2.0 / 3.0, 1e-12);
  std::filesystem::remove(path);
}

TEST(CmdIntegrate, SampleCountMismatch) {
  std::string text;
  for (int i = 0; i < 10; ++i) text += "1\n";
  const auto path = temp_file("gramquad_samples_short.txt", text);
  const auto r = run_args({"integrate", "--points", "11", "--samples", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("expected 11"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("found 10"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(CmdIntegrate, Errors) {
  EXPECT_EQ(run_args({"integrate", "--points", "11", "--builtin", "nope"}).code, 2);
  EXPECT_EQ(run_args({"integrate", "--points", "11"}).code, 2);
  EXPECT_EQ(run_args({"integrate", "--points", "11", "--samples", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(run_args({"integrate", "--points", "11", "--builtin", "one", "--interval", "1", "0"}).code,
            1);
}

TEST(CmdCheck, PassingReports) {
  for (const char* p : {"101", "2"}) {
    const auto r = run_args({"check", "--points", p});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("status ok"), std::string::npos);
    EXPECT_NE(r.out.find("min_weight"), std::string::npos);
    EXPECT_NE(r.out.find("orthonormality_residual"), std::string::npos);
  }
}

TEST(CmdCheck, SinglePointFails) { EXPECT_EQ(run_args({"check", "--points", "1"}).code, 1); }

TEST(CmdCompare, NinePointsShowsContrast) {
  const auto r = run_args({"compare", "--points", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  double nc_min = 0.0, gram_min = 0.0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string name;
    double lo = 0.0, hi = 0.0;
    ls >> name >> lo >> hi;
    if (name == "newton-cotes") nc_min = lo;
    if (name == "gram") gram_min = lo;
  }
  EXPECT_LT(nc_min, 0.0);
  EXPECT_GT(gram_min, 0.0);
}

TEST(CmdCompare, ThreePointsBothPositive) {
  const auto r = run_args({"compare", "--points", "3"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int rules = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string name;
    double lo = 0.0, hi = 0.0;
    if (ls >> name >> lo >> hi) {
      ++rules;
      EXPECT_GT(lo, 0.0) << line;
    }
  }
  EXPECT_EQ(rules, 2);
}

TEST(CmdCompare, RangeCap) {
  EXPECT_EQ(run_args({"compare", "--points", "31"}).code, 1);
  EXPECT_EQ(run_args({"compare", "--points", "1"}).code, 1);
}

}  // namespace
}  // namespace gramquad::cli
