#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ninv/cli.hpp"
#include "ninv/quantile.hpp"

namespace ninv::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ninv_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(CliEval, Midpoint) {
  const auto r = run({"eval", "rat22a", "0.5"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.out, "0.5 0\n");
}

TEST(CliEval, UpperCriticalValue) {
  const auto r = run({"eval", "rat22a", "0.975"});
  ASSERT_EQ(r.status, kOk);
  std::istringstream in(r.out);
  double p = 0, v = 0;
  in >> p >> v;
  EXPECT_EQ(p, 0.975);
  EXPECT_NEAR(v, 1.959963984540054, 2.5e-5);
}

TEST(CliEval, OutputRoundTripsBitExactly) {
  const auto r = run({"eval", "tail", "1e-100"});
  ASSERT_EQ(r.status, kOk);
  const std::string value = r.out.substr(r.out.find(' ') + 1);
  EXPECT_EQ(std::strtod(value.c_str(), nullptr), ninv::tail_3_2(1e-100));
}

TEST(CliEval, DomainErrorExitsTwo) {
  const auto r = run({"eval", "rat22a", "1.5"});
  EXPECT_EQ(r.status, kDomain);
  EXPECT_NE(r.err.find("p=1.5"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("(5.314068364454539e-298, 1)"), std::string::npos) << r.err;
  EXPECT_EQ(run({"eval", "rat22a", "abc"}).status, kDomain);
}

TEST(CliUsage, UnknownVerbAndMethod) {
  const auto verb = run({"frobnicate"});
  EXPECT_EQ(verb.status, kUsage);
  EXPECT_NE(verb.err.find("Usage"), std::string::npos) << verb.err;
  const auto method = run({"eval", "acklam", "0.5"});
  EXPECT_EQ(method.status, kUsage);
  EXPECT_NE(method.err.find("unknown method"), std::string::npos);
  EXPECT_EQ(run({}).status, kUsage);
  EXPECT_EQ(run({"scan", "rat22a-central", "--format", "xml"}).status, kUsage);
}

TEST(CliUsage, HelpDocumentsCsvColumns) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("p,approx,oracle,err"), std::string::npos);
  EXPECT_NE(r.out.find("median_ns_per_eval"), std::string::npos);
}

TEST(CliScan, AssertBounds) {
  EXPECT_EQ(run({"scan", "rat22a-central", "--assert-bound", "2.5e-5"}).status, kOk);
  EXPECT_EQ(run({"scan", "rat22b-central", "--assert-bound", "1.16e-4"}).status, kOk);
  const auto tight = run({"scan", "rat22a-central", "--assert-bound", "1e-6"});
  EXPECT_EQ(tight.status, kAssertion);
  EXPECT_NE(tight.err.find("assertion failed"), std::string::npos);
  EXPECT_NE(tight.out.find("extrema=12\n"), std::string::npos) << tight.out;
}

TEST(CliScan, RegionOutsideDomainExitsTwo) {
  EXPECT_EQ(run({"scan", "rat22a-central", "--region", "0.01,0.5"}).status, kDomain);
  EXPECT_EQ(run({"scan", "rat22a-central", "--region", "0.1"}).status, kUsage);
}

TEST_F(CliFiles, ScanCsvIsDeterministicAndFeedsReport) {
  const auto a = dir_ / "narrow.csv";
  const auto b = dir_ / "narrow_again.csv";
  const std::vector<std::string> base{"scan", "rat22a-central", "--region", "0.3,0.31",
                                      "--step", "1e-4", "--format", "csv"};
  auto args = base;
  args.insert(args.end(), {"--output", a.string()});
  ASSERT_EQ(run(args).status, kOk);
  args = base;
  args.insert(args.end(), {"--output", b.string(), "--threads", "3"});
  ASSERT_EQ(run(args).status, kOk);
  const std::string csv = slurp(a);
  EXPECT_EQ(csv, slurp(b));
  EXPECT_EQ(csv.rfind("p,approx,oracle,err\n0.3,", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);

  const auto tail = dir_ / "tail.csv";
  ASSERT_EQ(run({"scan", "tail", "--region", "1e-20,1e-10", "--per-decade", "10", "--format",
                 "csv", "--output", tail.string()})
                .status,
            kOk);

  const auto rep = run({"report", a.string(), tail.string(), "--format", "csv"});
  ASSERT_EQ(rep.status, kOk) << rep.err;
  std::istringstream lines(rep.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u) << rep.out;
  EXPECT_EQ(rows[0],
            "source,kind,method,region_lo,region_hi,points,max_abs_error,argmax_p,"
            "median_ns_per_eval");
  EXPECT_EQ(rows[1].rfind("narrow,scan,narrow,0.3,0.31,101,", 0), 0u) << rows[1];
  EXPECT_EQ(rows[2].rfind("tail,scan,tail,1e-20,1e-10,101,", 0), 0u) << rows[2];

  const auto md = run({"report", a.string(), tail.string()});
  ASSERT_EQ(md.status, kOk);
  EXPECT_EQ(md.out.rfind("| source | kind |", 0), 0u) << md.out;
}

TEST_F(CliFiles, BenchSingleRowAndReportMerge) {
  const auto out = dir_ / "bench.csv";
  const auto r = run({"bench", "rat22a", "--reps", "1", "--runs", "1", "--format", "csv",
                      "--output", out.string()});
  ASSERT_EQ(r.status, kOk) << r.err;
  const std::string csv = slurp(out);
  EXPECT_NE(csv.find("\nrat22a,999,1,"), std::string::npos) << csv;

  const auto text = run({"bench", "all", "--reps", "2", "--runs", "1"});
  ASSERT_EQ(text.status, kOk);
  for (const char* m : {"as-original", "beasley-springer", "rat22a", "rat22b"}) {
    EXPECT_NE(text.out.find(m), std::string::npos) << m;
  }

  const auto rep = run({"report", out.string(), "--format", "csv"});
  ASSERT_EQ(rep.status, kOk) << rep.err;
  EXPECT_NE(rep.out.find("\nbench,bench,rat22a,,,999,,,"), std::string::npos) << rep.out;
}

TEST_F(CliFiles, MalformedReportInputExitsFour) {
  const auto bad = dir_ / "bad.csv";
  {
    std::ofstream f(bad);
    f << "p,approx,oracle,err\n0.1,abc,0,0\n";
  }
  EXPECT_EQ(run({"report", bad.string()}).status, kFormat);
  const auto unknown = dir_ / "unknown.csv";
  {
    std::ofstream f(unknown);
    f << "a,b\n1,2\n";
  }
  EXPECT_EQ(run({"report", unknown.string()}).status, kFormat);
  EXPECT_EQ(run({"report", (dir_ / "missing.csv").string()}).status, kFormat);
  const auto short_row = dir_ / "short.csv";
  {
    std::ofstream f(short_row);
    f << "p,approx,oracle,err\n0.1,0.2\n";
  }
  EXPECT_EQ(run({"report", short_row.string()}).status, kFormat);
}

}  // namespace
}  // namespace ninv::cli
