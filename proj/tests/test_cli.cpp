#include "wres/cli/app.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

namespace wres {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int usage_code(const std::vector<std::string>& args) {
  try {
    parse_args(args);
  } catch (const CliExit& e) {
    return e.code();
  }
  return -1;
}

TEST(ParseArgs, CoefficientRangeAndFormat) {
  const RunConfig c = parse_args({"verify-coefficients", "--m", "1..8", "--format", "json"});
  EXPECT_EQ(c.command, Command::verify_coefficients);
  EXPECT_EQ(c.m_lo, 1u);
  EXPECT_EQ(c.m_hi, 8u);
  EXPECT_EQ(c.format, Format::json);
  EXPECT_EQ(c.exec, Exec::parallel);
}

TEST(ParseArgs, SingleCase) {
  const RunConfig c = parse_args({"verify-case", "--theorem", "A", "--case", "II", "--m", "2"});
  EXPECT_EQ(c.command, Command::verify_case);
  EXPECT_EQ(c.theorem, Theorem::A);
  EXPECT_EQ(c.case_id, CaseId::II);
  EXPECT_EQ(c.m_lo, 2u);
  EXPECT_EQ(c.m_hi, 2u);
}

TEST(ParseArgs, Defaults) {
  EXPECT_EQ(parse_args({"verify-coefficients"}).m_hi, 16u);
  EXPECT_EQ(parse_args({"verify-all"}).m_hi, 3u);
  EXPECT_EQ(parse_args({"verify-all", "--m-max", "2"}).m_hi, 2u);
  EXPECT_EQ(parse_args({"verify-all", "--serial"}).exec, Exec::serial);
  const RunConfig w = parse_args({"probe-h5", "--waive", "H5-order,C0", "--waive", "G1"});
  EXPECT_EQ(w.waivers, (std::set<std::string>{"C0", "G1", "H5-order"}));
}

TEST(ParseArgs, UsageErrors) {
  EXPECT_EQ(usage_code({"verify-all", "--m-max", "0"}), 2);
  EXPECT_EQ(usage_code({"verify-coefficients", "--m", "5..2"}), 2);
  EXPECT_EQ(usage_code({"verify-coefficients", "--m", "1..x"}), 2);
  EXPECT_EQ(usage_code({"verify-coefficients", "--m", "1..17"}), 2);
  EXPECT_EQ(usage_code({"verify-case", "--m", "4"}), 2);
  EXPECT_EQ(usage_code({"verify-case", "--case", "VI"}), 2);
  EXPECT_EQ(usage_code({"verify-case", "--theorem", "C"}), 2);
  EXPECT_EQ(usage_code({"verify-all", "--m", "2", "--m-max", "3"}), 2);
  EXPECT_EQ(usage_code({"verify-all", "--format", "xml"}), 2);
  EXPECT_EQ(usage_code({"verify-all", "--frobnicate"}), 2);
  EXPECT_EQ(usage_code({"verify-all", "--waive", "Z9"}), 2);
  EXPECT_EQ(usage_code({"verify-all", "--goldens", "/nonexistent/goldens.txt"}), 2);
  EXPECT_EQ(usage_code({}), 2);
  EXPECT_EQ(usage_code({"--help"}), 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"verify-all", "--m-max", "0"}).code, 2);
  EXPECT_EQ(cli({"probe-h5", "--m", "1..3"}).code, 1);
  EXPECT_EQ(cli({"probe-h5", "--m", "1..3", "--waive", "H5-order"}).code, 0);
  EXPECT_EQ(cli({"verify-case", "--theorem", "A", "--case", "I", "--m", "1..2"}).code, 0);
  EXPECT_EQ(cli({"verify-case", "--theorem", "B", "--case", "III", "--m", "1"}).code, 1);
  EXPECT_EQ(cli({"verify-coefficients", "--m", "1..2"}).code, 1);
  EXPECT_EQ(cli({"verify-coefficients", "--m", "1..2", "--waive", "C0,C2,G0,G1,H1,H4,H5-order"}).code, 0);
}

TEST(Cli, InternalErrorsExitWithThree) {
  std::ostringstream out;
  std::ostringstream err;
  RunConfig cfg = parse_args({"verify-case", "--m", "1"});
  cfg.m_lo = 9;
  cfg.m_hi = 9;
  EXPECT_EQ(run(cfg, out, err), 3);
  EXPECT_NE(err.str().find("internal pipeline error"), std::string::npos);
}

TEST(Cli, CsvHeaderIsFixed) {
  const CliRun r = cli({"verify-coefficients", "--m", "1", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "name,m,defined,closed,match");
  EXPECT_NE(r.out.find("\nA1,1,-3/8,-3/8,true\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nE1,1,3/8*i,3/8*i,true\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nC0,1,15/8,-15/8,false\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nH5-order,1,3/2*i,0,false\n"), std::string::npos);
}

TEST(Cli, CsvQuotesFieldsWithCommas) {
  const CliRun r = cli({"verify-all", "--m", "1", "--format", "csv"});
  EXPECT_NE(r.out.find("\"thm:A:d/dx_n(g(X^T,Y^T)Z_n)\",1,-1/16,-1/16,true\n"), std::string::npos);
}

TEST(Cli, JsonFieldsAreStable) {
  const CliRun r = cli({"verify-coefficients", "--m", "1", "--format", "json", "--waive", "H5-order"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "verify-coefficients");
  EXPECT_EQ(j["coefficients"].size(), 27u);
  EXPECT_EQ(j["coefficients"][1]["name"], "A1");
  EXPECT_EQ(j["coefficients"][1]["defined"], "-3/8");
  EXPECT_EQ(j["h5_probe"][0]["order_m"], "0");
  EXPECT_EQ(j["h5_probe"][0]["order_m_plus_2"], "3/2*i");
  EXPECT_EQ(j["h5_probe"][0]["waived"], true);
  EXPECT_EQ(j["summary"]["mismatched"], 6);
  EXPECT_EQ(j["exit_code"], 1);
  EXPECT_EQ(j["status"], "mismatch");
}

TEST(Cli, TextSummary) {
  const CliRun all = cli({"verify-coefficients", "--m", "1..4", "--waive", "C0,C2,G0,G1,H1,H4,H5-order"});
  EXPECT_NE(all.out.find("27×4 coefficient rows: 84 match, 24 mismatched (C0 C2 G0 G1 H1 H4)"), std::string::npos);
  EXPECT_NE(all.out.find("status: verified"), std::string::npos);
  Report r;
  r.coefficients.push_back({"A0", 1, GaussianRational(1), GaussianRational(1), true});
  r.coefficients.push_back({"A1", 1, GaussianRational(2), GaussianRational(2), true});
  EXPECT_NE(emit_report(r, Format::text).find("2×1 coefficients verified"), std::string::npos);
  EXPECT_EQ(report_exit_code(r), 0);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const char* fmt : {"text", "json", "csv"}) {
    const CliRun a = cli({"verify-all", "--m", "1..2", "--format", fmt});
    const CliRun b = cli({"verify-all", "--m", "1..2", "--format", fmt, "--serial"});
    EXPECT_EQ(a.out, b.out) << fmt;
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, ShowPrintsRecordAndValue) {
  const CliRun r = cli({"show", "def:A1", "--m", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[id] * (-3/8)"), std::string::npos);
  EXPECT_NE(r.out.find("quote: A_1"), std::string::npos);
  EXPECT_EQ(cli({"show", "def:Q9"}).code, 2);
}

}  // namespace
}  // namespace wres
