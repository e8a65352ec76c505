#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "grover/report_io.hpp"

namespace grover {
namespace {

RunReport sample_report(int n, std::uint64_t target, std::uint64_t shots, bool amplitudes = false) {
  OracleBox box(n, BasisIndex(target));
  RunOptions o;
  o.shots = shots;
  o.seed = 4;
  o.keep_amplitudes = amplitudes;
  return run_grover(n, box, o);
}

TEST(ReportJson, TopLevelKeys) {
  const auto j = nlohmann::json::parse(report_to_json(sample_report(3, 5, 100)));
  for (const char* key : {"plan", "result", "trace", "histogram", "cost", "meta"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["meta"]["version"], std::string(kVersion));
  EXPECT_TRUE(j["meta"].contains("timestamp"));
  EXPECT_EQ(j["plan"]["K"], 2);
  EXPECT_EQ(j["cost"]["single_qubit_ops"], 15);
}

TEST(ReportJson, NoMetaOmitsBlock) {
  const auto j =
      nlohmann::json::parse(report_to_json(sample_report(3, 5, 0), {.include_meta = false}));
  EXPECT_FALSE(j.contains("meta"));
}

TEST(ReportJson, RoundTrip) {
  for (const RunReport& r :
       {sample_report(3, 5, 1000), sample_report(6, 40, 0, true), sample_report(1, 0, 7)}) {
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
  }
}

TEST(ReportJson, MalformedInput) {
  EXPECT_THROW(report_from_json("{"), DomainError);
  EXPECT_THROW(report_from_json(R"({"plan": {}})"), DomainError);
}

TEST(ReportJson, DenseBlock) {
  const DenseDump d = make_dense_dump(3, BasisIndex(5));
  JsonOptions o;
  o.dense = &d;
  const auto j = nlohmann::json::parse(report_to_json(sample_report(3, 5, 0), o));
  EXPECT_DOUBLE_EQ(j["dense"]["inversion"][5][5].get<double>(), -1.0);
  EXPECT_DOUBLE_EQ(j["dense"]["grover_iterate"][5][5].get<double>(), 0.75);
  EXPECT_DOUBLE_EQ(j["dense"]["grover_iterate"][0][0].get<double>(), -0.75);
}

TEST(TraceCsv, HeaderPlusOneRowPerIteration) {
  for (int n = 1; n <= 8; ++n) {
    const RunReport r = sample_report(n, 0, 0);
    std::ostringstream os;
    write_trace_csv(os, r);
    const std::string text = os.str();
    std::size_t lines = 0;
    for (std::size_t pos = 0; (pos = text.find("\r\n", pos)) != std::string::npos; pos += 2) ++lines;
    EXPECT_EQ(lines, r.plan.K + 1) << n;
    EXPECT_EQ(text.rfind("k,target_amplitude,", 0), 0u);
  }
}

TEST(ReportTable, SixDigitValues) {
  std::ostringstream os;
  write_report_table(os, sample_report(3, 5, 0), true);
  const std::string text = os.str();
  EXPECT_NE(text.find("0.883883"), std::string::npos);
  EXPECT_NE(text.find("0.972272"), std::string::npos);
  EXPECT_NE(text.find("success probability = 0.945312"), std::string::npos);
}

TEST(DenseTable, ScaledIntegers) {
  std::ostringstream os;
  write_dense_table(os, make_dense_dump(3, BasisIndex(5)));
  const std::string text = os.str();
  EXPECT_NE(text.find("Q = (1/4) *"), std::string::npos);
  EXPECT_NE(text.find("   1   1   1   1   1   3   1   1"), std::string::npos);
  EXPECT_NE(text.find("   0   0   0   0   0  -1   0   0"), std::string::npos);
}

TEST(PlanOutput, Formats) {
  std::vector<PlanRow> rows;
  for (int n = 1; n <= 12; ++n) rows.push_back(make_plan_row(n, Rounding::kRound));
  for (const PlanRow& r : rows) EXPECT_LE(r.error, r.bound + 1e-12);

  std::ostringstream table;
  write_plan_table(table, rows);
  EXPECT_NE(table.str().find("0.361367"), std::string::npos);
  EXPECT_EQ(table.str().find("NO"), std::string::npos);

  const auto j = nlohmann::json::parse(plan_rows_to_json(rows));
  EXPECT_EQ(j.size(), 12u);
  EXPECT_EQ(j[2]["K"], 2);
  EXPECT_NEAR(j[2]["error"].get<double>(), 7.0 / 128.0, 1e-14);
  EXPECT_DOUBLE_EQ(j[2]["bound"].get<double>(), 0.125);

  std::ostringstream csv;
  write_plan_csv(csv, rows);
  EXPECT_EQ(csv.str().rfind("n,N,rounding,beta,alpha,K,error,bound\r\n", 0), 0u);
}

}  // namespace
}  // namespace grover
