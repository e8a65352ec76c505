#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "grover/analytics.hpp"
#include "grover/operators.hpp"
#include "grover/runner.hpp"

namespace grover {

inline constexpr std::string_view kVersion = "1.0.0";

// Explicit I|x0> and Q matrices for small n.
struct DenseDump {
  DenseMatrix<> inversion;
  DenseMatrix<> iterate;
};

DenseDump make_dense_dump(int n, BasisIndex target);

struct JsonOptions {
  bool include_meta = true;  // version, seed and a wall-clock timestamp
  const DenseDump* dense = nullptr;
};

/// Top-level keys: plan, result, trace, histogram, cost, and optionally meta
/// and dense. Doubles are written with round-trip precision.
std::string report_to_json(const RunReport& report, const JsonOptions& options = {});

/// Inverse of report_to_json (meta and dense are ignored).
RunReport report_from_json(std::string_view text);

void write_report_table(std::ostream& out, const RunReport& report, bool with_trace);

// Header plus one row per iteration.
void write_trace_csv(std::ostream& out, const RunReport& report);

void write_dense_table(std::ostream& out, const DenseDump& dump);

struct PlanRow {
  GroverPlan plan;
  double error = 0.0;
  double bound = 0.0;
};

PlanRow make_plan_row(int n, Rounding rounding);

void write_plan_table(std::ostream& out, const std::vector<PlanRow>& rows);
void write_plan_csv(std::ostream& out, const std::vector<PlanRow>& rows);
std::string plan_rows_to_json(const std::vector<PlanRow>& rows);

}  // namespace grover
