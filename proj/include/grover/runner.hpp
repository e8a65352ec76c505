#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grover/analytics.hpp"
#include "grover/ket.hpp"
#include "grover/operators.hpp"
#include "grover/oracle.hpp"

namespace grover {

inline constexpr int kMaxAmplitudeDumpQubits = 10;
inline constexpr double kTraceTolerance = 1e-9;

struct TallySnapshot {
  std::uint64_t single_qubit_ops = 0;
  std::uint64_t oracle_queries = 0;
  std::uint64_t phase_ops = 0;

  friend bool operator==(const TallySnapshot&, const TallySnapshot&) = default;
};

TallySnapshot snapshot(const CostTally& tally);

/// State after iteration k. The off-target amplitude is the common value
/// shared by every unmarked record.
struct TraceRecord {
  std::uint64_t k = 0;
  double target_amplitude = 0.0;
  double offtarget_amplitude = 0.0;
  double predicted_target = 0.0;
  double perp_coordinate = 0.0;  // component along |x0_perp>
  double plane_residual = 0.0;
  TallySnapshot tally;
  std::vector<std::complex<double>> amplitudes;  // only with keep_amplitudes

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using Histogram = std::map<std::uint64_t, std::uint64_t>;

struct RunReport {
  GroverPlan plan;
  std::uint64_t target = 0;  // revealed after the run
  std::uint64_t iterations = 0;
  std::vector<TraceRecord> trace;
  double final_state_success_prob = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double empirical_success_rate = 0.0;
  Histogram outcome_histogram;
  std::uint64_t total_queries = 0;
  std::uint64_t total_single_qubit_ops = 0;
  std::uint64_t total_phase_ops = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct RunOptions {
  Rounding rounding = Rounding::kRound;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> iterations_override;
  bool keep_amplitudes = false;  // n <= 10 only
};

/// Initialize with H|0>, apply Q K times (or the override), then sample.
RunReport run_grover(int n, OracleBox& oracle, const RunOptions& options);

/// Standard-basis sampling from |amplitude|^2 by inverse CDF.
Histogram measure(const Ket<>& state, std::uint64_t shots, std::uint64_t seed);

struct CostSummary {
  std::uint64_t queries = 0;
  std::uint64_t single_qubit_ops = 0;
  double bound_constant_check = 0.0;  // single_qubit_ops / (sqrt(N) lg N)
};

CostSummary cost_summary(const RunReport& report);

// Cost model for a full run of the plan without simulating it: K queries and
// 2nK + n single-qubit operations.
CostSummary planned_cost(const GroverPlan& plan);

}  // namespace grover
