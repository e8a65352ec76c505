#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "grover/analytics.hpp"

namespace grover::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

enum class Format { kTable, kJson, kCsv };

inline constexpr int kMaxDenseDumpQubits = 5;

struct CliConfig {
  int n = 0;
  std::optional<std::uint64_t> target;
  bool random_target = false;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  Rounding rounding = Rounding::kRound;
  std::optional<std::int64_t> iterations;
  Format format = Format::kTable;
  bool trace = false;
  bool dense_dump = false;
  bool no_meta = false;
};

// Empty when the configuration is usable, otherwise a diagnostic.
std::optional<std::string> validate(const CliConfig& config);

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err);

// n_last == n_first for a single row.
int cmd_plan(int n_first, int n_last, Rounding rounding, Format format, std::ostream& out,
             std::ostream& err);

// Replays the N=8, x0=5 worked example and checks every quantity within 1e-12.
int cmd_paper_example(Rounding rounding, std::ostream& out);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grover::cli
