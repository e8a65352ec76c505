#include "grover/cli.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "grover/errors.hpp"
#include "grover/oracle.hpp"
#include "grover/report_io.hpp"
#include "grover/runner.hpp"

namespace grover::cli {

namespace {

constexpr double kExampleTolerance = 1e-12;

const std::map<std::string, Format> kFormats{
    {"table", Format::kTable}, {"json", Format::kJson}, {"csv", Format::kCsv}};
const std::map<std::string, Rounding> kRoundings{{"round", Rounding::kRound},
                                                 {"floor", Rounding::kFloor}};

// "7" or "1..12".
bool parse_n_range(const std::string& text, int& first, int& last) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      first = last = std::stoi(text, &used);
      return used == text.size();
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    first = std::stoi(lo, &used);
    if (used != lo.size()) return false;
    last = std::stoi(hi, &used);
    return used == hi.size();
  } catch (const std::exception&) {
    return false;
  }
}

class ExampleChecker {
 public:
  explicit ExampleChecker(std::ostream& out) : out_(out) {}

  void scalar(const std::string& name, double expected, double actual) {
    const bool ok = std::abs(expected - actual) <= kExampleTolerance;
    out_ << (ok ? "[match] " : "[DIFF]  ") << name << ": expected " << std::setprecision(15)
         << expected << ", got " << actual << '\n';
    ok_ = ok_ && ok;
  }

  void vector(const std::string& name, const std::vector<double>& expected,
              const std::vector<double>& actual) {
    if (expected.size() != actual.size()) {
      out_ << "[DIFF]  " << name << ": expected " << expected.size() << " components, got "
           << actual.size() << '\n';
      ok_ = false;
      return;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const double d = std::abs(expected[i] - actual[i]);
      if (d > kExampleTolerance) {
        out_ << "[DIFF]  " << name << "[" << i << "]: expected " << std::setprecision(15)
             << expected[i] << ", got " << actual[i] << '\n';
      }
      worst = std::max(worst, d);
    }
    const bool ok = worst <= kExampleTolerance;
    out_ << (ok ? "[match] " : "[DIFF]  ") << name << ": max componentwise deviation "
         << std::scientific << std::setprecision(2) << worst << std::defaultfloat << '\n';
    ok_ = ok_ && ok;
  }

  bool ok() const { return ok_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

std::vector<double> real_parts(const Ket<>& k) {
  std::vector<double> v;
  for (Eigen::Index i = 0; i < k.dim(); ++i) v.push_back(k[i].real());
  return v;
}

// scale * (c, c, ..., c) with `marked` at the target slot.
std::vector<double> marked_vector(std::size_t dim, std::size_t target, double scale, double common,
                                  double marked) {
  std::vector<double> v(dim, scale * common);
  v[target] = scale * marked;
  return v;
}

}  // namespace

std::optional<std::string> validate(const CliConfig& c) {
  if (c.n < 1 || c.n > kMaxQubits) {
    return "--n must be in [1, " + std::to_string(kMaxQubits) + "]";
  }
  if (c.target && c.random_target) {
    return "--target and --random-target are mutually exclusive";
  }
  if (c.target && *c.target >= (std::uint64_t{1} << c.n)) {
    return "--target must be below 2^n = " + std::to_string(std::uint64_t{1} << c.n);
  }
  if (c.iterations && *c.iterations < 0) {
    return "--iterations must be non-negative";
  }
  if (c.dense_dump && c.n > kMaxDenseDumpQubits) {
    return "--dense-dump requires n <= " + std::to_string(kMaxDenseDumpQubits);
  }
  if (c.dense_dump && c.format == Format::kCsv) {
    return "--dense-dump cannot be combined with --format csv";
  }
  return std::nullopt;
}

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (const auto problem = validate(config)) {
    err << "error: " << *problem << '\n';
    return kUsage;
  }
  std::optional<BasisIndex> target;
  if (config.target) target = BasisIndex(*config.target);
  OracleBox oracle = OracleBox::create(config.n, target, config.seed);

  RunOptions options;
  options.rounding = config.rounding;
  options.shots = config.shots;
  options.seed = config.seed;
  options.iterations_override = config.iterations;
  const RunReport report = run_grover(config.n, oracle, options);

  std::optional<DenseDump> dense;
  if (config.dense_dump) {
    dense = make_dense_dump(config.n, BasisIndex(report.target));
  }

  switch (config.format) {
    case Format::kTable:
      if (dense) {
        write_dense_table(out, *dense);
        out << '\n';
      }
      write_report_table(out, report, config.trace);
      break;
    case Format::kJson: {
      JsonOptions json_options;
      json_options.include_meta = !config.no_meta;
      json_options.dense = dense ? &*dense : nullptr;
      out << report_to_json(report, json_options);
      break;
    }
    case Format::kCsv:
      write_trace_csv(out, report);
      break;
  }
  return kOk;
}

int cmd_plan(int n_first, int n_last, Rounding rounding, Format format, std::ostream& out,
             std::ostream& err) {
  if (n_first < 1 || n_last < n_first || n_last > kMaxQubits) {
    err << "error: --n must be a value or range within [1, " << kMaxQubits << "]\n";
    return kUsage;
  }
  std::vector<PlanRow> rows;
  for (int n = n_first; n <= n_last; ++n) rows.push_back(make_plan_row(n, rounding));
  switch (format) {
    case Format::kTable:
      write_plan_table(out, rows);
      break;
    case Format::kJson:
      out << plan_rows_to_json(rows);
      break;
    case Format::kCsv:
      write_plan_csv(out, rows);
      break;
  }
  return kOk;
}

int cmd_paper_example(Rounding rounding, std::ostream& out) {
  constexpr int kQubits = 3;
  constexpr std::size_t kTarget = 5;
  constexpr std::size_t kDim = 8;
  const double root2 = std::sqrt(2.0);

  out << "Search over N = 8 records for the marked label x0 = 5 (rounding = "
      << to_string(rounding) << ")\n\n";
  ExampleChecker check(out);

  OracleBox oracle(kQubits, BasisIndex(kTarget));
  const GroverPlan plan = make_plan(kQubits, rounding);
  check.scalar("K", 2.0, static_cast<double>(plan.K));

  CostTally tally;
  Ket<> psi = hadamard(basis_ket(kQubits, BasisIndex(0)), tally);
  check.vector("psi0 = H|0> = (1/sqrt8)(1,1,1,1,1,1,1,1)",
               std::vector<double>(kDim, 1.0 / std::sqrt(8.0)), real_parts(psi));

  std::vector<Ket<>> states;
  for (std::uint64_t k = 0; k < plan.K; ++k) {
    psi = grover_iterate(psi, oracle, tally);
    states.push_back(psi);
  }
  const std::vector<std::vector<double>> expected{
      marked_vector(kDim, kTarget, 1.0 / (4.0 * root2), 1.0, 5.0),
      marked_vector(kDim, kTarget, 1.0 / (8.0 * root2), -1.0, 11.0)};
  const char* names[] = {"psi1 = Q psi0 = (1/(4 sqrt2))(1,1,1,1,1,5,1,1)",
                         "psi2 = Q psi1 = (1/(8 sqrt2))(-1,-1,-1,-1,-1,11,-1,-1)"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i < states.size()) {
      check.vector(names[i], expected[i], real_parts(states[i]));
    } else {
      check.vector(names[i], expected[i], {});
    }
  }

  const double success = std::norm(psi[kTarget]);
  check.scalar("Prob_Success = 121/128", 121.0 / 128.0, success);
  check.scalar("Prob_Failure = 7/128", 7.0 / 128.0, 1.0 - success);
  check.scalar("closed-form sin^2((2K+1) beta)", 121.0 / 128.0, predict_state(plan, plan.K).success_prob);
  check.scalar("closed-form cos^2((2K+1) beta)", 7.0 / 128.0, actual_error(plan));

  out << '\n'
      << std::fixed << std::setprecision(4) << "Prob_Success = 121/128 = " << 121.0 / 128.0
      << " (simulated " << success << ")\n"
      << "Prob_Failure = 7/128 = " << 7.0 / 128.0 << " (simulated " << 1.0 - success << ")\n"
      << std::defaultfloat;
  out << (check.ok() ? "all quantities match\n" : "MISMATCH\n");
  return check.ok() ? kOk : kVerificationFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover search simulator"};
  app.require_subcommand(1);

  CliConfig run;
  std::string rounding_name = "round";
  std::string format_name = "table";
  std::optional<std::uint64_t> target;
  std::optional<std::int64_t> iterations;

  auto* run_cmd = app.add_subcommand("run", "simulate one search and report");
  run_cmd->add_option("--n", run.n, "number of qubits")->required();
  run_cmd->add_option("--target", target, "marked label (default: drawn from --seed)");
  run_cmd->add_flag("--random-target", run.random_target, "draw the marked label from --seed");
  run_cmd->add_option("--seed", run.seed, "seed for target selection and sampling");
  run_cmd->add_option("--shots", run.shots, "number of simulated measurements");
  run_cmd->add_option("--rounding", rounding_name, "iteration count rounding")
      ->check(CLI::IsMember({"round", "floor"}));
  run_cmd->add_option("--iterations", iterations, "override the iteration count");
  run_cmd->add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  run_cmd->add_flag("--trace", run.trace, "print one row per iteration");
  run_cmd->add_flag("--dense-dump", run.dense_dump, "print the I|x0> and Q matrices (n <= 5)");
  run_cmd->add_flag("--no-meta", run.no_meta, "omit the meta block from JSON output");

  std::string plan_n;
  auto* plan_cmd = app.add_subcommand("plan", "tabulate beta, K, error and bound");
  plan_cmd->add_option("--n", plan_n, "qubit count or range such as 1..12")->required();
  plan_cmd->add_option("--rounding", rounding_name, "iteration count rounding")
      ->check(CLI::IsMember({"round", "floor"}));
  plan_cmd->add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  auto* example_cmd =
      app.add_subcommand("paper-example", "replay the N=8, x0=5 example and check it");
  example_cmd->add_option("--rounding", rounding_name, "iteration count rounding")
      ->check(CLI::IsMember({"round", "floor"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const Rounding rounding = kRoundings.at(rounding_name);
  const Format format = kFormats.at(format_name);
  try {
    if (*run_cmd) {
      run.target = target;
      run.iterations = iterations;
      run.rounding = rounding;
      run.format = format;
      return cmd_run(run, out, err);
    }
    if (*plan_cmd) {
      int first = 0;
      int last = 0;
      if (!parse_n_range(plan_n, first, last)) {
        err << "error: --n expects an integer or a range like 1..12\n";
        return kUsage;
      }
      return cmd_plan(first, last, rounding, format, out, err);
    }
    return cmd_paper_example(rounding, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace grover::cli
