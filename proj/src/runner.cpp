#include "grover/runner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "grover/random.hpp"

namespace grover {

namespace {

constexpr double kMeasureNormTolerance = 1e-9;

// Plane coordinates of the state in the (x0_perp, x0) frame, computed without
// materializing the frame: x0_perp is uniform 1/sqrt(N-1) off the target.
TraceRecord describe(const Ket<>& state, BasisIndex target, std::uint64_t k, const GroverPlan& plan,
                     const CostTally& tally, bool keep_amplitudes) {
  const auto& a = state.amplitudes();
  const auto t = static_cast<Eigen::Index>(target.value);
  const Eigen::Index other = t == 0 ? 1 : 0;
  const double off_norm = 1.0 / std::sqrt(static_cast<double>(a.size() - 1));

  std::complex<double> off_sum = -a[t];
  off_sum += a.sum();
  const double u = off_sum.real() * off_norm;

  // Residual: everything not explained by u * x0_perp + Re(a_t) * x0.
  double residual_sq = a[t].imag() * a[t].imag();
  const double per_slot = u * off_norm;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (i != t) residual_sq += std::norm(a[i] - per_slot);
  }

  TraceRecord r;
  r.k = k;
  r.target_amplitude = a[t].real();
  r.offtarget_amplitude = a[other].real();
  r.predicted_target = predict_state(plan, k).target_amp;
  r.perp_coordinate = u;
  r.plane_residual = std::sqrt(residual_sq);
  r.tally = snapshot(tally);
  if (keep_amplitudes) {
    r.amplitudes.assign(a.begin(), a.end());
  }
  return r;
}

}  // namespace

TallySnapshot snapshot(const CostTally& tally) {
  return {tally.single_qubit_ops(), tally.oracle_queries(), tally.phase_ops()};
}

RunReport run_grover(int n, OracleBox& oracle, const RunOptions& options) {
  if (oracle.n_qubits() != n) {
    throw DomainError("oracle built for " + std::to_string(oracle.n_qubits()) +
                      " qubits, run requested " + std::to_string(n));
  }
  if (options.iterations_override && *options.iterations_override < 0) {
    throw DomainError("iteration override must be non-negative");
  }
  if (options.keep_amplitudes && n > kMaxAmplitudeDumpQubits) {
    throw DomainError("full amplitude traces are limited to n <= " +
                      std::to_string(kMaxAmplitudeDumpQubits));
  }

  RunReport report;
  report.plan = make_plan(n, options.rounding);
  report.iterations = options.iterations_override
                          ? static_cast<std::uint64_t>(*options.iterations_override)
                          : report.plan.K;
  report.shots = options.shots;
  report.seed = options.seed;

  const BasisIndex target = OracleReveal::target(oracle);
  report.target = target.value;

  CostTally tally;
  Ket<> psi = hadamard(basis_ket(n, BasisIndex(0)), tally);
  report.trace.reserve(report.iterations);
  for (std::uint64_t k = 1; k <= report.iterations; ++k) {
    psi = grover_iterate(psi, oracle, tally);
    TraceRecord rec = describe(psi, target, k, report.plan, tally, options.keep_amplitudes);
    if (!(std::abs(rec.target_amplitude - rec.predicted_target) <= kTraceTolerance)) {
      throw InvariantViolation("iteration " + std::to_string(k) +
                               ": simulated target amplitude drifted from closed form");
    }
    report.trace.push_back(std::move(rec));
  }

  report.final_state_success_prob = std::norm(psi.at(target));
  report.outcome_histogram = measure(psi, options.shots, options.seed);
  if (options.shots > 0) {
    const auto it = report.outcome_histogram.find(target.value);
    const std::uint64_t hits = it == report.outcome_histogram.end() ? 0 : it->second;
    report.empirical_success_rate =
        static_cast<double>(hits) / static_cast<double>(options.shots);
  }
  report.total_queries = tally.oracle_queries();
  report.total_single_qubit_ops = tally.single_qubit_ops();
  report.total_phase_ops = tally.phase_ops();
  return report;
}

Histogram measure(const Ket<>& state, std::uint64_t shots, std::uint64_t seed) {
  if (!(std::abs(norm(state) - 1.0) <= kMeasureNormTolerance)) {
    throw DomainError("measure requires a normalized state");
  }
  Histogram histogram;
  if (shots == 0) {
    return histogram;
  }
  const auto& a = state.amplitudes();
  std::vector<double> cdf(static_cast<std::size_t>(a.size()));
  double running = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    running += std::norm(a[i]);
    cdf[static_cast<std::size_t>(i)] = running;
  }
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double draw = rng.uniform01() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), draw);
    if (it == cdf.end()) {
      // Rounding pushed the draw past the total; take the last outcome with
      // nonzero probability.
      --it;
      while (it != cdf.begin() && *it == *(it - 1)) --it;
    }
    ++histogram[static_cast<std::uint64_t>(it - cdf.begin())];
  }
  return histogram;
}

namespace {

double cost_ratio(std::uint64_t single_qubit_ops, std::uint64_t big_n) {
  const double n = static_cast<double>(big_n);
  return static_cast<double>(single_qubit_ops) / (std::sqrt(n) * std::log2(n));
}

}  // namespace

CostSummary cost_summary(const RunReport& report) {
  CostSummary c;
  c.queries = report.total_queries;
  c.single_qubit_ops = report.total_single_qubit_ops;
  c.bound_constant_check = cost_ratio(c.single_qubit_ops, report.plan.N);
  return c;
}

CostSummary planned_cost(const GroverPlan& plan) {
  const auto n = static_cast<std::uint64_t>(plan.n);
  CostSummary c;
  c.queries = plan.K;
  c.single_qubit_ops = 2 * n * plan.K + n;
  c.bound_constant_check = cost_ratio(c.single_qubit_ops, plan.N);
  return c;
}

}  // namespace grover
