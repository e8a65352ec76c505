#include "grover/report_io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grover/oracle.hpp"

namespace grover {

using nlohmann::json;

namespace {

constexpr int kTableDigits = 6;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json plan_to_json(const GroverPlan& p) {
  return {{"n", p.n},         {"N", p.N}, {"beta", p.beta}, {"alpha", p.alpha},
          {"K", p.K},         {"rounding", std::string(to_string(p.rounding))}};
}

GroverPlan plan_from_json(const json& j) {
  GroverPlan p;
  p.n = j.at("n").get<int>();
  p.N = j.at("N").get<std::uint64_t>();
  p.beta = j.at("beta").get<double>();
  p.alpha = j.at("alpha").get<double>();
  p.K = j.at("K").get<std::uint64_t>();
  const auto rounding = parse_rounding(j.at("rounding").get<std::string>());
  if (!rounding) {
    throw DomainError("unknown rounding mode in report");
  }
  p.rounding = *rounding;
  return p;
}

json matrix_to_json(const DenseMatrix<>& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Common denominator d such that d * m is integer-valued, if a small one exists.
std::optional<int> integer_scale(const DenseMatrix<>& m) {
  for (int d = 1; d <= 64; d *= 2) {
    const auto scaled = (m * static_cast<double>(d)).eval();
    bool ok = scaled.imag().cwiseAbs().maxCoeff() <= 1e-12;
    for (Eigen::Index i = 0; ok && i < scaled.size(); ++i) {
      const double x = scaled.data()[i].real();
      ok = std::abs(x - std::round(x)) <= 1e-9;
    }
    if (ok) return d;
  }
  return std::nullopt;
}

void write_matrix(std::ostream& out, std::string_view name, const DenseMatrix<>& m) {
  const auto scale = integer_scale(m);
  out << name;
  if (scale && *scale != 1) {
    out << " = (1/" << *scale << ") *\n";
  } else {
    out << " =\n";
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double x = m(r, c).real();
      if (scale) {
        out << std::setw(4) << std::lround(x * *scale);
      } else {
        out << ' ' << std::setw(10) << std::fixed << std::setprecision(kTableDigits) << x;
      }
    }
    out << '\n';
  }
}

}  // namespace

DenseDump make_dense_dump(int n, BasisIndex target) {
  OracleBox box(n, target);
  CostTally scratch;
  DenseDump d;
  d.inversion = render_dense([&](const Ket<>& s) { return box.apply(s, scratch); }, n).matrix();
  d.iterate = render_dense([&](const Ket<>& s) { return grover_iterate(s, box, scratch); }, n).matrix();
  return d;
}

std::string report_to_json(const RunReport& report, const JsonOptions& options) {
  json trace = json::array();
  for (const TraceRecord& t : report.trace) {
    json rec = {{"k", t.k},
                {"target_amplitude", t.target_amplitude},
                {"offtarget_amplitude", t.offtarget_amplitude},
                {"predicted_target", t.predicted_target},
                {"perp_coordinate", t.perp_coordinate},
                {"plane_residual", t.plane_residual},
                {"single_qubit_ops", t.tally.single_qubit_ops},
                {"oracle_queries", t.tally.oracle_queries},
                {"phase_ops", t.tally.phase_ops}};
    if (!t.amplitudes.empty()) {
      json amps = json::array();
      for (const auto& a : t.amplitudes) amps.push_back({a.real(), a.imag()});
      rec["amplitudes"] = std::move(amps);
    }
    trace.push_back(std::move(rec));
  }

  json histogram = json::array();
  for (const auto& [outcome, count] : report.outcome_histogram) {
    histogram.push_back({{"outcome", outcome}, {"count", count}});
  }

  const CostSummary cost = cost_summary(report);
  json j = {
      {"plan", plan_to_json(report.plan)},
      {"result",
       {{"target", report.target},
        {"iterations", report.iterations},
        {"final_state_success_prob", report.final_state_success_prob},
        {"shots", report.shots},
        {"seed", report.seed},
        {"empirical_success_rate", report.empirical_success_rate}}},
      {"trace", std::move(trace)},
      {"histogram", std::move(histogram)},
      {"cost",
       {{"queries", cost.queries},
        {"single_qubit_ops", cost.single_qubit_ops},
        {"phase_ops", report.total_phase_ops},
        {"bound_constant_check", cost.bound_constant_check}}},
  };
  if (options.include_meta) {
    j["meta"] = {{"version", std::string(kVersion)},
                 {"seed", report.seed},
                 {"timestamp", utc_timestamp()}};
  }
  if (options.dense) {
    j["dense"] = {{"inversion", matrix_to_json(options.dense->inversion)},
                  {"grover_iterate", matrix_to_json(options.dense->iterate)}};
  }
  return j.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report JSON: ") + e.what());
  }
  try {
    RunReport r;
    r.plan = plan_from_json(j.at("plan"));
    const json& res = j.at("result");
    r.target = res.at("target").get<std::uint64_t>();
    r.iterations = res.at("iterations").get<std::uint64_t>();
    r.final_state_success_prob = res.at("final_state_success_prob").get<double>();
    r.shots = res.at("shots").get<std::uint64_t>();
    r.seed = res.at("seed").get<std::uint64_t>();
    r.empirical_success_rate = res.at("empirical_success_rate").get<double>();
    for (const json& rec : j.at("trace")) {
      TraceRecord t;
      t.k = rec.at("k").get<std::uint64_t>();
      t.target_amplitude = rec.at("target_amplitude").get<double>();
      t.offtarget_amplitude = rec.at("offtarget_amplitude").get<double>();
      t.predicted_target = rec.at("predicted_target").get<double>();
      t.perp_coordinate = rec.at("perp_coordinate").get<double>();
      t.plane_residual = rec.at("plane_residual").get<double>();
      t.tally.single_qubit_ops = rec.at("single_qubit_ops").get<std::uint64_t>();
      t.tally.oracle_queries = rec.at("oracle_queries").get<std::uint64_t>();
      t.tally.phase_ops = rec.at("phase_ops").get<std::uint64_t>();
      if (rec.contains("amplitudes")) {
        for (const json& a : rec.at("amplitudes")) {
          t.amplitudes.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        }
      }
      r.trace.push_back(std::move(t));
    }
    for (const json& h : j.at("histogram")) {
      r.outcome_histogram[h.at("outcome").get<std::uint64_t>()] = h.at("count").get<std::uint64_t>();
    }
    const json& cost = j.at("cost");
    r.total_queries = cost.at("queries").get<std::uint64_t>();
    r.total_single_qubit_ops = cost.at("single_qubit_ops").get<std::uint64_t>();
    r.total_phase_ops = cost.at("phase_ops").get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("report JSON missing or mistyped field: ") + e.what());
  }
}

void write_report_table(std::ostream& out, const RunReport& report, bool with_trace) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::fixed << std::setprecision(kTableDigits);

  const GroverPlan& p = report.plan;
  out << "n = " << p.n << "  N = " << p.N << "  rounding = " << to_string(p.rounding) << '\n'
      << "beta = " << p.beta << "  alpha = " << p.alpha << "  K = " << p.K << '\n'
      << "target = " << report.target << "  iterations = " << report.iterations << '\n';

  if (with_trace) {
    out << '\n'
        << std::setw(6) << "k" << std::setw(14) << "target_amp" << std::setw(14) << "offtarget_amp"
        << std::setw(14) << "predicted" << std::setw(14) << "residual" << '\n';
    for (const TraceRecord& t : report.trace) {
      out << std::setw(6) << t.k << std::setw(14) << t.target_amplitude << std::setw(14)
          << t.offtarget_amplitude << std::setw(14) << t.predicted_target << std::setw(14)
          << std::scientific << std::setprecision(2) << t.plane_residual << std::fixed
          << std::setprecision(kTableDigits) << '\n';
    }
    out << '\n';
  }

  out << "success probability = " << report.final_state_success_prob << '\n'
      << "failure probability = " << 1.0 - report.final_state_success_prob << '\n';
  if (report.shots > 0) {
    out << "shots = " << report.shots << "  seed = " << report.seed
        << "  empirical success rate = " << report.empirical_success_rate << '\n';
    out << std::setw(10) << "outcome" << std::setw(12) << "count" << '\n';
    for (const auto& [outcome, count] : report.outcome_histogram) {
      out << std::setw(10) << outcome << std::setw(12) << count << '\n';
    }
  }
  const CostSummary cost = cost_summary(report);
  out << "oracle queries = " << cost.queries << "  single-qubit ops = " << cost.single_qubit_ops
      << "  phase ops = " << report.total_phase_ops
      << "  ops/(sqrt(N) lg N) = " << cost.bound_constant_check << '\n';

  out.flags(old_flags);
  out.precision(old_precision);
}

void write_trace_csv(std::ostream& out, const RunReport& report) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::setprecision(15);
  out << "k,target_amplitude,offtarget_amplitude,predicted_target,perp_coordinate,plane_residual,"
         "single_qubit_ops,oracle_queries,phase_ops\r\n";
  for (const TraceRecord& t : report.trace) {
    out << t.k << ',' << t.target_amplitude << ',' << t.offtarget_amplitude << ','
        << t.predicted_target << ',' << t.perp_coordinate << ',' << t.plane_residual << ','
        << t.tally.single_qubit_ops << ',' << t.tally.oracle_queries << ',' << t.tally.phase_ops
        << "\r\n";
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

void write_dense_table(std::ostream& out, const DenseDump& dump) {
  write_matrix(out, "I|x0>", dump.inversion);
  out << '\n';
  write_matrix(out, "Q", dump.iterate);
}

PlanRow make_plan_row(int n, Rounding rounding) {
  PlanRow row;
  row.plan = make_plan(n, rounding);
  row.error = actual_error(row.plan);
  row.bound = error_bound(row.plan);
  return row;
}

void write_plan_table(std::ostream& out, const std::vector<PlanRow>& rows) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::setw(4) << "n" << std::setw(10) << "N" << std::setw(8) << "mode" << std::setw(12)
      << "beta" << std::setw(8) << "K" << std::setw(14) << "error" << std::setw(14) << "bound"
      << std::setw(6) << "ok" << '\n';
  for (const PlanRow& r : rows) {
    out << std::setw(4) << r.plan.n << std::setw(10) << r.plan.N << std::setw(8)
        << to_string(r.plan.rounding) << std::fixed << std::setprecision(kTableDigits)
        << std::setw(12) << r.plan.beta << std::setw(8) << r.plan.K << std::setw(14) << r.error
        << std::setw(14) << r.bound << std::setw(6) << (r.error <= r.bound + 1e-12 ? "yes" : "NO")
        << '\n';
    out.flags(old_flags);
  }
  out.precision(old_precision);
}

void write_plan_csv(std::ostream& out, const std::vector<PlanRow>& rows) {
  const auto old_precision = out.precision();
  out << std::setprecision(15);
  out << "n,N,rounding,beta,alpha,K,error,bound\r\n";
  for (const PlanRow& r : rows) {
    out << r.plan.n << ',' << r.plan.N << ',' << to_string(r.plan.rounding) << ',' << r.plan.beta
        << ',' << r.plan.alpha << ',' << r.plan.K << ',' << r.error << ',' << r.bound << "\r\n";
  }
  out.precision(old_precision);
}

std::string plan_rows_to_json(const std::vector<PlanRow>& rows) {
  json arr = json::array();
  for (const PlanRow& r : rows) {
    json j = plan_to_json(r.plan);
    j["error"] = r.error;
    j["bound"] = r.bound;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace grover
