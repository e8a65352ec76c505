#include "grover/analytics.hpp"

#include <cmath>
#include <numbers>

#include "grover/errors.hpp"
#include "grover/ket.hpp"

namespace grover {

namespace {
constexpr double kSnapTolerance = 1e-9;
}

std::string_view to_string(Rounding rounding) {
  return rounding == Rounding::kRound ? "round" : "floor";
}

std::optional<Rounding> parse_rounding(std::string_view text) {
  if (text == "round") return Rounding::kRound;
  if (text == "floor") return Rounding::kFloor;
  return std::nullopt;
}

double ideal_iterations(double beta) { return std::numbers::pi / (4.0 * beta) - 0.5; }

std::int64_t round_iterations(double x, Rounding rounding) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kSnapTolerance) {
    x = nearest;
  }
  if (rounding == Rounding::kFloor) {
    return static_cast<std::int64_t>(std::floor(x));
  }
  const double lower = std::floor(x);
  if (std::abs(x - (lower + 0.5)) <= kSnapTolerance) {
    return static_cast<std::int64_t>(x >= 0.0 ? lower + 1.0 : lower);
  }
  return static_cast<std::int64_t>(std::round(x));
}

GroverPlan make_plan(int n, Rounding rounding) {
  if (n < 1) {
    throw DomainError("make_plan requires n >= 1");
  }
  GroverPlan plan;
  plan.n = n;
  plan.N = dimension_for(n);
  plan.beta = std::asin(std::exp2(-0.5 * n));
  plan.alpha = std::numbers::pi / 2.0 - plan.beta;
  plan.rounding = rounding;
  const std::int64_t k = round_iterations(ideal_iterations(plan.beta), rounding);
  plan.K = k < 0 ? 0 : static_cast<std::uint64_t>(k);
  return plan;
}

PredictedState predict_state(const GroverPlan& plan, std::uint64_t k) {
  const double angle = static_cast<double>(2 * k + 1) * plan.beta;
  PredictedState s;
  s.k = k;
  s.target_amp = std::sin(angle);
  s.perp_amp = std::cos(angle);
  s.success_prob = s.target_amp * s.target_amp;
  return s;
}

double error_bound(const GroverPlan& plan) {
  const double inv_n = 1.0 / static_cast<double>(plan.N);
  if (plan.rounding == Rounding::kRound) {
    return inv_n;
  }
  return 4.0 * inv_n - 4.0 * inv_n * inv_n;
}

double actual_error(const GroverPlan& plan) {
  const double c = predict_state(plan, plan.K).perp_amp;
  return c * c;
}

}  // namespace grover
