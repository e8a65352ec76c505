#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace grover {

enum class Rounding { kRound, kFloor };

std::string_view to_string(Rounding rounding);
std::optional<Rounding> parse_rounding(std::string_view text);

/// Closed-form run parameters for an n-qubit search with one marked record.
struct GroverPlan {
  int n = 0;
  std::uint64_t N = 0;
  double beta = 0.0;   // arcsin(1/sqrt N): angle from |x0_perp> to |psi0>
  double alpha = 0.0;  // pi/2 - beta: angle from |psi0> to |x0>
  std::uint64_t K = 0;
  Rounding rounding = Rounding::kRound;

  friend bool operator==(const GroverPlan&, const GroverPlan&) = default;
};

/// Coordinates of Q^k psi0 in the (|x0_perp>, |x0>) frame.
struct PredictedState {
  std::uint64_t k = 0;
  double target_amp = 0.0;  // sin((2k+1) beta)
  double perp_amp = 0.0;    // cos((2k+1) beta)
  double success_prob = 0.0;
};

// Unrounded iteration count pi/(4 beta) - 1/2.
double ideal_iterations(double beta);

// Round or floor of x. Values within 1e-9 of an integer snap to it first, and
// exact halves round away from zero.
std::int64_t round_iterations(double x, Rounding rounding);

GroverPlan make_plan(int n, Rounding rounding = Rounding::kRound);

PredictedState predict_state(const GroverPlan& plan, std::uint64_t k);

// Upper bound on the failure probability: 1/N for round, 4/N - 4/N^2 for floor.
double error_bound(const GroverPlan& plan);

// cos^2((2K+1) beta).
double actual_error(const GroverPlan& plan);

}  // namespace grover
