#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "grover/ket.hpp"
#include "grover/oracle.hpp"

namespace grover {

/// Orthonormal frames of the real plane spanned by |psi0> and |x0>.
///
/// Perpendiculars are oriented so that (x0_perp, x0) and (psi0, psi0_perp)
/// induce the same orientation as (psi0, x0). A line through the origin is
/// identified by its unit normal.
struct PlaneBasis {
  int n = 0;
  BasisIndex target;
  Ket<> psi0;
  Ket<> x0;
  Ket<> x0_perp;
  Ket<> psi0_perp;
};

/// Coordinates along x0_perp (u) and x0 (v) plus the out-of-plane remainder.
struct PlaneCoords {
  double u = 0.0;
  double v = 0.0;
  double residual = 0.0;
};

enum class PlaneOperator { kInvertPsi0, kInvertX0, kGroverIterate };

PlaneBasis make_plane(int n, BasisIndex target);

PlaneCoords project(const PlaneBasis& plane, const Ket<>& state);

// Norm of the part of state outside the complex span of x0_perp and x0.
double span_residual(const PlaneBasis& plane, const Ket<>& state);

// Signed area of (a, b) in the (x0_perp, x0) frame.
double orientation(const PlaneBasis& plane, const Ket<>& a, const Ket<>& b);

Ket<> apply_plane_operator(const PlaneBasis& plane, PlaneOperator op, const Ket<>& state);

/// Applies op to both plane basis vectors and to two random complex
/// combinations of them; returns the largest out-of-span residual.
double check_plane_invariance(const PlaneBasis& plane, PlaneOperator op, std::uint64_t seed = 0);

// 2x2 matrix of a real-linear map restricted to the plane, (x0_perp, x0) frame.
template <typename Op>
Eigen::Matrix2d restrict_to_plane(const PlaneBasis& plane, Op&& op) {
  Eigen::Matrix2d m;
  const PlaneCoords c0 = project(plane, op(plane.x0_perp));
  const PlaneCoords c1 = project(plane, op(plane.x0));
  m << c0.u, c1.u, c0.v, c1.v;
  return m;
}

// 2x2 matrix of I - 2|w><w| for a unit plane vector w given in plane coordinates.
Eigen::Matrix2d plane_reflection(const Eigen::Vector2d& normal);

/// Angle of Q restricted to the plane. Throws InvariantViolation unless the
/// restriction is a proper rotation (orthogonal, determinant +1, 1e-10).
double restricted_rotation_angle(const PlaneBasis& plane, int n, OracleBox& oracle);

// Max entrywise |-(I - 2 w w^T) - (I - 2 w_perp w_perp^T)| in plane coordinates.
double perp_negation_error(const PlaneBasis& plane, const Ket<>& psi, const Ket<>& psi_perp);

/// -I|psi> = I|psi_perp> on the plane, for psi = psi0 and psi = x0, and
/// <psi0_perp|x0> real.
bool check_perp_negation(const PlaneBasis& plane);

}  // namespace grover
