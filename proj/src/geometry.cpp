#include "grover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "grover/operators.hpp"
#include "grover/random.hpp"

namespace grover {

namespace {

constexpr double kRotationTolerance = 1e-10;
constexpr double kPlaneTolerance = 1e-12;

Ket<> unit(const Ket<>::Vector& v) { return Ket<>(v / v.norm()); }

}  // namespace

PlaneBasis make_plane(int n, BasisIndex target) {
  Ket<> psi0 = uniform_ket(n);
  Ket<> x0 = basis_ket(n, target);
  const std::complex<double> s = inner(x0, psi0);

  // Gram-Schmidt in each direction. Coordinates are taken in the
  // (x0_perp, x0) frame, so (psi0, x0) must come out positively oriented.
  Ket<> x0_perp = unit(psi0.amplitudes() - s * x0.amplitudes());
  PlaneBasis plane{n, target, psi0, x0, x0_perp, x0_perp};
  if (orientation(plane, plane.psi0, plane.x0) < 0.0) {
    plane.x0_perp = Ket<>(-plane.x0_perp.amplitudes());
  }
  Ket<> psi0_perp = unit(x0.amplitudes() - std::conj(s) * psi0.amplitudes());
  if (orientation(plane, plane.psi0, psi0_perp) < 0.0) {
    psi0_perp = Ket<>(-psi0_perp.amplitudes());
  }
  plane.psi0_perp = std::move(psi0_perp);
  return plane;
}

PlaneCoords project(const PlaneBasis& plane, const Ket<>& state) {
  PlaneCoords c;
  c.u = inner(plane.x0_perp, state).real();
  c.v = inner(plane.x0, state).real();
  c.residual =
      (state.amplitudes() - c.u * plane.x0_perp.amplitudes() - c.v * plane.x0.amplitudes()).norm();
  return c;
}

double span_residual(const PlaneBasis& plane, const Ket<>& state) {
  const std::complex<double> a = inner(plane.x0_perp, state);
  const std::complex<double> b = inner(plane.x0, state);
  return (state.amplitudes() - a * plane.x0_perp.amplitudes() - b * plane.x0.amplitudes()).norm();
}

double orientation(const PlaneBasis& plane, const Ket<>& a, const Ket<>& b) {
  const PlaneCoords ca = project(plane, a);
  const PlaneCoords cb = project(plane, b);
  return ca.u * cb.v - ca.v * cb.u;
}

Ket<> apply_plane_operator(const PlaneBasis& plane, PlaneOperator op, const Ket<>& state) {
  switch (op) {
    case PlaneOperator::kInvertPsi0:
      return reflect(state, plane.psi0);
    case PlaneOperator::kInvertX0:
      return reflect(state, plane.x0);
    case PlaneOperator::kGroverIterate: {
      OracleBox box(plane.n, plane.target);
      CostTally scratch;
      return grover_iterate(state, box, scratch);
    }
  }
  throw DomainError("unknown plane operator");
}

double check_plane_invariance(const PlaneBasis& plane, PlaneOperator op, std::uint64_t seed) {
  Rng rng(seed);
  auto draw = [&rng] { return std::complex<double>(rng.uniform01() - 0.5, rng.uniform01() - 0.5); };

  std::vector<Ket<>> probes{plane.psi0, plane.x0};
  for (int i = 0; i < 2; ++i) {
    const std::complex<double> a = draw();
    const std::complex<double> b = draw();
    probes.push_back(unit(a * plane.psi0.amplitudes() + b * plane.x0.amplitudes()));
  }
  double worst = 0.0;
  for (const Ket<>& p : probes) {
    worst = std::max(worst, span_residual(plane, apply_plane_operator(plane, op, p)));
  }
  return worst;
}

Eigen::Matrix2d plane_reflection(const Eigen::Vector2d& normal) {
  return Eigen::Matrix2d::Identity() - 2.0 * normal * normal.transpose();
}

double restricted_rotation_angle(const PlaneBasis& plane, int n, OracleBox& oracle) {
  if (oracle.n_qubits() != n || plane.n != n) {
    throw DomainError("plane, oracle and qubit count disagree");
  }
  CostTally scratch;
  const Eigen::Matrix2d m =
      restrict_to_plane(plane, [&](const Ket<>& s) { return grover_iterate(s, oracle, scratch); });
  const double orth = (m.transpose() * m - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
  const double det = m.determinant();
  if (!(orth <= kRotationTolerance) || !(std::abs(det - 1.0) <= kRotationTolerance)) {
    throw InvariantViolation("restricted Q is not a rotation: orthogonality error " +
                             std::to_string(orth) + ", determinant " + std::to_string(det));
  }
  return std::atan2(m(1, 0), m(0, 0));
}

double perp_negation_error(const PlaneBasis& plane, const Ket<>& psi, const Ket<>& psi_perp) {
  const PlaneCoords a = project(plane, psi);
  const PlaneCoords b = project(plane, psi_perp);
  const Eigen::Matrix2d lhs = -plane_reflection(Eigen::Vector2d(a.u, a.v));
  const Eigen::Matrix2d rhs = plane_reflection(Eigen::Vector2d(b.u, b.v));
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

bool check_perp_negation(const PlaneBasis& plane) {
  const bool psi0_ok = perp_negation_error(plane, plane.psi0, plane.psi0_perp) <= kPlaneTolerance;
  const bool x0_ok = perp_negation_error(plane, plane.x0, plane.x0_perp) <= kPlaneTolerance;
  const bool real_overlap = std::abs(inner(plane.psi0_perp, plane.x0).imag()) <= kPlaneTolerance;
  return psi0_ok && x0_ok && real_overlap;
}

}  // namespace grover
