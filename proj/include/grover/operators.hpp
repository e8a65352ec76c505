#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "grover/errors.hpp"
#include "grover/ket.hpp"

namespace grover {

inline constexpr int kMaxDenseQubits = 12;
inline constexpr double kUnitaryTolerance = 1e-10;

/// Operation counters for the cost model: one Hadamard transform costs n
/// single-qubit operations, each phase flip costs one phase operation, and
/// each use of the marked-state oracle costs one query.
class CostTally {
 public:
  std::uint64_t single_qubit_ops() const { return single_qubit_ops_; }
  std::uint64_t oracle_queries() const { return oracle_queries_; }
  std::uint64_t phase_ops() const { return phase_ops_; }

  void add_single_qubit_ops(std::uint64_t count) { single_qubit_ops_ += count; }
  void add_oracle_queries(std::uint64_t count) { oracle_queries_ += count; }
  void add_phase_ops(std::uint64_t count) { phase_ops_ += count; }

  friend bool operator==(const CostTally&, const CostTally&) = default;

 private:
  std::uint64_t single_qubit_ops_ = 0;
  std::uint64_t oracle_queries_ = 0;
  std::uint64_t phase_ops_ = 0;
};

template <typename Real = double>
using DenseMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Explicit dim x dim unitary. Construction verifies U^dagger U = I.
template <typename Real = double>
class DenseUnitary {
 public:
  using Matrix = DenseMatrix<Real>;

  static DenseUnitary from_matrix(Matrix m, Real tol = Real(kUnitaryTolerance)) {
    if (m.rows() != m.cols()) {
      throw DomainError("unitary must be square");
    }
    const Real err = unitarity_error(m);
    if (!(err <= tol)) {
      throw InvariantViolation("matrix is not unitary: max |U^dagger U - I| = " +
                               std::to_string(err));
    }
    return DenseUnitary(std::move(m));
  }

  // Largest entrywise deviation of U^dagger U from the identity.
  static Real unitarity_error(const Matrix& m) {
    const Matrix gram = m.adjoint() * m;
    return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  }

  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  std::complex<Real> operator()(Eigen::Index row, Eigen::Index col) const {
    return matrix_(row, col);
  }

  Ket<Real> apply(const Ket<Real>& state) const {
    if (state.dim() != dim()) {
      throw DomainError("dimension mismatch applying dense unitary");
    }
    return Ket<Real>(matrix_ * state.amplitudes());
  }

  friend DenseUnitary operator*(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.dim() != b.dim()) {
      throw DomainError("dimension mismatch composing dense unitaries");
    }
    return DenseUnitary(a.matrix_ * b.matrix_);
  }

  DenseUnitary operator-() const { return DenseUnitary(-matrix_); }

 private:
  explicit DenseUnitary(Matrix m) : matrix_(std::move(m)) {}
  Matrix matrix_;
};

namespace detail {

// In-place Walsh-Hadamard butterflies followed by one 2^{-n/2} scaling.
template <typename Derived>
void fast_hadamard(Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Eigen::Index dim = v.size();
  for (Eigen::Index half = 1; half < dim; half <<= 1) {
    for (Eigen::Index block = 0; block < dim; block += 2 * half) {
      for (Eigen::Index i = block; i < block + half; ++i) {
        const Scalar a = v[i];
        const Scalar b = v[i + half];
        v[i] = a + b;
        v[i + half] = a - b;
      }
    }
  }
  v *= Real(1) / std::sqrt(static_cast<Real>(dim));
}

}  // namespace detail

/// H = (H2)^{(x) n} with the normalized H2 = (1/sqrt2)[[1,1],[1,-1]].
/// O(N log N) scalar work; charged as n single-qubit operations. H is its own
/// inverse, so this also serves wherever H^{-1} is needed.
template <typename Real>
Ket<Real> hadamard(Ket<Real> state, CostTally& tally) {
  const int n = state.n_qubits();
  auto v = std::move(state).amplitudes();
  detail::fast_hadamard(v);
  tally.add_single_qubit_ops(static_cast<std::uint64_t>(n));
  return Ket<Real>(std::move(v));
}

/// I - 2|psi><psi| as an explicit matrix: the reflection in the hyperplane
/// orthogonal to psi.
template <typename Real>
DenseUnitary<Real> inversion_about(const Ket<Real>& psi) {
  if (!psi.is_normalized()) {
    throw DomainError("inversion_about requires a normalized ket");
  }
  if (psi.n_qubits() > kMaxDenseQubits) {
    throw ResourceError("dense rendering limited to " + std::to_string(kMaxDenseQubits) +
                        " qubits");
  }
  const auto& a = psi.amplitudes();
  DenseMatrix<Real> m = DenseMatrix<Real>::Identity(a.size(), a.size());
  m.noalias() -= Real(2) * a * a.adjoint();
  return DenseUnitary<Real>::from_matrix(std::move(m));
}

// Matrix-free (I - 2|psi><psi|)|state>.
template <typename Real>
Ket<Real> reflect(const Ket<Real>& state, const Ket<Real>& psi) {
  const std::complex<Real> overlap = inner(psi, state);
  return Ket<Real>(state.amplitudes() - Real(2) * overlap * psi.amplitudes());
}

/// Matrix-free I|target>: negates one amplitude.
template <typename Real>
Ket<Real> phase_flip(Ket<Real> state, BasisIndex target, CostTally& tally) {
  check_index(target, static_cast<std::uint64_t>(state.dim()));
  auto v = std::move(state).amplitudes();
  v[static_cast<Eigen::Index>(target.value)] *= Real(-1);
  tally.add_oracle_queries(1);
  tally.add_phase_ops(1);
  return Ket<Real>(std::move(v));
}

/// Matrix-free I|0>.
template <typename Real>
Ket<Real> phase_flip_zero(Ket<Real> state, CostTally& tally) {
  auto v = std::move(state).amplitudes();
  v[0] *= Real(-1);
  tally.add_phase_ops(1);
  return Ket<Real>(std::move(v));
}

/// Anything that can apply the marked-state phase flip to a ket.
template <typename O, typename Real>
concept PhaseOracle = requires(O& oracle, const Ket<Real>& state, CostTally& tally) {
  { oracle.apply(state, tally) } -> std::convertible_to<Ket<Real>>;
};

/// Q = -H I|0> H I|x0>, computed as oracle flip, H, -I|0>, H.
///
/// The global sign is applied literally together with the I|0> flip (the
/// pair -I|0> is charged as a single phase operation), so one iterate costs
/// 2n single-qubit ops, one oracle query and two phase ops.
template <typename Real, typename Oracle>
  requires PhaseOracle<Oracle, Real>
Ket<Real> grover_iterate(const Ket<Real>& state, Oracle& oracle, CostTally& tally) {
  const int n = state.n_qubits();
  auto v = Ket<Real>(oracle.apply(state, tally)).amplitudes();
  if (v.size() != state.dim()) {
    throw DomainError("oracle returned a ket of the wrong dimension");
  }
  detail::fast_hadamard(v);
  // -I|0>: the zero amplitude keeps its sign, every other one flips.
  v.tail(v.size() - 1) *= Real(-1);
  detail::fast_hadamard(v);
  tally.add_single_qubit_ops(2 * static_cast<std::uint64_t>(n));
  tally.add_phase_ops(1);
  return Ket<Real>(std::move(v));
}

/// U_f |x>|y> = |x>|f(x) xor y> on n+1 qubits; y is the least significant
/// qubit. Swaps the (target,0) and (target,1) amplitudes.
template <typename Real>
Ket<Real> standard_oracle_uf(Ket<Real> state, BasisIndex target, CostTally& tally) {
  if (state.n_qubits() < 2) {
    throw DomainError("U_f needs at least one data qubit plus the output qubit");
  }
  check_index(target, static_cast<std::uint64_t>(state.dim()) / 2);
  auto v = std::move(state).amplitudes();
  const auto base = static_cast<Eigen::Index>(2 * target.value);
  std::swap(v[base], v[base + 1]);
  tally.add_oracle_queries(1);
  return Ket<Real>(std::move(v));
}

/// Builds the explicit matrix of a matrix-free operator by applying it to
/// each basis ket in turn.
template <typename Real = double, typename Op>
  requires std::invocable<Op&, const Ket<Real>&>
DenseUnitary<Real> render_dense(Op&& op, int n) {
  if (n > kMaxDenseQubits) {
    throw ResourceError("dense rendering limited to " + std::to_string(kMaxDenseQubits) +
                        " qubits, got " + std::to_string(n));
  }
  const auto dim = static_cast<Eigen::Index>(dimension_for(n));
  DenseMatrix<Real> m(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Ket<Real> out = op(basis_ket<Real>(n, BasisIndex(static_cast<std::uint64_t>(col))));
    if (out.dim() != dim) {
      throw DomainError("operator changed the ket dimension");
    }
    m.col(col) = out.amplitudes();
  }
  return DenseUnitary<Real>::from_matrix(std::move(m));
}

}  // namespace grover
