#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "grover/errors.hpp"

namespace grover {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr int kMaxQubits = 30;

// Label of a computational basis state. Qubit 0 is the most significant bit.
struct BasisIndex {
  std::uint64_t value = 0;

  constexpr BasisIndex() = default;
  constexpr explicit BasisIndex(std::uint64_t v) : value(v) {}

  friend constexpr auto operator<=>(BasisIndex, BasisIndex) = default;
};

inline std::uint64_t dimension_for(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DomainError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n_qubits));
  }
  return std::uint64_t{1} << n_qubits;
}

inline void check_index(BasisIndex index, std::uint64_t dim) {
  if (index.value >= dim) {
    throw DomainError("basis index " + std::to_string(index.value) +
                      " out of range for dimension " + std::to_string(dim));
  }
}

/// Dense state vector over the 2^n computational basis.
///
/// A Ket is immutable once built; operations return new kets. The rvalue
/// overload of amplitudes() lets pipelines reuse the storage.
template <typename Real = double>
class Ket {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit Ket(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    const auto dim = static_cast<std::uint64_t>(amplitudes_.size());
    if (dim < 2 || (dim & (dim - 1)) != 0) {
      throw DomainError("ket length must be a power of two >= 2, got " +
                        std::to_string(dim));
    }
    n_qubits_ = std::countr_zero(dim);
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  const Vector& amplitudes() const& { return amplitudes_; }
  Vector amplitudes() && { return std::move(amplitudes_); }

  Scalar operator[](Eigen::Index i) const { return amplitudes_[i]; }
  Scalar at(BasisIndex i) const {
    check_index(i, static_cast<std::uint64_t>(dim()));
    return amplitudes_[static_cast<Eigen::Index>(i.value)];
  }

  Real squared_norm() const { return amplitudes_.squaredNorm(); }

  bool is_normalized(Real tol = Real(kNormTolerance)) const {
    return std::abs(squared_norm() - Real(1)) <= tol;
  }

 private:
  Vector amplitudes_;
  int n_qubits_ = 0;
};

template <typename Real = double>
Ket<Real> basis_ket(int n, BasisIndex index) {
  const auto dim = dimension_for(n);
  check_index(index, dim);
  typename Ket<Real>::Vector v = Ket<Real>::Vector::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(index.value)] = Real(1);
  return Ket<Real>(std::move(v));
}

// Equal superposition (1/sqrt N) sum_k |k>, i.e. H|0>.
template <typename Real = double>
Ket<Real> uniform_ket(int n) {
  const auto dim = static_cast<Eigen::Index>(dimension_for(n));
  const Real amp = Real(1) / std::sqrt(static_cast<Real>(dim));
  return Ket<Real>(Ket<Real>::Vector::Constant(dim, amp));
}

template <typename Real>
void check_same_dim(const Ket<Real>& a, const Ket<Real>& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  }
}

// <a|b>, conjugate-linear in the first argument.
template <typename Real>
std::complex<Real> inner(const Ket<Real>& a, const Ket<Real>& b) {
  check_same_dim(a, b);
  return a.amplitudes().dot(b.amplitudes());
}

template <typename Real>
Real norm(const Ket<Real>& a) {
  return a.amplitudes().norm();
}

// Kronecker product; a supplies the high-order bits of the joint index.
template <typename Real>
Ket<Real> tensor(const Ket<Real>& a, const Ket<Real>& b) {
  if (a.n_qubits() + b.n_qubits() > kMaxQubits) {
    throw DomainError("tensor product exceeds the supported qubit count");
  }
  const Eigen::Index nb = b.dim();
  typename Ket<Real>::Vector out(a.dim() * nb);
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    out.segment(i * nb, nb) = a[i] * b.amplitudes();
  }
  return Ket<Real>(std::move(out));
}

}  // namespace grover
