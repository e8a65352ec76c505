#pragma once

#include <cstdint>
#include <optional>

#include "grover/ket.hpp"
#include "grover/operators.hpp"

namespace grover {

class OracleReveal;

/// Black-box phase oracle I|x0> for a single hidden marked record.
///
/// The marked label cannot be read through the public interface; it can only
/// be probed by applying the oracle to a state or by asking whether a given
/// label is marked. Both count as one query. OracleReveal grants read access
/// for verification code.
class OracleBox {
 public:
  OracleBox(int n_qubits, BasisIndex target);

  static OracleBox with_random_target(int n_qubits, std::uint64_t seed);

  // Explicit target wins; otherwise the target is drawn from seed.
  static OracleBox create(int n_qubits, std::optional<BasisIndex> target,
                          std::optional<std::uint64_t> seed);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
  std::uint64_t query_count() const { return query_count_; }

  template <typename Real>
  Ket<Real> apply(const Ket<Real>& state, CostTally& tally) {
    if (state.n_qubits() != n_qubits_) {
      throw DomainError("oracle expects " + std::to_string(n_qubits_) + " qubits, got " +
                        std::to_string(state.n_qubits()));
    }
    ++query_count_;
    return phase_flip(state, target_, tally);
  }

  // Classical membership query f(x).
  bool is_marked(BasisIndex label);

 private:
  friend class OracleReveal;

  int n_qubits_;
  BasisIndex target_;
  std::uint64_t query_count_ = 0;
};

// Verification-only access to the hidden label.
class OracleReveal {
 public:
  static BasisIndex target(const OracleBox& box) { return box.target_; }
};

struct ClassicalSearchResult {
  bool found = false;
  std::uint64_t queries_used = 0;
};

/// Probes up to `probes` distinct labels in uniformly random order and stops
/// at the first hit.
ClassicalSearchResult classical_search(OracleBox& box, std::uint64_t probes, std::uint64_t seed);

}  // namespace grover
