#include "grover/oracle.hpp"

#include <string>
#include <unordered_map>

#include "grover/random.hpp"

namespace grover {

OracleBox::OracleBox(int n_qubits, BasisIndex target) : n_qubits_(n_qubits), target_(target) {
  check_index(target, dimension_for(n_qubits));
}

OracleBox OracleBox::with_random_target(int n_qubits, std::uint64_t seed) {
  Rng rng(seed);
  return OracleBox(n_qubits, BasisIndex(rng.below(dimension_for(n_qubits))));
}

OracleBox OracleBox::create(int n_qubits, std::optional<BasisIndex> target,
                            std::optional<std::uint64_t> seed) {
  if (target) {
    return OracleBox(n_qubits, *target);
  }
  if (seed) {
    return with_random_target(n_qubits, *seed);
  }
  throw DomainError("oracle needs either an explicit target or a seed");
}

bool OracleBox::is_marked(BasisIndex label) {
  check_index(label, dim());
  ++query_count_;
  return label == target_;
}

ClassicalSearchResult classical_search(OracleBox& box, std::uint64_t probes, std::uint64_t seed) {
  const std::uint64_t dim = box.dim();
  if (probes > dim) {
    throw DomainError("cannot probe " + std::to_string(probes) + " distinct records out of " +
                      std::to_string(dim));
  }
  // Lazy Fisher-Yates: only displaced slots are stored.
  Rng rng(seed);
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  auto slot = [&](std::uint64_t i) {
    const auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  ClassicalSearchResult result;
  for (std::uint64_t i = 0; i < probes; ++i) {
    const std::uint64_t j = i + rng.below(dim - i);
    const std::uint64_t pick = slot(j);
    displaced[j] = slot(i);
    ++result.queries_used;
    if (box.is_marked(BasisIndex(pick))) {
      result.found = true;
      break;
    }
  }
  return result;
}

}  // namespace grover
