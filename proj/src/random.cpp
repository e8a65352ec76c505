#include "grover/random.hpp"

#include <limits>

#include "grover/errors.hpp"

namespace grover {

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw DomainError("Rng::below requires a positive bound");
  }
  // Rejection sampling: discard the incomplete top block.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) {
    draw = engine_();
  }
  return draw % bound;
}

}  // namespace grover
