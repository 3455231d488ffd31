#pragma once

#include <cstdint>

#include "lcmprime/lcm_core.hpp"

namespace lcmprime {

/// π(k) = Σ_{j=2..k} floor(lcm(1..j) / (j * lcm(1..j-1))), folding the lcm
/// sequence from scratch inside the call. π(1) = 0. Throws DomainError for k = 0.
std::uint64_t pi_fresh(Index k);

/// Streaming prime counter over an LcmState. Starts at (k = 1, π = 0); each
/// step performs exactly one LCM update.
class PiAccumulator {
 public:
  PiAccumulator() = default;

  Index index() const noexcept { return lcm_.index(); }
  std::uint64_t count() const noexcept { return count_; }
  const LcmState& lcm() const noexcept { return lcm_; }

  /// Advances to k + 1 and returns the characteristic value added there.
  CharValue step();

  /// Steps until index() == k. No-op when already at or past k.
  void advance_to(Index k);

 private:
  LcmState lcm_;
  std::uint64_t count_ = 0;
};

[[nodiscard]] PiAccumulator pi_step(PiAccumulator acc);

}  // namespace lcmprime
