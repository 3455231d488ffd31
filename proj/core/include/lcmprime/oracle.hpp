#pragma once

// Ground truth for verification. Nothing here may depend on lcm_core: the
// checks are only meaningful if the two sides share no code.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace lcmprime::oracle {

using Index = std::uint64_t;

/// Eratosthenes sieve over [0, limit], with cumulative counts and the primes.
/// Immutable after construction.
class SieveTable {
 public:
  /// Throws DomainError for limit < 2.
  explicit SieveTable(Index limit);

  Index limit() const noexcept { return limit_; }

  /// Throws std::out_of_range for j > limit.
  bool is_prime(Index j) const;
  /// Number of primes <= k. Throws std::out_of_range for k > limit.
  std::uint64_t pi(Index k) const;
  /// The n-th prime (n >= 1). Throws std::out_of_range when p_n > limit.
  Index nth_prime(Index n) const;

  std::span<const std::uint8_t> flags() const noexcept { return flags_; }
  std::span<const std::uint64_t> pi_table() const noexcept { return pi_table_; }
  std::span<const Index> primes() const noexcept { return primes_; }

 private:
  Index limit_;
  std::vector<std::uint8_t> flags_;
  std::vector<std::uint64_t> pi_table_;
  std::vector<Index> primes_;
};

SieveTable sieve(Index limit);

/// Trial division up to floor(sqrt(j)).
bool is_prime(Index j) noexcept;

struct PrimePower {
  Index prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, a) with j = p^a, or nullopt if j has two distinct prime factors.
/// Throws DomainError for j < 2.
std::optional<PrimePower> prime_power_decompose(Index j);

/// Predicted lcm(1..j) / lcm(1..j-1) without computing an lcm: p when
/// j = p^a, otherwise 1. Throws DomainError for j < 2.
mpz_class ratio_law(Index j);

}  // namespace lcmprime::oracle
