#include "lcmprime/oracle.hpp"

#include <stdexcept>
#include <string>

#include "lcmprime/errors.hpp"

namespace lcmprime::oracle {

SieveTable::SieveTable(Index limit) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve: limit must be >= 2, got " + std::to_string(limit));
  flags_.assign(limit + 1, 1);
  flags_[0] = flags_[1] = 0;
  for (Index p = 2; p * p <= limit; ++p) {
    if (!flags_[p]) continue;
    for (Index m = p * p; m <= limit; m += p) flags_[m] = 0;
  }
  pi_table_.resize(limit + 1);
  std::uint64_t running = 0;
  for (Index j = 0; j <= limit; ++j) {
    if (flags_[j]) {
      ++running;
      primes_.push_back(j);
    }
    pi_table_[j] = running;
  }
}

bool SieveTable::is_prime(Index j) const { return flags_.at(j) != 0; }

std::uint64_t SieveTable::pi(Index k) const { return pi_table_.at(k); }

Index SieveTable::nth_prime(Index n) const {
  if (n == 0 || n > primes_.size()) {
    throw std::out_of_range("sieve: p_" + std::to_string(n) + " exceeds limit " +
                            std::to_string(limit_));
  }
  return primes_[n - 1];
}

SieveTable sieve(Index limit) { return SieveTable(limit); }

bool is_prime(Index j) noexcept {
  if (j < 2) return false;
  for (Index d = 2; d <= j / d; ++d) {
    if (j % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power_decompose(Index j) {
  if (j < 2) throw DomainError("prime_power_decompose: j must be >= 2");
  Index p = j;
  for (Index d = 2; d <= j / d; ++d) {
    if (j % d == 0) {
      p = d;
      break;
    }
  }
  unsigned a = 0;
  while (j % p == 0) {
    j /= p;
    ++a;
  }
  if (j != 1) return std::nullopt;
  return PrimePower{p, a};
}

mpz_class ratio_law(Index j) {
  if (j < 2) throw DomainError("ratio_law: j must be >= 2");
  const auto pp = prime_power_decompose(j);
  return pp ? mpz_class(static_cast<unsigned long>(pp->prime)) : mpz_class(1);
}

}  // namespace lcmprime::oracle
