#include "lcmprime/prime_count.hpp"

#include <utility>

#include "lcmprime/errors.hpp"

namespace lcmprime {

std::uint64_t pi_fresh(Index k) {
  if (k == 0) throw DomainError("pi_fresh: k must be >= 1");
  std::uint64_t count = 0;
  BigInt previous = 1;
  BigInt denominator;
  BigInt term;
  for (Index j = 2; j <= k; ++j) {
    BigInt current = lcm_pair(previous, j);
    mpz_mul_ui(denominator.get_mpz_t(), previous.get_mpz_t(), j);
    mpz_fdiv_q(term.get_mpz_t(), current.get_mpz_t(), denominator.get_mpz_t());
    count += term.get_ui();
    previous = std::move(current);
  }
  return count;
}

CharValue PiAccumulator::step() {
  const BigInt before = lcm_.value();
  lcm_.advance();
  const CharValue v = char_from_ratio(ratio(lcm_, before), lcm_.index());
  count_ += static_cast<std::uint64_t>(v.value);
  return v;
}

void PiAccumulator::advance_to(Index k) {
  while (index() < k) step();
}

PiAccumulator pi_step(PiAccumulator acc) {
  acc.step();
  return acc;
}

}  // namespace lcmprime
