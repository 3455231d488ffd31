#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace lcmprime {

using BigInt = mpz_class;
using Index = std::uint64_t;

/// Value of the prime characteristic function: 1 at primes, 0 at composites.
struct CharValue {
  int value = 0;

  constexpr bool is_prime() const noexcept { return value == 1; }
  friend constexpr bool operator==(CharValue, CharValue) = default;
};

/// lcm(a, b) computed as a / gcd(a, b) * b.
BigInt lcm_pair(const BigInt& a, Index b);

/// lcm(1, 2, ..., j) folded from scratch. Throws DomainError for j = 0.
BigInt lcm_fresh(Index j);

/// Running pair (j, lcm(1..j)) for the recurrence L(j) = lcm(L(j-1), j).
///
/// Single owner, movable, not safe for concurrent mutation. The default state
/// is (1, 1).
class LcmState {
 public:
  LcmState() = default;

  /// Adopts an externally computed pair without checking it against
  /// lcm(1..j); a wrong value surfaces later as CorruptStateError from ratio().
  LcmState(Index j, BigInt value);

  Index index() const noexcept { return j_; }
  const BigInt& value() const noexcept { return value_; }

  /// (j, L) -> (j + 1, lcm(L, j + 1)). One LCM update.
  void advance();

 private:
  Index j_ = 1;
  BigInt value_ = 1;
};

[[nodiscard]] LcmState advance(LcmState state);

/// Exact quotient after.value() / before, i.e. lcm(1..j) / lcm(1..j-1).
/// Throws CorruptStateError if the division is not exact.
BigInt ratio(const LcmState& after, const BigInt& before);

/// Quotient[ratio, j]. Throws CorruptStateError if the quotient is not 0 or 1,
/// which cannot happen for a genuine lcm ratio.
CharValue char_from_ratio(const BigInt& ratio, Index j);

/// Characteristic value together with the lcm ratio it was derived from.
struct CharProbe {
  CharValue value;
  BigInt ratio;
};

/// Fresh evaluation of the characteristic function at j, with its ratio.
/// Throws DomainError for j < 2.
CharProbe probe_char(Index j);

/// floor(lcm(1..j) / (j * lcm(1..j-1))), freshly computed. Throws DomainError
/// for j < 2.
CharValue char_fn(Index j);

/// Smarandache prime function: 0 at primes, 1 otherwise (j >= 2).
int smarandache_p(Index j);

/// Memo table of lcm(1..j), grown on demand through LcmState::advance.
///
/// Only L is memoized; ratio_at() and char_at() recompute the quotient on
/// every call, matching `L[n_]:=L[n]=LCM[L[n-1],n]` with unmemoized LG/FL.
class LcmTable {
 public:
  LcmTable();

  /// lcm(1..j), extending the table if needed. Throws DomainError for j = 0.
  const BigInt& at(Index j);

  BigInt ratio_at(Index j);
  CharValue char_at(Index j);

  /// Largest j present in the table.
  Index extent() const noexcept { return frontier_.index(); }

 private:
  LcmState frontier_;
  std::vector<BigInt> values_;  // values_[j - 1] == lcm(1..j)
};

}  // namespace lcmprime
