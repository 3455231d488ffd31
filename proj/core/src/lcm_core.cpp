#include "lcmprime/lcm_core.hpp"

#include <string>
#include <utility>

#include "lcmprime/errors.hpp"

namespace lcmprime {

namespace {

// a <- a / gcd(a, b) * b, division first to keep the intermediate small.
void lcm_in_place(BigInt& a, Index b) {
  const unsigned long g = mpz_gcd_ui(nullptr, a.get_mpz_t(), b);
  mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), g);
  mpz_mul_ui(a.get_mpz_t(), a.get_mpz_t(), b);
}

void require_char_domain(Index j, const char* what) {
  if (j < 2) {
    throw DomainError(std::string(what) + ": j must be >= 2, got " + std::to_string(j));
  }
}

}  // namespace

BigInt lcm_pair(const BigInt& a, Index b) {
  BigInt out = a;
  lcm_in_place(out, b);
  return out;
}

BigInt lcm_fresh(Index j) {
  if (j == 0) throw DomainError("lcm_fresh: j must be >= 1");
  BigInt acc = 1;
  for (Index i = 2; i <= j; ++i) lcm_in_place(acc, i);
  return acc;
}

LcmState::LcmState(Index j, BigInt value) : j_(j), value_(std::move(value)) {
  if (j_ == 0) throw DomainError("LcmState: index must be >= 1");
  if (value_ <= 0) throw DomainError("LcmState: value must be positive");
}

void LcmState::advance() {
  ++j_;
  lcm_in_place(value_, j_);
}

LcmState advance(LcmState state) {
  state.advance();
  return state;
}

BigInt ratio(const LcmState& after, const BigInt& before) {
  if (before <= 0 || mpz_divisible_p(after.value().get_mpz_t(), before.get_mpz_t()) == 0) {
    throw CorruptStateError("ratio: lcm(1.." + std::to_string(after.index()) +
                            ") is not a multiple of the previous lcm");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), after.value().get_mpz_t(), before.get_mpz_t());
  return q;
}

CharValue char_from_ratio(const BigInt& ratio, Index j) {
  if (j == 0) throw DomainError("char_from_ratio: j must be >= 1");
  if (ratio < 1 || mpz_fits_ulong_p(ratio.get_mpz_t()) == 0 || ratio.get_ui() > j) {
    throw CorruptStateError("char_from_ratio: ratio " + ratio.get_str() +
                            " is not in [1, j] for j = " + std::to_string(j));
  }
  return CharValue{static_cast<int>(ratio.get_ui() / j)};
}

CharProbe probe_char(Index j) {
  require_char_domain(j, "char_fn");
  LcmState state(j - 1, lcm_fresh(j - 1));
  const BigInt before = state.value();
  state.advance();
  BigInt r = ratio(state, before);
  const CharValue v = char_from_ratio(r, j);
  return CharProbe{v, std::move(r)};
}

CharValue char_fn(Index j) { return probe_char(j).value; }

int smarandache_p(Index j) {
  require_char_domain(j, "smarandache_p");
  return 1 - char_fn(j).value;
}

LcmTable::LcmTable() { values_.emplace_back(1); }

const BigInt& LcmTable::at(Index j) {
  if (j == 0) throw DomainError("LcmTable: j must be >= 1");
  while (frontier_.index() < j) {
    frontier_.advance();
    values_.push_back(frontier_.value());
  }
  return values_[j - 1];
}

BigInt LcmTable::ratio_at(Index j) {
  require_char_domain(j, "LcmTable::ratio_at");
  at(j);
  // Entries come from LcmState::advance, so the division is exact.
  BigInt q;
  mpz_divexact(q.get_mpz_t(), values_[j - 1].get_mpz_t(), values_[j - 2].get_mpz_t());
  return q;
}

CharValue LcmTable::char_at(Index j) { return char_from_ratio(ratio_at(j), j); }

}  // namespace lcmprime
