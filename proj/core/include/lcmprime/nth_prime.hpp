#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "lcmprime/lcm_core.hpp"

namespace lcmprime {

/// The three evaluation strategies for p_n.
///
///   naive     basic bounds; every π(k) recomputed by pi_fresh (column "Lcm")
///   memoized  basic bounds; lcm(1..j) memoized, π(k) re-summed from the memo
///             for each k (column "Lcm mod")
///   rs        Rosser–Schoenfeld window over the same memo (column
///             "RS acceleration"); defined for n >= 2
enum class Variant { naive, memoized, rs };

inline constexpr Variant kAllVariants[] = {Variant::naive, Variant::memoized, Variant::rs};

/// CLI/CSV token: "naive", "memo", "rs".
std::string_view to_string(Variant v) noexcept;
/// Column title used in rendered tables.
std::string_view display_name(Variant v) noexcept;
/// Accepts the tokens above plus "memoized".
std::optional<Variant> parse_variant(std::string_view token) noexcept;
/// Smallest n the variant accepts.
Index min_index(Variant v) noexcept;

/// Summation window: p_n = base + Σ_{k=k_lo..k_hi} (1 - floor(π(k) / n)).
struct Bounds {
  Index k_lo = 1;
  Index k_hi = 0;
  Index base = 1;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// base = 1, k_lo = 1, k_hi = floor(2 n ln n + 2). n >= 1.
Bounds bounds_basic(Index n);

/// C_n = n ln n + n (ln ln n - 1/2). n >= 2; negative for small n.
double rs_c(Index n);

/// base = k_lo = floor(n ln n), k_hi = floor(C_n + 3). n >= 2.
Bounds bounds_rs(Index n);

Bounds bounds_for(Variant v, Index n);

struct NthPrimeResult {
  Index n = 0;
  Index p_n = 0;
  Variant variant = Variant::memoized;
  Bounds bounds;
  std::uint64_t terms_evaluated = 0;
  double elapsed_seconds = 0.0;
};

/// Evaluates the n-th prime formula for the chosen variant.
///
/// With early_exit the sum stops at the first zero term; π is nondecreasing so
/// every later term is zero as well and p_n is unchanged. Throws DomainError
/// for n below min_index(variant) and InternalError if the RS window is empty.
NthPrimeResult nth_prime(Index n, Variant variant = Variant::memoized, bool early_exit = false);

}  // namespace lcmprime
