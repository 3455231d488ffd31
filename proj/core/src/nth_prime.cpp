#include "lcmprime/nth_prime.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "lcmprime/errors.hpp"
#include "lcmprime/prime_count.hpp"

namespace lcmprime {

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::naive: return "naive";
    case Variant::memoized: return "memo";
    case Variant::rs: return "rs";
  }
  return "?";
}

std::string_view display_name(Variant v) noexcept {
  switch (v) {
    case Variant::naive: return "Lcm";
    case Variant::memoized: return "Lcm mod";
    case Variant::rs: return "RS acceleration";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view token) noexcept {
  if (token == "naive") return Variant::naive;
  if (token == "memo" || token == "memoized") return Variant::memoized;
  if (token == "rs") return Variant::rs;
  return std::nullopt;
}

Index min_index(Variant v) noexcept { return v == Variant::rs ? 2 : 1; }

Bounds bounds_basic(Index n) {
  if (n == 0) throw DomainError("bounds_basic: n must be >= 1");
  const double x = static_cast<double>(n);
  return Bounds{1, static_cast<Index>(std::floor(2.0 * x * std::log(x) + 2.0)), 1};
}

double rs_c(Index n) {
  if (n < 2) throw DomainError("rs_c: n must be >= 2, got " + std::to_string(n));
  const double x = static_cast<double>(n);
  const double ln = std::log(x);
  return x * ln + x * (std::log(ln) - 0.5);
}

Bounds bounds_rs(Index n) {
  const double c = rs_c(n);
  const double x = static_cast<double>(n);
  const auto lo = static_cast<Index>(std::floor(x * std::log(x)));
  const double hi = std::floor(c + 3.0);
  // C_n + 3 > 0 for every n >= 2 (minimum is about 2.65 at n = 2).
  return Bounds{lo, hi < 0.0 ? 0 : static_cast<Index>(hi), lo};
}

Bounds bounds_for(Variant v, Index n) {
  return v == Variant::rs ? bounds_rs(n) : bounds_basic(n);
}

namespace {

// base + Σ (1 - floor(π(k)/n)) over the window, with π supplied per k.
template <class PiOf>
void sum_terms(NthPrimeResult& r, bool early_exit, PiOf&& pi_of) {
  std::int64_t total = static_cast<std::int64_t>(r.bounds.base);
  for (Index k = r.bounds.k_lo; k <= r.bounds.k_hi; ++k) {
    const std::int64_t term = 1 - static_cast<std::int64_t>(pi_of(k) / r.n);
    ++r.terms_evaluated;
    total += term;
    if (early_exit && term == 0) break;
  }
  if (total < 2) throw InternalError("nth_prime: formula produced " + std::to_string(total));
  r.p_n = static_cast<Index>(total);
}

}  // namespace

NthPrimeResult nth_prime(Index n, Variant variant, bool early_exit) {
  if (n < min_index(variant)) {
    throw DomainError("nth_prime: variant " + std::string(to_string(variant)) +
                      " requires n >= " + std::to_string(min_index(variant)) + ", got " +
                      std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();

  NthPrimeResult r;
  r.n = n;
  r.variant = variant;
  r.bounds = bounds_for(variant, n);
  if (variant == Variant::rs && r.bounds.k_hi < r.bounds.k_lo) {
    throw InternalError("nth_prime: empty RS window for n = " + std::to_string(n));
  }

  if (variant == Variant::naive) {
    sum_terms(r, early_exit, [](Index k) { return pi_fresh(k); });
  } else {
    LcmTable table;
    sum_terms(r, early_exit, [&table](Index k) {
      std::uint64_t pi = 0;
      for (Index j = 2; j <= k; ++j) pi += static_cast<std::uint64_t>(table.char_at(j).value);
      return pi;
    });
  }

  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace lcmprime
