#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcmprime/nth_prime.hpp"

namespace lcmprime {

/// One timed measurement of nth_prime(n, variant).
struct BenchRecord {
  Variant variant = Variant::memoized;
  Index n = 0;
  Index p_n = 0;
  Index k_lo = 0;
  Index k_hi = 0;
  std::uint64_t terms_evaluated = 0;
  double elapsed_seconds = 0.0;  // median over repetitions
  std::uint64_t repetitions = 1;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Raised when a benchmarked run returns the wrong prime.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(Variant variant, Index n, Index got, Index expected);

  Variant variant() const noexcept { return variant_; }
  Index n() const noexcept { return n_; }
  Index got() const noexcept { return got_; }
  Index expected() const noexcept { return expected_; }

 private:
  Variant variant_;
  Index n_;
  Index got_;
  Index expected_;
};

using Solver = std::function<NthPrimeResult(Index n, Variant variant, bool early_exit)>;

struct BenchOptions {
  unsigned repetitions = 3;
  bool early_exit = false;
  Solver solver;  // defaults to nth_prime
};

/// Oracle coverage for verifying every p_n with n <= n_max:
/// max(5000, bounds_basic(n_max).k_hi).
Index oracle_limit_for(Index n_max);

/// Times every (variant, n) pair sequentially, median of `repetitions` runs on
/// a steady clock. Each answer is checked against a sieve before it is
/// recorded; a wrong one throws VerificationError. Throws DomainError for an
/// out-of-domain pair or zero repetitions, checked before any run starts.
std::vector<BenchRecord> run_bench(std::span<const Variant> variants, std::span<const Index> ns,
                                   const BenchOptions& options = {});

double median(std::vector<double> samples);

enum class Predictor { n, n_log_n };

std::string_view to_string(Predictor p) noexcept;

/// Least-squares fit of log(elapsed) = log(a) + b log(x), x = predictor(n).
struct ComplexityFit {
  Predictor predictor = Predictor::n;
  double exponent_b = 0.0;
  double coefficient_a = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

/// Requires records of a single variant with >= 4 distinct n and positive
/// timings; anything else throws DomainError.
ComplexityFit fit_complexity(std::span<const BenchRecord> records, Predictor predictor);

/// `fit variant=memo predictor=n b=... a=... r2=... points=...`
std::string format_fit(Variant variant, const ComplexityFit& fit);

enum class TableFormat { markdown, csv };

inline constexpr std::string_view kCsvHeader =
    "variant,n,p_n,k_lo,k_hi,terms_evaluated,elapsed_seconds,repetitions";

/// Markdown: one row per n labelled `P<n>=<p_n>`, one column per variant in
/// order of first appearance, seconds to two decimals. CSV: kCsvHeader then one
/// line per record. Throws DomainError on an empty record list.
std::string emit_table(std::span<const BenchRecord> records, TableFormat format);

/// Inverse of the CSV emitter. Blank lines and lines starting with '#' are
/// skipped. Throws std::invalid_argument on malformed input.
std::vector<BenchRecord> parse_csv(std::string_view text);

}  // namespace lcmprime
