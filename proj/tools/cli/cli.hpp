#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lcmprime/bench.hpp"
#include "lcmprime/lcm_core.hpp"
#include "lcmprime/nth_prime.hpp"

namespace lcmprime::cli {

// Exit codes are a scripting contract.
enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2 };

struct PrimeConfig {
  Index n = 0;
  Variant variant = Variant::memoized;
  bool early_exit = false;
  bool timing = false;
};

struct VerifyConfig {
  Index max_n = 0;
  std::vector<Variant> variants{std::begin(kAllVariants), std::end(kAllVariants)};
  Index naive_cap = 100;
};

struct BenchConfig {
  std::vector<Index> ns{10, 20, 30, 40, 50, 100, 200};
  std::vector<Variant> variants{std::begin(kAllVariants), std::end(kAllVariants)};
  unsigned repetitions = 3;
  TableFormat format = TableFormat::markdown;
  bool fit = false;
  bool early_exit = false;
  Index naive_cap = 50;
  std::string out;  // empty: stdout
};

struct VerifyHooks {
  // Receives (j, streamed value) and returns the value verify should check.
  // Used for fault injection.
  std::function<CharValue(Index, CharValue)> tamper_char;
};

int cmd_prime(const PrimeConfig& config, std::ostream& out, std::ostream& err);
int cmd_pi(Index k, std::ostream& out, std::ostream& err);
int cmd_char(Index j, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err,
               const VerifyHooks& hooks = {});
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcmprime::cli
