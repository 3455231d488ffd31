#include "cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

#include <CLI11.hpp>

#include "lcmprime/errors.hpp"
#include "lcmprime/oracle.hpp"
#include "lcmprime/prime_count.hpp"

namespace lcmprime::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Variant> parse_variants(const std::vector<std::string>& tokens) {
  std::vector<Variant> out;
  for (const std::string& t : tokens) {
    const auto v = parse_variant(t);
    if (!v) throw UsageError("unknown variant '" + t + "' (expected naive, memo or rs)");
    if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
  }
  if (out.empty()) throw UsageError("no variants selected");
  return out;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::string first;

  void record(bool ok, const std::string& counterexample) {
    ++checked;
    if (ok) return;
    if (mismatches++ == 0) first = counterexample;
  }
};

void print_tally(std::ostream& out, const std::string& label, const Tally& t) {
  out << label << " checked=" << t.checked << " mismatches=" << t.mismatches << '\n';
}

}  // namespace

int cmd_prime(const PrimeConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n < min_index(config.variant)) {
    err << "error: variant " << to_string(config.variant) << " requires n >= "
        << min_index(config.variant) << '\n';
    return kUsage;
  }
  const NthPrimeResult r = nth_prime(config.n, config.variant, config.early_exit);
  if (config.timing) {
    out << r.n << ' ' << r.p_n << ' ' << seconds(r.elapsed_seconds) << '\n';
  } else {
    out << r.p_n << '\n';
  }
  return kOk;
}

int cmd_pi(Index k, std::ostream& out, std::ostream& err) {
  if (k == 0) {
    err << "error: pi requires k >= 1\n";
    return kUsage;
  }
  PiAccumulator acc;
  acc.advance_to(k);
  out << acc.count() << '\n';
  return kOk;
}

int cmd_char(Index j, std::ostream& out, std::ostream& err) {
  if (j < 2) {
    err << "error: char requires j >= 2\n";
    return kUsage;
  }
  const CharProbe probe = probe_char(j);
  out << probe.value.value << " (ratio=" << probe.ratio.get_str() << ")\n";
  return kOk;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err,
               const VerifyHooks& hooks) {
  if (config.max_n < 2) {
    err << "error: verify requires --max-n >= 2\n";
    return kUsage;
  }
  const Index limit = oracle_limit_for(config.max_n);
  const oracle::SieveTable truth(limit);
  out << "verify: oracle sieve limit " << limit << '\n';

  std::uint64_t total_mismatches = 0;
  std::string first_counterexample;
  const auto absorb = [&](const Tally& t) {
    if (t.mismatches > 0 && total_mismatches == 0) first_counterexample = t.first;
    total_mismatches += t.mismatches;
  };

  // One streaming pass covers both the characteristic function and π.
  Tally chars;
  Tally pis;
  PiAccumulator acc;
  pis.record(acc.count() == truth.pi(1), "pi k=1 got=" + std::to_string(acc.count()) +
                                             " expected=" + std::to_string(truth.pi(1)));
  while (acc.index() < limit) {
    CharValue v = acc.step();
    const Index j = acc.index();
    if (hooks.tamper_char) v = hooks.tamper_char(j, v);
    const int expected = truth.is_prime(j) ? 1 : 0;
    chars.record(v.value == expected, "char_fn j=" + std::to_string(j) +
                                          " got=" + std::to_string(v.value) +
                                          " expected=" + std::to_string(expected));
    pis.record(acc.count() == truth.pi(j), "pi k=" + std::to_string(j) +
                                               " got=" + std::to_string(acc.count()) +
                                               " expected=" + std::to_string(truth.pi(j)));
  }
  print_tally(out, "char_fn   j=2.." + std::to_string(limit), chars);
  print_tally(out, "pi        k=1.." + std::to_string(limit), pis);
  absorb(chars);
  absorb(pis);

  for (const Variant v : config.variants) {
    Index hi = config.max_n;
    if (v == Variant::naive) hi = std::min(hi, config.naive_cap);
    Tally t;
    for (Index n = min_index(v); n <= hi; ++n) {
      const Index got = nth_prime(n, v).p_n;
      const Index expected = truth.nth_prime(n);
      t.record(got == expected, "nth_prime variant=" + std::string(to_string(v)) +
                                    " n=" + std::to_string(n) + " got=" + std::to_string(got) +
                                    " expected=" + std::to_string(expected));
    }
    std::string label = "nth_prime " + std::string(to_string(v)) + " n=" +
                        std::to_string(min_index(v)) + ".." + std::to_string(hi);
    if (hi < config.max_n) label += " (capped, --naive-cap)";
    print_tally(out, label, t);
    absorb(t);
  }

  // RS window must bracket p_n - 1: k_lo <= p_n - 1 <= k_hi.
  Tally window;
  std::int64_t min_upper = std::numeric_limits<std::int64_t>::max();
  std::int64_t min_lower = std::numeric_limits<std::int64_t>::max();
  Index at_upper = 0;
  Index at_lower = 0;
  for (Index n = 2; n <= config.max_n; ++n) {
    const Bounds b = bounds_rs(n);
    const auto target = static_cast<std::int64_t>(truth.nth_prime(n)) - 1;
    const std::int64_t upper = static_cast<std::int64_t>(b.k_hi) - target;
    const std::int64_t lower = target - static_cast<std::int64_t>(b.k_lo);
    if (upper < min_upper) {
      min_upper = upper;
      at_upper = n;
    }
    if (lower < min_lower) {
      min_lower = lower;
      at_lower = n;
    }
    window.record(upper >= 0 && lower >= 0,
                  "rs_bounds n=" + std::to_string(n) + " k_lo=" + std::to_string(b.k_lo) +
                      " k_hi=" + std::to_string(b.k_hi) + " p_n-1=" + std::to_string(target));
  }
  out << "rs_bounds n=2.." << config.max_n << " min_upper_slack=" << min_upper << " (n="
      << at_upper << ") min_lower_slack=" << min_lower << " (n=" << at_lower
      << ") checked=" << window.checked << " mismatches=" << window.mismatches << '\n';
  absorb(window);

  if (total_mismatches > 0) {
    out << "first counterexample: " << first_counterexample << '\n';
    out << "summary: FAIL " << total_mismatches << " mismatches\n";
    return kMismatch;
  }
  out << "summary: PASS 0 mismatches\n";
  return kOk;
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err) {
  if (config.repetitions == 0) {
    err << "error: --reps must be >= 1\n";
    return kUsage;
  }
  std::vector<Index> ns;
  for (const Index n : config.ns) {
    if (n == 0) {
      err << "error: n must be >= 1\n";
      return kUsage;
    }
    if (std::find(ns.begin(), ns.end(), n) == ns.end()) ns.push_back(n);
  }

  // Validate every (variant, n) pair and the fit precondition before timing.
  std::vector<std::pair<Variant, std::vector<Index>>> plan;
  for (const Variant v : config.variants) {
    std::vector<Index> grid;
    for (const Index n : ns) {
      if (v == Variant::naive && n > config.naive_cap) continue;
      if (n < min_index(v)) {
        err << "error: variant " << to_string(v) << " requires n >= " << min_index(v) << '\n';
        return kUsage;
      }
      grid.push_back(n);
    }
    if (grid.empty()) continue;
    if (config.fit && grid.size() < 4) {
      err << "error: --fit needs at least 4 distinct n per variant; " << to_string(v) << " has "
          << grid.size() << '\n';
      return kUsage;
    }
    plan.emplace_back(v, std::move(grid));
  }
  if (plan.empty()) {
    err << "error: nothing to run (check --ns, --variants and --naive-cap)\n";
    return kUsage;
  }

  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "error: cannot open " << config.out << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& sink = config.out.empty() ? out : file;

  std::vector<BenchRecord> records;
  BenchOptions options;
  options.repetitions = config.repetitions;
  options.early_exit = config.early_exit;
  try {
    for (const auto& [v, grid] : plan) {
      const Variant one[] = {v};
      auto part = run_bench(one, grid, options);
      records.insert(records.end(), part.begin(), part.end());
    }
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }

  sink << emit_table(records, config.format);
  if (config.fit) {
    const char* prefix = config.format == TableFormat::csv ? "# " : "";
    if (config.format == TableFormat::markdown) sink << '\n';
    for (const auto& [v, grid] : plan) {
      std::vector<BenchRecord> mine;
      std::copy_if(records.begin(), records.end(), std::back_inserter(mine),
                   [v = v](const BenchRecord& r) { return r.variant == v; });
      for (const Predictor p : {Predictor::n, Predictor::n_log_n}) {
        try {
          sink << prefix << format_fit(v, fit_complexity(mine, p)) << '\n';
        } catch (const DomainError& e) {
          err << "error: " << e.what() << '\n';
          return kUsage;
        }
      }
    }
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primes from the lcm(1..j) characteristic function", "lcmprime"};
  app.require_subcommand(1);

  PrimeConfig prime_cfg;
  std::string prime_variant = "memo";
  auto* prime = app.add_subcommand("prime", "Compute the n-th prime");
  prime->add_option("n", prime_cfg.n, "Index n")->required();
  prime->add_option("--variant", prime_variant, "naive | memo | rs")->capture_default_str();
  prime->add_flag("--early-exit", prime_cfg.early_exit, "Stop at the first zero term");
  prime->add_flag("--timing", prime_cfg.timing, "Print `n p_n elapsed_seconds`");

  Index pi_k = 0;
  auto* pi = app.add_subcommand("pi", "Count primes <= k via the characteristic function");
  pi->add_option("k", pi_k, "Upper limit k")->required();

  Index char_j = 0;
  auto* chr = app.add_subcommand("char", "Evaluate the characteristic function at j");
  chr->add_option("j", char_j, "Index j")->required();

  VerifyConfig verify_cfg;
  std::vector<std::string> verify_variants{"naive", "memo", "rs"};
  auto* verify = app.add_subcommand("verify", "Check every formula against the sieve oracle");
  verify->add_option("--max-n", verify_cfg.max_n, "Largest n to check")->required();
  verify->add_option("--variants", verify_variants, "Comma-separated variants")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--naive-cap", verify_cfg.naive_cap, "Largest n for the naive variant")
      ->capture_default_str();

  BenchConfig bench_cfg;
  std::vector<std::string> bench_variants{"naive", "memo", "rs"};
  std::string bench_format = "md";
  auto* bench = app.add_subcommand("bench", "Time the variants and print a comparison table");
  bench->add_option("--ns", bench_cfg.ns, "Comma-separated n values")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--variants", bench_variants, "Comma-separated variants")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--reps", bench_cfg.repetitions, "Repetitions per point (median)")
      ->capture_default_str();
  bench->add_option("--format", bench_format, "md | csv")->capture_default_str();
  bench->add_flag("--fit", bench_cfg.fit, "Append power-law fits per variant");
  bench->add_flag("--early-exit", bench_cfg.early_exit, "Stop sums at the first zero term");
  bench->add_option("--naive-cap", bench_cfg.naive_cap, "Largest n for the naive variant")
      ->capture_default_str();
  bench->add_option("--out", bench_cfg.out, "Write the table to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (prime->parsed()) {
      const auto v = parse_variant(prime_variant);
      if (!v) throw UsageError("unknown variant '" + prime_variant + "'");
      prime_cfg.variant = *v;
      return cmd_prime(prime_cfg, out, err);
    }
    if (pi->parsed()) return cmd_pi(pi_k, out, err);
    if (chr->parsed()) return cmd_char(char_j, out, err);
    if (verify->parsed()) {
      verify_cfg.variants = parse_variants(verify_variants);
      return cmd_verify(verify_cfg, out, err);
    }
    if (bench->parsed()) {
      bench_cfg.variants = parse_variants(bench_variants);
      if (bench_format == "md" || bench_format == "markdown") {
        bench_cfg.format = TableFormat::markdown;
      } else if (bench_format == "csv") {
        bench_cfg.format = TableFormat::csv;
      } else {
        throw UsageError("unknown format '" + bench_format + "' (expected md or csv)");
      }
      return cmd_bench(bench_cfg, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lcmprime::cli
