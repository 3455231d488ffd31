#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lcmprime/bench.hpp"
#include "lcmprime/errors.hpp"

namespace lcmprime {
namespace {

TEST(Median, OddAndEven) {
  EXPECT_DOUBLE_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(median({4.0, 1.0, 3.0, 2.0}), 2.5);
  EXPECT_DOUBLE_EQ(median({7.0}), 7.0);
  EXPECT_THROW(median({}), DomainError);
}

TEST(OracleLimit, CoversSummationRange) {
  EXPECT_EQ(oracle_limit_for(10), 5000u);
  EXPECT_EQ(oracle_limit_for(300), 5000u);
  EXPECT_EQ(oracle_limit_for(1000), bounds_basic(1000).k_hi);
}

TEST(RunBench, MemoizedP10) {
  const Variant v[] = {Variant::memoized};
  const Index ns[] = {10};
  const auto records = run_bench(v, ns, {.repetitions = 3});
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].p_n, 29u);
  EXPECT_EQ(records[0].repetitions, 3u);
  EXPECT_EQ(records[0].k_lo, 1u);
  EXPECT_EQ(records[0].k_hi, 48u);
  EXPECT_EQ(records[0].terms_evaluated, 48u);
  EXPECT_GE(records[0].elapsed_seconds, 0.0);
}

TEST(RunBench, RsP100) {
  const Variant v[] = {Variant::rs};
  const Index ns[] = {100};
  const auto records = run_bench(v, ns, {.repetitions = 3});
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].p_n, 541u);
  EXPECT_EQ(records[0].k_lo, 460u);
  EXPECT_EQ(records[0].k_hi, 566u);
}

TEST(RunBench, NaiveSlowerThanMemoized) {
  const Variant v[] = {Variant::naive, Variant::memoized};
  const Index ns[] = {50};
  const auto records = run_bench(v, ns, {.repetitions = 1});
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].variant, Variant::naive);
  EXPECT_EQ(records[0].p_n, 229u);
  EXPECT_EQ(records[1].p_n, 229u);
  EXPECT_GT(records[0].elapsed_seconds, records[1].elapsed_seconds);
}

TEST(RunBench, WrongAnswerAbortsWithDetails) {
  BenchOptions options;
  options.repetitions = 2;
  options.solver = [](Index n, Variant v, bool early) {
    NthPrimeResult r = nth_prime(n, v, early);
    if (n == 20) r.p_n += 2;
    return r;
  };
  const Variant v[] = {Variant::rs};
  const Index ns[] = {10, 20, 30};
  try {
    run_bench(v, ns, options);
    FAIL() << "expected VerificationError";
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.variant(), Variant::rs);
    EXPECT_EQ(e.n(), 20u);
    EXPECT_EQ(e.got(), 73u);
    EXPECT_EQ(e.expected(), 71u);
    EXPECT_NE(std::string(e.what()).find("n=20"), std::string::npos);
  }
}

TEST(RunBench, RejectsBadInputBeforeRunning) {
  int calls = 0;
  BenchOptions options;
  options.solver = [&calls](Index n, Variant v, bool e) {
    ++calls;
    return nth_prime(n, v, e);
  };
  const Variant rs[] = {Variant::rs};
  const Index ns[] = {5, 1};
  EXPECT_THROW(run_bench(rs, ns, options), DomainError);
  options.repetitions = 0;
  const Index ok[] = {5};
  EXPECT_THROW(run_bench(rs, ok, options), DomainError);
  EXPECT_EQ(calls, 0);
}

std::vector<BenchRecord> planted(Variant v, std::initializer_list<Index> ns, double a, double b,
                                 Predictor predictor) {
  std::vector<BenchRecord> out;
  for (const Index n : ns) {
    const double x = predictor == Predictor::n ? static_cast<double>(n)
                                               : static_cast<double>(n) * std::log(double(n));
    BenchRecord r;
    r.variant = v;
    r.n = n;
    r.elapsed_seconds = a * std::pow(x, b);
    out.push_back(r);
  }
  return out;
}

TEST(FitComplexity, RecoversCubicLaw) {
  const auto records = planted(Variant::memoized, {10, 20, 40, 80}, 2.0, 3.0, Predictor::n);
  const ComplexityFit fit = fit_complexity(records, Predictor::n);
  EXPECT_NEAR(fit.exponent_b, 3.0, 0.01);
  EXPECT_NEAR(fit.coefficient_a, 2.0, 1e-6);
  EXPECT_GT(fit.r_squared, 0.999);
  EXPECT_EQ(fit.points_used, 4u);
}

TEST(FitComplexity, RecoversNLogNLaw) {
  const auto records =
      planted(Variant::rs, {10, 20, 40, 80, 160}, 5.0, 1.5, Predictor::n_log_n);
  const ComplexityFit fit = fit_complexity(records, Predictor::n_log_n);
  EXPECT_NEAR(fit.exponent_b, 1.5, 0.01);
  EXPECT_NEAR(fit.coefficient_a, 5.0, 1e-6);
  EXPECT_GT(fit.r_squared, 0.999);
}

TEST(FitComplexity, NoisyDataLowersRSquared) {
  auto records = planted(Variant::memoized, {10, 20, 40, 80, 160, 320}, 1.0, 2.0, Predictor::n);
  std::mt19937_64 rng(7);
  std::lognormal_distribution<double> noise(0.0, 0.8);
  for (auto& r : records) r.elapsed_seconds *= noise(rng);
  const ComplexityFit fit = fit_complexity(records, Predictor::n);
  EXPECT_GE(fit.r_squared, 0.0);
  EXPECT_LT(fit.r_squared, 1.0);
}

TEST(FitComplexity, Preconditions) {
  auto three = planted(Variant::memoized, {10, 20, 40}, 1.0, 2.0, Predictor::n);
  EXPECT_THROW(fit_complexity(three, Predictor::n), DomainError);

  auto dup = planted(Variant::memoized, {10, 20, 40, 40}, 1.0, 2.0, Predictor::n);
  EXPECT_THROW(fit_complexity(dup, Predictor::n), DomainError);

  auto zero = planted(Variant::memoized, {10, 20, 40, 80}, 1.0, 2.0, Predictor::n);
  zero[2].elapsed_seconds = 0.0;
  try {
    fit_complexity(zero, Predictor::n);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("raise n"), std::string::npos);
  }

  auto mixed = planted(Variant::memoized, {10, 20, 40, 80}, 1.0, 2.0, Predictor::n);
  mixed[1].variant = Variant::rs;
  EXPECT_THROW(fit_complexity(mixed, Predictor::n), DomainError);

  auto with_one = planted(Variant::memoized, {1, 20, 40, 80}, 1.0, 2.0, Predictor::n);
  EXPECT_NO_THROW(fit_complexity(with_one, Predictor::n));
  EXPECT_THROW(fit_complexity(with_one, Predictor::n_log_n), DomainError);
}

TEST(FormatFit, StableLayout) {
  ComplexityFit fit{Predictor::n_log_n, 2.5, 1.25e-7, 0.99871, 5};
  EXPECT_EQ(format_fit(Variant::rs, fit),
            "fit variant=rs predictor=nlogn b=2.5000 a=1.2500e-07 r2=0.9987 points=5");
}

BenchRecord record(Variant v, Index n, Index p, double t) {
  const Bounds b = bounds_for(v, n);
  return BenchRecord{v, n, p, b.k_lo, b.k_hi, b.k_hi - b.k_lo + 1, t, 3};
}

TEST(EmitTable, MarkdownSingleRecord) {
  const BenchRecord r[] = {record(Variant::memoized, 10, 29, 0.0213)};
  const std::string md = emit_table(r, TableFormat::markdown);
  EXPECT_EQ(md,
            "| Prime | Lcm mod |\n"
            "|---|---|\n"
            "| P10=29 | 0.02 |\n");
}

TEST(EmitTable, MarkdownTwoVariantsShareARow) {
  const BenchRecord r[] = {record(Variant::memoized, 20, 71, 0.1), record(Variant::rs, 20, 71, 0.02),
                           record(Variant::memoized, 10, 29, 1.005),
                           record(Variant::rs, 10, 29, 0.0)};
  const std::string md = emit_table(r, TableFormat::markdown);
  EXPECT_EQ(md,
            "| Prime | Lcm mod | RS acceleration |\n"
            "|---|---|---|\n"
            "| P10=29 | 1.00 | 0.00 |\n"
            "| P20=71 | 0.10 | 0.02 |\n");
}

TEST(EmitTable, MarkdownLeavesMissingCellsEmpty) {
  const BenchRecord r[] = {record(Variant::naive, 10, 29, 0.5),
                           record(Variant::memoized, 10, 29, 0.25),
                           record(Variant::memoized, 100, 541, 2.0)};
  const std::string md = emit_table(r, TableFormat::markdown);
  EXPECT_NE(md.find("| P100=541 |  | 2.00 |\n"), std::string::npos) << md;
}

TEST(EmitTable, EmptyIsAnError) {
  EXPECT_THROW(emit_table({}, TableFormat::markdown), DomainError);
  EXPECT_THROW(emit_table({}, TableFormat::csv), DomainError);
}

TEST(EmitTable, CsvHeaderIsExact) {
  const BenchRecord r[] = {record(Variant::rs, 10, 29, 1.5e-5)};
  const std::string csv = emit_table(r, TableFormat::csv);
  EXPECT_EQ(csv,
            "variant,n,p_n,k_lo,k_hi,terms_evaluated,elapsed_seconds,repetitions\n"
            "rs,10,29,23,29,7,1.5e-05,3\n");
}

TEST(Csv, RoundTripIsLossless) {
  std::mt19937_64 rng(20041);
  std::uniform_int_distribution<Index> idx(1, 1'000'000);
  std::uniform_real_distribution<double> exponent(-9.0, 3.0);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BenchRecord> records;
    const int count = 1 + trial % 7;
    for (int i = 0; i < count; ++i) {
      BenchRecord r;
      r.variant = kAllVariants[pick(rng)];
      r.n = idx(rng);
      r.p_n = idx(rng);
      r.k_lo = idx(rng);
      r.k_hi = idx(rng);
      r.terms_evaluated = idx(rng);
      r.elapsed_seconds = std::pow(10.0, exponent(rng)) * std::uniform_real_distribution<>(1, 10)(rng);
      r.repetitions = idx(rng) % 50 + 1;
      records.push_back(r);
    }
    ASSERT_EQ(parse_csv(emit_table(records, TableFormat::csv)), records);
  }
}

TEST(Csv, ParserSkipsCommentsAndRejectsGarbage) {
  const std::string text =
      "variant,n,p_n,k_lo,k_hi,terms_evaluated,elapsed_seconds,repetitions\n"
      "memo,10,29,1,48,48,0.25,3\n"
      "# fit variant=memo predictor=n b=1.0 a=1 r2=1 points=4\n"
      "\n";
  const auto records = parse_csv(text);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].variant, Variant::memoized);
  EXPECT_DOUBLE_EQ(records[0].elapsed_seconds, 0.25);

  EXPECT_THROW(parse_csv("n,variant\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv(""), std::invalid_argument);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\nmemo,10,29\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\nprob38,10,29,1,48,48,0.2,3\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\nmemo,10,x,1,48,48,0.2,3\n"),
               std::invalid_argument);
}

}  // namespace
}  // namespace lcmprime
