#include "lcmprime/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "lcmprime/errors.hpp"
#include "lcmprime/oracle.hpp"

namespace lcmprime {

namespace {

std::string verification_message(Variant v, Index n, Index got, Index expected) {
  return "verification mismatch: variant=" + std::string(to_string(v)) +
         " n=" + std::to_string(n) + " got=" + std::to_string(got) +
         " expected=" + std::to_string(expected);
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string fixed(double x, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

}  // namespace

VerificationError::VerificationError(Variant variant, Index n, Index got, Index expected)
    : std::runtime_error(verification_message(variant, n, got, expected)),
      variant_(variant),
      n_(n),
      got_(got),
      expected_(expected) {}

Index oracle_limit_for(Index n_max) {
  return std::max<Index>(5000, bounds_basic(std::max<Index>(n_max, 1)).k_hi);
}

double median(std::vector<double> samples) {
  if (samples.empty()) throw DomainError("median of an empty sample");
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[mid];
  return 0.5 * (samples[mid - 1] + samples[mid]);
}

std::vector<BenchRecord> run_bench(std::span<const Variant> variants, std::span<const Index> ns,
                                   const BenchOptions& options) {
  if (options.repetitions == 0) throw DomainError("run_bench: repetitions must be >= 1");
  Index n_max = 1;
  for (const Variant v : variants) {
    for (const Index n : ns) {
      if (n < min_index(v)) {
        throw DomainError("run_bench: variant " + std::string(to_string(v)) +
                          " is undefined at n = " + std::to_string(n));
      }
      n_max = std::max(n_max, n);
    }
  }
  const oracle::SieveTable truth(oracle_limit_for(n_max));
  const Solver solve = options.solver ? options.solver : Solver(&nth_prime);

  std::vector<BenchRecord> out;
  out.reserve(variants.size() * ns.size());
  for (const Variant v : variants) {
    for (const Index n : ns) {
      const Index expected = truth.nth_prime(n);
      std::vector<double> samples;
      samples.reserve(options.repetitions);
      NthPrimeResult last;
      for (unsigned rep = 0; rep < options.repetitions; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        last = solve(n, v, options.early_exit);
        const auto t1 = std::chrono::steady_clock::now();
        if (last.p_n != expected) throw VerificationError(v, n, last.p_n, expected);
        samples.push_back(std::chrono::duration<double>(t1 - t0).count());
      }
      out.push_back(BenchRecord{v, n, last.p_n, last.bounds.k_lo, last.bounds.k_hi,
                                last.terms_evaluated, median(std::move(samples)),
                                options.repetitions});
    }
  }
  return out;
}

std::string_view to_string(Predictor p) noexcept {
  return p == Predictor::n ? "n" : "nlogn";
}

ComplexityFit fit_complexity(std::span<const BenchRecord> records, Predictor predictor) {
  std::set<Index> distinct;
  for (const BenchRecord& r : records) {
    if (r.variant != records.front().variant) {
      throw DomainError("fit_complexity: records mix several variants");
    }
    if (!distinct.insert(r.n).second) {
      throw DomainError("fit_complexity: duplicate n = " + std::to_string(r.n));
    }
    if (!(r.elapsed_seconds > 0.0)) {
      throw DomainError("fit_complexity: non-positive timing at n = " + std::to_string(r.n) +
                        " (below clock resolution); raise n or --reps");
    }
    if (predictor == Predictor::n_log_n && r.n < 2) {
      throw DomainError("fit_complexity: n ln n predictor vanishes at n = 1");
    }
  }
  if (distinct.size() < 4) {
    throw DomainError("fit_complexity: need at least 4 distinct n, got " +
                      std::to_string(distinct.size()));
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (const BenchRecord& r : records) {
    const double n = static_cast<double>(r.n);
    xs.push_back(std::log(predictor == Predictor::n ? n : n * std::log(n)));
    ys.push_back(std::log(r.elapsed_seconds));
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  ComplexityFit fit;
  fit.predictor = predictor;
  fit.points_used = xs.size();
  fit.exponent_b = sxy / sxx;
  fit.coefficient_a = std::exp(my - fit.exponent_b * mx);
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (my + fit.exponent_b * (xs[i] - mx));
    ss_res += e * e;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

std::string format_fit(Variant variant, const ComplexityFit& fit) {
  char a[32];
  std::snprintf(a, sizeof a, "%.4e", fit.coefficient_a);
  return "fit variant=" + std::string(to_string(variant)) +
         " predictor=" + std::string(to_string(fit.predictor)) +
         " b=" + fixed(fit.exponent_b, 4) + " a=" + a + " r2=" + fixed(fit.r_squared, 4) +
         " points=" + std::to_string(fit.points_used);
}

std::string emit_table(std::span<const BenchRecord> records, TableFormat format) {
  if (records.empty()) throw DomainError("emit_table: no records");
  std::ostringstream os;
  if (format == TableFormat::csv) {
    os << kCsvHeader << '\n';
    for (const BenchRecord& r : records) {
      os << to_string(r.variant) << ',' << r.n << ',' << r.p_n << ',' << r.k_lo << ','
         << r.k_hi << ',' << r.terms_evaluated << ',' << format_double(r.elapsed_seconds) << ','
         << r.repetitions << '\n';
    }
    return os.str();
  }

  std::vector<Variant> columns;
  std::map<Index, std::map<Variant, const BenchRecord*>> rows;
  for (const BenchRecord& r : records) {
    if (std::find(columns.begin(), columns.end(), r.variant) == columns.end()) {
      columns.push_back(r.variant);
    }
    rows[r.n][r.variant] = &r;
  }
  os << "| Prime |";
  for (const Variant v : columns) os << ' ' << display_name(v) << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < columns.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& [n, cells] : rows) {
    os << "| P" << n << '=' << cells.begin()->second->p_n << " |";
    for (const Variant v : columns) {
      const auto it = cells.find(v);
      if (it == cells.end()) {
        os << "  |";
      } else {
        os << ' ' << fixed(it->second->elapsed_seconds, 2) << " |";
      }
    }
    os << '\n';
  }
  return os.str();
}

namespace {

template <class T>
T parse_number(std::string_view field, std::size_t line) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument("csv line " + std::to_string(line) + ": bad number '" +
                                std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> out;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw std::invalid_argument("csv: unexpected header '" + std::string(line) + "'");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 8) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 8 fields");
    }
    const auto variant = parse_variant(fields[0]);
    if (!variant) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": unknown variant");
    }
    BenchRecord r;
    r.variant = *variant;
    r.n = parse_number<Index>(fields[1], line_no);
    r.p_n = parse_number<Index>(fields[2], line_no);
    r.k_lo = parse_number<Index>(fields[3], line_no);
    r.k_hi = parse_number<Index>(fields[4], line_no);
    r.terms_evaluated = parse_number<std::uint64_t>(fields[5], line_no);
    r.elapsed_seconds = parse_number<double>(fields[6], line_no);
    r.repetitions = parse_number<std::uint64_t>(fields[7], line_no);
    out.push_back(r);
  }
  if (!header_seen) throw std::invalid_argument("csv: missing header");
  return out;
}

}  // namespace lcmprime
