#pragma once

// Timing harness comparing the guessed-digit square root against the
// baselines on seeded random inputs of exact limb counts.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bombelli/baseline.hpp"
#include "bombelli/bignat.hpp"
#include "bombelli/isqrt.hpp"

namespace bombelli::bench {

enum class Format { csv, markdown };

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  Format format = Format::csv;
  bool verify = false;
  bool include_newton = true;
  bool include_binary_search = false;
  double warmup_frac = 0.1;
};

struct BenchRecord {
  std::size_t size_limbs = 0;
  std::size_t trials = 0;
  double mean_ns_guessed = 0.0;
  std::optional<double> mean_ns_newton;
  std::optional<double> mean_ns_binary_search;
  std::uint64_t corrections_total = 0;
  std::uint64_t digits_total = 0;
};

/// Raised when two implementations disagree; carries the input in decimal.
class MismatchError : public std::runtime_error {
 public:
  MismatchError(const std::string& what, std::string input)
      : std::runtime_error(what), input_(std::move(input)) {}
  const std::string& input() const noexcept { return input_; }

 private:
  std::string input_;
};

/// 0, 1, 2, 4, ..., 32768.
inline std::vector<std::size_t> default_sizes() {
  std::vector<std::size_t> sizes{0};
  for (std::size_t s = 1; s <= 32768; s *= 2) sizes.push_back(s);
  return sizes;
}

inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad size list entry: \"" + item + "\"");
    }
    sizes.push_back(std::stoull(item));
  }
  if (sizes.empty()) throw std::invalid_argument("size list is empty");
  return sizes;
}

namespace detail {

template <class Fn>
double time_ns(Fn&& fn, SqrtResult& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = fn();
  const auto t1 = std::chrono::steady_clock::now();
  return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

inline void check_same(const BigNat& x, const SqrtResult& want, const SqrtResult& got,
                       const char* name) {
  if (want != got) {
    throw MismatchError(std::string("inexact result from ") + name + ": sqrt = " +
                            got.root.to_decimal() + ", rem = " + got.remainder.to_decimal(),
                        x.to_decimal());
  }
}

}  // namespace detail

/// Runs the protocol for every configured size. Inputs come from one
/// std::mt19937_64 stream seeded with config.seed.
inline std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("run_bench: no sizes");
  if (config.trials == 0) throw std::invalid_argument("run_bench: trials must be >= 1");
  if (!(config.warmup_frac >= 0.0)) throw std::invalid_argument("run_bench: negative warmup");

  std::mt19937_64 rng(config.seed);
  const auto warmup = static_cast<std::size_t>(
      std::llround(static_cast<double>(config.trials) * config.warmup_frac));

  std::vector<BenchRecord> records;
  for (const std::size_t size : config.sizes) {
    BenchRecord rec;
    rec.size_limbs = size;
    rec.trials = config.trials;
    double sum_guessed = 0.0;
    double sum_newton = 0.0;
    double sum_bisect = 0.0;

    for (std::size_t t = 0; t < warmup + config.trials; ++t) {
      const bool timed = t >= warmup;
      const BigNat x = random_exact_limbs(size, rng);

      GuessStats stats;
      SqrtResult guessed;
      const double ns = detail::time_ns([&] { return sqrt_rem(x, &stats); }, guessed);
      if (timed) {
        sum_guessed += ns;
        rec.corrections_total += stats.corrections;
        rec.digits_total += stats.digits_guessed;
      }

      if (config.include_newton) {
        SqrtResult newton;
        const double ns_n = detail::time_ns([&] { return sqrt_rem_newton(x); }, newton);
        if (timed) sum_newton += ns_n;
        if (config.verify) detail::check_same(x, guessed, newton, "newton");
      }
      if (config.include_binary_search) {
        SqrtResult bisect;
        const double ns_b = detail::time_ns([&] { return sqrt_rem_binary_search(x); }, bisect);
        if (timed) sum_bisect += ns_b;
        if (config.verify) detail::check_same(x, guessed, bisect, "binary search");
      }
      if (config.verify && !config.include_newton && !config.include_binary_search) {
        // No second implementation timed: still check the defining inequalities.
        const BigNat sq = guessed.root * guessed.root;
        const BigNat next = guessed.root + BigNat::from_u64(1);
        if (sq + guessed.remainder != x || next * next <= x) {
          throw MismatchError("sqrt_rem result violates root^2 <= x < (root+1)^2",
                              x.to_decimal());
        }
      }
    }

    const auto n = static_cast<double>(config.trials);
    rec.mean_ns_guessed = sum_guessed / n;
    if (config.include_newton) rec.mean_ns_newton = sum_newton / n;
    if (config.include_binary_search) rec.mean_ns_binary_search = sum_bisect / n;
    records.push_back(rec);
  }
  return records;
}

inline constexpr const char* kColumns[] = {
    "size_limbs",   "trials",           "mean_ns_guessed", "mean_ns_newton",
    "mean_ns_binary_search", "corrections_total", "digits_total"};

namespace detail {

inline std::string fmt_mean(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(0) << v;
  return out.str();
}

inline std::vector<std::string> cells(const BenchRecord& r) {
  return {std::to_string(r.size_limbs),
          std::to_string(r.trials),
          fmt_mean(r.mean_ns_guessed),
          r.mean_ns_newton ? fmt_mean(*r.mean_ns_newton) : "",
          r.mean_ns_binary_search ? fmt_mean(*r.mean_ns_binary_search) : "",
          std::to_string(r.corrections_total),
          std::to_string(r.digits_total)};
}

}  // namespace detail

/// CSV with a fixed header, or a right-aligned markdown table with the same
/// columns. Absent means are empty cells.
inline std::string emit(const std::vector<BenchRecord>& records, Format format) {
  std::vector<std::vector<std::string>> rows;
  rows.emplace_back(std::begin(kColumns), std::end(kColumns));
  for (const auto& r : records) rows.push_back(detail::cells(r));

  std::ostringstream out;
  if (format == Format::csv) {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
    return out.str();
  }

  std::vector<std::size_t> width(rows[0].size(), 3);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    out << '|';
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << ' ' << std::setw(static_cast<int>(width[c])) << row[c] << " |";
    }
    out << '\n';
  };
  line(rows[0]);
  out << '|';
  for (std::size_t w : width) out << ' ' << std::string(w - 1, '-') << ": |";
  out << '\n';
  for (std::size_t i = 1; i < rows.size(); ++i) line(rows[i]);
  return out.str();
}

}  // namespace bombelli::bench
