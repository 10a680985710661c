#include <gtest/gtest.h>

#include <sstream>

#include "bombelli/bench.hpp"

namespace bombelli::bench {
namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST(Emit, CsvHeaderOnlyForNoRecords) {
  EXPECT_EQ(emit({}, Format::csv),
            "size_limbs,trials,mean_ns_guessed,mean_ns_newton,mean_ns_binary_search,"
            "corrections_total,digits_total\n");
}

TEST(Emit, OneRecordTwoLines) {
  BenchRecord r;
  r.size_limbs = 8;
  r.trials = 3;
  r.mean_ns_guessed = 1234.4;
  r.mean_ns_newton = 99.6;
  r.corrections_total = 1;
  r.digits_total = 9;
  const std::string csv = emit({r}, Format::csv);
  EXPECT_EQ(count_lines(csv), 2u);
  EXPECT_NE(csv.find("\n8,3,1234,100,,1,9\n"), std::string::npos) << csv;
}

TEST(Emit, DefaultLadderHasSeventeenRows) {
  const auto sizes = default_sizes();
  ASSERT_EQ(sizes.size(), 17u);
  EXPECT_EQ(sizes.front(), 0u);
  EXPECT_EQ(sizes.back(), 32768u);
  std::vector<BenchRecord> recs;
  for (auto s : sizes) recs.push_back(BenchRecord{s, 1, 0.0, {}, {}, 0, 0});
  EXPECT_EQ(count_lines(emit(recs, Format::csv)), 18u);
  // Header, separator, 17 rows.
  const std::string md = emit(recs, Format::markdown);
  EXPECT_EQ(count_lines(md), 19u);
  std::istringstream in(md);
  std::string first, line;
  std::getline(in, first);
  while (std::getline(in, line)) EXPECT_EQ(line.size(), first.size());
  EXPECT_NE(first.find("mean_ns_guessed"), std::string::npos);
}

TEST(ParseSizes, AcceptsListsRejectsGarbage) {
  EXPECT_EQ(parse_sizes("0,1,2,4"), (std::vector<std::size_t>{0, 1, 2, 4}));
  EXPECT_THROW(parse_sizes(""), std::invalid_argument);
  EXPECT_THROW(parse_sizes("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_sizes("1,-2"), std::invalid_argument);
}

TEST(RunBench, ZeroSizeAndVerify) {
  BenchConfig cfg;
  cfg.sizes = {0};
  cfg.trials = 5;
  cfg.verify = true;
  cfg.include_binary_search = true;
  const auto recs = run_bench(cfg);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].size_limbs, 0u);
  EXPECT_EQ(recs[0].digits_total, 0u);
  EXPECT_GE(recs[0].mean_ns_guessed, 0.0);
  ASSERT_TRUE(recs[0].mean_ns_newton && recs[0].mean_ns_binary_search);
}

TEST(RunBench, SmallSizesVerifyWithoutMismatch) {
  BenchConfig cfg;
  for (std::size_t s = 1; s <= 64; ++s) cfg.sizes.push_back(s);
  cfg.trials = 100;
  cfg.seed = 2024;
  cfg.verify = true;
  cfg.include_binary_search = true;
  const auto recs = run_bench(cfg);
  ASSERT_EQ(recs.size(), 64u);
  for (const auto& r : recs) {
    EXPECT_EQ(r.trials, 100u);
    EXPECT_LE(r.corrections_total, r.digits_total);
    // Exact limb counts: (s+1)/2 digits, the first one not guessed.
    EXPECT_EQ(r.digits_total, 100u * ((r.size_limbs + 1) / 2 - 1));
  }
}

TEST(RunBench, DeterministicPerSeed) {
  BenchConfig cfg;
  cfg.sizes = {3, 10};
  cfg.trials = 50;
  cfg.seed = 77;
  cfg.verify = true;
  const auto a = run_bench(cfg);
  const auto b = run_bench(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].digits_total, b[i].digits_total);
    EXPECT_EQ(a[i].corrections_total, b[i].corrections_total);
  }
}

TEST(RunBench, RejectsBadConfig) {
  BenchConfig cfg;
  EXPECT_THROW(run_bench(cfg), std::invalid_argument);
  cfg.sizes = {1};
  cfg.trials = 0;
  EXPECT_THROW(run_bench(cfg), std::invalid_argument);
}

TEST(RunBench, VerifyWithoutBaselines) {
  BenchConfig cfg;
  cfg.sizes = {5, 6};
  cfg.trials = 20;
  cfg.verify = true;
  cfg.include_newton = false;
  const auto recs = run_bench(cfg);
  EXPECT_FALSE(recs[0].mean_ns_newton.has_value());
  // Absent means render as empty cells.
  EXPECT_NE(emit(recs, Format::csv).find(",,,"), std::string::npos);
}

}  // namespace
}  // namespace bombelli::bench
