// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mstream::testing {
namespace {

std::vector<std::int64_t> match_ends(const std::vector<match_report>& reports) {
  std::vector<std::int64_t> out;
  for (const auto& r : reports)
    if (r.is_match()) out.push_back(r.end);
  return out;
}

TEST(ExactStream, ReportsOverlappingOccurrences) {
  pattern_space ps("abab", match_mode::exact, 0);
  exact_stream st;
  const auto reports = run_stream(ps, st, to_bytes("ababab"));
  EXPECT_EQ(match_ends(reports), (std::vector<std::int64_t>{3, 5}));
  for (std::int64_t i = 0; i < 3; ++i) EXPECT_EQ(reports[static_cast<std::size_t>(i)], match_report::no_alignment(i));
  EXPECT_EQ(reports[4], match_report::no_match(4));
}

TEST(ExactStream, SingleSymbolPattern) {
  pattern_space ps("a", match_mode::exact, 0);
  exact_stream st;
  const auto reports = run_stream(ps, st, to_bytes("abaa\x01"));
  EXPECT_EQ(match_ends(reports), (std::vector<std::int64_t>{0, 2, 3}));
}

TEST(ExactStream, ShiftAfterMismatch) {
  pattern_space ps("abcabd", match_mode::exact, 0);
  exact_stream st;
  const auto reports = run_stream(ps, st, to_bytes("abcabc"));
  EXPECT_EQ(st.matched_prefix(), 3u);
  EXPECT_EQ(reports.back(), match_report::no_match(5));
  EXPECT_EQ(st.text_len(), 6);
}

TEST(ExactStream, AbsentPatternNeverMatches) {
  pattern_space ps("babbac", match_mode::exact, 0);
  exact_stream st;
  EXPECT_TRUE(match_ends(run_stream(ps, st, to_bytes("abcaababba"))).empty());
}

TEST(ExactStream, EqualsOracleOnRandomInputs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned sigma = trial % 2 ? 2 : 4;
    const bytes p = random_string(rng, 1 + rng() % 16, sigma);
    const bytes t = trial % 3 ? random_string(rng, rng() % 300, sigma) : near_copies(rng, p, 300, sigma, 40);
    pattern_space ps(view(p), match_mode::exact, 0);
    exact_stream st;
    const auto got = run_stream(ps, st, t);
    ASSERT_EQ(got, oracle::exact_reports<std::uint8_t>(view(p), view(t)));
    ASSERT_EQ(st.words(), 2u);
  }
}

TEST(ExactStream, ConstantWorkPerPush) {
  std::mt19937_64 rng(32);
  std::uint64_t worst = 0;
  for (std::size_t m : {1u, 8u, 64u, 512u, 4096u}) {
    for (unsigned sigma : {1u, 2u, 4u}) {
      const bytes p = random_string(rng, m, sigma);
      const bytes t = near_copies(rng, p, 20000, sigma + 1, 20);
      pattern_space ps(view(p), match_mode::exact, 0);
      exact_stream st;
      std::vector<push_stats> stats;
      run_stream(ps, st, t, &stats);
      for (const auto& s : stats) worst = std::max(worst, s.ops);
    }
  }
  EXPECT_LE(worst, 2u * (detail::static_map::kMaxDisplacement + 1));
}

}  // namespace
}  // namespace mstream::testing
