// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mstream::testing {
namespace {

// Brute force: for each j and each symbol, the largest border b (0 < b < j) of
// P[0..j-1] with P[b] == symbol and, for j < m, symbol != P[j].
std::map<std::pair<std::size_t, std::uint8_t>, std::size_t> brute_dictionaries(const bytes& p) {
  std::map<std::pair<std::size_t, std::uint8_t>, std::size_t> out;
  const std::size_t m = p.size();
  for (std::size_t j = 0; j <= m; ++j) {
    for (std::size_t b = j - (j > 0 ? 1 : 0); b > 0; --b) {
      if (!std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(b),
                      p.begin() + static_cast<std::ptrdiff_t>(j - b)))
        continue;
      const std::uint8_t s = p[b];
      if (j < m && s == p[j]) continue;
      out.emplace(std::pair{j, s}, b);  // first hit is the largest border
    }
  }
  return out;
}

// Textbook KMP transition: follow the failure links until the symbol extends.
std::size_t kmp_step(const bytes& p, const std::vector<std::size_t>& fail, std::size_t j, std::uint8_t s) {
  if (j == p.size()) j = fail[j];
  while (true) {
    if (p[j] == s) return j + 1;
    if (j == 0) return 0;
    j = fail[j];
  }
}

std::vector<std::size_t> failure_table(const bytes& p) {
  std::vector<std::size_t> fail(p.size() + 1, 0);
  for (std::size_t j = 2; j <= p.size(); ++j) {
    std::size_t b = fail[j - 1];
    while (b > 0 && p[b] != p[j - 1]) b = fail[b];
    fail[j] = p[b] == p[j - 1] ? b + 1 : 0;
  }
  return fail;
}

std::size_t naive_lce(const bytes& p, std::size_t a, std::size_t b) {
  std::size_t l = 0;
  while (a + l < p.size() && b + l < p.size() && p[a + l] == p[b + l]) ++l;
  return l;
}

std::size_t naive_lcs(const bytes& p, std::int64_t a, std::int64_t b) {
  std::size_t l = 0;
  while (a - static_cast<std::int64_t>(l) >= 0 && b - static_cast<std::int64_t>(l) >= 0 &&
         p[static_cast<std::size_t>(a) - l] == p[static_cast<std::size_t>(b) - l])
    ++l;
  return l;
}

bool occurs(const bytes& p, const bytes& u) {
  return std::search(p.begin(), p.end(), u.begin(), u.end()) != p.end();
}

TEST(PatternSpace, RejectsInvalidConfigurations) {
  EXPECT_THROW(pattern_space("", match_mode::exact, 0), build_error);
  EXPECT_THROW(pattern_space("ab", match_mode::exact, 1), build_error);
  EXPECT_THROW(pattern_space("ab", match_mode::difference, 0), build_error);
  EXPECT_NO_THROW(pattern_space("ab", match_mode::mismatch, 0));
  EXPECT_NO_THROW(pattern_space("a", match_mode::difference, 1));
}

TEST(PatternSpace, ShiftDictionariesOfAbcabd) {
  pattern_space ps("abcabd", match_mode::exact, 0);
  for (std::size_t j = 0; j <= 6; ++j) {
    if (j == 5) continue;
    EXPECT_TRUE(ps.shift_dictionary(j).empty()) << "j=" << j;
  }
  const auto d5 = ps.shift_dictionary(5);
  ASSERT_EQ(d5.size(), 1u);
  EXPECT_EQ(d5[0], (shift_entry{5, 'c', 2}));

  const auto brute = brute_dictionaries(to_bytes("abcabd"));
  ASSERT_EQ(brute.size(), 1u);
  EXPECT_EQ(brute.begin()->first, (std::pair<std::size_t, std::uint8_t>{5, 'c'}));
  EXPECT_EQ(brute.begin()->second, 2u);
}

TEST(PatternSpace, DistinctSymbolsHaveNoShiftEntries) {
  pattern_space ps("abcd", match_mode::exact, 0);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(ps.shift_dictionary(j).empty());
  EXPECT_TRUE(ps.shift_entries().empty());
}

TEST(PatternSpace, ShiftLookupExamples) {
  pattern_space ps("abcabd", match_mode::exact, 0);
  EXPECT_EQ(ps.shift_lookup(5, 'c'), 3u);
  EXPECT_EQ(ps.shift_lookup(5, 'd'), 6u);
  EXPECT_EQ(ps.shift_lookup(5, 'z'), 0u);
  EXPECT_EQ(ps.shift_lookup(0, 'a'), 1u);
  EXPECT_EQ(ps.shift_lookup(3, 'a'), 4u);
  EXPECT_EQ(ps.shift_lookup(6, 'a'), 1u);  // restart after a full match
}

TEST(PatternSpace, DictionariesMatchBruteForceAndStayLinear) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned sigma = trial % 2 ? 2 : 4;
    const bytes p = random_string(rng, 1 + rng() % 256, sigma);
    pattern_space ps(view(p), match_mode::exact, 0);
    const auto entries = ps.shift_entries();
    ASSERT_LE(entries.size(), p.size() + 1);

    std::set<std::size_t> shifts;
    for (const auto& e : entries) {
      if (e.prefix == p.size()) continue;
      EXPECT_TRUE(shifts.insert(e.prefix - e.border).second) << "repeated shift length";
    }

    const auto brute = brute_dictionaries(p);
    ASSERT_EQ(brute.size(), entries.size());
    for (const auto& e : entries) {
      auto it = brute.find({e.prefix, static_cast<std::uint8_t>(e.symbol)});
      ASSERT_NE(it, brute.end());
      EXPECT_EQ(it->second, e.border);
    }
  }
}

TEST(PatternSpace, ShiftLookupEqualsKmpAutomaton) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned sigma = trial % 2 ? 2 : 4;
    const bytes p = random_string(rng, 1 + rng() % 64, sigma);
    const auto fail = failure_table(p);
    pattern_space ps(view(p), match_mode::exact, 0);
    for (std::size_t j = 0; j <= p.size(); ++j)
      for (unsigned c = 0; c <= sigma; ++c) {
        const auto s = static_cast<std::uint8_t>('a' + c);
        ASSERT_EQ(ps.shift_lookup(j, s), kmp_step(p, fail, j, s)) << "j=" << j << " s=" << s;
      }
  }
}

TEST(PatternSpace, LceExamples) {
  pattern_space ps("babbac", match_mode::exact, 0);
  EXPECT_EQ(ps.lce_pp(0, 2), 1u);
  for (std::size_t j = 0; j <= 6; ++j) {
    EXPECT_EQ(ps.lce_pp(j, j), 6 - j);
    EXPECT_EQ(ps.lce_pp(6, j), 0u);
  }
  EXPECT_EQ(ps.lcs_pp(3, 0), 1u);
  for (std::int64_t j = 0; j < 6; ++j) {
    EXPECT_EQ(ps.lcs_pp(j, j), static_cast<std::size_t>(j + 1));
    EXPECT_EQ(ps.lcs_pp(-1, j), 0u);
  }
}

TEST(PatternSpace, LceEqualsNaiveScan) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 24; ++trial) {
    const unsigned sigma = trial % 3 == 0 ? 1 : (trial % 2 ? 2 : 4);
    const bytes p = random_string(rng, 1 + rng() % 256, sigma);
    pattern_space ps(view(p), match_mode::exact, 0);
    const auto m = static_cast<std::int64_t>(p.size());
    for (std::int64_t a = 0; a <= m; ++a)
      for (std::int64_t b = 0; b <= m; ++b)
        ASSERT_EQ(ps.lce_pp(static_cast<std::size_t>(a), static_cast<std::size_t>(b)),
                  naive_lce(p, static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
    for (std::int64_t a = -1; a < m; ++a)
      for (std::int64_t b = -1; b < m; ++b) ASSERT_EQ(ps.lcs_pp(a, b), naive_lcs(p, a, b));
  }
}

TEST(PatternSpace, LocusExamples) {
  pattern_space ps("babbac", match_mode::exact, 0);
  auto a = ps.locus_extend(pattern_space::locus_start(), 'a');
  ASSERT_TRUE(a);
  auto ab = ps.locus_extend(*a, 'b');
  ASSERT_TRUE(ab);
  EXPECT_FALSE(ps.locus_extend(*ab, 'c'));
  EXPECT_FALSE(ps.locus_extend(pattern_space::locus_start(), 'z'));
  EXPECT_FALSE(ps.locus_extend(*ab, 'z'));

  locus at = pattern_space::locus_start();
  for (char c : std::string_view("abba")) {
    auto next = ps.locus_extend(at, static_cast<std::uint8_t>(c));
    ASSERT_TRUE(next);
    at = *next;
  }
  EXPECT_EQ(ps.locus_position(at), 1u);
  EXPECT_EQ(ps.first_occurrence('c'), 5u);
  EXPECT_FALSE(ps.first_occurrence('z'));
}

TEST(PatternSpace, LocusExtendsExactlyOnSubstrings) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned sigma = trial % 2 ? 2 : 3;
    const bytes p = random_string(rng, 1 + rng() % 40, sigma);
    pattern_space ps(view(p), match_mode::exact, 0);
    // random walks; restart when the extension fails
    bytes u;
    locus at = pattern_space::locus_start();
    for (int step = 0; step < 200; ++step) {
      const auto s = static_cast<std::uint8_t>('a' + rng() % (sigma + 1));
      bytes v = u;
      v.push_back(s);
      auto next = ps.locus_extend(at, s);
      ASSERT_EQ(next.has_value(), occurs(p, v));
      if (!next) {
        u.clear();
        at = pattern_space::locus_start();
        continue;
      }
      u = std::move(v);
      at = *next;
      const std::size_t j = ps.locus_position(at);
      ASSERT_LE(j + u.size(), p.size());
      ASSERT_TRUE(std::equal(u.begin(), u.end(), p.begin() + static_cast<std::ptrdiff_t>(j)));
    }
  }
}

TEST(PatternSpace, WordsAreLinearInPatternLength) {
  std::mt19937_64 rng(15);
  for (std::size_t m : {1u, 16u, 64u, 256u, 1024u, 4096u}) {
    const bytes p = random_string(rng, m, 4);
    pattern_space ps(view(p), match_mode::mismatch, 2);
    EXPECT_LE(ps.words(), 40 * m + 64) << "m=" << m;
  }
  pattern_space ps("babbac", match_mode::mismatch, 2);
  EXPECT_LE(ps.words(), 40 * 6 + 64);
}

TEST(Detail, RangeMinMatchesNaive) {
  std::mt19937_64 rng(16);
  for (std::size_t n : {1u, 2u, 63u, 64u, 65u, 127u, 128u, 129u, 300u, 1000u}) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 20);
    detail::range_min rmq(v);
    for (int q = 0; q < 2000; ++q) {
      std::size_t lo = rng() % n;
      std::size_t hi = rng() % n;
      if (lo > hi) std::swap(lo, hi);
      ASSERT_EQ(rmq.min(lo, hi), *std::min_element(v.begin() + static_cast<std::ptrdiff_t>(lo),
                                                    v.begin() + static_cast<std::ptrdiff_t>(hi) + 1));
    }
  }
}

TEST(Detail, SuffixArrayIsSorted) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const bytes t = random_string(rng, 1 + rng() % 200, 1 + trial % 4);
    const auto sa = detail::build_suffix_array(view(t));
    std::vector<std::uint32_t> want(t.size());
    std::iota(want.begin(), want.end(), 0);
    std::sort(want.begin(), want.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(t.begin() + a, t.end(), t.begin() + b, t.end());
    });
    ASSERT_EQ(sa, want);
  }
}

TEST(Detail, StaticMapBoundsProbes) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
  for (std::uint32_t i = 0; i < 5000; ++i) entries.emplace_back(std::uint64_t{i} * 7919u << 8 | (i & 0xff), i);
  detail::static_map map(entries);
  EXPECT_LE(map.max_displacement(), detail::static_map::kMaxDisplacement);
  for (const auto& [key, value] : entries) {
    std::uint32_t probes = 0;
    auto got = map.find(key, &probes);
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, value);
    EXPECT_LE(probes, detail::static_map::kMaxDisplacement + 1);
  }
  std::uint32_t probes = 0;
  EXPECT_FALSE(map.find(3, &probes));
  EXPECT_LE(probes, detail::static_map::kMaxDisplacement + 1);
  EXPECT_FALSE(detail::static_map{}.find(1));
}

}  // namespace
}  // namespace mstream::testing
