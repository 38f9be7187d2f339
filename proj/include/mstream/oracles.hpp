// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference implementations. Deliberately naive; used by the
// test suites and by the replay tool's --verify mode.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "types.hpp"

namespace mstream::oracle {

// End positions of every occurrence of p in t, by direct comparison.
template <symbol_type Symbol>
std::vector<std::int64_t> exact(std::span<const Symbol> p, std::span<const Symbol> t) {
  std::vector<std::int64_t> ends;
  if (p.empty() || t.size() < p.size()) return ends;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i)
    if (std::equal(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>(i)))
      ends.push_back(static_cast<std::int64_t>(i + p.size() - 1));
  return ends;
}

// Per-arrival exact-matching reports (no_alignment while fewer than m symbols).
template <symbol_type Symbol>
std::vector<match_report> exact_reports(std::span<const Symbol> p, std::span<const Symbol> t) {
  std::vector<match_report> out;
  const auto ends = exact(p, t);
  std::size_t next = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto pos = static_cast<std::int64_t>(i);
    if (i + 1 < p.size()) {
      out.push_back(match_report::no_alignment(pos));
    } else if (next < ends.size() && ends[next] == pos) {
      out.push_back(match_report::matched(pos, 0));
      ++next;
    } else {
      out.push_back(match_report::no_match(pos));
    }
  }
  return out;
}

// Hamming distance of the alignment ending at each arrival, reported only
// when it is at most k.
template <symbol_type Symbol>
std::vector<match_report> hamming(std::span<const Symbol> p, std::span<const Symbol> t, std::uint32_t k) {
  std::vector<match_report> out;
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto pos = static_cast<std::int64_t>(i);
    if (i + 1 < m) {
      out.push_back(match_report::no_alignment(pos));
      continue;
    }
    std::uint32_t dist = 0;
    for (std::size_t j = 0; j < m; ++j) dist += p[j] != t[i + 1 - m + j] ? 1 : 0;
    out.push_back(dist <= k ? match_report::matched(pos, dist) : match_report::no_match(pos));
  }
  return out;
}

// Full k-bounded edit-distance table, D[j][i] with base cases
// D[j][-1] = min(k+1, j+1) and D[-1][i] = 0; returns D[m-1][i] per arrival.
template <symbol_type Symbol>
std::vector<std::uint32_t> kdiff_values(std::span<const Symbol> p, std::span<const Symbol> t, std::uint32_t k) {
  const std::size_t m = p.size();
  const std::size_t n = t.size();
  const std::uint32_t cap = k + 1;
  // table[j + 1][i + 1]
  std::vector<std::vector<std::uint32_t>> table(m + 1, std::vector<std::uint32_t>(n + 1, 0));
  for (std::size_t j = 0; j < m; ++j) table[j + 1][0] = std::min<std::uint32_t>(cap, static_cast<std::uint32_t>(j + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint32_t ins = table[j + 1][i] + 1;
      const std::uint32_t del = table[j][i + 1] + 1;
      const std::uint32_t sub = table[j][i] + (p[j] == t[i] ? 0 : 1);
      table[j + 1][i + 1] = std::min({cap, ins, del, sub});
    }
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = table[m][i + 1];
  return out;
}

template <symbol_type Symbol>
std::vector<match_report> kdiff(std::span<const Symbol> p, std::span<const Symbol> t, std::uint32_t k) {
  std::vector<match_report> out;
  const auto values = kdiff_values(p, t, k);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto pos = static_cast<std::int64_t>(i);
    out.push_back(values[i] <= k ? match_report::matched(pos, values[i]) : match_report::no_match(pos));
  }
  return out;
}

// Length of a greedy parse of t into pattern substrings, found by plain
// substring search; symbols absent from p form one-symbol pieces.
template <symbol_type Symbol>
std::size_t min_prep(std::span<const Symbol> p, std::span<const Symbol> t) {
  auto occurs = [&](std::size_t from, std::size_t len) {
    return std::search(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>(from),
                       t.begin() + static_cast<std::ptrdiff_t>(from + len)) != p.end();
  };
  std::size_t pieces = 0;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t len = 1;
    while (i + len < t.size() && occurs(i, len + 1)) ++len;
    ++pieces;
    i += len;
  }
  return pieces;
}

// Incremental reference for one stream: keeps the whole text and recomputes
// the report for the newest arrival from scratch.
template <symbol_type Symbol>
class stream_oracle {
 public:
  stream_oracle(std::span<const Symbol> pattern, match_mode mode, std::uint32_t k)
      : pattern_(pattern.begin(), pattern.end()), mode_(mode), k_(k) {}

  match_report push(Symbol s) {
    text_.push_back(s);
    const std::size_t m = pattern_.size();
    const std::size_t n = text_.size();
    const auto pos = static_cast<std::int64_t>(n - 1);
    if (mode_ == match_mode::difference) {
      // an alignment of cost <= k spans at most m+k symbols
      const std::size_t from = n > m + k_ ? n - m - k_ : 0;
      std::span<const Symbol> tail(text_.data() + from, n - from);
      const auto v = kdiff_values<Symbol>(pattern_, tail, k_).back();
      return v <= k_ ? match_report::matched(pos, v) : match_report::no_match(pos);
    }
    if (n < m) return match_report::no_alignment(pos);
    std::uint32_t dist = 0;
    for (std::size_t j = 0; j < m; ++j) dist += pattern_[j] != text_[n - m + j] ? 1 : 0;
    const std::uint32_t bound = mode_ == match_mode::exact ? 0 : k_;
    return dist <= bound ? match_report::matched(pos, dist) : match_report::no_match(pos);
  }

 private:
  std::vector<Symbol> pattern_;
  std::vector<Symbol> text_;
  match_mode mode_;
  std::uint32_t k_;
};

}  // namespace mstream::oracle
