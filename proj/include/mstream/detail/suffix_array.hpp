// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "rmq.hpp"

namespace mstream::detail {

// Prefix-doubling suffix array with radix passes, O(n log n).
template <std::unsigned_integral Symbol>
std::vector<std::uint32_t> build_suffix_array(std::span<const Symbol> text) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n);
  if (n == 0) return sa;

  // dense ranks of the symbols
  std::vector<Symbol> alphabet(text.begin(), text.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::vector<std::uint32_t> rank(n), tmp(n), cnt(std::max(n, alphabet.size()) + 1);
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<std::uint32_t>(
        std::lower_bound(alphabet.begin(), alphabet.end(), text[i]) - alphabet.begin());

  std::iota(sa.begin(), sa.end(), 0);
  std::stable_sort(sa.begin(), sa.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return rank[a] < rank[b]; });

  std::vector<std::uint32_t> by_second(n);
  for (std::size_t width = 1;; width *= 2) {
    // order by (rank[i], rank[i + width]); suffixes without a second half first
    std::size_t p = 0;
    for (std::size_t i = n - std::min(n, width); i < n; ++i) by_second[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n; ++i)
      if (sa[i] >= width) by_second[p++] = static_cast<std::uint32_t>(sa[i] - width);

    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
    for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (std::size_t i = 0; i < n; ++i) sa[cnt[rank[by_second[i]]]++] = by_second[i];

    auto key = [&](std::uint32_t i) {
      const std::uint32_t second = i + width < n ? rank[i + width] + 1 : 0;
      return std::pair{rank[i], second};
    };
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i)
      tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

// Longest-common-extension oracle over the suffixes of one static string:
// suffix array, Kasai LCP, and constant-time range minimum on the LCP array.
class suffix_lce {
 public:
  suffix_lce() = default;

  template <std::unsigned_integral Symbol>
  explicit suffix_lce(std::span<const Symbol> text) : n_(text.size()) {
    const auto sa = build_suffix_array(text);
    rank_.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) rank_[sa[r]] = static_cast<std::uint32_t>(r);

    // lcp[r] = lcp(sa[r - 1], sa[r]); lcp[0] unused
    std::vector<std::uint32_t> lcp(n_, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t r = rank_[i];
      if (r == 0) {
        h = 0;
        continue;
      }
      const std::size_t j = sa[r - 1];
      while (i + h < n_ && j + h < n_ && text[i + h] == text[j + h]) ++h;
      lcp[r] = static_cast<std::uint32_t>(h);
      if (h > 0) --h;
    }
    rmq_ = range_min(lcp);
  }

  // Length of the longest common prefix of text[a..] and text[b..];
  // an index equal to the length denotes the empty suffix.
  std::size_t query(std::size_t a, std::size_t b) const {
    if (a >= n_ || b >= n_) return 0;
    if (a == b) return n_ - a;
    std::size_t ra = rank_[a];
    std::size_t rb = rank_[b];
    if (ra > rb) std::swap(ra, rb);
    return rmq_.min(ra + 1, rb);
  }

  std::size_t size() const { return n_; }

  std::size_t words() const {
    return (rank_.size() * sizeof(std::uint32_t) + 7) / 8 + rmq_.words() + 1;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> rank_;
  range_min rmq_;
};

}  // namespace mstream::detail
