// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mstream::detail {

// Range-minimum over a static array in O(n) words and O(1) per query.
//
// The array is cut into 64-element blocks. Within a block each position keeps
// a bitmask of the monotone min-stack ending there, so an in-block query is a
// mask-and-ctz. Whole blocks in between are covered by a sparse table over the
// block minima, which has (n/64)·log(n/64) entries.
class range_min {
 public:
  range_min() = default;

  explicit range_min(std::span<const std::uint32_t> values)
      : values_(values.begin(), values.end()), masks_(values.size()) {
    const std::size_t n = values_.size();
    for (std::size_t begin = 0; begin < n; begin += kBlock) {
      std::uint64_t stack = 0;
      const std::size_t end = std::min(n, begin + kBlock);
      for (std::size_t i = begin; i < end; ++i) {
        while (stack != 0) {
          const std::size_t top = begin + (63 - std::countl_zero(stack));
          if (values_[top] < values_[i]) break;
          stack ^= std::uint64_t{1} << (top - begin);
        }
        stack |= std::uint64_t{1} << (i - begin);
        masks_[i] = stack;
      }
    }

    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    if (blocks == 0) return;
    std::vector<std::uint32_t> level(blocks);
    for (std::size_t b = 0; b < blocks; ++b)
      level[b] = values_[in_block(b * kBlock, std::min(n, (b + 1) * kBlock) - 1)];
    table_.push_back(std::move(level));
    for (std::size_t width = 2; width <= blocks; width *= 2) {
      const auto& prev = table_.back();
      std::vector<std::uint32_t> next(blocks - width + 1);
      for (std::size_t b = 0; b + width <= blocks; ++b)
        next[b] = std::min(prev[b], prev[b + width / 2]);
      table_.push_back(std::move(next));
    }
  }

  // Minimum of values[lo..hi], lo <= hi.
  std::uint32_t min(std::size_t lo, std::size_t hi) const {
    const std::size_t lb = lo / kBlock;
    const std::size_t hb = hi / kBlock;
    if (lb == hb) return values_[in_block(lo, hi)];
    std::uint32_t best = std::min(values_[in_block(lo, lb * kBlock + kBlock - 1)],
                                  values_[in_block(hb * kBlock, hi)]);
    if (lb + 1 < hb) best = std::min(best, blocks_min(lb + 1, hb - 1));
    return best;
  }

  std::size_t size() const { return values_.size(); }

  std::size_t words() const {
    std::size_t w = (values_.size() * sizeof(std::uint32_t) + 7) / 8 + masks_.size();
    for (const auto& level : table_) w += (level.size() * sizeof(std::uint32_t) + 7) / 8;
    return w;
  }

 private:
  static constexpr std::size_t kBlock = 64;

  // index of the minimum in [lo, hi], both inside one block
  std::size_t in_block(std::size_t lo, std::size_t hi) const {
    const std::size_t begin = lo - lo % kBlock;
    const std::uint64_t live = masks_[hi] & (~std::uint64_t{0} << (lo - begin));
    return begin + static_cast<std::size_t>(std::countr_zero(live));
  }

  std::uint32_t blocks_min(std::size_t lb, std::size_t hb) const {
    const std::size_t count = hb - lb + 1;
    const std::size_t k = std::bit_width(count) - 1;
    return std::min(table_[k][lb], table_[k][hb + 1 - (std::size_t{1} << k)]);
  }

  std::vector<std::uint32_t> values_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace mstream::detail
