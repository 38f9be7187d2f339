// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mstream::detail {

// Frozen open-addressing table from 64-bit keys to 32-bit values.
//
// Built once from a fixed key set. The build retries hash seeds (and grows
// the table) until every key sits at most `kMaxDisplacement` slots from its
// home slot, so both hits and misses cost a bounded number of probes.
class static_map {
 public:
  static constexpr std::uint32_t kMaxDisplacement = 6;

  static_map() = default;

  explicit static_map(std::span<const std::pair<std::uint64_t, std::uint32_t>> entries) {
    size_ = entries.size();
    if (entries.empty()) return;
    std::size_t capacity = std::bit_ceil(std::max<std::size_t>(8, entries.size() * 2));
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt > 0 && attempt % 8 == 0) capacity *= 2;
      if (try_build(entries, capacity, mix(attempt + 0x9e3779b97f4a7c15ULL))) return;
    }
  }

  // Number of slots inspected by a lookup is returned through `probes`.
  std::optional<std::uint32_t> find(std::uint64_t key, std::uint32_t* probes = nullptr) const {
    if (slots_.empty()) {
      if (probes) *probes = 1;
      return std::nullopt;
    }
    const std::size_t mask = slots_.size() - 1;
    std::size_t pos = home(key);
    for (std::uint32_t d = 0; d <= max_displacement_; ++d) {
      const slot& s = slots_[(pos + d) & mask];
      if (s.occupied && s.key == key) {
        if (probes) *probes = d + 1;
        return s.value;
      }
      if (!s.occupied) {
        if (probes) *probes = d + 1;
        return std::nullopt;
      }
    }
    if (probes) *probes = max_displacement_ + 1;
    return std::nullopt;
  }

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return slots_.size(); }
  std::uint32_t max_displacement() const { return max_displacement_; }

  // key + value + occupancy flag, padded to two words per slot
  std::size_t words() const { return 2 * slots_.size() + 3; }

 private:
  struct slot {
    std::uint64_t key = 0;
    std::uint32_t value = 0;
    bool occupied = false;
  };

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  std::size_t home(std::uint64_t key) const {
    return static_cast<std::size_t>(mix(key ^ seed_) >> shift_);
  }

  bool try_build(std::span<const std::pair<std::uint64_t, std::uint32_t>> entries,
                 std::size_t capacity, std::uint64_t seed) {
    seed_ = seed;
    shift_ = 64 - static_cast<unsigned>(std::countr_zero(capacity));
    slots_.assign(capacity, slot{});
    max_displacement_ = 0;
    const std::size_t mask = capacity - 1;
    for (const auto& [key, value] : entries) {
      std::size_t pos = home(key);
      std::uint32_t d = 0;
      while (slots_[(pos + d) & mask].occupied) {
        if (slots_[(pos + d) & mask].key == key)
          throw std::invalid_argument("static_map: duplicate key");
        if (++d > kMaxDisplacement) return false;
      }
      slots_[(pos + d) & mask] = slot{key, value, true};
      max_displacement_ = std::max(max_displacement_, d);
    }
    return true;
  }

  std::vector<slot> slots_;
  std::uint64_t seed_ = 0;
  unsigned shift_ = 64;
  std::uint32_t max_displacement_ = 0;
  std::size_t size_ = 0;
};

}  // namespace mstream::detail
