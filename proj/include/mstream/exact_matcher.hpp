// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

#include "pattern_space.hpp"
#include "types.hpp"

namespace mstream {

// Per-stream state for exact matching: the length of the longest pattern
// prefix that is a suffix of the text so far. Two words regardless of m.
template <symbol_type Symbol = std::uint8_t>
class basic_exact_stream {
 public:
  using space_type = basic_pattern_space<Symbol>;

  match_report push(const space_type& ps, Symbol s, push_stats* stats = nullptr) {
    std::uint64_t ops = 0;
    prefix_ = static_cast<std::uint32_t>(ps.shift_lookup(prefix_, s, &ops));
    if (stats) stats->ops += ops;
    const std::int64_t end = text_len_++;
    if (text_len_ < static_cast<std::int64_t>(ps.size())) return match_report::no_alignment(end);
    if (prefix_ == ps.size()) return match_report::matched(end, 0);
    return match_report::no_match(end);
  }

  std::size_t matched_prefix() const { return prefix_; }
  std::int64_t text_len() const { return text_len_; }

  std::size_t words() const { return 2; }

 private:
  std::uint32_t prefix_ = 0;
  std::int64_t text_len_ = 0;
};

using exact_stream = basic_exact_stream<std::uint8_t>;

}  // namespace mstream
