// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

#include "pattern_space.hpp"
#include "stream_lce.hpp"
#include "types.hpp"

namespace mstream {

// Per-stream k-mismatch state: the 4(k+1) most recent p-regions. Each arrival
// checks the alignment ending there with at most k+1 reverse LCE jumps.
template <symbol_type Symbol = std::uint8_t>
class basic_mismatch_stream {
 public:
  using space_type = basic_pattern_space<Symbol>;

  static std::size_t window_capacity(std::uint32_t k) { return 4 * (std::size_t{k} + 1); }

  explicit basic_mismatch_stream(std::uint32_t k) : window_(window_capacity(k)) {}

  match_report push(const space_type& ps, Symbol s, push_stats* stats = nullptr) {
    window_.append(ps, s, stats);
    const std::int64_t end = window_.text_len() - 1;
    const auto m = static_cast<std::int64_t>(ps.size());
    if (window_.text_len() < m) return match_report::no_alignment(end);

    const std::uint32_t k = ps.k();
    std::int64_t text_pos = end;
    std::int64_t pat_pos = m - 1;
    std::uint32_t mismatches = 0;
    region_seq hint = window_.end_seq() - 1;
    for (;;) {
      const lce_result r = window_.lcs_text(ps, text_pos, pat_pos, &hint, stats);
      if (r.out_of_window) {
        if (stats) ++stats->output_window_misses;
        return match_report::no_match(end);
      }
      text_pos -= static_cast<std::int64_t>(r.length);
      pat_pos -= static_cast<std::int64_t>(r.length);
      if (pat_pos < 0) return match_report::matched(end, mismatches);
      if (++mismatches > k) return match_report::no_match(end);
      --text_pos;
      --pat_pos;
      if (pat_pos < 0) return match_report::matched(end, mismatches);
    }
  }

  const basic_region_window<Symbol>& window() const { return window_; }
  std::size_t words() const { return window_.words(); }

 private:
  basic_region_window<Symbol> window_;
};

using mismatch_stream = basic_mismatch_stream<std::uint8_t>;

}  // namespace mstream
