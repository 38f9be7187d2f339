// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "pattern_space.hpp"
#include "stream_lce.hpp"
#include "types.hpp"

namespace mstream {

// Per-stream k-difference state.
//
// Outputs D[m-1, i], the smallest edit distance between P and any suffix of
// the text ending at arrival i, saturated at k+1. When m > 3k+2 the work is
// split between overlapping child processes. A child spawned at arrival s
// (a multiple of k) owns the outputs for arrivals s+k .. s+2k-1:
//
//   arrivals s .. s+ceil(k/2)-1      stage A: Landau-Vishkin diagonal sweep
//                                    giving column s-1 on rows [m-3k-1, m-2]
//   arrivals .. s+k-1                stage B: banded DP, columns s .. s+k-1
//   arrivals s+k .. s+2k-1           stage C: one banded column per arrival,
//                                    which is the output
//
// Cells above the band read k+1. At most two children are live at once and
// each does O(k) work per arrival. Small patterns (m <= 3k+2) keep one plain
// DP column instead.
template <symbol_type Symbol = std::uint8_t>
class basic_difference_stream {
 public:
  using space_type = basic_pattern_space<Symbol>;
  using cell = std::uint16_t;

  enum class stage : std::uint8_t { idle, a, b, c };

  static std::size_t window_capacity(std::uint32_t k) { return 5 * (std::size_t{k} + 1); }
  static bool uses_fallback(std::size_t m, std::uint32_t k) { return m <= 3 * std::size_t{k} + 2; }

  basic_difference_stream(std::size_t m, std::uint32_t k)
      : window_(window_capacity(k)), m_(static_cast<std::int64_t>(m)), k_(k) {
    if (uses_fallback(m, k)) {
      fallback_.resize(m);
      for (std::size_t j = 0; j < m; ++j) fallback_[j] = static_cast<cell>(std::min<std::size_t>(k + 1, j + 1));
    } else {
      for (auto& ch : children_) ch.reserve(k);
    }
  }

  explicit basic_difference_stream(const space_type& ps) : basic_difference_stream(ps.size(), ps.k()) {}

  match_report push(const space_type& ps, Symbol s, push_stats* stats = nullptr) {
    window_.append(ps, s, stats);
    const std::int64_t a = window_.text_len() - 1;
    if (!fallback_.empty()) return push_fallback(ps, s, a, stats);

    const std::int64_t k = k_;
    if (a % k == 0) children_[static_cast<std::size_t>((a / k) % 2)].spawn(a, m_, k_, window_);

    // Arrivals before k have no owner; with m > 3k+2 their distance exceeds k.
    match_report out = match_report::no_match(a);
    for (auto& ch : children_) {
      if (ch.phase == stage::idle) continue;
      if (auto r = ch.tick(ps, window_, a, s, stats)) {
        out = *r;
        if (stats) {
          stats->producer = ch.start;
          stats->output_window_misses = ch.misses;
        }
        if (a == ch.start + 2 * k - 1) ch.phase = stage::idle;
      }
    }
    return out;
  }

  const basic_region_window<Symbol>& window() const { return window_; }
  bool fallback() const { return !fallback_.empty(); }

  std::size_t active_children() const {
    return static_cast<std::size_t>(
        std::count_if(children_.begin(), children_.end(), [](const child& c) { return c.phase != stage::idle; }));
  }

  // Read-only view of a child slot; `band` holds rows [m-3k-1, m-1] of the
  // newest column computed (column start-1 right after stage A).
  struct child_view {
    stage phase = stage::idle;
    std::int64_t start = -1;
    std::int64_t next_column = 0;
    std::span<const cell> band;
  };

  child_view inspect_child(std::size_t slot) const {
    const child& c = children_.at(slot);
    return {c.phase, c.start, c.next_column, c.column};
  }

  std::size_t words() const {
    std::size_t w = window_.words() + words_for_bytes(fallback_.size() * sizeof(cell)) + 3;
    for (const auto& ch : children_) w += ch.words();
    return w;
  }

 private:
  static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min() / 4;

  struct child {
    stage phase = stage::idle;
    std::int64_t start = -1;
    std::int64_t m = 0;
    std::uint32_t k = 0;
    std::uint32_t misses = 0;

    // Landau-Vishkin state: rows[d] is the furthest row on diagonal
    // diag_lo + d (column = row + diagonal) reachable with `level` edits,
    // seq[d] a region handle near the next text position on it.
    std::int64_t diag_lo = 0;
    std::uint32_t level = 0;
    std::uint32_t next_diag = 0;
    std::uint64_t pairs_done = 0;
    std::vector<std::int64_t> rows_prev, rows_cur;
    std::vector<region_seq> seq_prev, seq_cur;
    region_seq sweep = 0;

    // DP column over rows [m-3k-1, m-1]; holds column s-1 after stage A
    std::vector<cell> column;
    std::int64_t next_column = 0;
    region_seq text_cursor = 0;

    std::size_t width() const { return 5 * std::size_t{k}; }
    std::int64_t row_lo() const { return m - 3 * std::int64_t{k} - 1; }
    std::uint32_t ticks_a() const { return (k + 1) / 2; }

    void reserve(std::uint32_t bound) {
      k = bound;
      rows_prev.assign(width(), kNone);
      rows_cur.assign(width(), kNone);
      seq_prev.assign(width(), 0);
      seq_cur.assign(width(), 0);
      column.assign(3 * std::size_t{k} + 1, static_cast<cell>(k + 1));
    }

    void spawn(std::int64_t s, std::int64_t pattern_len, std::uint32_t bound,
               const basic_region_window<Symbol>& window) {
      phase = stage::a;
      start = s;
      m = pattern_len;
      k = bound;
      misses = 0;
      diag_lo = s + 1 - m - std::int64_t{k};
      level = 0;
      next_diag = 0;
      pairs_done = 0;
      std::fill(rows_prev.begin(), rows_prev.end(), kNone);
      std::fill(rows_cur.begin(), rows_cur.end(), kNone);
      sweep = window.oldest_seq();
      std::fill(column.begin(), column.end(), static_cast<cell>(k + 1));
      next_column = s;
      text_cursor = window.end_seq() - 1;
      if (s == 0) {
        // column -1 is the base case D[r, -1] = min(k+1, r+1)
        for (std::int64_t r = row_lo(); r <= m - 2; ++r)
          column[static_cast<std::size_t>(r - row_lo())] =
              static_cast<cell>(std::min<std::int64_t>(k + 1, r + 1));
        level = k + 1;
      }
    }

    // Advances this child by one arrival; returns the output when it owns a.
    std::optional<match_report> tick(const space_type& ps, const basic_region_window<Symbol>& window,
                                     std::int64_t a, Symbol s, push_stats* stats) {
      const std::int64_t t = a - start;
      const std::int64_t ta = ticks_a();
      if (t < ta) {
        const std::uint64_t total = std::uint64_t{width()} * (k + 1);
        const bool last = t + 1 == ta;
        const std::uint64_t quota = last ? total : (total + ticks_a() - 1) / ticks_a();
        for (std::uint64_t n = 0; n < quota && level <= k; ++n) lv_step(ps, window, stats);
        if (last) {
          phase = stage::b;
          if (k / 2 == 0) advance_b(ps, window, a, stats);
        }
        return std::nullopt;
      }
      if (t < std::int64_t{k}) {
        advance_b(ps, window, a, stats);
        return std::nullopt;
      }
      phase = stage::c;
      dp_column(ps, s, stats);
      const cell v = column.back();
      if (v <= k) return match_report::matched(a, v);
      return match_report::no_match(a);
    }

    // Stage B: spread the k columns s..s+k-1 evenly over the remaining ticks.
    void advance_b(const space_type& ps, const basic_region_window<Symbol>& window, std::int64_t a,
                   push_stats* stats) {
      const std::int64_t end = start + k;
      const std::int64_t ticks_left = end - a;
      const std::int64_t cols_left = end - next_column;
      const std::int64_t now = ticks_left <= 0 ? cols_left : (cols_left + ticks_left - 1) / ticks_left;
      for (std::int64_t n = 0; n < now && next_column <= a; ++n) {
        auto sym = window.symbol_at(ps, next_column, &text_cursor, stats);
        if (!sym && next_column < window.evicted_before()) ++misses;
        dp_column(ps, sym, stats);
        ++next_column;
      }
    }

    // One DP column over the band; `sym` is the text symbol of the column
    // (absent when it cannot equal any pattern symbol).
    void dp_column(const space_type& ps, std::optional<Symbol> sym, push_stats* stats) {
      const cell cap = static_cast<cell>(k + 1);
      cell diag = cap;  // old value one row up
      cell up = cap;    // new value one row up
      const std::int64_t lo = row_lo();
      for (std::size_t idx = 0; idx < column.size(); ++idx) {
        const cell old = column[idx];
        const std::size_t j = static_cast<std::size_t>(lo) + idx;
        const cell sub = static_cast<cell>(diag + ((sym && ps[j] == *sym) ? 0 : 1));
        cell v = std::min<cell>({cap, static_cast<cell>(old + 1), static_cast<cell>(up + 1), sub});
        column[idx] = v;
        diag = old;
        up = v;
      }
      if (stats) stats->ops += column.size();
    }

    // One (diagonal, level) update of the Landau-Vishkin sweep.
    void lv_step(const space_type& ps, const basic_region_window<Symbol>& window, push_stats* stats) {
      const std::size_t idx = next_diag;
      const std::int64_t d = diag_lo + static_cast<std::int64_t>(idx);
      const std::int64_t cap = std::min(m - 2, start - 1 - d);
      std::int64_t row = kNone;
      region_seq seq = 0;
      if (stats) ++stats->ops;

      if (cap >= -1) {
        if (level == 0) {
          // alignments may only begin at text positions >= start-m+1
          if (d >= std::max<std::int64_t>(0, start - m + 1)) {
            row = -1;
            if (d >= window.evicted_before()) {
              sweep = window.locate(d, sweep, stats);
            }
            seq = sweep;
          }
        } else {
          auto take = [&](std::int64_t cand, region_seq from) {
            if (cand > row) {
              row = cand;
              seq = from;
            }
          };
          if (rows_prev[idx] != kNone) take(rows_prev[idx] + 1, seq_prev[idx]);
          if (idx > 0 && rows_prev[idx - 1] != kNone) take(rows_prev[idx - 1], seq_prev[idx - 1]);
          if (idx + 1 < width() && rows_prev[idx + 1] != kNone) take(rows_prev[idx + 1] + 1, seq_prev[idx + 1]);
        }
        if (row != kNone) {
          row = std::min(row, cap);
          if (row < cap) {
            const std::int64_t pos = row + d + 1;
            const auto limit = static_cast<std::size_t>(cap - row);
            const lce_result r = window.lce_text(ps, pos, static_cast<std::size_t>(row + 1), limit, &seq, stats);
            if (r.out_of_window)
              ++misses;
            else
              row += static_cast<std::int64_t>(r.length);
          }
          const std::int64_t target = start - 1 - d;  // R_A row on this diagonal
          if (target >= row_lo() && target <= m - 2 && row >= target) {
            cell& c = column[static_cast<std::size_t>(target - row_lo())];
            if (c > level) c = static_cast<cell>(level);
          }
        }
      }
      rows_cur[idx] = row;
      seq_cur[idx] = seq;
      ++pairs_done;
      if (++next_diag == width()) {
        next_diag = 0;
        ++level;
        rows_prev.swap(rows_cur);
        seq_prev.swap(seq_cur);
      }
    }

    std::size_t words() const {
      return rows_prev.size() + rows_cur.size() + seq_prev.size() + seq_cur.size() +
             words_for_bytes(column.size() * sizeof(cell)) + 12;
    }
  };

  match_report push_fallback(const space_type& ps, Symbol s, std::int64_t a, push_stats* stats) {
    const cell cap = static_cast<cell>(k_ + 1);
    cell diag = 0;  // D[-1, i-1]
    cell up = 0;    // D[-1, i]
    for (std::size_t j = 0; j < fallback_.size(); ++j) {
      const cell old = fallback_[j];
      const cell sub = static_cast<cell>(diag + (ps[j] == s ? 0 : 1));
      const cell v = std::min<cell>({cap, static_cast<cell>(old + 1), static_cast<cell>(up + 1), sub});
      fallback_[j] = v;
      diag = old;
      up = v;
    }
    if (stats) stats->ops += fallback_.size();
    const cell out = fallback_.back();
    return out <= k_ ? match_report::matched(a, out) : match_report::no_match(a);
  }

  basic_region_window<Symbol> window_;
  std::int64_t m_;
  std::uint32_t k_;
  std::vector<cell> fallback_;
  std::array<child, 2> children_{};
};

using difference_stream = basic_difference_stream<std::uint8_t>;

}  // namespace mstream
