// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pattern_space.hpp"
#include "types.hpp"

namespace mstream {

// Text substring T[text_start .. text_start + len - 1] equal to
// P[pat_start .. pat_start + len - 1]. A wildcard region has length one and
// marks a text symbol that does not occur in the pattern.
struct p_region {
  static constexpr std::uint32_t kWildcard = std::numeric_limits<std::uint32_t>::max();

  std::int64_t text_start = 0;
  std::uint32_t pat_start = 0;
  std::uint32_t len = 0;

  bool wildcard() const { return pat_start == kWildcard; }
  std::int64_t text_end() const { return text_start + len; }  // one past the last position

  friend bool operator==(const p_region&, const p_region&) = default;
};

// Result of a text-pattern extension query. `out_of_window` means the answer
// depends on text that has already been evicted.
struct lce_result {
  std::size_t length = 0;
  bool out_of_window = false;
  std::uint32_t regions = 0;  // regions overlapping the matched extent
};

// Region handles are absolute sequence numbers; region q lives in slot
// q % capacity while it is retained.
using region_seq = std::uint64_t;

// Per-stream greedy p-representation of the most recent text, kept as a ring
// of at most `capacity` regions (capacity 0 = unbounded). Answers forward and
// reverse LCE queries between the retained text and the pattern.
template <symbol_type Symbol = std::uint8_t>
class basic_region_window {
 public:
  using space_type = basic_pattern_space<Symbol>;

  explicit basic_region_window(std::size_t capacity = 0) : capacity_(capacity) {
    if (capacity_ > 0) ring_.resize(capacity_);
  }

  // Greedy extension: grow the last region when the pattern still contains
  // it followed by s, otherwise open a new region.
  void append(const space_type& ps, Symbol s, push_stats* stats = nullptr) {
    const std::int64_t pos = text_len_++;
    std::uint64_t ops = 1;
    if (count() > 0 && !extends_blocked_) {
      if (auto next = ps.locus_extend(locus_, s, &ops)) {
        p_region& last = at(next_seq_ - 1);
        ++last.len;
        last.pat_start = static_cast<std::uint32_t>(ps.locus_position(*next));
        locus_ = *next;
        if (stats) stats->ops += ops;
        return;
      }
    }
    p_region fresh{pos, p_region::kWildcard, 1};
    if (auto single = ps.locus_extend(space_type::locus_start(), s, &ops)) {
      fresh.pat_start = static_cast<std::uint32_t>(ps.locus_position(*single));
      locus_ = *single;
      extends_blocked_ = false;
    } else {
      locus_ = space_type::locus_start();
      extends_blocked_ = true;
    }
    push_region(fresh);
    if (stats) stats->ops += ops;
  }

  // Length of the longest common prefix of P[j..m-1] and T[pos..], at most
  // `limit`. `hint` is any retained region handle near pos; on return it
  // names the region holding the last position inspected.
  lce_result lce_text(const space_type& ps, std::int64_t pos, std::size_t j,
                      std::size_t limit = std::numeric_limits<std::size_t>::max(),
                      region_seq* hint = nullptr, push_stats* stats = nullptr) const {
    lce_result out;
    const std::size_t m = ps.size();
    if (j >= m || pos >= text_len_ || limit == 0) return finish(out, stats);
    if (pos < evicted_before()) {
      out.out_of_window = true;
      return finish(out, stats);
    }
    region_seq q = locate(pos, hint ? *hint : next_seq_ - 1, stats);
    for (;;) {
      const p_region& r = at(q);
      if (stats) ++stats->ops;
      if (r.wildcard()) break;
      const std::size_t off = static_cast<std::size_t>(pos + out.length - r.text_start);
      const std::size_t avail = r.len - off;
      const std::size_t l = ps.lce_pp(r.pat_start + off, j + out.length);
      const std::size_t step = std::min({l, avail, limit - out.length});
      if (step > 0) ++out.regions;
      out.length += step;
      if (l < avail || out.length >= limit || j + out.length >= m) break;
      if (q + 1 == next_seq_) break;
      ++q;
    }
    if (hint) *hint = q;
    return finish(out, stats);
  }

  // Length of the longest common suffix of T[..pos] and P[0..j]. Reports
  // out_of_window instead of a truncated length when the match runs into
  // evicted text.
  lce_result lcs_text(const space_type& ps, std::int64_t pos, std::int64_t j,
                      region_seq* hint = nullptr, push_stats* stats = nullptr) const {
    lce_result out;
    if (j < 0 || pos < 0 || pos >= text_len_) return finish(out, stats);
    if (pos < evicted_before()) {
      out.out_of_window = true;
      return finish(out, stats);
    }
    region_seq q = locate(pos, hint ? *hint : next_seq_ - 1, stats);
    for (;;) {
      const p_region& r = at(q);
      if (stats) ++stats->ops;
      if (r.wildcard()) break;
      const auto cur = pos - static_cast<std::int64_t>(out.length);
      const std::size_t off = static_cast<std::size_t>(cur - r.text_start);
      const std::size_t avail = off + 1;
      const std::size_t l =
          ps.lcs_pp(static_cast<std::int64_t>(r.pat_start + off), j - static_cast<std::int64_t>(out.length));
      const std::size_t step = std::min(l, avail);
      if (step > 0) ++out.regions;
      out.length += step;
      if (l < avail || j - static_cast<std::int64_t>(out.length) < 0) break;
      if (q == oldest_seq_) {
        if (r.text_start > 0) out.out_of_window = true;
        break;
      }
      --q;
    }
    if (hint) *hint = q;
    return finish(out, stats);
  }

  // Symbol at a retained text position, read through the covering region.
  std::optional<Symbol> symbol_at(const space_type& ps, std::int64_t pos, region_seq* hint = nullptr,
                                  push_stats* stats = nullptr) const {
    if (pos < evicted_before() || pos >= text_len_) return std::nullopt;
    const region_seq q = locate(pos, hint ? *hint : next_seq_ - 1, stats);
    if (hint) *hint = q;
    const p_region& r = at(q);
    if (r.wildcard()) return std::nullopt;
    return ps[r.pat_start + static_cast<std::size_t>(pos - r.text_start)];
  }

  // Handle of the retained region covering pos (pos must be retained).
  region_seq locate(std::int64_t pos, region_seq hint, push_stats* stats = nullptr) const {
    region_seq q = std::clamp(hint, oldest_seq_, next_seq_ - 1);
    while (at(q).text_start > pos) {
      --q;
      if (stats) ++stats->ops;
    }
    while (at(q).text_end() <= pos) {
      ++q;
      if (stats) ++stats->ops;
    }
    return q;
  }

  std::int64_t text_len() const { return text_len_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t count() const { return static_cast<std::size_t>(next_seq_ - oldest_seq_); }
  region_seq oldest_seq() const { return oldest_seq_; }
  region_seq end_seq() const { return next_seq_; }
  const p_region& region(region_seq q) const { return at(q); }
  locus current_locus() const { return locus_; }

  // Absolute index of the oldest retained text position.
  std::int64_t evicted_before() const { return count() == 0 ? text_len_ : at(oldest_seq_).text_start; }

  std::vector<p_region> regions() const {
    std::vector<p_region> out;
    for (region_seq q = oldest_seq_; q < next_seq_; ++q) out.push_back(at(q));
    return out;
  }

  // two words per region slot, plus counters, locus and flags
  std::size_t words() const { return 2 * ring_.size() + 6; }

 private:
  static lce_result finish(lce_result out, push_stats* stats) {
    if (stats) {
      stats->note_regions(out.regions);
      if (out.out_of_window) ++stats->out_of_window;
    }
    return out;
  }

  p_region& at(region_seq q) { return ring_[capacity_ ? q % capacity_ : q]; }
  const p_region& at(region_seq q) const { return ring_[capacity_ ? q % capacity_ : q]; }

  void push_region(const p_region& r) {
    if (capacity_ == 0) {
      ring_.push_back(r);
    } else {
      if (count() == capacity_) ++oldest_seq_;
      ring_[next_seq_ % capacity_] = r;
    }
    ++next_seq_;
  }

  std::size_t capacity_;
  std::vector<p_region> ring_;
  region_seq oldest_seq_ = 0;
  region_seq next_seq_ = 0;
  std::int64_t text_len_ = 0;
  locus locus_{};
  bool extends_blocked_ = false;
};

using region_window = basic_region_window<std::uint8_t>;

}  // namespace mstream
