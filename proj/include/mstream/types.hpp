// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mstream {

// Symbols are small unsigned codes; 8-bit by default.
template <class T>
concept symbol_type = std::unsigned_integral<T> && (sizeof(T) <= sizeof(std::uint32_t));

enum class match_mode { exact, mismatch, difference };

inline std::string_view to_string(match_mode mode) {
  switch (mode) {
    case match_mode::exact: return "exact";
    case match_mode::mismatch: return "mismatch";
    case match_mode::difference: return "difference";
  }
  return "?";
}

class build_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class unknown_stream : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class verdict : std::uint8_t { match, no_match, no_alignment };

inline std::string_view to_string(verdict v) {
  switch (v) {
    case verdict::match: return "match";
    case verdict::no_match: return "nomatch";
    case verdict::no_alignment: return "noalign";
  }
  return "?";
}

// Output for one arrival. `distance` is meaningful only for verdict::match
// (Hamming distance in mismatch mode, edit distance in difference mode,
// always 0 in exact mode).
struct match_report {
  verdict kind = verdict::no_alignment;
  std::uint32_t distance = 0;
  std::int64_t end = -1;  // absolute text index of the arrival

  static match_report matched(std::int64_t end, std::uint32_t distance = 0) {
    return {verdict::match, distance, end};
  }
  static match_report no_match(std::int64_t end) { return {verdict::no_match, 0, end}; }
  static match_report no_alignment(std::int64_t end) { return {verdict::no_alignment, 0, end}; }

  bool is_match() const { return kind == verdict::match; }

  friend bool operator==(const match_report&, const match_report&) = default;
};

// Instrumentation for a single push. `ops` counts primitive steps:
// dictionary/automaton probes, region visits, pattern-pattern LCE calls and
// DP cells.
struct push_stats {
  std::uint64_t ops = 0;
  std::uint32_t lce_queries = 0;
  std::uint32_t max_regions_overlapped = 0;
  std::uint32_t out_of_window = 0;
  // Out-of-window events attributable to the emitted output. For the
  // difference matcher these happen while the owning child was preparing.
  std::uint32_t output_window_misses = 0;
  // Arrival index at which the child that produced this output was spawned
  // (difference mode, child-process regime only), -1 otherwise.
  std::int64_t producer = -1;

  void note_regions(std::uint32_t overlapped) {
    ++lce_queries;
    if (overlapped > max_regions_overlapped) max_regions_overlapped = overlapped;
  }
};

inline std::size_t words_for_bytes(std::size_t bytes) { return (bytes + 7) / 8; }

}  // namespace mstream
