// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detail/static_map.hpp"
#include "detail/suffix_array.hpp"
#include "detail/suffix_automaton.hpp"
#include "types.hpp"

namespace mstream {

// A recognised pattern substring: an automaton state plus the length of the
// substring it was reached with. Fits in one word.
struct locus {
  std::uint32_t state = 0;
  std::uint32_t length = 0;

  friend bool operator==(const locus&, const locus&) = default;
};

// One entry of the shift dictionary for matched-prefix length `prefix`:
// on symbol `symbol` the automaton falls back to border `border`, then
// extends by one.
struct shift_entry {
  std::uint32_t prefix = 0;
  std::uint32_t symbol = 0;
  std::uint32_t border = 0;

  friend bool operator==(const shift_entry&, const shift_entry&) = default;
};

// Immutable preprocessing output shared by every stream: the pattern, the
// real-time KMP shift dictionaries, forward/reverse pattern LCE structures and
// a substring automaton. Never mutated after construction.
template <symbol_type Symbol = std::uint8_t>
class basic_pattern_space {
 public:
  using symbol = Symbol;

  // Largest supported bound; DP cells are stored as 16-bit values.
  static constexpr std::uint32_t kMaxBound = 65534;

  basic_pattern_space(std::span<const Symbol> pattern, match_mode mode, std::uint32_t k)
      : pattern_(pattern.begin(), pattern.end()), mode_(mode), k_(k) {
    if (pattern_.empty()) throw build_error("pattern must not be empty");
    if (pattern_.size() >= (std::size_t{1} << 31)) throw build_error("pattern too long");
    if (mode_ == match_mode::exact && k_ != 0) throw build_error("exact mode takes k = 0");
    if (mode_ == match_mode::difference && k_ == 0) throw build_error("difference mode needs k >= 1");
    if (k_ > kMaxBound) throw build_error("k too large");

    build_shift_dictionaries();
    fwd_ = detail::suffix_lce(std::span<const Symbol>(pattern_));
    std::vector<Symbol> reversed(pattern_.rbegin(), pattern_.rend());
    rev_ = detail::suffix_lce(std::span<const Symbol>(reversed));
    automaton_ = detail::substring_automaton(std::span<const Symbol>(pattern_));
  }

  basic_pattern_space(std::basic_string_view<char> pattern, match_mode mode, std::uint32_t k)
    requires std::same_as<Symbol, std::uint8_t>
      : basic_pattern_space(std::span<const Symbol>(
                                reinterpret_cast<const Symbol*>(pattern.data()), pattern.size()),
                            mode, k) {}

  std::size_t size() const { return pattern_.size(); }
  std::span<const Symbol> pattern() const { return pattern_; }
  Symbol operator[](std::size_t j) const { return pattern_[j]; }
  match_mode mode() const { return mode_; }
  std::uint32_t k() const { return k_; }

  // Next matched-prefix length of the KMP automaton from prefix length j
  // (0 <= j <= m) on symbol s. One dictionary lookup at most.
  std::size_t shift_lookup(std::size_t j, Symbol s, std::uint64_t* ops = nullptr) const {
    if (ops) ++*ops;
    if (j < pattern_.size() && pattern_[j] == s) return j + 1;
    std::uint32_t probes = 0;
    if (auto border = shifts_.find(shift_key(j, s), &probes)) {
      if (ops) *ops += probes;
      return *border + 1;
    }
    if (ops) *ops += probes;
    return pattern_[0] == s ? 1 : 0;
  }

  // All dictionary entries for prefix length j.
  std::vector<shift_entry> shift_dictionary(std::size_t j) const {
    auto lo = std::lower_bound(entries_.begin(), entries_.end(), j,
                               [](const shift_entry& e, std::size_t v) { return e.prefix < v; });
    std::vector<shift_entry> out;
    for (; lo != entries_.end() && lo->prefix == j; ++lo) out.push_back(*lo);
    return out;
  }

  std::span<const shift_entry> shift_entries() const { return entries_; }

  // Longest common prefix of P[j1..] and P[j2..]; index m is the empty suffix.
  std::size_t lce_pp(std::size_t j1, std::size_t j2) const { return fwd_.query(j1, j2); }

  // Longest common suffix of P[0..j1] and P[0..j2]; index -1 is the empty prefix.
  std::size_t lcs_pp(std::int64_t j1, std::int64_t j2) const {
    if (j1 < 0 || j2 < 0) return 0;
    const auto last = static_cast<std::int64_t>(pattern_.size()) - 1;
    return rev_.query(static_cast<std::size_t>(last - j1), static_cast<std::size_t>(last - j2));
  }

  static constexpr locus locus_start() { return {}; }

  std::optional<locus> locus_extend(locus at, Symbol s, std::uint64_t* ops = nullptr) const {
    std::uint32_t probes = 0;
    auto next = automaton_.step(at.state, static_cast<std::uint32_t>(s), &probes);
    if (ops) *ops += probes;
    if (!next) return std::nullopt;
    return locus{*next, at.length + 1};
  }

  // Some j with P[j .. j + length - 1] equal to the recognised substring.
  std::size_t locus_position(locus at) const {
    if (at.length == 0) return 0;
    return automaton_.first_end(at.state) + 1 - at.length;
  }

  std::optional<std::size_t> first_occurrence(Symbol s) const {
    auto at = locus_extend(locus_start(), s);
    if (!at) return std::nullopt;
    return locus_position(*at);
  }

  std::size_t words() const {
    return words_for_bytes(pattern_.size() * sizeof(Symbol)) + shifts_.words() +
           words_for_bytes(entries_.size() * sizeof(shift_entry)) + fwd_.words() + rev_.words() +
           automaton_.words() + 2;
  }

 private:
  static std::uint64_t shift_key(std::size_t j, Symbol s) {
    return (static_cast<std::uint64_t>(j) << 32) | static_cast<std::uint32_t>(s);
  }

  // D_j is D_{b} minus the entry for P[j], plus (P[b], b), where b is the
  // longest proper border of P[0..j-1]. D_m uses the same rule with nothing
  // removed.
  void build_shift_dictionaries() {
    const std::size_t m = pattern_.size();
    std::vector<std::size_t> border(m + 1, 0);
    for (std::size_t j = 1, b = 0; j < m; ++j) {
      while (b > 0 && pattern_[j] != pattern_[b]) b = border[b];
      if (pattern_[j] == pattern_[b]) ++b;
      border[j + 1] = b;
    }

    std::vector<std::vector<std::pair<Symbol, std::uint32_t>>> dicts(m + 1);
    for (std::size_t j = 2; j <= m; ++j) {
      const std::size_t b = border[j];
      if (b == 0) continue;
      auto& d = dicts[j];
      for (const auto& e : dicts[b])
        if (j == m || e.first != pattern_[j]) d.push_back(e);
      if (j == m || pattern_[b] != pattern_[j]) d.emplace_back(pattern_[b], static_cast<std::uint32_t>(b));
    }

    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
    for (std::size_t j = 0; j <= m; ++j) {
      auto& d = dicts[j];
      std::sort(d.begin(), d.end());
      for (const auto& [s, b] : d) {
        entries_.push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(s), b});
        keyed.emplace_back(shift_key(j, s), b);
      }
    }
    shifts_ = detail::static_map(keyed);
  }

  std::vector<Symbol> pattern_;
  match_mode mode_;
  std::uint32_t k_;
  detail::static_map shifts_;
  std::vector<shift_entry> entries_;
  detail::suffix_lce fwd_;
  detail::suffix_lce rev_;
  detail::substring_automaton automaton_;
};

using pattern_space = basic_pattern_space<std::uint8_t>;

}  // namespace mstream
