// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "static_map.hpp"

namespace mstream::detail {

// Frozen suffix automaton of one string. A state stands for a class of
// substrings sharing their end positions; walking a transition appends one
// symbol. Each state keeps the end position of its first occurrence, so any
// recognised substring can be mapped back to an occurrence.
class substring_automaton {
 public:
  substring_automaton() = default;

  template <std::unsigned_integral Symbol>
  explicit substring_automaton(std::span<const Symbol> text) {
    struct node {
      std::uint32_t len = 0;
      std::int32_t link = -1;
      std::uint32_t first_end = 0;
      std::map<std::uint32_t, std::uint32_t> next;
    };
    std::vector<node> nodes;
    nodes.reserve(2 * text.size() + 1);
    nodes.push_back({});
    std::uint32_t last = 0;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      const std::uint32_t c = static_cast<std::uint32_t>(text[pos]);
      const auto cur = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({nodes[last].len + 1, -1, static_cast<std::uint32_t>(pos), {}});
      std::int32_t p = static_cast<std::int32_t>(last);
      while (p != -1 && !nodes[p].next.contains(c)) {
        nodes[p].next[c] = cur;
        p = nodes[p].link;
      }
      if (p == -1) {
        nodes[cur].link = 0;
      } else {
        const std::uint32_t q = nodes[p].next[c];
        if (nodes[p].len + 1 == nodes[q].len) {
          nodes[cur].link = static_cast<std::int32_t>(q);
        } else {
          const auto clone = static_cast<std::uint32_t>(nodes.size());
          node copy = nodes[q];
          copy.len = nodes[p].len + 1;
          nodes.push_back(std::move(copy));
          while (p != -1) {
            auto it = nodes[p].next.find(c);
            if (it == nodes[p].next.end() || it->second != q) break;
            it->second = clone;
            p = nodes[p].link;
          }
          nodes[q].link = static_cast<std::int32_t>(clone);
          nodes[cur].link = static_cast<std::int32_t>(clone);
        }
      }
      last = cur;
    }

    first_end_.resize(nodes.size());
    std::vector<std::pair<std::uint64_t, std::uint32_t>> edges;
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      first_end_[s] = nodes[s].first_end;
      for (const auto& [c, t] : nodes[s].next) edges.emplace_back(key(static_cast<std::uint32_t>(s), c), t);
    }
    transitions_ = static_map(edges);
  }

  static constexpr std::uint32_t root() { return 0; }

  // Target state, or nullopt when the extended string does not occur.
  std::optional<std::uint32_t> step(std::uint32_t state, std::uint32_t symbol,
                                    std::uint32_t* probes = nullptr) const {
    return transitions_.find(key(state, symbol), probes);
  }

  std::uint32_t first_end(std::uint32_t state) const { return first_end_[state]; }

  std::size_t states() const { return first_end_.size(); }
  std::size_t transitions() const { return transitions_.size(); }

  std::size_t words() const {
    return (first_end_.size() * sizeof(std::uint32_t) + 7) / 8 + transitions_.words();
  }

 private:
  static std::uint64_t key(std::uint32_t state, std::uint32_t symbol) {
    return (std::uint64_t{state} << 32) | symbol;
  }

  std::vector<std::uint32_t> first_end_;
  static_map transitions_;
};

}  // namespace mstream::detail
