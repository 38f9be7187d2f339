// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "exact_matcher.hpp"
#include "kdifference_matcher.hpp"
#include "kmismatch_matcher.hpp"
#include "pattern_space.hpp"
#include "types.hpp"

namespace mstream {

using stream_id = std::uint32_t;

struct space_report {
  std::size_t pattern_words = 0;
  std::vector<std::size_t> per_stream_words;  // removed streams report 0
  std::size_t total_words = 0;
};

struct ops_report {
  match_mode mode = match_mode::exact;
  std::uint64_t per_push_max_ops = 0;
  std::uint64_t pushes = 0;
  std::uint32_t max_regions_overlapped = 0;  // over every LCE/LCS query
  std::uint64_t out_of_window = 0;
};

// Many streams over one shared, read-only pattern space. Pushes to distinct
// streams touch disjoint state and may run on different threads; pushes to
// one stream must be serialised. add_stream, remove_stream and the usage
// reports must not overlap any push.
template <symbol_type Symbol = std::uint8_t>
class basic_engine {
 public:
  using space_type = basic_pattern_space<Symbol>;
  using stream_state =
      std::variant<basic_exact_stream<Symbol>, basic_mismatch_stream<Symbol>, basic_difference_stream<Symbol>>;

  basic_engine(std::span<const Symbol> pattern, match_mode mode, std::uint32_t k)
      : space_(std::make_shared<const space_type>(pattern, mode, k)) {}

  explicit basic_engine(std::shared_ptr<const space_type> space) : space_(std::move(space)) {}

  basic_engine(std::string_view pattern, match_mode mode, std::uint32_t k)
    requires std::same_as<Symbol, std::uint8_t>
      : space_(std::make_shared<const space_type>(pattern, mode, k)) {}

  stream_id add_stream() {
    switch (space_->mode()) {
      case match_mode::exact: streams_.emplace_back(basic_exact_stream<Symbol>{}); break;
      case match_mode::mismatch: streams_.emplace_back(basic_mismatch_stream<Symbol>(space_->k())); break;
      case match_mode::difference: streams_.emplace_back(basic_difference_stream<Symbol>(*space_)); break;
    }
    stream_ops_.emplace_back();
    return static_cast<stream_id>(streams_.size() - 1);
  }

  // Frees the stream's text space; its id is never reused.
  void remove_stream(stream_id id) { state(id).reset(); }

  match_report push(stream_id id, Symbol s, push_stats* stats = nullptr) {
    auto& st = state(id);
    push_stats local;
    push_stats& ps = stats ? *stats : local;
    ps = push_stats{};
    const match_report r = std::visit([&](auto& x) { return x.push(*space_, s, &ps); }, *st);
    ops_report& ops = stream_ops_[id];
    ops.per_push_max_ops = std::max(ops.per_push_max_ops, ps.ops);
    ops.max_regions_overlapped = std::max(ops.max_regions_overlapped, ps.max_regions_overlapped);
    ops.out_of_window += ps.out_of_window;
    ++ops.pushes;
    return r;
  }

  bool contains(stream_id id) const { return id < streams_.size() && streams_[id].has_value(); }
  std::size_t stream_count() const { return streams_.size(); }

  const space_type& space() const { return *space_; }
  std::shared_ptr<const space_type> shared_space() const { return space_; }

  const stream_state& stream(stream_id id) const { return *state_const(id); }

  std::size_t stream_words(stream_id id) const {
    const auto& st = state_const(id);
    return std::visit([](const auto& x) { return x.words(); }, *st);
  }

  space_report space_usage() const {
    space_report r;
    r.pattern_words = space_->words();
    r.total_words = r.pattern_words;
    for (const auto& st : streams_) {
      const std::size_t w = st ? std::visit([](const auto& x) { return x.words(); }, *st) : 0;
      r.per_stream_words.push_back(w);
      r.total_words += w;
    }
    return r;
  }

  ops_report ops_usage() const {
    ops_report r;
    for (const auto& o : stream_ops_) {
      r.per_push_max_ops = std::max(r.per_push_max_ops, o.per_push_max_ops);
      r.max_regions_overlapped = std::max(r.max_regions_overlapped, o.max_regions_overlapped);
      r.out_of_window += o.out_of_window;
      r.pushes += o.pushes;
    }
    r.mode = space_->mode();
    return r;
  }

 private:
  std::optional<stream_state>& state(stream_id id) {
    if (id >= streams_.size() || !streams_[id]) throw unknown_stream("unknown stream " + std::to_string(id));
    return streams_[id];
  }
  const std::optional<stream_state>& state_const(stream_id id) const {
    if (id >= streams_.size() || !streams_[id]) throw unknown_stream("unknown stream " + std::to_string(id));
    return streams_[id];
  }

  std::shared_ptr<const space_type> space_;
  std::vector<std::optional<stream_state>> streams_;
  std::vector<ops_report> stream_ops_;  // kept after remove_stream
};

using engine = basic_engine<std::uint8_t>;

}  // namespace mstream
