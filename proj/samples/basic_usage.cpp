// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

// Two streams sharing one pattern space, in each of the three modes.

#include <iostream>
#include <string_view>

#include <mstream/mstream.hpp>

namespace {

void demo(mstream::match_mode mode, std::uint32_t k) {
  mstream::engine eng("abcab", mode, k);
  const auto left = eng.add_stream();
  const auto right = eng.add_stream();
  const std::string_view a = "xxabcabzz";
  const std::string_view b = "abxababcb";
  std::cout << "mode=" << mstream::to_string(mode) << " k=" << k << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (auto [id, text] : {std::pair{left, a}, std::pair{right, b}}) {
      const auto r = eng.push(id, static_cast<std::uint8_t>(text[i]));
      if (r.is_match()) std::cout << "  stream " << id << " match ending at " << r.end << " distance " << r.distance << '\n';
    }
  }
  const auto space = eng.space_usage();
  std::cout << "  pattern words " << space.pattern_words << ", total words " << space.total_words << '\n';
}

}  // namespace

int main() {
  demo(mstream::match_mode::exact, 0);
  demo(mstream::match_mode::mismatch, 1);
  demo(mstream::match_mode::difference, 1);
}
