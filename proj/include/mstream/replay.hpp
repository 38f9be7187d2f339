// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Trace replay: feeds "<stream_id>\t<symbol>" events into an engine and
// prints one record per report. Shared by the command-line tool and tests.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "oracles.hpp"
#include "types.hpp"

namespace mstream::replay {

struct trace_event {
  stream_id stream = 0;
  std::uint8_t symbol = 0;

  friend bool operator==(const trace_event&, const trace_event&) = default;
};

class trace_error : public std::runtime_error {
 public:
  trace_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Highest stream id a trace may mention; streams are created densely up to it.
inline constexpr stream_id kMaxStreamId = (1u << 20) - 1;

// Parses one trace line. Blank lines and lines starting with '#' yield
// nullopt. The symbol is either a single raw byte or a \xHH escape.
inline std::optional<trace_event> parse_line(std::string_view line, std::size_t line_no) {
  if (line.empty() || line.front() == '#') return std::nullopt;
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos) throw trace_error(line_no, "expected <stream_id><TAB><symbol>");
  const std::string_view id_text = line.substr(0, tab);
  const std::string_view sym_text = line.substr(tab + 1);

  trace_event ev;
  auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), ev.stream);
  if (id_text.empty() || ec != std::errc{} || ptr != id_text.data() + id_text.size())
    throw trace_error(line_no, "bad stream id '" + std::string(id_text) + "'");
  if (ev.stream > kMaxStreamId) throw trace_error(line_no, "stream id out of range");

  if (sym_text.size() == 1) {
    ev.symbol = static_cast<std::uint8_t>(sym_text[0]);
  } else if (sym_text.size() == 4 && sym_text[0] == '\\' && (sym_text[1] == 'x' || sym_text[1] == 'X')) {
    unsigned value = 0;
    auto [p2, ec2] = std::from_chars(sym_text.data() + 2, sym_text.data() + 4, value, 16);
    if (ec2 != std::errc{} || p2 != sym_text.data() + 4) throw trace_error(line_no, "bad \\x escape");
    ev.symbol = static_cast<std::uint8_t>(value);
  } else {
    throw trace_error(line_no, "symbol must be one byte or a \\xHH escape");
  }
  return ev;
}

// Inverse of the symbol field of parse_line: printable bytes stay raw.
inline std::string escape_symbol(std::uint8_t s) {
  if (s > 0x20 && s < 0x7f && s != '\\') return std::string(1, static_cast<char>(s));
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string{'\\', 'x', kHex[s >> 4], kHex[s & 15]};
}

inline std::string format_line(const trace_event& ev) {
  return std::to_string(ev.stream) + '\t' + escape_symbol(ev.symbol);
}

enum class output_format { tsv, json };
enum class report_kind { none, space, ops };

struct options {
  std::string pattern;
  match_mode mode = match_mode::exact;
  std::uint32_t k = 0;
  bool verify = false;
  report_kind report = report_kind::none;
  output_format format = output_format::tsv;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiverged = 1;
inline constexpr int kExitUsage = 2;

inline std::string format_record(stream_id sid, const match_report& r, match_mode mode, output_format fmt) {
  const bool has_distance = r.is_match() && mode != match_mode::exact;
  if (fmt == output_format::json) {
    nlohmann::ordered_json j;
    j["stream_id"] = sid;
    j["position"] = r.end;
    j["verdict"] = std::string(to_string(r.kind));
    j["distance"] = has_distance ? nlohmann::ordered_json(r.distance) : nlohmann::ordered_json(nullptr);
    return j.dump();
  }
  std::string out = std::to_string(sid) + '\t' + std::to_string(r.end) + '\t' + std::string(to_string(r.kind)) + '\t';
  if (has_distance) out += std::to_string(r.distance);
  return out;
}

inline std::string format_space(const space_report& s, output_format fmt) {
  if (fmt == output_format::json) {
    nlohmann::ordered_json j;
    j["pattern_words"] = s.pattern_words;
    j["per_stream_words"] = s.per_stream_words;
    j["total_words"] = s.total_words;
    nlohmann::ordered_json wrap;
    wrap["space_report"] = std::move(j);
    return wrap.dump();
  }
  std::string per;
  for (std::size_t i = 0; i < s.per_stream_words.size(); ++i) {
    if (i) per += ',';
    per += std::to_string(s.per_stream_words[i]);
  }
  return "#space\tpattern_words=" + std::to_string(s.pattern_words) + "\tper_stream_words=" + per +
         "\ttotal_words=" + std::to_string(s.total_words);
}

inline std::string format_ops(const ops_report& o, output_format fmt) {
  if (fmt == output_format::json) {
    nlohmann::ordered_json j;
    j["mode"] = std::string(to_string(o.mode));
    j["per_push_max_ops"] = o.per_push_max_ops;
    j["pushes"] = o.pushes;
    j["max_regions_overlapped"] = o.max_regions_overlapped;
    j["out_of_window"] = o.out_of_window;
    nlohmann::ordered_json wrap;
    wrap["ops_report"] = std::move(j);
    return wrap.dump();
  }
  return "#ops\tmode=" + std::string(to_string(o.mode)) + "\tper_push_max_ops=" + std::to_string(o.per_push_max_ops) +
         "\tpushes=" + std::to_string(o.pushes) + "\tmax_regions_overlapped=" +
         std::to_string(o.max_regions_overlapped) + "\tout_of_window=" + std::to_string(o.out_of_window);
}

// Replays a whole trace. Returns the process exit code: 0 on success,
// 1 when --verify found a divergence, 2 on a malformed trace or bad options.
inline int run(const options& opt, std::istream& trace, std::ostream& out, std::ostream& err) {
  std::optional<engine> eng;
  try {
    eng.emplace(std::string_view(opt.pattern), opt.mode, opt.k);
  } catch (const build_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto pattern = eng->space().pattern();
  std::vector<oracle::stream_oracle<std::uint8_t>> oracles;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(trace, line)) {
    ++line_no;
    std::optional<trace_event> ev;
    try {
      ev = parse_line(line, line_no);
    } catch (const trace_error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    if (!ev) continue;
    while (eng->stream_count() <= ev->stream) {
      eng->add_stream();
      if (opt.verify) oracles.emplace_back(pattern, opt.mode, opt.k);
    }
    const match_report r = eng->push(ev->stream, ev->symbol);
    if (r.kind != verdict::no_alignment) out << format_record(ev->stream, r, opt.mode, opt.format) << '\n';
    if (opt.verify) {
      const match_report want = oracles[ev->stream].push(ev->symbol);
      if (!(want == r)) {
        err << "divergence at line " << line_no << " stream " << ev->stream << " position " << r.end
            << ": engine " << to_string(r.kind) << '/' << r.distance << ", oracle " << to_string(want.kind) << '/'
            << want.distance << '\n';
        return kExitDiverged;
      }
    }
  }

  if (opt.report == report_kind::space) out << format_space(eng->space_usage(), opt.format) << '\n';
  if (opt.report == report_kind::ops) out << format_ops(eng->ops_usage(), opt.format) << '\n';
  return kExitOk;
}

}  // namespace mstream::replay
