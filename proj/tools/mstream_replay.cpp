// Copyright 2026 The mstream Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <mstream/replay.hpp>

int main(int argc, char** argv) {
  using namespace mstream;

  CLI::App app{"Replay a multi-stream trace through the streaming matcher"};
  std::string pattern;
  std::string pattern_file;
  std::string mode_name;
  std::optional<std::uint32_t> k;
  std::string trace_path = "-";
  bool verify = false;
  std::string report = "none";
  std::string format = "tsv";

  auto* p_opt = app.add_option("--pattern", pattern, "pattern string");
  auto* pf_opt = app.add_option("--pattern-file", pattern_file, "file holding the pattern bytes");
  p_opt->excludes(pf_opt);
  app.add_option("--mode", mode_name, "exact | mismatch | difference")
      ->required()
      ->check(CLI::IsMember({"exact", "mismatch", "difference"}));
  app.add_option("--k", k, "mismatch / difference bound");
  app.add_option("--trace", trace_path, "trace file, or - for stdin");
  app.add_flag("--verify", verify, "check every report against a brute-force oracle");
  app.add_option("--report", report, "append instrumentation")->check(CLI::IsMember({"space", "ops", "none"}));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return replay::kExitUsage;
  }

  replay::options opt;
  static const std::map<std::string, match_mode> kModes{
      {"exact", match_mode::exact}, {"mismatch", match_mode::mismatch}, {"difference", match_mode::difference}};
  opt.mode = kModes.at(mode_name);
  if (opt.mode != match_mode::exact && !k) {
    std::cerr << "error: --k is required for --mode " << mode_name << '\n';
    return replay::kExitUsage;
  }
  opt.k = k.value_or(0);
  opt.verify = verify;
  opt.report = report == "space" ? replay::report_kind::space
               : report == "ops" ? replay::report_kind::ops
                                 : replay::report_kind::none;
  opt.format = format == "json" ? replay::output_format::json : replay::output_format::tsv;

  if (!pattern_file.empty()) {
    std::ifstream in(pattern_file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open " << pattern_file << '\n';
      return replay::kExitUsage;
    }
    opt.pattern.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    if (!opt.pattern.empty() && opt.pattern.back() == '\n') opt.pattern.pop_back();
  } else if (p_opt->count() > 0) {
    opt.pattern = pattern;
  } else {
    std::cerr << "error: one of --pattern or --pattern-file is required\n";
    return replay::kExitUsage;
  }

  std::ios::sync_with_stdio(false);
  if (trace_path == "-") return replay::run(opt, std::cin, std::cout, std::cerr);
  std::ifstream trace(trace_path, std::ios::binary);
  if (!trace) {
    std::cerr << "error: cannot open " << trace_path << '\n';
    return replay::kExitUsage;
  }
  return replay::run(opt, trace, std::cout, std::cerr);
}
