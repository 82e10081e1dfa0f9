#pragma once

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace sinkloc::testing {

struct GoldenCase {
  std::string name;
  int exit_code = 0;
  std::vector<std::string> args;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Reads `name<TAB>exit<TAB>arguments` lines; {dir} expands to `dir`.
inline std::vector<GoldenCase> load_golden_cases(const std::string& dir) {
  std::ifstream in(dir + "/cases.tsv");
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    GoldenCase c;
    std::string exit_code;
    std::string args;
    std::getline(fields, c.name, '\t');
    std::getline(fields, exit_code, '\t');
    std::getline(fields, args);
    c.exit_code = std::stoi(exit_code);
    std::istringstream words(args);
    for (std::string w; words >> w;) c.args.push_back(std::regex_replace(w, std::regex("\\{dir\\}"), dir));
    cases.push_back(std::move(c));
  }
  return cases;
}

// Masks timings and the golden directory.
inline std::string normalize_output(const std::string& text, const std::string& dir) {
  std::string out = std::regex_replace(text, std::regex("wall_time_ms [0-9.]+"), "wall_time_ms *");
  std::size_t pos = 0;
  while ((pos = out.find(dir, pos)) != std::string::npos) out.replace(pos, dir.size(), "{dir}");
  return out;
}

struct GoldenRun {
  int exit_code = 0;
  std::string output;
};

// Normalized stdout followed by stderr.
inline GoldenRun run_golden_case(const GoldenCase& c, const std::string& dir) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(c.args, out, err);
  return {code, normalize_output(out.str(), dir) + normalize_output(err.str(), dir)};
}

}  // namespace sinkloc::testing
