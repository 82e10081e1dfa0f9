#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sinkloc/instance.hpp"

namespace sinkloc {

// Line 0 means the problem is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads the line format
//   # comment
//   n <int>
//   k <int>            (optional, default 1)
//   edge <u> <v> <tau> <cap>
//   weight <v> <w>     (missing weights are 0)
// Syntax problems throw ParseError; a well-formed but invalid tree throws
// InstanceError. `k_override` replaces the file's k.
Instance parse_instance(std::string_view text, std::optional<std::int64_t> k_override = std::nullopt);
Instance read_instance_file(const std::string& path, std::optional<std::int64_t> k_override = std::nullopt);

// Canonical form: n, k, edges in stored order, then nonzero weights by vertex.
std::string serialize_instance(const Instance& inst);

}  // namespace sinkloc
