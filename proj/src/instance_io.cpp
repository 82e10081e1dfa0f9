#include "sinkloc/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sinkloc {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t to_int(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  return value;
}

void expect_fields(const std::vector<std::string_view>& fields, std::size_t count, std::size_t line) {
  if (fields.size() != count) {
    throw ParseError(line, "'" + std::string(fields[0]) + "' takes " + std::to_string(count - 1) + " values, got " +
                               std::to_string(fields.size() - 1));
  }
}

}  // namespace

Instance parse_instance(std::string_view text, std::optional<std::int64_t> k_override) {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::vector<RawEdge> edges;
  std::vector<std::pair<std::int64_t, std::int64_t>> weight_records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<std::string_view> f = split_fields(line);
    if (f.empty()) continue;
    if (f[0] == "n") {
      expect_fields(f, 2, line_no);
      if (n) throw ParseError(line_no, "duplicate 'n'");
      n = to_int(f[1], line_no);
      if (*n < 1) throw ParseError(line_no, "n must be positive");
    } else if (f[0] == "k") {
      expect_fields(f, 2, line_no);
      if (k) throw ParseError(line_no, "duplicate 'k'");
      k = to_int(f[1], line_no);
    } else if (f[0] == "edge") {
      expect_fields(f, 5, line_no);
      edges.push_back({to_int(f[1], line_no), to_int(f[2], line_no), to_int(f[3], line_no), to_int(f[4], line_no)});
    } else if (f[0] == "weight") {
      expect_fields(f, 3, line_no);
      weight_records.emplace_back(to_int(f[1], line_no), to_int(f[2], line_no));
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(f[0]) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 'n'");
  std::vector<std::int64_t> weights(static_cast<std::size_t>(*n), 0);
  std::vector<bool> seen(weights.size(), false);
  for (auto [v, w] : weight_records) {
    if (v < 0 || v >= *n) throw InstanceError(InstanceError::Kind::VertexOutOfRange, "weight for vertex out of range");
    if (seen[v]) throw InstanceError(InstanceError::Kind::VertexOutOfRange, "duplicate weight for vertex " + std::to_string(v));
    seen[v] = true;
    weights[v] = w;
  }
  return Instance::build(*n, edges, weights, k_override ? *k_override : k.value_or(1));
}

Instance read_instance_file(const std::string& path, std::optional<std::int64_t> k_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), k_override);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "n " << inst.size() << "\nk " << inst.k() << "\n";
  for (const Edge& e : inst.edges()) out << "edge " << e.u << ' ' << e.v << ' ' << e.tau << ' ' << e.cap << "\n";
  for (std::size_t v = 0; v < inst.size(); ++v) {
    if (inst.weight(static_cast<VertexId>(v)) != 0) out << "weight " << v << ' ' << inst.weight(static_cast<VertexId>(v)) << "\n";
  }
  return out.str();
}

}  // namespace sinkloc
