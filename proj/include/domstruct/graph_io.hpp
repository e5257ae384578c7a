#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domstruct/graph.hpp"

namespace domstruct {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { automatic, edge_list, graph6 };

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

inline bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t");
  return pos == std::string::npos || line[pos] == '#';
}

inline bool parse_int_pair(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  if (!(in >> a >> b)) return false;
  std::string rest;
  return !(in >> rest);
}

}  // namespace detail

/// Edge list: header "n m" followed by m lines "u v". Blank lines and '#'
/// comments are skipped; line numbers in errors are 1-based.
inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && detail::is_blank_or_comment(lines[i])) ++i;
  if (i == lines.size()) throw ParseError(lines.size(), "missing header \"n m\"");

  long long n = 0;
  long long m = 0;
  if (!detail::parse_int_pair(lines[i], n, m) || n < 0 || m < 0)
    throw ParseError(i + 1, "malformed header, expected \"n m\"");
  ++i;

  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen;
  if (n <= 4096) seen.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (; i < lines.size(); ++i) {
    if (detail::is_blank_or_comment(lines[i])) continue;
    long long u = 0;
    long long v = 0;
    if (!detail::parse_int_pair(lines[i], u, v)) throw ParseError(i + 1, "malformed edge line");
    if (u == v) throw ParseError(i + 1, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(i + 1, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError(i + 1, "more edges than declared (" + std::to_string(m) + ")");
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.empty()) {
      if (seen[e.u][e.v]) throw ParseError(i + 1, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
      seen[e.u][e.v] = true;
    }
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lines.size(), "expected " + std::to_string(m) + " edges, found " +
                                       std::to_string(edges.size()));
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.size(), e.what());
  }
}

/// Decodes one graph6 line (optional ">>graph6<<" prefix).
inline Graph parse_graph6_line(std::string_view line, std::size_t line_no = 1) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  if (line.empty()) throw ParseError(line_no, "empty graph6 line");
  for (char c : line)
    if (c < 63 || c > 126) throw ParseError(line_no, "invalid graph6 character");

  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > line.size()) throw ParseError(line_no, "truncated graph6 size field");
    long long value = 0;
    for (std::size_t k = 0; k < count; ++k) value = (value << 6) | (line[pos++] - 63);
    return value;
  };
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) throw ParseError(line_no, "graph6 order too large");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t needed = (bits + 5) / 6;
  if (line.size() - pos != needed) throw ParseError(line_no, "graph6 body has wrong length");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i, ++k) {
      const int chunk = line[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::vector<Graph> parse_graph6(std::string_view text) {
  std::vector<Graph> out;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::is_blank_or_comment(lines[i])) continue;
    out.push_back(parse_graph6_line(lines[i], i + 1));
  }
  return out;
}

/// Auto-detection treats a first content line of two integers as an edge list.
inline Graph load_graph(std::string_view text, GraphFormat format = GraphFormat::automatic) {
  if (format == GraphFormat::automatic) {
    format = GraphFormat::graph6;
    for (const auto& line : detail::split_lines(text)) {
      if (detail::is_blank_or_comment(line)) continue;
      long long a = 0;
      long long b = 0;
      if (detail::parse_int_pair(line, a, b)) format = GraphFormat::edge_list;
      break;
    }
  }
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  auto graphs = parse_graph6(text);
  if (graphs.empty()) throw ParseError(1, "no graph6 record found");
  return std::move(graphs.front());
}

/// Canonical edge-list text; LF-terminated.
inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace domstruct
