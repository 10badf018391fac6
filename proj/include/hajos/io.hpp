#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hajos/graph.hpp"

namespace hajos {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

/// graph6 encoding: size header, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, offset 63.
inline std::string to_graph6(const Graph& g) {
  std::string out;
  detail::put_size(out, g.n());
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < g.n(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  for (char ch : s)
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte out of range");
  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= s.size()) throw ParseError("graph6: truncated");
    return s[pos++] - 63;
  };
  long long n = take();
  if (n == 63) {
    int width = 3;
    if (pos < s.size() && s[pos] == 126) {
      ++pos;
      width = 6;
    }
    n = 0;
    for (int i = 0; i < width; ++i) n = (n << 6) | take();
  }
  if (n > kMaxVertices) throw ParseError("graph6: too many vertices");
  const long long pairs = n * (n - 1) / 2;
  if (static_cast<long long>(s.size() - pos) != (pairs + 5) / 6)
    throw ParseError("graph6: wrong body length");
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = s[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

/// Edge list: `n` on the first line, then one `u v` pair per line, 0-based.
/// Blank lines and `#` comments are ignored.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<long long> nums;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("edge list: bad token '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("edge list: bad token '" + tok + "'");
      nums.push_back(x);
    }
  }
  if (nums.empty()) throw ParseError("edge list: missing vertex count");
  if (nums[0] < 0 || nums[0] > kMaxVertices) throw ParseError("edge list: bad vertex count");
  if (nums.size() % 2 != 1) throw ParseError("edge list: odd number of endpoints");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < nums.size(); i += 2) {
    auto in_range = [](long long x) { return x >= -1 && x <= kMaxVertices; };
    if (!in_range(nums[i]) || !in_range(nums[i + 1])) throw ParseError("edge list: vertex out of range");
    edges.emplace_back(static_cast<Vertex>(nums[i]), static_cast<Vertex>(nums[i + 1]));
  }
  try {
    return Graph::from_edge_list(static_cast<int>(nums[0]), edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// True when the first nonblank line looks like graph6 (printable 63..126,
/// no digits, so it cannot be an edge-list header).
inline bool looks_like_graph6(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) return false;
  std::string_view line = text.substr(start, text.find('\n', start) - start);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) return true;
  for (char ch : line)
    if (ch < 63 || ch > 126) return false;
  return !line.empty();
}

/// Parses every graph in `text`: one per line for graph6, a single graph otherwise.
inline std::vector<Graph> parse_graphs(std::string_view text) {
  std::vector<Graph> out;
  if (!looks_like_graph6(text)) {
    out.push_back(parse_edge_list(text));
    return out;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const GraphError& e) {
      throw ParseError(std::string("graph6: ") + e.what());
    }
  }
  return out;
}

inline Graph parse_graph(std::string_view text) {
  auto gs = parse_graphs(text);
  if (gs.size() != 1) throw ParseError("expected exactly one graph, got " + std::to_string(gs.size()));
  return std::move(gs.front());
}

}  // namespace hajos
