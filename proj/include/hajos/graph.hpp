#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hajos {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrc { SelfLoop, VertexOutOfRange, DuplicateEdge, SetTooLarge, TooManyVertices };

inline const char* to_string(GraphErrc e) {
  switch (e) {
    case GraphErrc::SelfLoop: return "SelfLoop";
    case GraphErrc::VertexOutOfRange: return "VertexOutOfRange";
    case GraphErrc::DuplicateEdge: return "DuplicateEdge";
    case GraphErrc::SetTooLarge: return "SetTooLarge";
    case GraphErrc::TooManyVertices: return "TooManyVertices";
  }
  return "?";
}

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  GraphErrc code() const { return code_; }

 private:
  GraphErrc code_;
};

inline constexpr int kMaxVertices = 1 << 16;

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

  bool contains(Vertex x) const { return std::binary_search(members_.begin(), members_.end(), x); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const { return members_; }

  void insert(Vertex x) {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x) members_.insert(it, x);
  }
  void erase(Vertex x) {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it != members_.end() && *it == x) members_.erase(it);
  }
  VertexSet without(std::initializer_list<Vertex> xs) const {
    VertexSet r = *this;
    for (Vertex x : xs) r.erase(x);
    return r;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (n < 0 || n > kMaxVertices)
      throw GraphError(GraphErrc::TooManyVertices, "n=" + std::to_string(n));
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw GraphError(GraphErrc::VertexOutOfRange,
                         std::to_string(a) + "-" + std::to_string(b));
      if (a == b) throw GraphError(GraphErrc::SelfLoop, std::to_string(a));
      g.adj_[static_cast<std::size_t>(a)].push_back(b);
      g.adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& row : g.adj_) {
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end())
        throw GraphError(GraphErrc::DuplicateEdge,
                         "vertex " + std::to_string(&row - g.adj_.data()));
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
  }

  static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<std::pair<Vertex, Vertex>> v(edges);
    return from_edge_list(n, v);
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    std::vector<std::pair<Vertex, Vertex>> v;
    v.reserve(edges.size());
    for (const Edge& e : edges) v.emplace_back(e.u, e.v);
    return from_edge_list(n, v);
  }

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }
  int degree(Vertex x) const { return static_cast<int>(adj_[static_cast<std::size_t>(x)].size()); }
  const std::vector<Vertex>& neighbours(Vertex x) const { return adj_[static_cast<std::size_t>(x)]; }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n() || b >= n()) return false;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex a = 0; a < n(); ++a)
      for (Vertex b : neighbours(a))
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (Vertex x = 0; x < n(); ++x) d = std::max(d, degree(x));
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

/// Hajós bound floor((n-1)/2), zero for n < 1.
inline int hajos_bound(int n) { return n < 1 ? 0 : (n - 1) / 2; }

inline bool is_even_graph(const Graph& g) {
  for (Vertex x = 0; x < g.n(); ++x)
    if (g.degree(x) % 2 != 0) return false;
  return true;
}

/// N(u) ∩ N(v) without u and v.
inline VertexSet common_neighbourhood(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  const auto& a = g.neighbours(u);
  const auto& b = g.neighbours(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  std::erase_if(out, [&](Vertex x) { return x == u || x == v; });
  return VertexSet(std::move(out));
}

/// Component id per vertex; ids are assigned in order of the smallest vertex.
inline std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbours(x))
        if (comp[static_cast<std::size_t>(y)] == -1) {
          comp[static_cast<std::size_t>(y)] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

/// Connected, ignoring isolated vertices (the empty graph counts as connected).
inline bool is_connected_ignoring_isolated(const Graph& g) {
  auto comp = component_ids(g);
  int seen = -1;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (g.degree(x) == 0) continue;
    if (seen == -1) seen = comp[static_cast<std::size_t>(x)];
    else if (comp[static_cast<std::size_t>(x)] != seen) return false;
  }
  return true;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto comp = component_ids(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

/// Shortest a-b path avoiding `blocked` (a and b themselves are never blocked).
/// Neighbours are scanned in increasing order, so ties resolve to the
/// lexicographically smallest predecessor.
inline std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex a, Vertex b,
                                                        const std::vector<char>& blocked) {
  std::vector<Vertex> pred(static_cast<std::size_t>(g.n()), -1);
  std::queue<Vertex> q;
  pred[static_cast<std::size_t>(a)] = a;
  q.push(a);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == b) break;
    for (Vertex y : g.neighbours(x)) {
      if (pred[static_cast<std::size_t>(y)] != -1) continue;
      if (y != b && blocked[static_cast<std::size_t>(y)]) continue;
      pred[static_cast<std::size_t>(y)] = x;
      q.push(y);
    }
  }
  if (pred[static_cast<std::size_t>(b)] == -1) return std::nullopt;
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(pred[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

// ---------------------------------------------------------------------------
// Small induced subgraph classification

enum class SmallGraphTag {
  Empty,
  HasDeg3Vertex,
  IndepTriple,
  C5,
  K3UnionP2,
  P3UnionP2,
  P5,
  SingleEdge,
  TwoEdgesPath,
  TwoEdgesMatching,
  PathPlusEdge,
  Triangle,
  C4,
  TwoTriangles,
  Other
};

inline const char* to_string(SmallGraphTag t) {
  switch (t) {
    case SmallGraphTag::Empty: return "Empty";
    case SmallGraphTag::HasDeg3Vertex: return "HasDeg3Vertex";
    case SmallGraphTag::IndepTriple: return "IndepTriple";
    case SmallGraphTag::C5: return "C5";
    case SmallGraphTag::K3UnionP2: return "K3+P2";
    case SmallGraphTag::P3UnionP2: return "P3+P2";
    case SmallGraphTag::P5: return "P5";
    case SmallGraphTag::SingleEdge: return "SingleEdge";
    case SmallGraphTag::TwoEdgesPath: return "TwoEdgesPath";
    case SmallGraphTag::TwoEdgesMatching: return "TwoEdgesMatching";
    case SmallGraphTag::PathPlusEdge: return "PathPlusEdge";
    case SmallGraphTag::Triangle: return "Triangle";
    case SmallGraphTag::C4: return "C4";
    case SmallGraphTag::TwoTriangles: return "TwoTriangles";
    case SmallGraphTag::Other: return "Other";
  }
  return "?";
}

struct SmallGraphClass {
  SmallGraphTag tag = SmallGraphTag::Other;
  std::vector<Vertex> witness;
};

namespace detail {

struct InducedView {
  std::vector<Vertex> vs;
  std::vector<std::vector<int>> adj;  // local indices, sorted
  int edges = 0;

  InducedView(const Graph& g, const VertexSet& s) : vs(s.members()) {
    adj.resize(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (g.has_edge(vs[i], vs[j])) {
          adj[i].push_back(static_cast<int>(j));
          adj[j].push_back(static_cast<int>(i));
          ++edges;
        }
    for (auto& r : adj) std::sort(r.begin(), r.end());
  }
  int deg(int i) const { return static_cast<int>(adj[static_cast<std::size_t>(i)].size()); }
  bool has(int i, int j) const {
    const auto& r = adj[static_cast<std::size_t>(i)];
    return std::binary_search(r.begin(), r.end(), j);
  }
  int size() const { return static_cast<int>(vs.size()); }
  Vertex at(int i) const { return vs[static_cast<std::size_t>(i)]; }
};

/// Walk a path or cycle component starting at `start` (local indices).
inline std::vector<int> walk(const InducedView& h, int start) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int y : h.adj[static_cast<std::size_t>(cur)])
      if (y != prev && y != start) { next = y; break; }
    if (next == -1 || std::find(order.begin(), order.end(), next) != order.end()) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace detail

/// Lexicographically least independent triple in g[s], if any.
inline std::optional<std::array<Vertex, 3>> independent_triple(const Graph& g, const VertexSet& s) {
  const auto& v = s.members();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (g.has_edge(v[a], v[b])) continue;
      for (std::size_t c = b + 1; c < v.size(); ++c)
        if (!g.has_edge(v[a], v[c]) && !g.has_edge(v[b], v[c]))
          return std::array<Vertex, 3>{v[a], v[b], v[c]};
    }
  return std::nullopt;
}

/// Classifies g[s] (|s| <= 6). Checks run in planner priority order:
/// a vertex of degree >= 3, then an isolated vertex with an independent
/// triple, then the degree-(1,2) shapes by size.
inline SmallGraphClass classify_induced(const Graph& g, const VertexSet& s) {
  using detail::InducedView;
  if (s.size() > 6) throw GraphError(GraphErrc::SetTooLarge, std::to_string(s.size()));
  if (s.empty()) return {SmallGraphTag::Empty, {}};
  InducedView h(g, s);
  const int k = h.size();

  for (int i = 0; i < k; ++i)
    if (h.deg(i) >= 3) {
      std::vector<Vertex> w{h.at(i)};
      for (int j : h.adj[static_cast<std::size_t>(i)]) w.push_back(h.at(j));
      return {SmallGraphTag::HasDeg3Vertex, w};
    }

  bool isolated = false;
  for (int i = 0; i < k; ++i) isolated |= h.deg(i) == 0;
  if (auto t = independent_triple(g, s); t && (isolated || k == 3))
    return {SmallGraphTag::IndepTriple, {(*t)[0], (*t)[1], (*t)[2]}};

  // Remaining graphs have max degree <= 2: split into path/cycle components.
  std::vector<std::vector<int>> cycles, paths;
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    if (seen[static_cast<std::size_t>(i)] || h.deg(i) == 2) continue;
    auto p = detail::walk(h, i);
    for (int x : p) seen[static_cast<std::size_t>(x)] = 1;
    paths.push_back(p);
  }
  for (int i = 0; i < k; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    auto c = detail::walk(h, i);
    if (c.size() > 1 && h.has(c[1], c.back()) && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    for (int x : c) seen[static_cast<std::size_t>(x)] = 1;
    cycles.push_back(c);
  }
  auto lift = [&](const std::vector<int>& loc) {
    std::vector<Vertex> out;
    for (int x : loc) out.push_back(h.at(x));
    return out;
  };
  auto cat = [&](std::vector<Vertex> a, const std::vector<Vertex>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto sizes = [](const std::vector<std::vector<int>>& cs) {
    std::vector<std::size_t> out;
    for (const auto& c : cs) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto cyc = sizes(cycles);
  const auto pth = sizes(paths);
  auto path_of = [&](std::size_t len) {
    for (const auto& p : paths)
      if (p.size() == len) return lift(p);
    return std::vector<Vertex>{};
  };

  if (k == 5) {
    if (cyc == std::vector<std::size_t>{5} && pth.empty()) return {SmallGraphTag::C5, lift(cycles[0])};
    if (cyc == std::vector<std::size_t>{3} && pth == std::vector<std::size_t>{2})
      return {SmallGraphTag::K3UnionP2, cat(lift(cycles[0]), path_of(2))};
    if (cyc.empty() && pth == std::vector<std::size_t>{2, 3})
      return {SmallGraphTag::P3UnionP2, cat(path_of(3), path_of(2))};
    if (cyc.empty() && pth == std::vector<std::size_t>{5}) return {SmallGraphTag::P5, path_of(5)};
  }
  if (k == 6 && cyc == std::vector<std::size_t>{3, 3})
    return {SmallGraphTag::TwoTriangles, cat(lift(cycles[0]), lift(cycles[1]))};
  if (k == 4) {
    if (cyc == std::vector<std::size_t>{4}) return {SmallGraphTag::C4, lift(cycles[0])};
    if (cyc == std::vector<std::size_t>{3}) return {SmallGraphTag::Triangle, cat(lift(cycles[0]), path_of(1))};
    if (pth == std::vector<std::size_t>{2, 2})
      return {SmallGraphTag::TwoEdgesMatching, cat(lift(paths[0]), lift(paths[1]))};
    if (pth == std::vector<std::size_t>{4}) return {SmallGraphTag::PathPlusEdge, path_of(4)};
  }
  if (h.edges == 1) {
    for (int i = 0; i < k; ++i)
      if (h.deg(i) == 1) return {SmallGraphTag::SingleEdge, {h.at(i), h.at(h.adj[static_cast<std::size_t>(i)][0])}};
  }
  if (h.edges == 2) {
    for (int i = 0; i < k; ++i)
      if (h.deg(i) == 2) {
        const auto& r = h.adj[static_cast<std::size_t>(i)];
        return {SmallGraphTag::TwoEdgesPath, {h.at(r[0]), h.at(i), h.at(r[1])}};
      }
    std::vector<Vertex> w;
    for (const auto& p : paths)
      if (p.size() == 2) w = cat(w, lift(p));
    return {SmallGraphTag::TwoEdgesMatching, w};
  }
  if (h.edges == 0) return {SmallGraphTag::Empty, s.members()};
  return {SmallGraphTag::Other, s.members()};
}

}  // namespace hajos
