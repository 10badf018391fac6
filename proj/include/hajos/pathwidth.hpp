#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hajos/exact.hpp"
#include "hajos/graph.hpp"

namespace hajos {

inline constexpr int kMaxPathwidth = 6;
inline constexpr int kMaxPathwidthVertices = 64;

enum class PathwidthErrc { WidthCapExceeded, TooManyVertices, NotSmooth, InvalidDecomposition, TooFewBags };

inline const char* to_string(PathwidthErrc e) {
  switch (e) {
    case PathwidthErrc::WidthCapExceeded: return "WidthCapExceeded";
    case PathwidthErrc::TooManyVertices: return "TooManyVertices";
    case PathwidthErrc::NotSmooth: return "NotSmooth";
    case PathwidthErrc::InvalidDecomposition: return "InvalidDecomposition";
    case PathwidthErrc::TooFewBags: return "TooFewBags";
  }
  return "?";
}

class PathwidthError : public std::runtime_error {
 public:
  PathwidthError(PathwidthErrc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  PathwidthErrc code() const { return code_; }

 private:
  PathwidthErrc code_;
};

struct PathDecomposition {
  std::vector<VertexSet> bags;

  int width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return static_cast<int>(w) - 1;
  }
  /// First and last bag index (0-based) containing x, or {-1,-1}.
  std::pair<int, int> span(Vertex x) const {
    int s = -1, t = -1;
    for (std::size_t i = 0; i < bags.size(); ++i)
      if (bags[i].contains(x)) {
        if (s == -1) s = static_cast<int>(i);
        t = static_cast<int>(i);
      }
    return {s, t};
  }
  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

/// Interval property, edge coverage, vertex coverage.
inline bool is_valid_decomposition(const Graph& g, const PathDecomposition& pd) {
  for (Vertex x = 0; x < g.n(); ++x) {
    auto [s, t] = pd.span(x);
    if (s == -1) return false;
    for (int i = s; i <= t; ++i)
      if (!pd.bags[static_cast<std::size_t>(i)].contains(x)) return false;
  }
  for (const auto& b : pd.bags)
    for (Vertex x : b)
      if (x < 0 || x >= g.n()) return false;
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (const auto& b : pd.bags) covered |= b.contains(e.u) && b.contains(e.v);
    if (!covered) return false;
  }
  return true;
}

inline bool is_smooth(const PathDecomposition& pd) {
  const int k = pd.width();
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    if (static_cast<int>(pd.bags[i].size()) != k + 1) return false;
    if (i + 1 < pd.bags.size()) {
      std::size_t common = 0;
      for (Vertex x : pd.bags[i]) common += pd.bags[i + 1].contains(x);
      if (static_cast<int>(common) != k) return false;
    }
  }
  return true;
}

namespace detail {

class VertexSeparation {
 public:
  VertexSeparation(const Graph& g, int k, const SearchBudget& b)
      : g_(g), k_(k), budget_(b), deadline_(std::chrono::steady_clock::now() + std::chrono::milliseconds(b.max_millis)) {
    for (Vertex x = 0; x < g.n(); ++x) {
      std::uint64_t m = 0;
      for (Vertex y : g.neighbours(x)) m |= std::uint64_t{1} << y;
      nbr_.push_back(m);
    }
    full_ = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  }

  std::optional<std::vector<Vertex>> run() {
    order_.clear();
    if (dfs(0)) return order_;
    return std::nullopt;
  }

 private:
  int boundary(std::uint64_t placed) const {
    int b = 0;
    for (std::uint64_t rest = placed; rest; rest &= rest - 1) {
      int x = __builtin_ctzll(rest);
      if (nbr_[static_cast<std::size_t>(x)] & ~placed) ++b;
    }
    return b;
  }

  bool dfs(std::uint64_t placed) {
    if (placed == full_) return true;
    if (++nodes_ > budget_.max_nodes) throw ResourceLimit("pathwidth node budget exhausted", std::nullopt);
    if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw ResourceLimit("pathwidth time budget exhausted", std::nullopt);
    if (failed_.contains(placed)) return false;
    if (boundary(placed) > k_) return false;
    const std::size_t mark = order_.size();
    // Placing a vertex whose neighbours are all placed never hurts.
    for (Vertex x = 0; x < g_.n(); ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if (!(placed & bit) && (nbr_[static_cast<std::size_t>(x)] & ~placed) == 0) {
        placed |= bit;
        order_.push_back(x);
        x = -1;
      }
    }
    if (placed == full_) return true;
    if (boundary(placed) <= k_) {
      // Most promising first: smallest resulting boundary, then fewest
      // unplaced neighbours, then index.
      std::vector<std::pair<std::pair<int, int>, Vertex>> cand;
      for (Vertex x = 0; x < g_.n(); ++x) {
        const std::uint64_t bit = std::uint64_t{1} << x;
        if (placed & bit) continue;
        const int b = boundary(placed | bit);
        if (b > k_) continue;
        cand.push_back({{b, __builtin_popcountll(nbr_[static_cast<std::size_t>(x)] & ~placed)}, x});
      }
      std::sort(cand.begin(), cand.end());
      for (const auto& [key, x] : cand) {
        order_.push_back(x);
        if (dfs(placed | (std::uint64_t{1} << x))) return true;
        order_.pop_back();
      }
    }
    failed_.insert(placed);
    order_.resize(mark);
    return false;
  }

  const Graph& g_;
  int k_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::uint64_t> nbr_;
  std::uint64_t full_ = 0;
  std::vector<Vertex> order_;
  std::unordered_set<std::uint64_t> failed_;
  std::int64_t nodes_ = 0;
};

}  // namespace detail

/// Bags of the ordering: B_i = boundary(P_{i-1}) + pi_i, where the boundary
/// of a prefix is the set of its vertices with a neighbour outside it.
inline PathDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  PathDecomposition pd;
  std::vector<char> placed(static_cast<std::size_t>(g.n()), 0);
  for (Vertex x : order) {
    std::vector<Vertex> bag{x};
    for (Vertex y = 0; y < g.n(); ++y) {
      if (!placed[static_cast<std::size_t>(y)]) continue;
      for (Vertex z : g.neighbours(y))
        if (!placed[static_cast<std::size_t>(z)]) {
          bag.push_back(y);
          break;
        }
    }
    placed[static_cast<std::size_t>(x)] = 1;
    pd.bags.emplace_back(std::move(bag));
  }
  return pd;
}

/// Width-at-most-k decomposition by branch and bound over vertex orderings,
/// memoising placed sets that failed; nullopt when none exists.
inline std::optional<PathDecomposition> find_path_decomposition(const Graph& g, int k, const SearchBudget& b = {}) {
  if (k > kMaxPathwidth) throw PathwidthError(PathwidthErrc::WidthCapExceeded, "k=" + std::to_string(k));
  if (g.n() > kMaxPathwidthVertices) throw PathwidthError(PathwidthErrc::TooManyVertices, "n=" + std::to_string(g.n()));
  if (k < 0) return std::nullopt;
  if (g.n() == 0) return PathDecomposition{};
  auto order = detail::VertexSeparation(g, k, b).run();
  if (!order) return std::nullopt;
  return decomposition_from_order(g, *order);
}

/// Smooth decomposition of the same width: vertices are introduced in order
/// of their first bag; each introduction forgets the lowest-index active
/// vertex whose last bag precedes the new vertex's first bag.
inline PathDecomposition smooth(const PathDecomposition& pd) {
  std::vector<Vertex> verts;
  for (const auto& b : pd.bags)
    for (Vertex x : b) verts.push_back(x);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int k = pd.width();
  if (static_cast<int>(verts.size()) <= k + 1) return {{VertexSet(verts)}};
  std::vector<std::pair<std::pair<int, Vertex>, int>> order;  // ((s, x), t)
  for (Vertex x : verts) {
    auto [s, t] = pd.span(x);
    order.push_back({{s, x}, t});
  }
  std::sort(order.begin(), order.end());
  PathDecomposition out;
  std::vector<std::pair<Vertex, int>> active;  // (vertex, t)
  for (int i = 0; i <= k; ++i) active.emplace_back(order[static_cast<std::size_t>(i)].first.second, order[static_cast<std::size_t>(i)].second);
  auto bag_of = [&] {
    std::vector<Vertex> b;
    for (auto [x, t] : active) b.push_back(x);
    return VertexSet(std::move(b));
  };
  out.bags.push_back(bag_of());
  for (std::size_t i = static_cast<std::size_t>(k) + 1; i < order.size(); ++i) {
    const int s = order[i].first.first;
    std::size_t victim = active.size();
    for (std::size_t a = 0; a < active.size(); ++a)
      if (active[a].second < s && (victim == active.size() || active[a].first < active[victim].first)) victim = a;
    if (victim == active.size()) throw PathwidthError(PathwidthErrc::InvalidDecomposition, "bag exceeds width");
    active[victim] = {order[i].first.second, order[i].second};
    out.bags.push_back(bag_of());
  }
  return out;
}

struct BoundaryVertex {
  int s = 0, t = 0;  // 1-based bag indices of the path edge
  Vertex vertex = -1;
};

struct DegreeCertificate {
  int i = 0;
  Vertex left = -1;   // v(i, i+1)
  Vertex right = -1;  // v(n'+1-i, n'-i)
  int bound = 0;      // i + k - 1
};

struct BoundaryReport {
  int width = 0;
  std::vector<BoundaryVertex> boundary;  // v(s,s+1) and v(s+1,s) per path edge
  std::vector<DegreeCertificate> low_degree_guarantees;
  bool eq1_holds = true;  // deg(v) <= |P(v)| + k - 1 for all v
  bool eq2_holds = true;  // certificates respected
};

inline BoundaryReport boundary_report(const Graph& g, const PathDecomposition& pd) {
  if (!is_smooth(pd)) throw PathwidthError(PathwidthErrc::NotSmooth, "decomposition is not smooth");
  BoundaryReport r;
  const int k = r.width = pd.width();
  const int bags = static_cast<int>(pd.bags.size());
  auto leaving = [&](int s, int t) {
    for (Vertex x : pd.bags[static_cast<std::size_t>(s - 1)])
      if (!pd.bags[static_cast<std::size_t>(t - 1)].contains(x)) return x;
    throw PathwidthError(PathwidthErrc::NotSmooth, "no leaving vertex");
  };
  for (int s = 1; s < bags; ++s) {
    r.boundary.push_back({s, s + 1, leaving(s, s + 1)});
    r.boundary.push_back({s + 1, s, leaving(s + 1, s)});
  }
  for (Vertex x = 0; x < g.n(); ++x) {
    auto [s, t] = pd.span(x);
    if (g.degree(x) > (t - s + 1) + k - 1) r.eq1_holds = false;
  }
  for (int i = 1; i <= g.n() / 2 && i < bags; ++i) {
    DegreeCertificate c{i, leaving(i, i + 1), leaving(bags + 1 - i, bags - i), i + k - 1};
    if (g.degree(c.left) > c.bound || g.degree(c.right) > c.bound) r.eq2_holds = false;
    r.low_degree_guarantees.push_back(c);
  }
  return r;
}

enum class LocatedCase { NonAdj6, Adj5, Adj4 };

inline const char* to_string(LocatedCase c) {
  switch (c) {
    case LocatedCase::NonAdj6: return "NonAdj6";
    case LocatedCase::Adj5: return "Adj5";
    case LocatedCase::Adj4: return "Adj4";
  }
  return "?";
}

struct StructureLocation {
  Vertex u = -1, v = -1, w = -1;
  bool left = true;
  LocatedCase kind = LocatedCase::Adj5;
  VertexSet common;
  Vertex x_u = -1, x_v = -1;  // private neighbours for Adj4
};

struct LocateResult {
  std::optional<StructureLocation> location;
  std::optional<Vertex> low_degree_vertex;
};

/// Examines u = v(1,2), v = v(2,3), w = v(3,4) and the mirrored triple at the
/// other end of the path; classifies the degree-6 pair (u, v) of the first
/// side whose three vertices all have degree at least 6.
inline LocateResult locate_structure(const Graph& g, const PathDecomposition& pd) {
  if (!is_smooth(pd) || pd.width() != 6) throw PathwidthError(PathwidthErrc::NotSmooth, "need smooth width 6");
  const int bags = static_cast<int>(pd.bags.size());
  if (bags < 4) throw PathwidthError(PathwidthErrc::TooFewBags, std::to_string(bags));
  auto bag = [&](int i, bool left) -> const VertexSet& {
    return pd.bags[static_cast<std::size_t>(left ? i - 1 : bags - i)];
  };
  auto leaving = [&](int s, int t, bool left) {
    for (Vertex x : bag(s, left))
      if (!bag(t, left).contains(x)) return x;
    return Vertex{-1};
  };
  LocateResult res;
  for (bool left : {true, false}) {
    const Vertex u = leaving(1, 2, left), v = leaving(2, 3, left), w = leaving(3, 4, left);
    Vertex low = -1;
    for (Vertex x : {u, v, w})
      if (g.degree(x) < 6 && low == -1) low = x;
    if (low != -1) {
      if (!res.low_degree_vertex) res.low_degree_vertex = low;
      continue;
    }
    StructureLocation loc;
    loc.u = u;
    loc.v = v;
    loc.w = w;
    loc.left = left;
    loc.common = common_neighbourhood(g, u, v);
    if (!g.has_edge(u, v)) {
      loc.kind = LocatedCase::NonAdj6;
    } else if (loc.common.size() == 5) {
      loc.kind = LocatedCase::Adj5;
    } else {
      loc.kind = LocatedCase::Adj4;
      for (Vertex x : g.neighbours(u))
        if (x != v && !loc.common.contains(x)) loc.x_u = x;
      for (Vertex x : g.neighbours(v))
        if (x != u && !loc.common.contains(x)) loc.x_v = x;
    }
    res.location = loc;
    res.low_degree_vertex.reset();
    return res;
  }
  return res;
}

}  // namespace hajos
