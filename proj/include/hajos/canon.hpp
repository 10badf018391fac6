#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hajos/graph.hpp"

namespace hajos {

/// Dense adjacency for graphs on at most 11 vertices, one bitmask per row.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, 16> rows{};

  bool has(int a, int b) const { return (rows[static_cast<std::size_t>(a)] >> b) & 1u; }
  void add(int a, int b) {
    rows[static_cast<std::size_t>(a)] |= static_cast<std::uint16_t>(1u << b);
    rows[static_cast<std::size_t>(b)] |= static_cast<std::uint16_t>(1u << a);
  }
  int degree(int a) const { return __builtin_popcount(rows[static_cast<std::size_t>(a)]); }

  static SmallGraph from(const Graph& g) {
    SmallGraph s;
    s.n = g.n();
    for (const Edge& e : g.edges()) s.add(e.u, e.v);
    return s;
  }
  Graph to_graph() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (has(i, j)) es.emplace_back(i, j);
    return Graph::from_edge_list(n, es);
  }
};

/// Upper-triangle code of g under `order` (position -> vertex); x(0,1) is
/// the most significant bit, columns in increasing order.
inline std::uint64_t adjacency_code(const SmallGraph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      code = (code << 1) | (g.has(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1u : 0u);
  return code;
}

inline SmallGraph decode(int n, std::uint64_t code) {
  SmallGraph g;
  g.n = n;
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1u) g.add(i, j);
  return g;
}

namespace detail {

using Partition = std::vector<std::vector<int>>;

/// Refines an ordered partition to equitable by neighbour counts. Split
/// order depends only on counts, so the result is label-invariant.
inline void refine(const SmallGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      std::uint32_t mask = 0;
      for (int x : p[s]) mask |= 1u << x;
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c].size() < 2) continue;
        auto count = [&](int x) { return __builtin_popcount(g.rows[static_cast<std::size_t>(x)] & mask); };
        auto cell = p[c];
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count(a) < count(b); });
        if (count(cell.front()) == count(cell.back())) continue;
        Partition pieces;
        for (int x : cell) {
          if (pieces.empty() || count(pieces.back().front()) != count(x)) pieces.push_back({});
          pieces.back().push_back(x);
        }
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

inline bool twins(const SmallGraph& g, int a, int b) {
  const std::uint16_t mask = static_cast<std::uint16_t>(~((1u << a) | (1u << b)));
  return (g.rows[static_cast<std::size_t>(a)] & mask) == (g.rows[static_cast<std::size_t>(b)] & mask);
}

inline void search(const SmallGraph& g, Partition p, std::uint64_t& best, bool& have) {
  refine(g, p);
  std::size_t target = p.size();
  for (std::size_t c = 0; c < p.size(); ++c)
    if (p[c].size() > 1) {
      target = c;
      break;
    }
  if (target == p.size()) {
    std::vector<int> order;
    for (const auto& cell : p) order.push_back(cell.front());
    std::uint64_t code = adjacency_code(g, order);
    if (!have || code < best) best = code;
    have = true;
    return;
  }
  std::vector<int> tried;
  for (int x : p[target]) {
    if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(g, t, x); })) continue;
    tried.push_back(x);
    Partition q = p;
    auto& cell = q[target];
    cell.erase(std::find(cell.begin(), cell.end(), x));
    q.insert(q.begin() + static_cast<std::ptrdiff_t>(target), std::vector<int>{x});
    search(g, std::move(q), best, have);
  }
}

}  // namespace detail

/// Canonical code: minimum adjacency code over the leaves of the
/// individualisation-refinement tree, starting from the degree partition.
inline std::uint64_t canonical_code(const SmallGraph& g) {
  if (g.n <= 1) return 0;
  detail::Partition p(1);
  for (int x = 0; x < g.n; ++x) p[0].push_back(x);
  std::uint64_t best = 0;
  bool have = false;
  detail::search(g, std::move(p), best, have);
  return best;
}

/// Minimum adjacency code over all n! orderings. Reference for small n.
inline std::uint64_t naive_canonical_code(const SmallGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t best = adjacency_code(g, order);
  while (std::next_permutation(order.begin(), order.end())) best = std::min(best, adjacency_code(g, order));
  return best;
}

}  // namespace hajos
