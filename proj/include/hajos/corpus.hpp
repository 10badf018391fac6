#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hajos/canon.hpp"
#include "hajos/colouring.hpp"
#include "hajos/graph.hpp"

namespace hajos {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxEnumerate = 10;

namespace detail {

/// Canonical codes of all graphs on n vertices, built vertex by vertex.
inline std::vector<std::uint64_t> all_graph_codes(int n) {
  std::vector<std::uint64_t> level{0};  // the graph on one vertex
  if (n <= 1) return level;
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code : level) {
      const SmallGraph h = decode(k - 1, code);
      for (std::uint32_t s = 0; s < (1u << (k - 1)); ++s) {
        SmallGraph g = h;
        g.n = k;
        for (int x = 0; x < k - 1; ++x)
          if ((s >> x) & 1u) g.add(x, k - 1);
        seen.insert(canonical_code(g));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

inline bool small_connected(const SmallGraph& g) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int x = 0; x < g.n; ++x)
      if ((frontier >> x) & 1u) next |= g.rows[static_cast<std::size_t>(x)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << g.n) - 1;
}

}  // namespace detail

/// Every connected even graph on n vertices, one per isomorphism class,
/// ordered by canonical code. Each even graph is H plus a vertex joined to
/// the odd-degree vertices of H, so H ranges over all graphs on n-1 vertices.
inline std::vector<Graph> enumerate_even_connected(int n) {
  if (n > kMaxEnumerate) throw CorpusError("TooLarge: enumeration is capped at n <= " + std::to_string(kMaxEnumerate));
  if (n < 1) return {};
  if (n == 1) return {Graph::from_edge_list(1, std::vector<std::pair<Vertex, Vertex>>{})};
  std::set<std::uint64_t> found;
  for (std::uint64_t code : detail::all_graph_codes(n - 1)) {
    SmallGraph g = decode(n - 1, code);
    g.n = n;
    for (int x = 0; x < n - 1; ++x)
      if (g.degree(x) % 2 == 1) g.add(x, n - 1);
    if (detail::small_connected(g)) found.insert(canonical_code(g));
  }
  std::vector<Graph> out;
  for (std::uint64_t code : found) out.push_back(decode(n, code).to_graph());
  return out;
}

/// Reference enumeration over all labelled graphs (n <= 6).
inline std::vector<Graph> enumerate_even_connected_naive(int n) {
  if (n > 6) throw CorpusError("TooLarge: naive enumeration is capped at n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::uint64_t> found;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    SmallGraph g;
    g.n = n;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((s >> k) & 1u) g.add(pairs[k].first, pairs[k].second);
    bool even = true;
    for (int x = 0; x < n; ++x) even &= g.degree(x) % 2 == 0;
    if (even && detail::small_connected(g)) found.insert(naive_canonical_code(g));
  }
  std::vector<Graph> out;
  for (std::uint64_t code : found) out.push_back(decode(n, code).to_graph());
  return out;
}

// ---------------------------------------------------------------------------
// Seeded generation

/// std::mt19937_64 is fully specified by the standard; std distributions are
/// not, so bounded draws use rejection sampling on the raw output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % bound;
  }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

struct BoundedPwInstance {
  Graph graph;
  std::vector<VertexSet> bags;  // smooth, width min(k, n-1)
};

/// Connected even graph built along a random smooth path decomposition of
/// width k. Parity is repaired only with edges inside a bag.
inline BoundedPwInstance random_even_bounded_pw_instance(int n, int k, std::uint64_t seed) {
  if (k < 1 || k > 6) throw CorpusError("random_even_bounded_pw: k must be in 1..6");
  if (n < 3) throw CorpusError("random_even_bounded_pw: n must be at least 3");
  Rng rng(seed);
  const int width = std::min(k, n - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    rng.shuffle(label);
    const std::uint64_t density = 35 + rng.below(45);  // edge probability in percent
    std::set<Edge> es;
    auto toggle = [&](Vertex a, Vertex b) {
      Edge e(a, b);
      if (!es.erase(e)) es.insert(e);
    };
    auto degree = [&](Vertex x) {
      int d = 0;
      for (const Edge& e : es) d += (e.u == x || e.v == x);
      return d;
    };
    std::vector<Vertex> bag(label.begin(), label.begin() + width + 1);
    std::vector<VertexSet> bags;
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j)
        if (rng.chance(density, 100)) toggle(bag[i], bag[j]);
    for (int next = width + 1; next < n; ++next) {
      bags.emplace_back(bag);
      const std::size_t pos = rng.below(bag.size());
      const Vertex leaving = bag[pos];
      bag.erase(bag.begin() + static_cast<std::ptrdiff_t>(pos));
      if (degree(leaving) % 2 == 1) toggle(leaving, bag[rng.below(bag.size())]);
      const Vertex w = label[static_cast<std::size_t>(next)];
      bool any = false;
      for (Vertex x : bag)
        if (rng.chance(density, 100)) {
          toggle(w, x);
          any = true;
        }
      if (!any) toggle(w, bag[rng.below(bag.size())]);
      bag.push_back(w);
    }
    std::vector<Vertex> odd;
    for (Vertex x : bag)
      if (degree(x) % 2 == 1) odd.push_back(x);
    rng.shuffle(odd);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) toggle(odd[i], odd[i + 1]);
    bags.emplace_back(bag);
    std::vector<Edge> ev(es.begin(), es.end());
    Graph g = Graph::from_edges(n, ev);
    if (!is_even_graph(g) || !is_connected(g)) continue;
    return {std::move(g), std::move(bags)};
  }
  throw CorpusError("GenerationFailed: no connected even graph after 1000 attempts");
}

inline Graph random_even_bounded_pw(int n, int k, std::uint64_t seed) {
  return random_even_bounded_pw_instance(n, k, seed).graph;
}

// ---------------------------------------------------------------------------
// Hamilton decompositions

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edge_list(n, es);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, es);
}

/// Walecki: K_{2k+1} with hub 2k and rim Z_{2k}; cycle i is
/// hub, i, i+1, i-1, i+2, i-2, ..., i+k, hub.
inline std::pair<Graph, CycleDecomposition> walecki_decomposition(int k) {
  if (k < 1) throw CorpusError("walecki_decomposition: k must be positive");
  const int m = 2 * k;
  CycleDecomposition d{m + 1, {}};
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> cyc{m, i};
    for (int j = 1; j < k; ++j) {
      cyc.push_back((i + j) % m);
      cyc.push_back(((i - j) % m + m) % m);
    }
    cyc.push_back((i + k) % m);
    d.cycles.push_back(canonical_cycle(cyc));
  }
  std::sort(d.cycles.begin(), d.cycles.end());
  return {complete_graph(m + 1), d};
}

/// K_{2k,2k} with sides a_x = x and b_y = 2k + y. Edge a_x b_y has difference
/// y - x mod 2k; differences {2j, 2j+1} form the Hamiltonian cycle
/// a_0 b_{2j} a_{-1} b_{2j-1} a_{-2} ...
inline std::pair<Graph, CycleDecomposition> bipartite_hamilton_decomposition(int k) {
  if (k < 1) throw CorpusError("bipartite_hamilton_decomposition: k must be positive");
  const int m = 2 * k;
  CycleDecomposition d{2 * m, {}};
  for (int j = 0; j < k; ++j) {
    std::vector<Vertex> cyc;
    for (int t = 0; t < m; ++t) {
      const int x = ((-t) % m + m) % m;
      cyc.push_back(x);
      cyc.push_back(m + (x + 2 * j) % m);
    }
    d.cycles.push_back(canonical_cycle(cyc));
  }
  std::sort(d.cycles.begin(), d.cycles.end());
  return {complete_bipartite(m, m), d};
}

}  // namespace hajos
