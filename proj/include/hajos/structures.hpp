#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hajos/graph.hpp"

namespace hajos {

/// Listed in planner priority order.
enum class Variant { Deg24Odd, Deg4GM, Deg6Clique, Adj5, NonAdj6, Adj4, Deg2Bypass };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::Deg24Odd: return "Deg24Odd";
    case Variant::Deg4GM: return "Deg4GM";
    case Variant::Deg6Clique: return "Deg6Clique";
    case Variant::Adj5: return "Adj5";
    case Variant::NonAdj6: return "NonAdj6";
    case Variant::Adj4: return "Adj4";
    case Variant::Deg2Bypass: return "Deg2Bypass";
  }
  return "?";
}

/// Single-vertex variants (Deg24Odd, Deg4GM, Deg6Clique, Deg2Bypass) store their centre in u.
/// x holds x1..x4 for Deg4GM and x1..x6 for Deg6Clique.
struct ReducibleStructure {
  Variant variant = Variant::Deg24Odd;
  Vertex u = -1, v = -1;
  VertexSet N;
  Vertex x_u = -1, x_v = -1;
  std::optional<std::vector<Vertex>> connector;
  std::vector<Vertex> x;
};

namespace detail {

/// x1x2 in E and x3x4 not in E, least labelling of the sorted neighbourhood.
inline std::optional<std::vector<Vertex>> gm_labelling(const Graph& g, const std::vector<Vertex>& nb) {
  std::vector<Vertex> p = nb;
  std::sort(p.begin(), p.end());
  do {
    if (p[0] < p[1] && p[2] < p[3] && g.has_edge(p[0], p[1]) && !g.has_edge(p[2], p[3])) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

/// Clique x1..x4 in N(u) with x5x6 a non-edge, least in lexicographic order.
inline std::optional<std::vector<Vertex>> clique_labelling(const Graph& g, const std::vector<Vertex>& nb) {
  std::vector<std::vector<Vertex>> found;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      std::vector<Vertex> q, rest;
      for (int i = 0; i < 6; ++i) (i == a || i == b ? rest : q).push_back(nb[static_cast<std::size_t>(i)]);
      if (g.has_edge(rest[0], rest[1])) continue;
      bool clique = true;
      for (int i = 0; i < 4 && clique; ++i)
        for (int j = i + 1; j < 4 && clique; ++j)
          clique = g.has_edge(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)]);
      if (!clique) continue;
      q.insert(q.end(), rest.begin(), rest.end());
      found.push_back(q);
    }
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end());
}

}  // namespace detail

/// Every detected structure, in variant priority order, then by vertex tuple.
/// Single-vertex variants report one (least) labelling per centre.
inline std::vector<ReducibleStructure> find_structures(const Graph& g) {
  std::vector<ReducibleStructure> out;
  const int n = g.n();
  if (n % 2 == 1)
    for (Vertex u = 0; u < n; ++u)
      if (g.degree(u) == 2 || g.degree(u) == 4) {
        ReducibleStructure s;
        s.variant = Variant::Deg24Odd;
        s.u = u;
        s.N = VertexSet(g.neighbours(u));
        out.push_back(s);
      }
  for (Vertex u = 0; u < n; ++u)
    if (g.degree(u) == 4)
      if (auto x = detail::gm_labelling(g, g.neighbours(u))) {
        ReducibleStructure s;
        s.variant = Variant::Deg4GM;
        s.u = u;
        s.N = VertexSet(g.neighbours(u));
        s.x = *x;
        out.push_back(s);
      }
  for (Vertex u = 0; u < n; ++u)
    if (g.degree(u) == 6)
      if (auto x = detail::clique_labelling(g, g.neighbours(u))) {
        ReducibleStructure s;
        s.variant = Variant::Deg6Clique;
        s.u = u;
        s.N = VertexSet(g.neighbours(u));
        s.x = *x;
        out.push_back(s);
      }

  std::vector<ReducibleStructure> adj5, nonadj6, adj4;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != 6) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) != 6) continue;
      const VertexSet common = common_neighbourhood(g, u, v);
      ReducibleStructure s;
      s.u = u;
      s.v = v;
      s.N = common;
      if (!g.has_edge(u, v)) {
        if (common.size() != 6) continue;
        s.variant = Variant::NonAdj6;
        nonadj6.push_back(s);
      } else if (common.size() == 5) {
        s.variant = Variant::Adj5;
        adj5.push_back(s);
      } else if (common.size() == 4) {
        s.variant = Variant::Adj4;
        for (Vertex w : g.neighbours(u))
          if (w != v && !common.contains(w)) s.x_u = w;
        for (Vertex w : g.neighbours(v))
          if (w != u && !common.contains(w)) s.x_v = w;
        std::vector<char> blocked(static_cast<std::size_t>(n), 0);
        blocked[static_cast<std::size_t>(u)] = blocked[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : common.members()) blocked[static_cast<std::size_t>(w)] = 1;
        s.connector = shortest_path(g, s.x_u, s.x_v, blocked);
        adj4.push_back(s);
      }
    }
  }
  out.insert(out.end(), adj5.begin(), adj5.end());
  out.insert(out.end(), nonadj6.begin(), nonadj6.end());
  out.insert(out.end(), adj4.begin(), adj4.end());
  // a degree-2 vertex between non-adjacent neighbours can be bypassed for any n
  for (Vertex u = 0; u < n; ++u)
    if (g.degree(u) == 2 && !g.has_edge(g.neighbours(u)[0], g.neighbours(u)[1])) {
      ReducibleStructure s;
      s.variant = Variant::Deg2Bypass;
      s.u = u;
      s.N = VertexSet(g.neighbours(u));
      out.push_back(s);
    }
  return out;
}

}  // namespace hajos
