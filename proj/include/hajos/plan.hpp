#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hajos/graph.hpp"
#include "hajos/structures.hpp"

namespace hajos {

/// Sublemma tag plus the vertices bound to y1, y2, ... in that sublemma.
struct LiftCase {
  std::string tag;
  std::vector<Vertex> y;
};

struct ReductionPlan {
  ReducibleStructure structure;
  VertexSet removed_vertices;
  std::vector<Edge> removed_edges;  // edges of g between surviving vertices
  std::vector<Edge> added_edges;
  LiftCase lift_case;
  std::vector<Vertex> compaction;  // old index -> new index, -1 when removed
};

struct Inapplicable {
  std::string reason;
};

using PlanResult = std::variant<ReductionPlan, Inapplicable>;

namespace detail {

inline ReductionPlan make_plan(const Graph& g, const ReducibleStructure& s, VertexSet removed,
                               std::vector<Edge> del, std::vector<Edge> add, LiftCase lc) {
  ReductionPlan p;
  p.structure = s;
  p.removed_vertices = std::move(removed);
  std::sort(del.begin(), del.end());
  std::sort(add.begin(), add.end());
  p.removed_edges = std::move(del);
  p.added_edges = std::move(add);
  p.lift_case = std::move(lc);
  p.compaction.assign(static_cast<std::size_t>(g.n()), -1);
  Vertex next = 0;
  for (Vertex x = 0; x < g.n(); ++x)
    if (!p.removed_vertices.contains(x)) p.compaction[static_cast<std::size_t>(x)] = next++;
  for (const Edge& e : p.removed_edges)
    if (!g.has_edge(e.u, e.v)) throw std::logic_error("plan removes a missing edge");
  for (const Edge& e : p.added_edges)
    if (g.has_edge(e.u, e.v)) throw std::logic_error("plan adds an existing edge");
  return p;
}

inline std::vector<Edge> path_edges(const std::vector<Vertex>& path) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
  return out;
}

inline std::vector<Edge> triangle(Vertex a, Vertex b, Vertex c) { return {Edge(a, b), Edge(b, c), Edge(a, c)}; }

inline bool has_tri_neighbour(const Graph& g, const std::array<Vertex, 3>& s, const VertexSet& excluded) {
  for (Vertex w : g.neighbours(s[0]))
    if (!excluded.contains(w) && w != s[1] && w != s[2] && g.has_edge(w, s[1]) && g.has_edge(w, s[2])) return true;
  return false;
}

/// Independent triple S of G[N] for the triangle-adding sublemmas: least S
/// with an edge from S into `reach`, else least S with a tri-neighbour
/// outside `excluded`.
inline std::optional<std::array<Vertex, 3>> choose_triple(const Graph& g, const VertexSet& n, const VertexSet& reach,
                                                         const VertexSet& excluded) {
  std::vector<std::array<Vertex, 3>> triples;
  const auto& m = n.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      for (std::size_t c = b + 1; c < m.size(); ++c)
        if (!g.has_edge(m[a], m[b]) && !g.has_edge(m[a], m[c]) && !g.has_edge(m[b], m[c]))
          triples.push_back({m[a], m[b], m[c]});
  for (const auto& t : triples)
    for (Vertex y : t)
      for (Vertex w : reach)
        if (w != t[0] && w != t[1] && w != t[2] && g.has_edge(y, w)) return t;
  for (const auto& t : triples)
    if (has_tri_neighbour(g, t, excluded)) return t;
  return std::nullopt;
}

inline VertexSet set_union(const VertexSet& a, std::initializer_list<Vertex> extra) {
  VertexSet r = a;
  for (Vertex x : extra) r.insert(x);
  return r;
}

// ---------------------------------------------------------------------------

inline PlanResult plan_deg24(const Graph& g, const ReducibleStructure& s) {
  const auto& nb = s.N.members();
  const VertexSet gone{s.u};
  if (nb.size() == 2) {
    if (g.has_edge(nb[0], nb[1]))
      return make_plan(g, s, gone, {Edge(nb[0], nb[1])}, {}, {"deg2.adj", {nb[0], nb[1]}});
    return make_plan(g, s, gone, {}, {Edge(nb[0], nb[1])}, {"deg2.nonadj", {nb[0], nb[1]}});
  }
  static constexpr std::array<std::array<int, 4>, 3> matchings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& mt : matchings) {
    const Vertex a = nb[mt[0]], b = nb[mt[1]], c = nb[mt[2]], d = nb[mt[3]];
    if (!g.has_edge(a, b) && !g.has_edge(c, d))
      return make_plan(g, s, gone, {}, {Edge(a, b), Edge(c, d)}, {"deg4.two_nonedges", {a, b, c, d}});
  }
  if (auto x = gm_labelling(g, nb))
    return make_plan(g, s, {}, {Edge(s.u, (*x)[2]), Edge(s.u, (*x)[3])}, {Edge((*x)[2], (*x)[3])},
                     {"deg4.gm", *x});
  // K4: keep the 4-cycle x1x2x3x4, drop its diagonals
  return make_plan(g, s, gone, {Edge(nb[0], nb[2]), Edge(nb[1], nb[3])}, {}, {"deg4.k4", nb});
}

inline PlanResult plan_gm(const Graph& g, const ReducibleStructure& s) {
  const auto& x = s.x;
  return make_plan(g, s, {}, {Edge(s.u, x[2]), Edge(s.u, x[3])}, {Edge(x[2], x[3])}, {"gm", x});
}

inline PlanResult plan_clique(const Graph& g, const ReducibleStructure& s) {
  const auto& x = s.x;
  return make_plan(g, s, {}, {Edge(s.u, x[4]), Edge(s.u, x[5])}, {Edge(x[4], x[5])}, {"clique", x});
}

inline PlanResult plan_bypass(const Graph& g, const ReducibleStructure& s) {
  const auto& nb = s.N.members();
  return make_plan(g, s, VertexSet{s.u}, {}, {Edge(nb[0], nb[1])}, {"bypass", {nb[0], nb[1]}});
}

inline PlanResult plan_adj5(const Graph& g, const ReducibleStructure& s) {
  const VertexSet gone{s.u, s.v};
  const auto cls = classify_induced(g, s.N);
  auto tri_case = [&]() -> PlanResult {
    auto t = choose_triple(g, s.N, s.N, gone);
    if (!t) return Inapplicable{"Adj5: independent set without edge or tri-neighbour"};
    std::vector<Vertex> y(t->begin(), t->end());
    for (Vertex x : s.N)
      if (x != y[0] && x != y[1] && x != y[2]) y.push_back(x);
    return make_plan(g, s, gone, {}, triangle(y[0], y[1], y[2]), {"adj5.ii", y});
  };
  switch (cls.tag) {
    case SmallGraphTag::HasDeg3Vertex:
      if (independent_triple(g, s.N)) return tri_case();
      return make_plan(g, s, gone, {}, {}, {"adj5.i", {cls.witness[0]}});
    case SmallGraphTag::C5: {
      std::vector<Vertex> best;
      const auto& w = cls.witness;
      for (int skip = 0; skip < 5; ++skip)
        for (int dir : {1, 4}) {
          std::vector<Vertex> y;
          for (int k = 1; k <= 4; ++k) y.push_back(w[static_cast<std::size_t>((skip + dir * k) % 5)]);
          y.push_back(w[static_cast<std::size_t>(skip)]);
          if (best.empty() || y < best) best = y;
        }
      const auto& y = best;
      return make_plan(g, s, gone, {Edge(y[1], y[2])}, {Edge(y[1], y[3]), Edge(y[3], y[0]), Edge(y[0], y[2])},
                       {"adj5.iii", y});
    }
    case SmallGraphTag::K3UnionP2: {
      std::vector<Vertex> tri(cls.witness.begin(), cls.witness.begin() + 3);
      std::sort(tri.begin(), tri.end());
      Vertex p = cls.witness[3], q = cls.witness[4];
      if (q < p) std::swap(p, q);
      std::vector<Vertex> y{tri[0], tri[1], tri[2], p, q};
      return make_plan(g, s, gone, {Edge(y[0], y[2])}, {Edge(y[0], y[3]), Edge(y[2], y[3])}, {"adj5.iv", y});
    }
    default:
      return tri_case();
  }
}

inline PlanResult plan_nonadj6(const Graph& g, const ReducibleStructure& s) {
  const VertexSet gone{s.u, s.v};
  const auto cls = classify_induced(g, s.N);
  if (cls.tag == SmallGraphTag::TwoTriangles) return make_plan(g, s, gone, {}, {}, {"nonadj6.i", cls.witness});
  if (cls.tag == SmallGraphTag::HasDeg3Vertex && !independent_triple(g, s.N))
    return make_plan(g, s, gone, {}, {}, {"nonadj6.iv", {cls.witness[0]}});
  auto t = choose_triple(g, s.N, s.N, gone);
  if (!t) return Inapplicable{"NonAdj6: independent set without edge or tri-neighbour"};
  std::vector<Vertex> y(t->begin(), t->end());
  for (Vertex x : s.N)
    if (x != y[0] && x != y[1] && x != y[2]) y.push_back(x);
  return make_plan(g, s, gone, {}, triangle(y[0], y[1], y[2]), {"nonadj6.iii", y});
}

}  // namespace detail

namespace detail {

inline PlanResult plan_adj4(const Graph& g, const ReducibleStructure& s) {
  if (!s.connector) return Inapplicable{"NoConnector"};
  const VertexSet gone{s.u, s.v};
  const auto& path = *s.connector;
  const std::vector<Edge> pe = path_edges(path);
  const Vertex xu = s.x_u, xv = s.x_v;
  const auto& nb = s.N.members();
  const auto cls = classify_induced(g, s.N);

  auto bare = [&](std::vector<Vertex> y) { return make_plan(g, s, gone, pe, {}, {"adj4.i", std::move(y)}); };
  auto tri_case = [&]() -> PlanResult {
    auto t = choose_triple(g, s.N, set_union(s.N, {xu, xv}), gone);
    if (!t) return Inapplicable{"Adj4: terminal configuration (independent N, no tri-neighbour)"};
    std::vector<Vertex> y(t->begin(), t->end());
    for (Vertex x : nb)
      if (x != y[0] && x != y[1] && x != y[2]) y.push_back(x);
    return make_plan(g, s, gone, pe, triangle(y[0], y[1], y[2]), {"adj4.ii", y});
  };
  auto rest_of = [&](std::initializer_list<Vertex> used) {
    std::vector<Vertex> r;
    for (Vertex x : nb)
      if (std::find(used.begin(), used.end(), x) == used.end()) r.push_back(x);
    return r;
  };
  // x_u y1, y1y2, y2 x_v absent; y1 or y2 has a neighbour among the other two
  auto case_iii = [&]() -> std::optional<PlanResult> {
    for (Vertex y1 : nb)
      for (Vertex y2 : nb) {
        if (y1 == y2 || g.has_edge(xu, y1) || g.has_edge(y1, y2) || g.has_edge(y2, xv)) continue;
        auto r = rest_of({y1, y2});
        bool edge = false;
        for (Vertex w : r) edge |= g.has_edge(y1, w) || g.has_edge(y2, w);
        if (!edge) continue;
        return make_plan(g, s, gone, {}, {Edge(xu, y1), Edge(y1, y2), Edge(y2, xv)},
                         {"adj4.iii", {y1, y2, r[0], r[1]}});
      }
    return std::nullopt;
  };
  // y1y2, y3y4, y1y5 present with y5 private; y1y3, y2y3 absent
  auto case_iv = [&]() -> std::optional<PlanResult> {
    for (Vertex y5 : {xu, xv})
      for (Vertex y1 : nb) {
        if (!g.has_edge(y1, y5)) continue;
        for (Vertex y2 : nb) {
          if (y2 == y1 || !g.has_edge(y1, y2)) continue;
          for (Vertex y3 : nb) {
            if (y3 == y1 || y3 == y2 || g.has_edge(y1, y3) || g.has_edge(y2, y3)) continue;
            const Vertex y4 = rest_of({y1, y2, y3})[0];
            if (!g.has_edge(y3, y4)) continue;
            auto del = pe;
            del.emplace_back(y1, y2);
            return make_plan(g, s, gone, del, {Edge(y1, y3), Edge(y3, y2)}, {"adj4.iv", {y1, y2, y3, y4, y5}});
          }
        }
      }
    return std::nullopt;
  };

  switch (cls.tag) {
    case SmallGraphTag::HasDeg3Vertex: {
      const Vertex x = cls.witness[0];
      auto r = rest_of({x});
      bool indep = !g.has_edge(r[0], r[1]) && !g.has_edge(r[0], r[2]) && !g.has_edge(r[1], r[2]);
      if (!indep) return bare({x});
      auto del = pe;
      return make_plan(g, s, gone, del, triangle(r[0], r[1], r[2]), {"adj4.ii", {r[0], r[1], r[2], x}});
    }
    case SmallGraphTag::Empty:
    case SmallGraphTag::IndepTriple:
    case SmallGraphTag::SingleEdge:
    case SmallGraphTag::TwoEdgesPath:
      return tri_case();
    case SmallGraphTag::TwoEdgesMatching:
    case SmallGraphTag::PathPlusEdge:
      if (auto p = case_iv()) return *p;
      if (auto p = case_iii()) return *p;
      return Inapplicable{"Adj4: no sublemma matches"};
    case SmallGraphTag::Triangle: {
      const Vertex x4 = cls.witness[3];
      for (std::size_t i = 0; i < 3; ++i)
        if (g.has_edge(cls.witness[i], xu) || g.has_edge(cls.witness[i], xv)) return bare({});
      if (auto p = case_iii()) return *p;
      std::vector<Vertex> tri(cls.witness.begin(), cls.witness.begin() + 3);
      std::sort(tri.begin(), tri.end());
      const Vertex y5 = g.has_edge(x4, xv) ? xv : xu;
      std::vector<Vertex> y{tri[0], tri[1], tri[2], x4, y5};
      auto del = pe;
      del.emplace_back(y[0], y[2]);
      return make_plan(g, s, gone, del, {Edge(y[0], y[3]), Edge(y[2], y[3])}, {"adj4.v", y});
    }
    case SmallGraphTag::C4: {
      for (Vertex x : nb)
        if (g.has_edge(x, xu) || g.has_edge(x, xv)) return bare({});
      if (auto p = case_iii()) return *p;
      return Inapplicable{"Adj4: no sublemma matches"};
    }
    default:
      return Inapplicable{"Adj4: unexpected neighbourhood shape"};
  }
}

}  // namespace detail

inline PlanResult plan(const Graph& g, const ReducibleStructure& s) {
  switch (s.variant) {
    case Variant::Deg24Odd: return detail::plan_deg24(g, s);
    case Variant::Deg4GM: return detail::plan_gm(g, s);
    case Variant::Deg6Clique: return detail::plan_clique(g, s);
    case Variant::Adj5: return detail::plan_adj5(g, s);
    case Variant::NonAdj6: return detail::plan_nonadj6(g, s);
    case Variant::Adj4: return detail::plan_adj4(g, s);
    case Variant::Deg2Bypass: return detail::plan_bypass(g, s);
  }
  return Inapplicable{"unknown variant"};
}

/// The modified graph, compacted.
inline Graph apply_plan(const Graph& g, const ReductionPlan& p) {
  std::set<Edge> del(p.removed_edges.begin(), p.removed_edges.end());
  std::vector<Edge> es;
  auto map = [&](Vertex x) { return p.compaction[static_cast<std::size_t>(x)]; };
  for (const Edge& e : g.edges())
    if (map(e.u) >= 0 && map(e.v) >= 0 && !del.contains(e)) es.emplace_back(map(e.u), map(e.v));
  for (const Edge& e : p.added_edges) es.emplace_back(map(e.u), map(e.v));
  return Graph::from_edges(g.n() - static_cast<int>(p.removed_vertices.size()), es);
}

}  // namespace hajos
