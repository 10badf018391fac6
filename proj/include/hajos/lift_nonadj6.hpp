#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hajos/lift_adj5.hpp"

namespace hajos {

namespace detail {

struct MonoPath {
  std::vector<Vertex> walk;  // a..b
  int colour = 0;
};

/// Non-adjacent u, v with six common neighbours; P_ab denotes a monochromatic
/// a-b path whose interior avoids the rest of N.
class NonAdjLift {
 public:
  NonAdjLift(LiftContext& ctx, Vertex u, Vertex v, const VertexSet& n) : ctx_(ctx), u_(u), v_(v), n_(n) {}

  std::vector<MonoPath> mono_paths(Vertex a, Vertex b) const {
    std::vector<MonoPath> out;
    const VertexSet avoid = n_.without({a, b});
    for (int col : ctx_.base().colours()) {
      if (!ctx_.base().touches(a, col) || !ctx_.base().touches(b, col)) continue;
      auto cyc = colour_class_cycle(ctx_.base(), col);
      auto [p, q] = cycle_arcs(cyc, a, b);
      for (const auto& arc : {p, q}) {
        bool clean = true;
        for (std::size_t k = 1; k + 1 < arc.size(); ++k) clean &= !avoid.contains(arc[k]);
        if (clean) out.push_back({arc, col});
      }
    }
    return out;
  }

  /// C_ab in class col, when unique.
  std::optional<std::vector<Vertex>> arc(int col, Vertex a, Vertex b) const {
    if (!on_class(a, col) || !on_class(b, col)) return std::nullopt;
    auto r = path_along_cycle(ctx_.base(), col, a, b, n_.without({a, b}));
    if (!r) return std::nullopt;
    return r.path;
  }

  bool on_class(Vertex x, int col) const { return ctx_.base().touches(x, col); }

  /// Two vertex-disjoint chains y1 P y2 P y3 and y1' P y2' P y3' covering N.
  std::optional<Colouring> two_paths() const {
    std::vector<Vertex> p = n_.members();
    const int f = ctx_.fresh();
    do {
      if (p[1] > p[4]) continue;  // swapping the chains gives the same colouring
      for (const auto& a : mono_paths(p[0], p[1]))
        for (const auto& b : mono_paths(p[1], p[2])) {
          if (!disjoint({&a, &b})) continue;
          for (const auto& c : mono_paths(p[3], p[4])) {
            if (c.colour == a.colour || !disjoint({&a, &b, &c})) continue;
            for (const auto& d : mono_paths(p[4], p[5])) {
              if (d.colour == b.colour || !disjoint({&a, &b, &c, &d})) continue;
              Recipe r;
              r.path({p[0], u_, p[1]}, a.colour).path({p[1], v_, p[2]}, b.colour);
              r.path({p[3], u_, p[4]}, c.colour).path({p[4], v_, p[5]}, d.colour);
              r.cycle(join({a.walk, b.walk, {p[2], u_, p[5]}, reversed(d.walk), reversed(c.walk), {p[3], v_}}), f);
              if (auto out = ctx_.attempt(r)) return out;
            }
          }
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
  }

  /// A chain P_12 P_23 P_34 P_45 through five vertices of N.
  std::optional<Colouring> five_path() const {
    std::vector<Vertex> p = n_.members();
    const int f = ctx_.fresh();
    do {
      for (const auto& a : mono_paths(p[0], p[1]))
        for (const auto& b : mono_paths(p[1], p[2])) {
          if (!disjoint({&a, &b})) continue;
          for (const auto& c : mono_paths(p[2], p[3])) {
            if (c.colour == a.colour || !disjoint({&a, &b, &c})) continue;
            for (const auto& d : mono_paths(p[3], p[4])) {
              if (d.colour == b.colour || !disjoint({&a, &b, &c, &d})) continue;
              Recipe r;
              r.path({p[0], u_, p[1]}, a.colour).path({p[1], v_, p[2]}, b.colour);
              r.path({p[2], u_, p[3]}, c.colour).path({p[3], v_, p[4]}, d.colour);
              r.cycle(join({a.walk, b.walk, c.walk, d.walk, {p[4], u_, p[5], v_}}), f);
              if (auto out = ctx_.attempt(r)) return out;
            }
          }
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
  }

 private:
  /// Paths pairwise share at most their common endpoints.
  static bool disjoint(std::initializer_list<const MonoPath*> ps) {
    std::vector<Vertex> seen;
    std::vector<Edge> edges;
    for (const MonoPath* p : ps) {
      for (std::size_t k = 0; k + 1 < p->walk.size(); ++k) edges.emplace_back(p->walk[k], p->walk[k + 1]);
      for (std::size_t k = 1; k + 1 < p->walk.size(); ++k) seen.push_back(p->walk[k]);
    }
    std::sort(seen.begin(), seen.end());
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (const MonoPath* p : ps)
      for (Vertex end : {p->walk.front(), p->walk.back()})
        if (std::binary_search(seen.begin(), seen.end(), end)) return false;
    return true;
  }

  LiftContext& ctx_;
  Vertex u_, v_;
  VertexSet n_;
};

}  // namespace detail

inline LiftResult lift_nonadj6(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) {
  LiftContext ctx(g, p, c_mod);
  const Vertex u = p.structure.u, v = p.structure.v;
  const auto& y = p.lift_case.y;
  const auto& nb = p.structure.N.members();
  const std::string& tag = p.lift_case.tag;
  const int f = ctx.fresh();
  detail::NonAdjLift nl(ctx, u, v, p.structure.N);

  if (tag == "nonadj6.i") {
    if (auto out = nl.two_paths()) return {*out, {"nonadj6.i"}};
    throw LiftFailed("nonadj6.i", "no pair of disjoint chains verified");
  }

  if (tag == "nonadj6.iii") {
    const std::array<Vertex, 3> s{y[0], y[1], y[2]};
    const std::vector<Vertex> rest{y[3], y[4], y[5]};
    auto case_a = [&]() -> std::optional<LiftResult> {
      for (const auto& o : detail::orderings(s)) {
        const Vertex y1 = o[0], y2 = o[1], y3 = o[2];
        const int i = ctx.c(y1, y2), c23 = ctx.c(y2, y3), c31 = ctx.c(y3, y1);
        if (i == c23 || i == c31) continue;
        for (std::size_t k = 0; k < 3; ++k) {
          const Vertex y4 = rest[k], y5 = rest[(k + 1) % 3], y6 = rest[(k + 2) % 3];
          if (nl.on_class(y4, i)) continue;
          Recipe r;
          r.path({y2, u, y4, v, y1}, i).path({y2, v, y3}, c23).path({y3, u, y1}, c31).cycle({y5, u, y6, v}, f);
          if (auto out = ctx.attempt(r)) return LiftResult{*out, {"nonadj6.iii.A_off"}};
        }
        // every other vertex of N lies on C: Q = C - y1y2 from y2 to y1
        auto cyc = colour_class_cycle(ctx.base(), i);
        auto [p1, p2] = cycle_arcs(cyc, y2, y1);
        const auto& q = p1.size() == 2 ? p2 : p1;
        std::vector<Vertex> order;
        for (Vertex x : q)
          if (std::find(rest.begin(), rest.end(), x) != rest.end()) order.push_back(x);
        if (order.size() != 3) continue;
        const Vertex a = order[0], b = order[1], c = order[2];
        const auto ia = std::find(q.begin(), q.end(), a), ib = std::find(q.begin(), q.end(), b);
        const std::vector<Vertex> head(q.begin(), ia + 1), mid(ia, ib + 1), tail(ib, q.end());
        Recipe r;
        r.path({y2, u, y3}, c23).path({y3, v, y1}, c31);
        r.cycle(join({{y1, u}, reversed(head), {v}, tail}), i);
        r.cycle(join({mid, {u, c, v}}), f);
        if (auto out = ctx.attempt(r)) return LiftResult{*out, {"nonadj6.iii.on_cycle"}};
      }
      return std::nullopt;
    };
    if (auto res = case_a()) return *res;
    if (!ctx.mono({s[0], s[1], s[2], s[0]})) throw LiftFailed("nonadj6.iii.A", "no ordering of S verified");
    if (auto w = detail::tri_neighbour(ctx.reduced(), s)) {
      auto rep = repair_mono_triangle(ctx.reduced(), ctx.base(), s[0], s[1], s[2], *w);
      ctx.rebase(rep.colouring);
      if (auto res = case_a()) {
        res->branches.insert(res->branches.begin(), "nonadj6.iii.repair");
        return *res;
      }
      throw LiftFailed("nonadj6.iii.repair", "triangle repair did not enable case A");
    }
    const int t = ctx.c(s[0], s[1]);
    for (const auto& o : detail::orderings(s)) {
      const Vertex y1 = o[0], y2 = o[1], y3 = o[2];
      if (y2 > y3) continue;
      for (std::size_t k = 0; k < 3; ++k) {
        const Vertex y4 = rest[k];
        if (!g.has_edge(y1, y4)) continue;
        const int j = ctx.c(y1, y4);
        for (int sw = 0; sw < 2; ++sw) {
          const Vertex y5 = rest[(k + 1 + static_cast<std::size_t>(sw)) % 3];
          const Vertex y6 = rest[(k + 2 - static_cast<std::size_t>(sw)) % 3];
          if (!nl.on_class(y6, j)) {
            Recipe r;
            r.path({y1, u, y6, v, y4}, j).path({y2, u, y3}, t).path({y2, v, y3}, t).cycle({y1, y4, u, y5, v}, f);
            if (auto out = ctx.attempt(r)) return {*out, {"nonadj6.iii.B_off"}};
            continue;
          }
          if (!nl.on_class(y5, j)) continue;
          // segment of C - y1y4 from y4 to y5, which must avoid y6
          auto cyc = colour_class_cycle(ctx.base(), j);
          auto [p1, p2] = cycle_arcs(cyc, y4, y1);
          const auto& q = p1.size() == 2 ? p2 : p1;
          const auto i5 = std::find(q.begin(), q.end(), y5), i6 = std::find(q.begin(), q.end(), y6);
          if (i6 < i5) continue;
          const std::vector<Vertex> seg(q.begin(), i5 + 1);
          Recipe r;
          r.path({y1, v, y4}, j).path({y5, u, y4}, j).cycle({y2, u, y3, v}, t);
          r.cycle(join({{y1}, seg, {v, y6, u}}), f);
          if (auto out = ctx.attempt(r)) return {*out, {"nonadj6.iii.segment"}};
        }
      }
    }
    throw LiftFailed("nonadj6.iii.B", "monochromatic triangle without a usable edge");
  }

  if (tag == "nonadj6.iv") {
    for (const auto& q : detail::paths_of_length_three(g, nb, nb)) {
      if (std::find(q.begin(), q.end(), y[0]) == q.end()) continue;
      std::vector<Vertex> others;
      for (Vertex x : nb)
        if (std::find(q.begin(), q.end(), x) == q.end()) others.push_back(x);
      const Vertex y1 = q[0], y2 = q[1], y3 = q[2], y4 = q[3];
      const int c12 = ctx.c(y1, y2), c23 = ctx.c(y2, y3), c34 = ctx.c(y3, y4);
      for (int sw = 0; sw < 2; ++sw) {
        const Vertex y5 = others[static_cast<std::size_t>(sw)], y6 = others[static_cast<std::size_t>(1 - sw)];
        if (c34 != c12 && c34 != c23) {
          if (!nl.on_class(y5, c34)) {
            Recipe r;
            r.path({y1, u, y2}, c12).path({y2, v, y3}, c23).path({y3, u, y5, v, y4}, c34);
            r.cycle({y1, y2, y3, y4, u, y6, v}, f);
            if (auto out = ctx.attempt(r)) return {*out, {"nonadj6.iv.A.off_cycle"}};
          } else if (nl.on_class(y6, c34)) {
            if (auto out = nl.five_path()) return {*out, {"nonadj6.iv.A.five_path"}};
          }
        }
        if (c23 == c12 || c23 == c34) continue;
        const int i = c23;
        if (!nl.on_class(y5, i)) {
          Recipe r;
          r.path({y1, u, y2}, c12).path({y3, v, y4}, c34).path({y2, v, y5, u, y3}, i);
          r.cycle({y1, y2, y3, y4, u, y6, v}, f);
          if (auto out = ctx.attempt(r)) return {*out, {"nonadj6.iv.B.off_cycle"}};
          continue;
        }
        if (!nl.on_class(y6, i)) continue;
        const bool on1 = nl.on_class(y1, i), on4 = nl.on_class(y4, i);
        if (!on1 && !on4) {
          if (auto out = nl.two_paths()) return {*out, {"nonadj6.iv.B.neither_on"}};
          continue;
        }
        if (on1 && !on4) {
          if (nl.arc(i, y6, y3) || nl.arc(i, y5, y3)) {
            if (auto out = nl.two_paths()) return {*out, {"nonadj6.iv.B.y1_on.two_paths"}};
            continue;
          }
          auto c15 = nl.arc(i, y1, y5), c56 = nl.arc(i, y5, y6), c62 = nl.arc(i, y6, y2), c13 = nl.arc(i, y1, y3);
          if (c15 && c56 && c62 && c13) {
            Recipe r;
            r.path({y1, u, y2}, c12).path({y3, v, y4}, c34);
            r.cycle(join({{y3, y2, v, y1}, *c15, *c56, {y6, u, y4}}), i);
            r.cycle(join({{y3, u, y5, v, y6}, *c62, {y2, y1}, *c13}), f);
            if (auto out = ctx.attempt(r)) return {*out, {"nonadj6.iv.B.y1_on.reroute"}};
          }
          continue;
        }
        if (on1 && on4) {
          auto c65 = nl.arc(i, y6, y5), c52 = nl.arc(i, y5, y2);
          const bool direct = !c65 || (c52 && (nl.arc(i, y6, y3) || nl.arc(i, y6, y4))) ||
                              (!c52 && !nl.arc(i, y5, y3) && !nl.arc(i, y6, y2) && !nl.arc(i, y6, y3));
          if (direct) {
            if (auto out = nl.two_paths()) return {*out, {"nonadj6.iv.B.both_on.two_paths"}};
            continue;
          }
          auto c34a = nl.arc(i, y3, y4), c41 = nl.arc(i, y4, y1), c61 = nl.arc(i, y6, y1);
          if (c52 && c34a && c41 && c61) {
            Recipe r;
            r.path({y3, u, y4}, c34).path({y1, v, y2}, c12);
            r.cycle(join({{y5, v, y3}, *c34a, *c41, {y1, y2, u, y6}, *c65}), i);
            r.cycle(join({{y2, y3, y4, v, y6}, *c61, {y1, u, y5}, *c52}), f);
            if (auto out = ctx.attempt(r)) return {*out, {"nonadj6.iv.B.both_on.reroute"}};
          }
        }
      }
    }
    throw LiftFailed("nonadj6.iv", "no case of the path lemma verified");
  }
  throw LiftFailed(tag, "unknown lift case");
}

}  // namespace hajos
