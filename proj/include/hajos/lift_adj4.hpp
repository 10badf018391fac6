#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hajos/lift_adj5.hpp"

namespace hajos {

namespace detail {

/// u, v with their private neighbours and the connector oriented x_u -> x_v.
struct Adj4Frame {
  Vertex u, v, xu, xv;
  std::vector<Vertex> path;

  Adj4Frame mirror() const { return {v, u, xv, xu, reversed(path)}; }
  /// u x_u P x_v v
  std::vector<Vertex> link() const { return join({{u}, path, {v}}); }
};

}  // namespace detail

inline LiftResult lift_adj4(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) {
  LiftContext ctx(g, p, c_mod);
  const auto& st = p.structure;
  const detail::Adj4Frame base{st.u, st.v, st.x_u, st.x_v, *st.connector};
  const auto& y = p.lift_case.y;
  const auto& nb = st.N.members();
  const std::string& tag = p.lift_case.tag;
  const int f = ctx.fresh();

  if (tag == "adj4.i") {
    for (int m = 0; m < 2; ++m) {
      const auto fr = m ? base.mirror() : base;
      const Vertex u = fr.u, v = fr.v;
      std::vector<Vertex> first = nb;
      first.push_back(fr.xu);
      for (const auto& q : detail::paths_of_length_three(g, first, nb)) {
        if (m == 1 && q[0] != fr.xu) continue;  // y1 in N is handled unmirrored
        const bool private_start = q[0] == fr.xu;
        Vertex x4 = -1;
        for (Vertex x : nb)
          if (std::find(q.begin(), q.end(), x) == q.end()) x4 = x;
        const std::vector<Vertex> tour =
            private_start ? join({{q[0], q[1], q[2], q[3], u, x4, v}, reversed(fr.path)})
                          : join({{q[0], q[1], q[2], q[3]}, fr.link()});
        const std::string done = private_start ? ".private" : ".common";
        const int c12 = ctx.c(q[0], q[1]), c23 = ctx.c(q[1], q[2]), c34 = ctx.c(q[2], q[3]);
        if (c12 != c23 && c12 != c34) {
          Recipe r;
          r.path({q[0], u, v, q[1]}, c12).path({q[1], u, q[2]}, c23).path({q[2], v, q[3]}, c34).cycle(tour, f);
          if (auto out = ctx.attempt(r)) return {*out, {"adj4.i.a", "adj4.i" + done}};
        }
        if (c23 != c12 && c23 != c34) {
          Recipe r;
          r.path({q[0], u, q[1]}, c12).path({q[1], v, u, q[2]}, c23).path({q[2], v, q[3]}, c34).cycle(tour, f);
          if (auto out = ctx.attempt(r)) return {*out, {"adj4.i.b", "adj4.i" + done}};
        }
        if (c34 != c12 && c34 != c23) {
          Recipe r;
          r.path({q[0], u, q[1]}, c12).path({q[1], v, q[2]}, c23).path({q[2], u, v, q[3]}, c34).cycle(tour, f);
          if (auto out = ctx.attempt(r)) return {*out, {"adj4.i.c", "adj4.i" + done}};
        }
      }
    }
    throw LiftFailed("adj4.i", "no non-monochromatic path of length three");
  }

  if (tag == "adj4.ii")
    return detail::lift_uv_triangle(ctx, base.u, base.v, {y[0], y[1], y[2]},
                                    {{base.u, y[3], base.v}, base.link()}, "adj4.ii");

  if (tag == "adj4.iii") {
    for (int m = 0; m < 2; ++m) {
      const auto fr = m ? base.mirror() : base;
      const Vertex u = fr.u, v = fr.v;
      const Vertex y1 = m ? y[1] : y[0], y2 = m ? y[0] : y[1];
      const int a = ctx.c(fr.xu, y1), b = ctx.c(y1, y2), c = ctx.c(y2, fr.xv);
      if (a != b && a != c) {
        Recipe r;
        r.path({fr.xu, u, v, y1}, a).path({y1, u, y2}, b).path({y2, v, fr.xv}, c).cycle({y[2], u, y[3], v}, f);
        if (auto out = ctx.attempt(r)) return {*out, {m ? "adj4.iii.xv_unique" : "adj4.iii.xu_unique"}};
      }
      if (b != a && b != c) {
        Recipe r;
        r.path({fr.xu, u, y1}, a).path({y1, v, u, y2}, b).path({y2, v, fr.xv}, c).cycle({y[2], u, y[3], v}, f);
        if (auto out = ctx.attempt(r)) return {*out, {"adj4.iii.y1y2_unique"}};
      }
      if (a == b && b == c)
        for (int k = 2; k < 4; ++k) {
          const Vertex y4 = y[static_cast<std::size_t>(k)], y3 = y[static_cast<std::size_t>(5 - k)];
          if (!g.has_edge(y1, y4)) continue;
          Recipe r;
          r.path({fr.xu, u, y2}, a).path({y1, u, v, y4}, ctx.c(y1, y4)).path({y2, v, fr.xv}, a);
          r.cycle({u, y3, v, y1, y4}, f);
          if (auto out = ctx.attempt(r)) return {*out, {"adj4.iii.all_same"}};
        }
    }
    throw LiftFailed("adj4.iii", "no case verified");
  }

  if (tag == "adj4.iv") {
    const auto fr = y[4] == base.xu ? base : base.mirror();
    const Vertex u = fr.u, v = fr.v, y1 = y[0], y2 = y[1], y3 = y[2], y4 = y[3];
    const int a = ctx.c(fr.xu, y1), b = ctx.c(y1, y3), c = ctx.c(y3, y2);
    if (a == b && b == c) {
      Recipe r;
      r.path({fr.xu, u, y1}, a).path({y1, v, y2}, a).path({y3, u, v, y4}, ctx.c(y3, y4));
      r.cycle(join({{u, y2, y1}, fr.path, {v, y3, y4}}), f);
      if (auto out = ctx.attempt(r)) return {*out, {"adj4.iv.mono"}};
      throw LiftFailed("adj4.iv.mono", "recolouring did not verify");
    }
    const std::vector<Vertex> tour = join({{u, y2, y1}, fr.path, {v, y4}});
    if (a != b && a != c) {
      Recipe r;
      r.path({fr.xu, u, v, y1}, a).path({y1, u, y3}, b).path({y3, v, y2}, c).cycle(tour, f);
      if (auto out = ctx.attempt(r)) return {*out, {"adj4.iv.a"}};
    }
    if (b != a && b != c) {
      Recipe r;
      r.path({fr.xu, u, y1}, a).path({y1, v, u, y3}, b).path({y3, v, y2}, c).cycle(tour, f);
      if (auto out = ctx.attempt(r)) return {*out, {"adj4.iv.b"}};
    }
    if (c != a && c != b) {
      Recipe r;
      r.path({fr.xu, u, y1}, a).path({y1, v, y3}, b).path({y3, u, v, y2}, c).cycle(tour, f);
      if (auto out = ctx.attempt(r)) return {*out, {"adj4.iv.c"}};
    }
    throw LiftFailed("adj4.iv", "no case verified");
  }

  if (tag == "adj4.v") {
    // orient so that y5 is x_v, the end of the connector next to v
    const auto fr = y[4] == base.xv ? base : base.mirror();
    auto res = detail::lift_uv_triangle_nonedges(ctx, fr.u, fr.v, y[0], y[1], y[2], y[3], fr.link(), fr.xv, "adj4.v");
    return res;
  }
  throw LiftFailed(tag, "unknown lift case");
}

}  // namespace hajos
