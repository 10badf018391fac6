#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hajos/lift_engine.hpp"

namespace hajos {

namespace detail {

inline std::optional<Vertex> tri_neighbour(const Graph& h, const std::array<Vertex, 3>& s) {
  for (Vertex w : h.neighbours(s[0]))
    if (w != s[1] && w != s[2] && h.has_edge(w, s[1]) && h.has_edge(w, s[2])) return w;
  return std::nullopt;
}

inline std::vector<std::array<Vertex, 3>> orderings(const std::array<Vertex, 3>& s) {
  std::array<Vertex, 3> p = s;
  std::sort(p.begin(), p.end());
  std::vector<std::array<Vertex, 3>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Triangle-adding case for adjacent u, v. Each slot is a u-v walk through the
/// vertices outside S: [u, y, v] for a common neighbour y, or the connector
/// walk [u, x_u, ..., x_v, v].
inline LiftResult lift_uv_triangle(LiftContext& ctx, Vertex u, Vertex v, const std::array<Vertex, 3>& s,
                                   const std::vector<std::vector<Vertex>>& slots, const std::string& pre) {
  const Graph& g = ctx.g();
  const int f = ctx.fresh();
  auto case_a = [&]() -> std::optional<Colouring> {
    for (const auto& o : orderings(s)) {
      const Vertex y1 = o[0], y2 = o[1], y3 = o[2];
      const int i = ctx.c(y1, y2);
      if (i == ctx.c(y2, y3) || i == ctx.c(y3, y1)) continue;
      Recipe r;
      r.path({y2, u, v, y1}, i).path({y2, v, y3}, ctx.c(y2, y3)).path({y3, u, y1}, ctx.c(y3, y1));
      r.cycle(join({slots[0], reversed(slots[1])}), f);
      if (auto out = ctx.attempt(r)) return out;
    }
    return std::nullopt;
  };
  if (auto out = case_a()) return {*out, {pre + ".A"}};
  if (!ctx.mono({s[0], s[1], s[2], s[0]})) throw LiftFailed(pre + ".A", "no ordering of S verified");
  if (auto w = tri_neighbour(ctx.reduced(), s)) {
    auto rep = repair_mono_triangle(ctx.reduced(), ctx.base(), s[0], s[1], s[2], *w);
    ctx.rebase(rep.colouring);
    if (auto out = case_a()) return {*out, {pre + ".repair", pre + ".A"}};
    throw LiftFailed(pre + ".repair", "triangle repair did not enable case A");
  }
  const int t = ctx.c(s[0], s[1]);
  for (const auto& o : orderings(s)) {
    const Vertex y1 = o[0], y2 = o[1], y3 = o[2];
    if (y2 > y3) continue;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto& slot = slots[k];
      const auto& other = slots[1 - k];
      if (slot.size() == 3 && g.has_edge(y1, slot[1])) {
        const Vertex w = slot[1];
        Recipe r;
        r.path({y1, u, v, w}, ctx.c(y1, w)).path({y2, u, y3}, t).path({y2, v, y3}, t);
        r.cycle(join({{y1, w}, other}), f);
        if (auto out = ctx.attempt(r)) return {*out, {pre + ".B"}};
      }
      if (slot.size() > 3 && other.size() == 3) {
        const Vertex xu = slot[1], xv = slot[slot.size() - 2], y4 = other[1];
        if (g.has_edge(y1, xu)) {
          Recipe r;
          r.path({y1, v, u, xu}, ctx.c(y1, xu)).cycle({y2, u, y3, v}, t);
          r.cycle(join({{y1}, std::vector<Vertex>(slot.begin() + 1, slot.end()), {v, y4, u}}), f);
          if (auto out = ctx.attempt(r)) return {*out, {pre + ".B_private"}};
        }
        if (g.has_edge(y1, xv)) {
          const auto back = reversed(slot);
          Recipe r;
          r.path({y1, u, v, xv}, ctx.c(y1, xv)).cycle({y2, u, y3, v}, t);
          r.cycle(join({{y1}, std::vector<Vertex>(back.begin() + 1, back.end()), {u, y4, v}}), f);
          if (auto out = ctx.attempt(r)) return {*out, {pre + ".B_private"}};
        }
      }
    }
  }
  throw LiftFailed(pre + ".B", "monochromatic triangle without a usable edge");
}

/// Triangle y1y2y3 with y4 outside it; G'' = G' - y1y3 + y1y4 + y3y4. `mid`
/// is the u-v walk standing in for y5; `y5` is the vertex of mid adjacent to y4.
inline LiftResult lift_uv_triangle_nonedges(const LiftContext& ctx, Vertex u, Vertex v, Vertex y1, Vertex y2,
                                            Vertex y3, Vertex y4, const std::vector<Vertex>& mid, Vertex y5,
                                            const std::string& pre) {
  const int f = ctx.fresh();
  for (int swap = 0; swap < 2; ++swap) {
    const Vertex a = swap ? y3 : y1, c = swap ? y1 : y3;
    const int c23 = ctx.c(y2, c), c34 = ctx.c(c, y4), c14 = ctx.c(a, y4);
    if (c23 == c34 || c23 == c14) continue;
    Recipe r;
    r.path({y2, v, u, c}, c23).path({a, u, y4}, c14).path({c, v, y4}, c34);
    r.cycle(join({mid, {v, a, c, y2}}), f);
    if (auto out = ctx.attempt(r)) return {*out, {pre + (swap ? ".b" : ".a")}};
  }
  const int c34 = ctx.c(y3, y4), c14 = ctx.c(y1, y4), c23 = ctx.c(y2, y3);
  if (c34 == c14) {
    // y4 u v y5 takes y4y5's class; mid must end at y5 on the v side
    std::vector<Vertex> m = mid;
    if (m[m.size() - 2] != y5) throw LiftFailed(pre + ".mono", "connector orientation");
    Recipe r;
    r.path({y4, u, v, y5}, ctx.c(y4, y5)).cycle({y1, v, y3, y2, u}, c34);
    m.pop_back();
    r.cycle(join({{y1, y3}, m, {y4, v, y2}}), f);
    if (auto out = ctx.attempt(r)) return {*out, {pre + ".mono"}};
    throw LiftFailed(pre + ".mono", "monochromatic 4-cycle recolouring did not verify");
  }
  if (c23 == c34) {
    Recipe r;
    r.path({y2, u, y3, v, y4}, c23).path({y1, v, u, y4}, c14);
    r.cycle(join({{y1}, mid, {y2, y3}}), f);
    if (auto out = ctx.attempt(r)) return {*out, {pre + ".y2y3_eq_y3y4"}};
  } else if (c23 == c14) {
    Recipe r;
    r.path({y2, u, y3}, c23).path({y1, v, y4}, c14).path({y3, v, u, y4}, c34);
    r.cycle(join({{y1}, mid, {y2, y3}}), f);
    if (auto out = ctx.attempt(r)) return {*out, {pre + ".y2y3_eq_y1y4"}};
  }
  throw LiftFailed(pre, "no triangle case verified");
}

inline std::vector<std::array<Vertex, 4>> paths_of_length_three(const Graph& g, const std::vector<Vertex>& first,
                                                                const std::vector<Vertex>& rest) {
  std::vector<std::array<Vertex, 4>> out;
  for (Vertex a : first)
    for (Vertex b : rest)
      for (Vertex c : rest)
        for (Vertex d : rest) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d)) out.push_back({a, b, c, d});
        }
  return out;
}

}  // namespace detail

inline LiftResult lift_adj5(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) {
  LiftContext ctx(g, p, c_mod);
  const Vertex u = p.structure.u, v = p.structure.v;
  const auto& y = p.lift_case.y;
  const auto& nb = p.structure.N.members();
  const std::string& tag = p.lift_case.tag;
  const int f = ctx.fresh();
  if (tag == "adj5.i") {
    for (const auto& q : detail::paths_of_length_three(g, nb, nb)) {
      if (std::find(q.begin(), q.end(), y[0]) == q.end()) continue;
      Vertex y5 = -1;
      for (Vertex x : nb)
        if (std::find(q.begin(), q.end(), x) == q.end()) y5 = x;
      const int c12 = ctx.c(q[0], q[1]), c23 = ctx.c(q[1], q[2]), c34 = ctx.c(q[2], q[3]);
      if (c34 != c12 && c34 != c23) {
        Recipe r;
        r.path({q[0], u, q[1]}, c12).path({q[1], v, q[2]}, c23).path({q[2], u, v, q[3]}, c34);
        r.cycle({q[0], q[1], q[2], q[3], u, y5, v}, f);
        if (auto out = ctx.attempt(r)) return {*out, {"adj5.i.a"}};
      }
      if (c23 != c12 && c23 != c34) {
        Recipe r;
        r.path({q[0], u, q[1]}, c12).path({q[1], v, u, q[2]}, c23).path({q[2], v, q[3]}, c34);
        r.cycle({q[0], q[1], q[2], q[3], u, y5, v}, f);
        if (auto out = ctx.attempt(r)) return {*out, {"adj5.i.b"}};
      }
    }
    throw LiftFailed("adj5.i", "no non-monochromatic path of length three");
  }
  if (tag == "adj5.ii")
    return detail::lift_uv_triangle(ctx, u, v, {y[0], y[1], y[2]}, {{u, y[3], v}, {u, y[4], v}}, "adj5.ii");
  if (tag == "adj5.iii") {
    for (int rev = 0; rev < 2; ++rev) {
      const Vertex y1 = rev ? y[3] : y[0], y2 = rev ? y[2] : y[1], y3 = rev ? y[1] : y[2], y4 = rev ? y[0] : y[3];
      const Vertex y5 = y[4];
      const int c13 = ctx.c(y1, y3), c24 = ctx.c(y2, y4), c41 = ctx.c(y4, y1);
      if (!rev && c13 == c24 && c24 == c41) {
        Recipe r;
        r.path({y1, u, y2}, ctx.c(y1, y2)).path({y2, v, u, y3}, c13).path({y3, v, y4}, ctx.c(y3, y4));
        r.cycle({u, y5, v, y1, y2, y3, y4}, f);
        if (auto out = ctx.attempt(r)) return {*out, {"adj5.iii.all_equal"}};
      }
      if (c13 != c24 && c13 != c41) {
        Recipe r;
        r.path({y1, u, v, y3}, c13).path({y4, v, y1}, c41).path({y2, u, y4}, c24);
        r.cycle({u, y5, v, y2, y3}, f);
        if (auto out = ctx.attempt(r)) return {*out, {rev ? "adj5.iii.y2y4" : "adj5.iii.y1y3"}};
      }
      if (!rev && c41 != c13 && c41 != c24) {
        Recipe r;
        r.path({y1, v, y3}, c13).path({y4, v, u, y1}, c41).path({y2, u, y4}, c24);
        r.cycle({u, y5, v, y2, y3}, f);
        if (auto out = ctx.attempt(r)) return {*out, {"adj5.iii.y4y1"}};
      }
    }
    throw LiftFailed("adj5.iii", "no induced-path case verified");
  }
  if (tag == "adj5.iv")
    return detail::lift_uv_triangle_nonedges(ctx, u, v, y[0], y[1], y[2], y[3], {u, y[4], v}, y[4], "adj5.iv");
  throw LiftFailed(tag, "unknown lift case");
}

}  // namespace hajos
