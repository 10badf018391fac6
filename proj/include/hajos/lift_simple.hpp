#pragma once

#include <array>
#include <string>
#include <vector>

#include "hajos/lift_engine.hpp"

namespace hajos {

namespace detail {

inline LiftResult lift_gm_with(const LiftContext& ctx, Vertex v, const std::vector<Vertex>& x, const std::string& tag) {
  const int k = ctx.c(x[2], x[3]);
  Recipe r;
  r.path({x[2], v, x[3]}, k);
  if (auto out = ctx.attempt(r)) return {*out, {tag}};
  // x3x4 shares the class through v: trade x1 v x2 for the edge x1x2 first
  if (ctx.c(x[0], v) == k) {
    Recipe s;
    s.path({x[0], x[1]}, k).path({x[0], v, x[1]}, ctx.c(x[0], x[1])).path({x[2], v, x[3]}, k);
    if (auto out = ctx.attempt(s)) return {*out, {tag + ".swap"}};
  }
  throw LiftFailed(tag, "x3 v x4 recolouring did not verify");
}

/// K4 neighbourhood: G' kept the 4-cycle x1x2x3x4 and dropped its diagonals.
inline LiftResult lift_k4(const LiftContext& ctx, Vertex u, const std::vector<Vertex>& q) {
  static constexpr std::array<std::array<int, 4>, 8> dihedral{
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}, {0, 3, 2, 1}, {3, 2, 1, 0}, {2, 1, 0, 3}, {1, 0, 3, 2}}};
  const int f = ctx.fresh();
  for (const auto& perm : dihedral) {
    const Vertex a = q[static_cast<std::size_t>(perm[0])], b = q[static_cast<std::size_t>(perm[1])];
    const Vertex c = q[static_cast<std::size_t>(perm[2])], d = q[static_cast<std::size_t>(perm[3])];
    const int i = ctx.c(a, b), k = ctx.c(c, d), j = ctx.c(a, d);
    if (i != k) {
      Recipe r;
      r.path({a, u, b}, i).path({c, u, d}, k).cycle({a, b, d, c}, f);
      if (auto out = ctx.attempt(r)) return {*out, {"deg24.k4.distinct"}};
      continue;
    }
    if (ctx.mono({a, b, c, d, a})) {
      Recipe r;
      r.cycle({a, u, b, c, d}, i).cycle({d, u, c, a, b}, f);
      if (auto out = ctx.attempt(r)) return {*out, {"deg24.k4.mono"}};
      continue;
    }
    if (j != ctx.c(b, c)) continue;
    {
      Recipe r;
      r.path({a, u, d}, i).path({b, c}, i).path({b, u, c}, j).cycle({a, b, d, c}, f);
      if (auto out = ctx.attempt(r)) return {*out, {"deg24.k4.cross"}};
    }
    auto arc = path_along_cycle(ctx.base(), i, d, a, VertexSet{b, c});
    if (arc) {
      Recipe r;
      r.path({a, u, d}, i).path({b, u, c}, j).cycle(join({{a, c, b, d}, arc.path}), f);
      if (auto out = ctx.attempt(r)) return {*out, {"deg24.k4.parallel"}};
    }
  }
  throw LiftFailed("deg24.k4", "no labelling of the 4-cycle verified");
}

}  // namespace detail

inline LiftResult lift_deg4_gm(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) {
  LiftContext ctx(g, p, c_mod);
  return detail::lift_gm_with(ctx, p.structure.u, p.lift_case.y, "gm");
}

inline LiftResult lift_deg2_bypass(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) {
  LiftContext ctx(g, p, c_mod);
  const auto& y = p.lift_case.y;
  Recipe r;
  r.path({y[0], p.structure.u, y[1]}, ctx.c(y[0], y[1]));
  if (auto out = ctx.attempt(r)) return {*out, {"bypass"}};
  throw LiftFailed("bypass", "x1 u x2 recolouring did not verify");
}

inline LiftResult lift_deg24_odd(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) {
  LiftContext ctx(g, p, c_mod);
  const Vertex u = p.structure.u;
  const auto& y = p.lift_case.y;
  const std::string& tag = p.lift_case.tag;
  if (tag == "deg2.nonadj") {
    Recipe r;
    r.path({y[0], u, y[1]}, ctx.c(y[0], y[1]));
    if (auto out = ctx.attempt(r)) return {*out, {"deg24.deg2.nonadj"}};
  } else if (tag == "deg2.adj") {
    Recipe r;
    r.cycle({y[0], u, y[1]}, ctx.fresh());
    if (auto out = ctx.attempt(r)) return {*out, {"deg24.deg2.adj"}};
  } else if (tag == "deg4.two_nonedges") {
    const int i = ctx.c(y[0], y[1]), j = ctx.c(y[2], y[3]);
    Recipe r;
    r.path({y[0], u, y[1]}, i).path({y[2], u, y[3]}, j);
    if (i != j) {
      if (auto out = ctx.attempt(r)) return {*out, {"deg24.deg4.distinct"}};
    } else if (auto painted = ctx.paint(r)) {
      Colouring split = split_two_cycle_class(*painted, i);
      if (verify_legal(g, split).ok) return {split, {"deg24.deg4.split"}};
    }
  } else if (tag == "deg4.gm") {
    return detail::lift_gm_with(ctx, u, y, "deg24.deg4.gm");
  } else if (tag == "deg4.k4") {
    return detail::lift_k4(ctx, u, y);
  }
  throw LiftFailed("deg24." + tag, "recolouring did not verify");
}

inline LiftResult lift_deg6_clique(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) {
  LiftContext ctx(g, p, c_mod);
  const Vertex u = p.structure.u;
  const auto& x = p.lift_case.y;
  const Vertex x5 = x[4], x6 = x[5];
  const int X = ctx.c(x5, x6);
  auto done = [&](Recipe& r, const char* tag) -> std::optional<LiftResult> {
    r.path({x5, u, x6}, X);
    if (auto out = ctx.attempt(r)) return LiftResult{*out, {tag}};
    return std::nullopt;
  };
  if (!ctx.base().touches(u, X)) {
    Recipe r;
    if (auto res = done(r, "clique.free")) return *res;
    throw LiftFailed("clique.free", "x5 u x6 recolouring did not verify");
  }
  // pairs {a,a'} and {b,b'} of the clique by colour at u; {a,a'} carries X
  std::vector<Vertex> withx, other;
  for (int k = 0; k < 4; ++k) (ctx.c(u, x[static_cast<std::size_t>(k)]) == X ? withx : other).push_back(x[static_cast<std::size_t>(k)]);
  if (withx.size() != 2 || other.size() != 2) throw LiftFailed("clique", "u is not on two colour classes");
  for (int sa = 0; sa < 2; ++sa)
    for (int sb = 0; sb < 2; ++sb) {
      const Vertex a = withx[static_cast<std::size_t>(sa)], a2 = withx[static_cast<std::size_t>(1 - sa)];
      const Vertex b = other[static_cast<std::size_t>(sb)], b2 = other[static_cast<std::size_t>(1 - sb)];
      const int B = ctx.c(u, b), D = ctx.c(a, a2), E = ctx.c(b, b2);
      if (D != B) {
        Recipe r;
        r.path({a, u, a2}, D).path({a, a2}, X);
        if (auto res = done(r, "clique.alpha")) return *res;
        continue;
      }
      if (E != X) {
        Recipe r;
        r.path({a, u, a2}, B).path({a, a2}, X).path({b, u, b2}, E).path({b, b2}, B);
        if (auto res = done(r, "clique.beta")) return *res;
        continue;
      }
      const int F1 = ctx.c(a2, b), F2 = ctx.c(a2, b2);
      if (F1 == X || F2 == X) continue;
      if (F1 == B && F2 != B) {
        Recipe r;
        r.path({a, a2}, X).path({a2, u, b2}, F2).path({a, u, b, a2, b2}, B);
        if (auto res = done(r, "clique.gamma")) return *res;
        continue;
      }
      if (F2 == B && F1 != B) {
        Recipe r;
        r.path({a, a2}, X).path({a2, u, b}, F1).path({a, u, b2, a2, b}, B);
        if (auto res = done(r, "clique.delta")) return *res;
        continue;
      }
      {
        Recipe r;
        r.path({a, u, b2}, D).path({a2, b}, D).path({a2, u, b}, F1).path({a, a2}, X);
        if (auto res = done(r, "clique.epsilon.c1")) return *res;
      }
      {
        Recipe r;
        r.path({a, u, b}, D).path({a2, b2}, D).path({a2, u, b2}, F2).path({a, a2}, X);
        if (auto res = done(r, "clique.epsilon.c2")) return *res;
      }
    }
  throw LiftFailed("clique", "no pair labelling verified");
}

}  // namespace hajos
