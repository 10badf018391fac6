#pragma once

// Random small graphs with a planted reducible structure, and the
// reduce / exact-solve / lift round trip run on them.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hajos/hajos.hpp"

namespace hajos::testing {

inline const std::vector<Variant>& all_variants() {
  static const std::vector<Variant> v{Variant::Deg24Odd, Variant::Deg4GM, Variant::Deg6Clique,
                                      Variant::Adj5,     Variant::NonAdj6, Variant::Adj4, Variant::Deg2Bypass};
  return v;
}

/// Every branch tag a lift of the variant can report.
inline const std::set<std::string>& expected_branches(Variant v) {
  static const std::map<Variant, std::set<std::string>> tags{
      {Variant::Deg24Odd,
       {"deg24.deg2.nonadj", "deg24.deg2.adj", "deg24.deg4.distinct", "deg24.deg4.split", "deg24.deg4.gm",
        "deg24.deg4.gm.swap", "deg24.k4.distinct", "deg24.k4.mono", "deg24.k4.cross", "deg24.k4.parallel"}},
      {Variant::Deg4GM, {"gm", "gm.swap"}},
      {Variant::Deg6Clique,
       {"clique.free", "clique.alpha", "clique.beta", "clique.gamma", "clique.delta", "clique.epsilon.c1",
        "clique.epsilon.c2"}},
      {Variant::Adj5,
       {"adj5.i.a", "adj5.i.b", "adj5.ii.A", "adj5.ii.repair", "adj5.ii.B", "adj5.iii.all_equal", "adj5.iii.y1y3",
        "adj5.iii.y2y4", "adj5.iii.y4y1", "adj5.iv.a", "adj5.iv.b", "adj5.iv.mono", "adj5.iv.y2y3_eq_y3y4",
        "adj5.iv.y2y3_eq_y1y4"}},
      {Variant::NonAdj6,
       {"nonadj6.i", "nonadj6.iii.A_off", "nonadj6.iii.on_cycle", "nonadj6.iii.repair", "nonadj6.iii.B_off",
        "nonadj6.iii.segment", "nonadj6.iv.A.off_cycle", "nonadj6.iv.A.five_path", "nonadj6.iv.B.off_cycle",
        "nonadj6.iv.B.neither_on", "nonadj6.iv.B.y1_on.two_paths", "nonadj6.iv.B.y1_on.reroute",
        "nonadj6.iv.B.both_on.two_paths", "nonadj6.iv.B.both_on.reroute"}},
      {Variant::Adj4,
       {"adj4.i.a", "adj4.i.b", "adj4.i.c", "adj4.i.common", "adj4.i.private", "adj4.ii.A", "adj4.ii.repair",
        "adj4.ii.B", "adj4.ii.B_private", "adj4.iii.xu_unique", "adj4.iii.xv_unique", "adj4.iii.y1y2_unique",
        "adj4.iii.all_same", "adj4.iv.mono", "adj4.iv.a", "adj4.iv.b", "adj4.iv.c", "adj4.v.a", "adj4.v.b",
        "adj4.v.mono", "adj4.v.y2y3_eq_y3y4", "adj4.v.y2y3_eq_y1y4"}},
      {Variant::Deg2Bypass, {"bypass"}},
  };
  return tags.at(v);
}

namespace detail {

struct Draft {
  int n;
  std::set<Edge> es;
  std::vector<char> frozen;  // degree must not change
  std::set<Edge> locked;     // pairs whose adjacency is final

  explicit Draft(int n_) : n(n_), frozen(static_cast<std::size_t>(n_), 0) {}
  void add(Vertex a, Vertex b) { es.insert(Edge(a, b)); }
  void lock(Vertex a, Vertex b) { locked.insert(Edge(a, b)); }
  bool is_free(Vertex a, Vertex b) const {
    return !frozen[static_cast<std::size_t>(a)] && !frozen[static_cast<std::size_t>(b)] && !locked.contains(Edge(a, b));
  }
  void toggle(Vertex a, Vertex b) {
    if (!es.erase(Edge(a, b))) es.insert(Edge(a, b));
  }
  int degree(Vertex x) const {
    int d = 0;
    for (const Edge& e : es) d += (e.u == x || e.v == x);
    return d;
  }
  /// Random edges on free pairs, then odd vertices repaired in pairs, directly
  /// or through a third vertex when the pair itself is locked.
  std::optional<Graph> finish(Rng& rng, std::uint64_t density) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (is_free(a, b) && rng.chance(density, 100)) toggle(a, b);
    std::vector<Vertex> odd;
    for (Vertex x = 0; x < n; ++x)
      if (degree(x) % 2) odd.push_back(x);
    rng.shuffle(odd);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
      const Vertex a = odd[i], b = odd[i + 1];
      if (is_free(a, b)) {
        toggle(a, b);
        continue;
      }
      std::vector<Vertex> via;
      for (Vertex w = 0; w < n; ++w)
        if (w != a && w != b && is_free(a, w) && is_free(b, w)) via.push_back(w);
      if (via.empty()) return std::nullopt;
      const Vertex w = via[rng.below(via.size())];
      toggle(a, w);
      toggle(b, w);
    }
    return Graph::from_edges(n, std::vector<Edge>(es.begin(), es.end()));
  }
};

inline std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng.below(hi - lo + 1); }

using Shape = std::vector<std::pair<int, int>>;

/// Plants `shape` on the listed vertices as their exact induced subgraph.
inline void plant_shape(Draft& dr, const std::vector<Vertex>& on, const Shape& shape) {
  for (std::size_t a = 0; a < on.size(); ++a)
    for (std::size_t b = a + 1; b < on.size(); ++b) dr.lock(on[a], on[b]);
  for (auto [a, b] : shape) dr.add(on[static_cast<std::size_t>(a)], on[static_cast<std::size_t>(b)]);
}

/// Random induced subgraph on k vertices, or one of the listed shapes.
inline std::optional<Shape> choose_shape(Rng& rng, const std::vector<Shape>& special) {
  if (special.empty() || rng.chance(1, 3)) return std::nullopt;
  return special[rng.below(special.size())];
}

inline std::vector<Shape> neighbourhood_shapes(Variant v) {
  switch (v) {
    case Variant::Deg24Odd: return {{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}}};
    case Variant::Adj5:
      return {{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}},
              {{0, 1}, {1, 2}, {0, 2}, {3, 4}},
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}},
              {{0, 1}, {1, 2}, {3, 4}},
              {}};
    case Variant::NonAdj6:
      return {{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}},
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}},
              {{0, 1}, {1, 2}, {2, 3}, {4, 5}},
              {{0, 1}, {2, 3}, {4, 5}},
              {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}},
              {{0, 1}, {1, 2}, {2, 3}},
              {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}},
              {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}},
              {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}},
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 5}, {2, 5}}};
    case Variant::Adj4:
      return {{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {2, 3}}, {{0, 1}, {1, 2}, {2, 3}},
              {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {}, {{0, 1}}, {{0, 1}, {1, 2}}};
    default: return {};
  }
}

}  // namespace detail

/// A random graph built around the variant's structure on vertices 0 (and 1).
/// Parity repair may destroy side conditions, so callers filter with
/// find_structures. nullopt when parity could not be repaired.
inline std::optional<Graph> plant(Variant v, Rng& rng) {
  const std::uint64_t density = detail::pick(rng, 20, 70);
  const auto shape = detail::choose_shape(rng, detail::neighbourhood_shapes(v));
  switch (v) {
    case Variant::Deg24Odd: {
      const int n = static_cast<int>(2 * detail::pick(rng, 2, 5) + 1);
      const int d = shape || rng.chance(1, 2) ? 4 : 2;
      detail::Draft dr(n);
      for (int k = 1; k <= d; ++k) dr.add(0, k);
      dr.frozen[0] = 1;
      if (shape) detail::plant_shape(dr, {1, 2, 3, 4}, *shape);
      return dr.finish(rng, density);
    }
    case Variant::Deg4GM:
    case Variant::Deg2Bypass: {
      const int n = static_cast<int>(detail::pick(rng, 5, 10));
      const int d = v == Variant::Deg4GM ? 4 : 2;
      detail::Draft dr(n);
      for (int k = 1; k <= d; ++k) dr.add(0, k);
      if (v == Variant::Deg4GM) dr.add(1, 2);
      dr.frozen[0] = 1;
      return dr.finish(rng, density);
    }
    case Variant::Deg6Clique: {
      const int n = static_cast<int>(detail::pick(rng, 7, 11));
      detail::Draft dr(n);
      for (int k = 1; k <= 6; ++k) dr.add(0, k);
      for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) dr.add(a, b);
      dr.frozen[0] = 1;
      return dr.finish(rng, density);
    }
    case Variant::Adj5:
    case Variant::NonAdj6:
    case Variant::Adj4: {
      const int common = v == Variant::Adj5 ? 5 : v == Variant::NonAdj6 ? 6 : 4;
      const int extra = v == Variant::Adj4 ? 2 : 0;
      const int n = 2 + common + extra + static_cast<int>(detail::pick(rng, 1, 4));
      detail::Draft dr(n);
      std::vector<Vertex> nb;
      for (int k = 2; k < 2 + common; ++k) {
        dr.add(0, k);
        dr.add(1, k);
        nb.push_back(k);
      }
      if (v != Variant::NonAdj6) dr.add(0, 1);
      const Vertex xu = 2 + common, xv = 3 + common;
      if (v == Variant::Adj4) {
        dr.add(0, xu);
        dr.add(1, xv);
      }
      dr.frozen[0] = dr.frozen[1] = 1;
      if (shape) {
        detail::plant_shape(dr, nb, *shape);
        // private neighbours: free, cut off from N, or joined only to the last vertex of N
        const auto mode = v == Variant::Adj4 ? rng.below(3) : 0;
        if (mode > 0)
          for (Vertex x : nb) {
            dr.lock(x, xu);
            dr.lock(x, xv);
          }
        if (mode == 2) {
          dr.add(nb.back(), xu);
          dr.add(nb.back(), xv);
        }
      }
      return dr.finish(rng, density);
    }
  }
  return std::nullopt;
}

struct RoundTrip {
  std::string outcome;  // "ok", "inapplicable", "absent", "unsolved", or the failure
  std::vector<std::string> branches;
  int colours = 0;
  int bound = 0;
};

/// Plans the first detected instance of v, solves the reduced graph exactly
/// (a seeded solution, so colourings vary), lifts and verifies.
inline RoundTrip round_trip(const Graph& g, Variant v, std::uint64_t seed) {
  RoundTrip out;
  out.bound = hajos_bound(g.n());
  std::optional<ReductionPlan> p;
  bool seen = false;
  for (const auto& s : find_structures(g)) {
    if (s.variant != v) continue;
    seen = true;
    auto r = plan(g, s);
    if (auto* q = std::get_if<ReductionPlan>(&r)) {
      p = std::move(*q);
      break;
    }
  }
  if (!p) {
    out.outcome = seen ? "inapplicable" : "absent";
    return out;
  }
  const Graph h = apply_plan(g, *p);
  SearchBudget b;
  b.shuffle_seed = seed;
  std::optional<CycleDecomposition> d;
  try {
    d = seed % 3 == 0 ? std::optional(min_cycle_decomposition(h, b)) : decompose_within(h, hajos_bound(h.n()), b);
  } catch (const ResourceLimit&) {
  }
  if (!d || static_cast<int>(d->cycles.size()) > hajos_bound(h.n())) {
    out.outcome = "unsolved";
    return out;
  }
  try {
    auto res = lift(g, *p, from_decomposition(*d, h.n()));
    const auto verdict = verify_legal(g, res.colouring);
    out.branches = res.branches;
    out.colours = static_cast<int>(res.colouring.colours().size());
    out.outcome = verdict.ok ? "ok" : "lift output not legal";
  } catch (const LiftFailed& e) {
    out.outcome = e.what();
  }
  return out;
}

struct Soundness {
  int ok = 0;
  int attempts = 0;
  std::map<std::string, int> branches;
  std::vector<std::string> failures;  // outcome and graph6 of each unsound round trip
  int over_budget = 0;                // legal but more colours than the bound
};

/// Round trips planted instances of v until `want` succeed or the attempt cap
/// is hit. Skipped outcomes (absent, inapplicable, unsolved) are not failures.
inline Soundness soundness(Variant v, int want, std::uint64_t seed, int max_attempts) {
  Soundness s;
  Rng rng(seed);
  while (s.ok < want && s.attempts < max_attempts) {
    ++s.attempts;
    auto g = plant(v, rng);
    if (!g) continue;
    auto rt = round_trip(*g, v, rng.next());
    if (rt.outcome == "ok") {
      ++s.ok;
      if (rt.colours > rt.bound) ++s.over_budget;
      for (const auto& b : rt.branches) ++s.branches[b];
    } else if (rt.outcome != "absent" && rt.outcome != "inapplicable" && rt.outcome != "unsolved") {
      s.failures.push_back(rt.outcome + " " + to_graph6(*g));
    }
  }
  return s;
}

}  // namespace hajos::testing
