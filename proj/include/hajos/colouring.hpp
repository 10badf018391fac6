#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hajos/graph.hpp"

namespace hajos {

enum class ColouringErrc {
  EmptyClass,
  NotACycle,
  VerticesNotOnCycle,
  NotAClique,
  ClassNotTwoCycles,
  NoFreeColour,
  TooManyCycles,
  InternalInvariantBreach
};

inline const char* to_string(ColouringErrc e) {
  switch (e) {
    case ColouringErrc::EmptyClass: return "EmptyClass";
    case ColouringErrc::NotACycle: return "NotACycle";
    case ColouringErrc::VerticesNotOnCycle: return "VerticesNotOnCycle";
    case ColouringErrc::NotAClique: return "NotAClique";
    case ColouringErrc::ClassNotTwoCycles: return "ClassNotTwoCycles";
    case ColouringErrc::NoFreeColour: return "NoFreeColour";
    case ColouringErrc::TooManyCycles: return "TooManyCycles";
    case ColouringErrc::InternalInvariantBreach: return "InternalInvariantBreach";
  }
  return "?";
}

class ColouringError : public std::runtime_error {
 public:
  ColouringError(ColouringErrc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ColouringErrc code() const { return code_; }

 private:
  ColouringErrc code_;
};

/// Edge -> colour map. Legality is a property checked by verify_legal, so the
/// same type carries intermediate assignments during recolouring.
struct Colouring {
  int n = 0;
  std::map<Edge, int> assignment;

  Colouring() = default;
  explicit Colouring(int vertices) : n(vertices) {}

  int bound() const { return hajos_bound(n); }

  /// Colour of ab, 0 when uncoloured.
  int colour(Vertex a, Vertex b) const {
    auto it = assignment.find(Edge(a, b));
    return it == assignment.end() ? 0 : it->second;
  }
  int operator()(Vertex a, Vertex b) const { return colour(a, b); }

  void set(Vertex a, Vertex b, int col) { assignment[Edge(a, b)] = col; }
  void erase(Vertex a, Vertex b) { assignment.erase(Edge(a, b)); }

  /// Colours every consecutive pair of `path` with `col`.
  void set_path(const std::vector<Vertex>& path, int col) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) set(path[i], path[i + 1], col);
  }
  void set_cycle(const std::vector<Vertex>& cyc, int col) {
    set_path(cyc, col);
    if (cyc.size() > 2) set(cyc.back(), cyc.front(), col);
  }

  std::vector<Edge> class_edges(int col) const {
    std::vector<Edge> out;
    for (const auto& [e, c] : assignment)
      if (c == col) out.push_back(e);
    return out;
  }

  std::set<int> colours() const {
    std::set<int> out;
    for (const auto& [e, c] : assignment) out.insert(c);
    return out;
  }
  int colour_count() const { return static_cast<int>(colours().size()); }

  /// Whether vertex x has an incident edge of colour col.
  bool touches(Vertex x, int col) const {
    for (const auto& [e, c] : assignment)
      if (c == col && (e.u == x || e.v == x)) return true;
    return false;
  }

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

using LegalColouring = Colouring;

struct CycleDecomposition {
  int n = 0;
  std::vector<std::vector<Vertex>> cycles;
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

enum class ViolationKind { NotACycle, ColourOutOfRange, UncolouredEdge, UnknownEdge, EdgeCoveredTwice, TooManyCycles };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotACycle: return "NotACycle";
    case ViolationKind::ColourOutOfRange: return "ColourOutOfRange";
    case ViolationKind::UncolouredEdge: return "UncolouredEdge";
    case ViolationKind::UnknownEdge: return "UnknownEdge";
    case ViolationKind::EdgeCoveredTwice: return "EdgeCoveredTwice";
    case ViolationKind::TooManyCycles: return "TooManyCycles";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  int colour = 0;
  Edge edge{};
  std::string describe() const {
    std::string s = to_string(kind);
    switch (kind) {
      case ViolationKind::NotACycle:
      case ViolationKind::ColourOutOfRange:
      case ViolationKind::TooManyCycles: return s + "(" + std::to_string(colour) + ")";
      default: return s + "(" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")";
    }
  }
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  bool ok = true;
  std::vector<Violation> violations;
  void add(Violation v) {
    ok = false;
    violations.push_back(v);
  }
  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == k; });
  }
};

namespace detail {

/// Traverses an edge set that forms one simple cycle. Returns nullopt otherwise.
inline std::optional<std::vector<Vertex>> trace_single_cycle(const std::vector<Edge>& es) {
  if (es.size() < 3) return std::nullopt;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : es) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& [x, ns] : adj)
    if (ns.size() != 2) return std::nullopt;
  Vertex start = adj.begin()->first;
  auto& sn = adj[start];
  Vertex prev = start, cur = std::min(sn[0], sn[1]);
  std::vector<Vertex> cyc{start};
  while (cur != start) {
    cyc.push_back(cur);
    const auto& ns = adj[cur];
    Vertex next = ns[0] == prev ? ns[1] : ns[0];
    prev = cur;
    cur = next;
    if (cyc.size() > es.size()) return std::nullopt;
  }
  if (cyc.size() != es.size()) return std::nullopt;
  return cyc;
}

}  // namespace detail

/// Canonical traversal: starts at the minimum vertex and proceeds toward its
/// smaller neighbour on the cycle.
inline std::vector<Vertex> canonical_cycle(std::vector<Vertex> cyc) {
  if (cyc.empty()) return cyc;
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

inline Verdict verify_legal(const Graph& g, const Colouring& c) {
  Verdict v;
  for (const auto& [e, col] : c.assignment)
    if (!g.has_edge(e.u, e.v)) v.add({ViolationKind::UnknownEdge, col, e});
  for (const Edge& e : g.edges())
    if (!c.assignment.contains(e)) v.add({ViolationKind::UncolouredEdge, 0, e});
  const int bound = hajos_bound(g.n());
  std::map<int, std::vector<Edge>> classes;
  for (const auto& [e, col] : c.assignment) classes[col].push_back(e);
  for (const auto& [col, es] : classes) {
    if (col < 1 || col > bound) v.add({ViolationKind::ColourOutOfRange, col, {}});
    if (!detail::trace_single_cycle(es)) v.add({ViolationKind::NotACycle, col, {}});
  }
  return v;
}

inline std::vector<Vertex> colour_class_cycle(const Colouring& c, int i) {
  auto es = c.class_edges(i);
  if (es.empty()) throw ColouringError(ColouringErrc::EmptyClass, "colour " + std::to_string(i));
  auto cyc = detail::trace_single_cycle(es);
  if (!cyc) throw ColouringError(ColouringErrc::NotACycle, "colour " + std::to_string(i));
  return canonical_cycle(*cyc);
}

enum class ArcKind { Unique, BothArcsQualify, Neither };

struct ArcResult {
  ArcKind kind = ArcKind::Neither;
  std::vector<Vertex> path;  // a..b, set when kind == Unique
  explicit operator bool() const { return kind == ArcKind::Unique; }
};

/// The two a-b arcs of a cycle, both oriented from a to b.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> cycle_arcs(const std::vector<Vertex>& cyc, Vertex a,
                                                                      Vertex b) {
  auto ia = std::find(cyc.begin(), cyc.end(), a);
  auto ib = std::find(cyc.begin(), cyc.end(), b);
  if (ia == cyc.end() || ib == cyc.end() || a == b)
    throw ColouringError(ColouringErrc::VerticesNotOnCycle, std::to_string(a) + "," + std::to_string(b));
  const std::size_t len = cyc.size();
  std::size_t pa = static_cast<std::size_t>(ia - cyc.begin());
  std::vector<Vertex> fwd, bwd;
  for (std::size_t k = pa;; k = (k + 1) % len) {
    fwd.push_back(cyc[k]);
    if (cyc[k] == b) break;
  }
  for (std::size_t k = pa;; k = (k + len - 1) % len) {
    bwd.push_back(cyc[k]);
    if (cyc[k] == b) break;
  }
  return {fwd, bwd};
}

/// C_ab: the unique a-b arc of colour class i whose interior avoids `forbidden`.
inline ArcResult path_along_cycle(const Colouring& c, int i, Vertex a, Vertex b, const VertexSet& forbidden) {
  auto cyc = colour_class_cycle(c, i);
  auto [p, q] = cycle_arcs(cyc, a, b);
  auto clean = [&](const std::vector<Vertex>& arc) {
    for (std::size_t k = 1; k + 1 < arc.size(); ++k)
      if (forbidden.contains(arc[k])) return false;
    return true;
  };
  bool okp = clean(p), okq = clean(q);
  if (okp && okq) return {ArcKind::BothArcsQualify, {}};
  if (okp) return {ArcKind::Unique, p};
  if (okq) return {ArcKind::Unique, q};
  return {ArcKind::Neither, {}};
}

/// Relabels colours to 1..k, ordered by each class's smallest edge.
inline Colouring renormalize(const Colouring& c) {
  std::map<int, int> relabel;
  for (const auto& [e, col] : c.assignment)
    if (!relabel.contains(col)) relabel.emplace(col, static_cast<int>(relabel.size()) + 1);
  Colouring out(c.n);
  for (const auto& [e, col] : c.assignment) out.assignment.emplace(e, relabel[col]);
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition view

inline CycleDecomposition to_decomposition(const Colouring& c) {
  CycleDecomposition d{c.n, {}};
  for (int col : c.colours()) d.cycles.push_back(colour_class_cycle(c, col));
  std::sort(d.cycles.begin(), d.cycles.end());
  return d;
}

inline Colouring from_decomposition(const CycleDecomposition& d, int n) {
  if (static_cast<int>(d.cycles.size()) > hajos_bound(n))
    throw ColouringError(ColouringErrc::TooManyCycles,
                         std::to_string(d.cycles.size()) + " > " + std::to_string(hajos_bound(n)));
  Colouring c(n);
  int col = 0;
  for (const auto& cyc : d.cycles) c.set_cycle(cyc, ++col);
  return c;
}

/// Checks a raw cycle list against g: each cycle simple and on edges of g,
/// every edge covered exactly once, cycle count within the bound.
inline Verdict verify_decomposition(const Graph& g, const CycleDecomposition& d) {
  Verdict v;
  std::map<Edge, int> cover;
  int idx = 0;
  for (const auto& cyc : d.cycles) {
    ++idx;
    std::vector<Vertex> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    bool simple = cyc.size() >= 3 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!simple) v.add({ViolationKind::NotACycle, idx, {}});
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      Vertex a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a == b) continue;
      Edge e(a, b);
      if (!g.has_edge(a, b)) v.add({ViolationKind::UnknownEdge, idx, e});
      else if (++cover[e] == 2) v.add({ViolationKind::EdgeCoveredTwice, idx, e});
    }
  }
  for (const Edge& e : g.edges())
    if (!cover.contains(e)) v.add({ViolationKind::UncolouredEdge, 0, e});
  if (static_cast<int>(d.cycles.size()) > hajos_bound(g.n()))
    v.add({ViolationKind::TooManyCycles, static_cast<int>(d.cycles.size()), {}});
  return v;
}

// ---------------------------------------------------------------------------
// Recolouring primitives

enum class RepairBranch { Unchanged, PathFlip, ColourElimination };

inline const char* to_string(RepairBranch b) {
  switch (b) {
    case RepairBranch::Unchanged: return "unchanged";
    case RepairBranch::PathFlip: return "path_flip";
    case RepairBranch::ColourElimination: return "colour_elimination";
  }
  return "?";
}

struct RepairOutcome {
  Colouring colouring;
  RepairBranch branch = RepairBranch::Unchanged;
};

/// Makes triangle x1x2x3 non-monochromatic using a common neighbour y.
inline RepairOutcome repair_mono_triangle(const Graph& h, const Colouring& c, Vertex x1, Vertex x2, Vertex x3,
                                          Vertex y) {
  const std::array<Vertex, 4> q{x1, x2, x3, y};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (!h.has_edge(q[static_cast<std::size_t>(a)], q[static_cast<std::size_t>(b)]))
        throw ColouringError(ColouringErrc::NotAClique, "missing edge in {x1,x2,x3,y}");
  const int i = c(x1, x2);
  if (i != c(x2, x3) || i != c(x1, x3)) return {c, RepairBranch::Unchanged};

  const std::array<Vertex, 3> xs{x1, x2, x3};
  bool condition = false;
  for (Vertex y1 : xs)
    for (Vertex y2 : xs) {
      if (y1 == y2) continue;
      const int j = c(y1, y);
      if (!c.touches(y2, j)) continue;
      condition = true;
      const Vertex y3 = x1 + x2 + x3 - y1 - y2;
      auto cyc = colour_class_cycle(c, j);
      // P': the j-path from y to y2 that does not pass through y1.
      auto [p, q2] = cycle_arcs(cyc, y, y2);
      const auto& arc = std::find(p.begin(), p.end(), y1) == p.end() ? p : q2;
      if (std::find(arc.begin(), arc.end(), y3) != arc.end()) continue;
      Colouring out = c;
      out.set(y1, y2, j);
      out.set(y1, y, i);
      out.set_path(arc, i);
      if (verify_legal(h, out).ok) return {out, RepairBranch::PathFlip};
    }
  if (condition)
    throw ColouringError(ColouringErrc::InternalInvariantBreach, "no claw flip orientation verified");

  Colouring out = c;
  const int c1 = c(x1, y), c2 = c(x2, y), c3 = c(x3, y);
  out.set_path({x1, x2, y}, c1);
  out.set_path({x2, x3, y}, c2);
  out.set_path({x3, x1, y}, c3);
  if (!verify_legal(h, out).ok)
    throw ColouringError(ColouringErrc::InternalInvariantBreach, "colour elimination did not verify");
  return {out, RepairBranch::ColourElimination};
}

/// Splits a class made of two cycles sharing one vertex; the cycle that does
/// not contain the class's smallest edge moves to the smallest free colour.
inline Colouring split_two_cycle_class(const Colouring& c, int i) {
  auto es = c.class_edges(i);
  auto fail = [&] { return ColouringError(ColouringErrc::ClassNotTwoCycles, "colour " + std::to_string(i)); };
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : es) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Vertex hub = -1;
  for (const auto& [x, ns] : adj) {
    if (ns.size() == 4 && hub == -1) hub = x;
    else if (ns.size() != 2) throw fail();
  }
  if (hub == -1) throw fail();
  std::vector<std::vector<Vertex>> loops;
  std::set<Vertex> seen_start;
  for (Vertex start : adj[hub]) {
    if (seen_start.contains(start)) continue;
    std::vector<Vertex> w{hub};
    Vertex pv = hub, cv = start;
    while (cv != hub && w.size() <= es.size()) {
      w.push_back(cv);
      const auto& ns = adj[cv];
      Vertex nx = ns[0] == pv ? ns[1] : ns[0];
      pv = cv;
      cv = nx;
    }
    if (cv != hub || w.size() < 3) throw fail();
    seen_start.insert(w[1]);
    seen_start.insert(w.back());
    loops.push_back(w);
  }
  if (loops.size() != 2 || loops[0].size() + loops[1].size() != es.size()) throw fail();
  const Edge first = es.front();
  auto contains_first = [&](const std::vector<Vertex>& w) {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (Edge(w[k], w[(k + 1) % w.size()]) == first) return true;
    return false;
  };
  const auto& moved = contains_first(loops[0]) ? loops[1] : loops[0];
  auto used = c.colours();
  int fresh = 0;
  for (int k = 1; k <= c.bound(); ++k)
    if (!used.contains(k)) {
      fresh = k;
      break;
    }
  if (fresh == 0) throw ColouringError(ColouringErrc::NoFreeColour, "bound " + std::to_string(c.bound()));
  Colouring out = c;
  out.set_cycle(moved, fresh);
  return out;
}

}  // namespace hajos
