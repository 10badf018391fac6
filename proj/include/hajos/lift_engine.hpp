#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hajos/colouring.hpp"
#include "hajos/graph.hpp"
#include "hajos/plan.hpp"

namespace hajos {

/// A lift found no recolouring that verifies. Never a legitimate outcome.
class LiftFailed : public std::runtime_error {
 public:
  LiftFailed(std::string tag, const std::string& detail)
      : std::runtime_error("LiftFailed[" + tag + "]: " + detail), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

struct LiftResult {
  Colouring colouring;
  std::vector<std::string> branches;  // proof cases taken, outermost first
};

/// One recolouring: every step paints a walk of g with one colour. Colours
/// are read from the reduced colouring before any step is applied.
struct Recipe {
  struct Step {
    std::vector<Vertex> walk;
    int colour = 0;
    bool closed = false;
  };
  std::vector<Step> steps;

  Recipe& path(std::vector<Vertex> p, int col) {
    steps.push_back({std::move(p), col, false});
    return *this;
  }
  Recipe& cycle(std::vector<Vertex> p, int col) {
    steps.push_back({std::move(p), col, true});
    return *this;
  }
};

/// Concatenates walks, dropping the repeated joint vertex.
inline std::vector<Vertex> join(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i > 0 || out.empty() || out.back() != p[i]) out.push_back(p[i]);
  return out;
}

inline std::vector<Vertex> reversed(std::vector<Vertex> p) {
  std::reverse(p.begin(), p.end());
  return p;
}

class LiftContext {
 public:
  LiftContext(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) : g_(g), plan_(p), base_(g.n()) {
    std::vector<Vertex> back(static_cast<std::size_t>(g.n()), -1);
    for (Vertex x = 0; x < g.n(); ++x)
      if (p.compaction[static_cast<std::size_t>(x)] >= 0) back[static_cast<std::size_t>(p.compaction[static_cast<std::size_t>(x)])] = x;
    for (const auto& [e, col] : c_mod.assignment)
      base_.set(back[static_cast<std::size_t>(e.u)], back[static_cast<std::size_t>(e.v)], col);
    std::vector<Edge> es;
    for (const auto& [e, col] : base_.assignment) es.push_back(e);
    reduced_ = Graph::from_edges(g.n(), es);
    fresh_ = hajos_bound(g.n());
  }

  const Graph& g() const { return g_; }
  const ReductionPlan& plan() const { return plan_; }
  /// The reduced graph in g's labels; removed vertices are isolated.
  const Graph& reduced() const { return reduced_; }
  const Colouring& base() const { return base_; }
  int fresh() const { return fresh_; }

  /// Replaces the reduced colouring (after an in-place repair).
  void rebase(Colouring c) { base_ = std::move(c); }

  int c(Vertex a, Vertex b) const { return base_.colour(a, b); }
  /// Common colour of a walk of the reduced graph, 0 unless monochromatic.
  int mono(const std::vector<Vertex>& walk) const {
    int col = -1;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      const int k = base_.colour(walk[i], walk[i + 1]);
      if (k == 0 || (col != -1 && k != col)) return 0;
      col = k;
    }
    return col < 0 ? 0 : col;
  }

  /// Applies r without verifying; nullopt when a step is malformed.
  std::optional<Colouring> paint(const Recipe& r) const {
    Colouring out(g_.n());
    for (const auto& [e, col] : base_.assignment)
      if (g_.has_edge(e.u, e.v)) out.assignment.emplace(e, col);
    for (const auto& st : r.steps) {
      if (st.colour <= 0) return std::nullopt;
      std::size_t k = st.walk.size();
      if (st.closed && k > 1 && st.walk.front() == st.walk.back()) --k;
      const std::size_t edges = st.closed ? k : k - 1;
      for (std::size_t i = 0; i < edges; ++i) {
        const Vertex a = st.walk[i], b = st.walk[(i + 1) % k];
        if (a == b || !g_.has_edge(a, b)) return std::nullopt;
        out.set(a, b, st.colour);
      }
    }
    return out;
  }

  std::optional<Colouring> attempt(const Recipe& r) const {
    auto out = paint(r);
    if (!out || !verify_legal(g_, *out).ok) return std::nullopt;
    return out;
  }

 private:
  const Graph& g_;
  const ReductionPlan& plan_;
  Colouring base_;
  Graph reduced_;
  int fresh_ = 0;
};

}  // namespace hajos
