#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hajos/exact.hpp"
#include "hajos/lift_adj4.hpp"
#include "hajos/lift_adj5.hpp"
#include "hajos/lift_nonadj6.hpp"
#include "hajos/lift_simple.hpp"
#include "hajos/structures.hpp"

namespace hajos {

/// An even graph whose exact minimum exceeds the Hajós bound.
class CounterexampleCandidate : public std::runtime_error {
 public:
  explicit CounterexampleCandidate(Graph g)
      : std::runtime_error("CounterexampleCandidate: even graph on " + std::to_string(g.n()) +
                           " vertices needs more than " + std::to_string(hajos_bound(g.n())) + " cycles"),
        graph_(std::move(g)) {}
  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

struct TraceEntry {
  ReductionPlan plan;
  std::vector<std::string> branches;  // filled in when the lift runs
};

struct ReductionTrace {
  std::vector<TraceEntry> plans;  // outermost first
  CycleDecomposition base;
};

/// A lift failed inside hajos_decompose; carries the trace up to that point.
class LiftAborted : public std::runtime_error {
 public:
  LiftAborted(const LiftFailed& e, ReductionTrace trace, std::size_t level)
      : std::runtime_error(e.what()), trace_(std::move(trace)), level_(level) {}
  const ReductionTrace& trace() const { return trace_; }
  /// Index into trace().plans of the plan whose lift failed.
  std::size_t level() const { return level_; }

 private:
  ReductionTrace trace_;
  std::size_t level_;
};

struct DecomposeOptions {
  int base_threshold = 5;  // graphs this small go straight to the exact solver
  SearchBudget budget;
};

struct DecomposeResult {
  Colouring colouring;
  ReductionTrace trace;
};

/// Lifts a legal colouring of apply_plan(g, p) to g.
inline LiftResult lift(const Graph& g, const ReductionPlan& p, const Colouring& c_mod) {
  switch (p.structure.variant) {
    case Variant::Deg24Odd: return lift_deg24_odd(g, p, c_mod);
    case Variant::Deg4GM: return lift_deg4_gm(g, p, c_mod);
    case Variant::Deg6Clique: return lift_deg6_clique(g, p, c_mod);
    case Variant::Adj5: return lift_adj5(g, p, c_mod);
    case Variant::NonAdj6: return lift_nonadj6(g, p, c_mod);
    case Variant::Adj4: return lift_adj4(g, p, c_mod);
    case Variant::Deg2Bypass: return lift_deg2_bypass(g, p, c_mod);
  }
  throw std::logic_error("unknown variant");
}

/// First applicable plan in priority order.
inline std::optional<ReductionPlan> first_plan(const Graph& g) {
  for (const auto& s : find_structures(g)) {
    auto r = plan(g, s);
    if (auto* p = std::get_if<ReductionPlan>(&r)) return std::move(*p);
  }
  return std::nullopt;
}

inline DecomposeResult hajos_decompose(const Graph& g, const DecomposeOptions& opt = {}) {
  if (!is_even_graph(g)) throw NotEvenError();
  ReductionTrace trace;
  std::vector<Graph> graphs{g};
  while (graphs.back().n() > opt.base_threshold) {
    auto p = first_plan(graphs.back());
    if (!p) break;
    Graph next = apply_plan(graphs.back(), *p);
    trace.plans.push_back({std::move(*p), {}});
    graphs.push_back(std::move(next));
  }
  const Graph& inner = graphs.back();
  auto base = decompose_within(inner, hajos_bound(inner.n()), opt.budget);
  if (!base) throw CounterexampleCandidate(inner);
  trace.base = *base;
  Colouring c = from_decomposition(*base, inner.n());
  for (std::size_t k = trace.plans.size(); k-- > 0;) {
    LiftResult res;
    try {
      res = lift(graphs[k], trace.plans[k].plan, c);
    } catch (const LiftFailed& e) {
      throw LiftAborted(e, std::move(trace), k);
    }
    c = renormalize(res.colouring);
    trace.plans[k].branches = std::move(res.branches);
  }
  return {std::move(c), std::move(trace)};
}

}  // namespace hajos
