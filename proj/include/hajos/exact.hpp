#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hajos/colouring.hpp"
#include "hajos/graph.hpp"

namespace hajos {

struct SearchBudget {
  std::int64_t max_nodes = 10'000'000;
  std::int64_t max_millis = 60'000;
  std::optional<int> target;
  /// Permutes neighbour order before searching; used to draw varied solutions.
  std::optional<std::uint64_t> shuffle_seed;
};

class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::optional<CycleDecomposition> incumbent)
      : std::runtime_error("ResourceLimit: " + what), incumbent_(std::move(incumbent)) {}
  const std::optional<CycleDecomposition>& incumbent() const { return incumbent_; }

 private:
  std::optional<CycleDecomposition> incumbent_;
};

class NotEvenError : public std::invalid_argument {
 public:
  NotEvenError() : std::invalid_argument("graph has a vertex of odd degree") {}
};

namespace detail {

/// Branch and bound over cycles for one connected component.
class CycleSearch {
 public:
  using Clock = std::chrono::steady_clock;

  CycleSearch(const Graph& g, const SearchBudget& b, std::int64_t& nodes, Clock::time_point deadline)
      : n_(g.n()), budget_(b), nodes_(nodes), deadline_(deadline) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (Vertex x = 0; x < n_; ++x) adj_[static_cast<std::size_t>(x)] = g.neighbours(x);
    if (b.shuffle_seed) {
      std::mt19937_64 rng(*b.shuffle_seed);
      for (auto& row : adj_) std::shuffle(row.begin(), row.end(), rng);
    }
    open_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    deg_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : g.edges()) toggle(e.u, e.v, true);
    remaining_ = g.m();
    on_path_.assign(static_cast<std::size_t>(n_), 0);
  }

  /// Any-order greedy decomposition; never backtracks because every edge of an
  /// even graph lies on a cycle.
  std::vector<std::vector<Vertex>> greedy() {
    std::vector<std::vector<Vertex>> out;
    while (remaining_ > 0) {
      auto [a, w] = anchor();
      std::vector<Vertex> path{a, w};
      on_path_[static_cast<std::size_t>(a)] = on_path_[static_cast<std::size_t>(w)] = 1;
      std::vector<Vertex> found;
      first_cycle(path, found);
      for (Vertex x : path) on_path_[static_cast<std::size_t>(x)] = 0;
      remove_cycle(found, false);
      out.push_back(found);
    }
    for (const auto& c : out) remove_cycle(c, true);
    return out;
  }

  /// Greedy that removes, at each step, the longest cycle through the anchor
  /// edge seen within `probe` extension steps; neighbour order is randomized.
  std::vector<std::vector<Vertex>> greedy_long(std::mt19937_64& rng, int probe) {
    std::vector<std::vector<Vertex>> out;
    while (remaining_ > 0) {
      tick();
      auto [a, w] = anchor();
      std::vector<Vertex> path{a, w}, best;
      on_path_[static_cast<std::size_t>(a)] = on_path_[static_cast<std::size_t>(w)] = 1;
      int left = probe;
      longest(path, best, left, rng);
      for (Vertex x : path) on_path_[static_cast<std::size_t>(x)] = 0;
      remove_cycle(best, false);
      out.push_back(best);
    }
    for (const auto& c : out) remove_cycle(c, true);
    return out;
  }

  /// Searches for a decomposition with at most t cycles.
  std::optional<std::vector<std::vector<Vertex>>> within(int t) {
    limit_ = t;
    stack_.clear();
    if (!dfs()) return std::nullopt;
    auto out = stack_;
    for (const auto& c : out) remove_cycle(c, true);
    return out;
  }

 private:
  bool open(Vertex a, Vertex b) const {
    return open_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] != 0;
  }
  void toggle(Vertex a, Vertex b, bool on) {
    const auto sn = static_cast<std::size_t>(n_);
    open_[static_cast<std::size_t>(a) * sn + static_cast<std::size_t>(b)] = on;
    open_[static_cast<std::size_t>(b) * sn + static_cast<std::size_t>(a)] = on;
    const int d = on ? 1 : -1;
    deg_[static_cast<std::size_t>(a)] += d;
    deg_[static_cast<std::size_t>(b)] += d;
  }
  void remove_cycle(const std::vector<Vertex>& c, bool restore) {
    for (std::size_t k = 0; k < c.size(); ++k) toggle(c[k], c[(k + 1) % c.size()], restore);
    remaining_ += (restore ? 1 : -1) * static_cast<int>(c.size());
  }

  /// Anchor: max remaining degree vertex (lowest index on ties) and its first open neighbour.
  std::pair<Vertex, Vertex> anchor() const {
    Vertex a = -1;
    for (Vertex x = 0; x < n_; ++x)
      if (deg_[static_cast<std::size_t>(x)] > 0 && (a == -1 || deg_[static_cast<std::size_t>(x)] > deg_[static_cast<std::size_t>(a)])) a = x;
    for (Vertex y : adj_[static_cast<std::size_t>(a)])
      if (open(a, y)) return {a, y};
    return {a, -1};
  }

  bool first_cycle(std::vector<Vertex>& path, std::vector<Vertex>& found) {
    const Vertex a = path.front(), x = path.back();
    for (Vertex y : adj_[static_cast<std::size_t>(x)]) {
      if (!open(x, y)) continue;
      if (y == a) {
        if (path.size() >= 3) {
          found = path;
          return true;
        }
        continue;
      }
      if (on_path_[static_cast<std::size_t>(y)]) continue;
      on_path_[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      if (first_cycle(path, found)) return true;
      path.pop_back();
      on_path_[static_cast<std::size_t>(y)] = 0;
    }
    return false;
  }

  void longest(std::vector<Vertex>& path, std::vector<Vertex>& best, int& left, std::mt19937_64& rng) {
    const Vertex a = path.front(), x = path.back();
    std::vector<Vertex> order;
    for (Vertex y : adj_[static_cast<std::size_t>(x)])
      if (open(x, y)) order.push_back(y);
    std::shuffle(order.begin(), order.end(), rng);
    for (Vertex y : order) {
      if (y == a) {
        if (path.size() >= 3 && path.size() > best.size()) best = path;
        continue;
      }
      // once the budget is spent, keep walking only until a cycle is known
      if (on_path_[static_cast<std::size_t>(y)] || (--left < 0 && !best.empty())) continue;
      on_path_[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      longest(path, best, left, rng);
      path.pop_back();
      on_path_[static_cast<std::size_t>(y)] = 0;
    }
  }

  /// Sum over components of max(ceil(maxdeg/2), ceil(m_c/|V_c|)).
  int lower_bound() {
    int total = 0;
    comp_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex s = 0; s < n_; ++s) {
      if (deg_[static_cast<std::size_t>(s)] == 0 || comp_[static_cast<std::size_t>(s)]) continue;
      int verts = 0, degsum = 0, maxdeg = 0;
      work_.assign(1, s);
      comp_[static_cast<std::size_t>(s)] = 1;
      while (!work_.empty()) {
        Vertex x = work_.back();
        work_.pop_back();
        ++verts;
        degsum += deg_[static_cast<std::size_t>(x)];
        maxdeg = std::max(maxdeg, deg_[static_cast<std::size_t>(x)]);
        for (Vertex y : adj_[static_cast<std::size_t>(x)])
          if (open(x, y) && !comp_[static_cast<std::size_t>(y)]) {
            comp_[static_cast<std::size_t>(y)] = 1;
            work_.push_back(y);
          }
      }
      const int m = degsum / 2;
      total += std::max((maxdeg + 1) / 2, (m + verts - 1) / verts);
    }
    return total;
  }

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw ResourceLimit("node budget exhausted", std::nullopt);
    if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) throw ResourceLimit("time budget exhausted", std::nullopt);
  }

  bool dfs() {
    tick();
    if (remaining_ == 0) return true;
    if (static_cast<int>(stack_.size()) + lower_bound() > limit_) return false;
    auto [a, w] = anchor();
    std::vector<Vertex> path{a, w};
    on_path_[static_cast<std::size_t>(a)] = on_path_[static_cast<std::size_t>(w)] = 1;
    bool ok = extend(path);
    on_path_[static_cast<std::size_t>(a)] = on_path_[static_cast<std::size_t>(w)] = 0;
    return ok;
  }

  /// Enumerates cycles through the anchor edge path[0]path[1]; recurses on each.
  bool extend(std::vector<Vertex>& path) {
    const Vertex a = path.front(), x = path.back();
    for (Vertex y : adj_[static_cast<std::size_t>(x)]) {
      if (!open(x, y)) continue;
      if (y == a) {
        if (path.size() < 3) continue;
        std::vector<Vertex> cyc = path;
        for (Vertex z : cyc) on_path_[static_cast<std::size_t>(z)] = 0;
        remove_cycle(cyc, false);
        stack_.push_back(cyc);
        bool ok = dfs();
        if (ok) return true;
        stack_.pop_back();
        remove_cycle(cyc, true);
        for (Vertex z : cyc) on_path_[static_cast<std::size_t>(z)] = 1;
        tick();
        continue;
      }
      if (on_path_[static_cast<std::size_t>(y)]) continue;
      on_path_[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      bool ok = extend(path);
      path.pop_back();
      on_path_[static_cast<std::size_t>(y)] = 0;
      if (ok) return true;
    }
    return false;
  }

  int n_;
  SearchBudget budget_;
  std::int64_t& nodes_;
  Clock::time_point deadline_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> open_;
  std::vector<int> deg_;
  std::vector<char> on_path_;
  std::vector<char> comp_;
  std::vector<Vertex> work_;
  int remaining_ = 0;
  int limit_ = 0;
  std::vector<std::vector<Vertex>> stack_;
};

struct Component {
  Graph graph;
  std::vector<Vertex> labels;  // local -> global
};

/// Blocks (maximal 2-connected pieces) that carry at least one edge, relabelled
/// densely. Every cycle lies inside one block, and every block of an even graph
/// is even, so blocks can be solved independently.
inline std::vector<Component> blocks(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> found;
  int clock = 0;
  struct Frame {
    Vertex x, parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < g.n(); ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0 || g.degree(root) == 0) continue;
    std::vector<Frame> dfs{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    while (!dfs.empty()) {
      Frame& f = dfs.back();
      const auto& nb = g.neighbours(f.x);
      const auto xi = static_cast<std::size_t>(f.x);
      if (f.next < nb.size()) {
        const Vertex y = nb[f.next++];
        const auto yi = static_cast<std::size_t>(y);
        if (disc[yi] < 0) {
          stack.emplace_back(f.x, y);
          disc[yi] = low[yi] = clock++;
          dfs.push_back({y, f.x, 0});
        } else if (y != f.parent && disc[yi] < disc[xi]) {
          stack.emplace_back(f.x, y);
          low[xi] = std::min(low[xi], disc[yi]);
        }
        continue;
      }
      const Vertex x = f.x, parent = f.parent;
      dfs.pop_back();
      if (parent < 0) continue;
      const auto pi = static_cast<std::size_t>(parent);
      low[pi] = std::min(low[pi], low[xi]);
      if (low[xi] >= disc[pi]) {
        const Edge cut(parent, x);
        std::vector<Edge> block;
        while (true) {
          const Edge e = stack.back();
          stack.pop_back();
          block.push_back(e);
          if (e == cut) break;
        }
        found.push_back(std::move(block));
      }
    }
  }
  std::vector<Component> out;
  std::vector<Vertex> local(n, -1);
  for (const auto& block : found) {
    std::vector<Vertex> mem;
    for (const Edge& e : block) {
      mem.push_back(e.u);
      mem.push_back(e.v);
    }
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    for (std::size_t i = 0; i < mem.size(); ++i) local[static_cast<std::size_t>(mem[i])] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const Edge& e : block) es.emplace_back(local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]);
    out.push_back({Graph::from_edge_list(static_cast<int>(mem.size()), es), mem});
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) { return a.labels < b.labels; });
  return out;
}

inline std::vector<std::vector<Vertex>> relabel(const std::vector<std::vector<Vertex>>& cycles,
                                                const std::vector<Vertex>& labels) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cycles) {
    std::vector<Vertex> r;
    for (Vertex x : c) r.push_back(labels[static_cast<std::size_t>(x)]);
    out.push_back(canonical_cycle(r));
  }
  return out;
}

inline CycleDecomposition assemble(int n, std::vector<std::vector<Vertex>> cycles) {
  std::sort(cycles.begin(), cycles.end());
  return {n, std::move(cycles)};
}

class ExactEngine {
 public:
  ExactEngine(const Graph& g, const SearchBudget& b)
      : g_(g), budget_(b), deadline_(CycleSearch::Clock::now() + std::chrono::milliseconds(b.max_millis)) {
    if (!is_even_graph(g)) throw NotEvenError();
    for (auto& c : blocks(g)) {
      searches_.emplace_back(c.graph, b, nodes_, deadline_);
      comps_.push_back(std::move(c));
    }
  }

  std::size_t components() const { return comps_.size(); }
  const Component& component(std::size_t i) const { return comps_[i]; }

  std::vector<std::vector<Vertex>> greedy(std::size_t i) { return searches_[i].greedy(); }
  std::optional<std::vector<std::vector<Vertex>>> within(std::size_t i, int t) { return searches_[i].within(t); }

  /// Randomized long-cycle greedy restarts; the best found, or nullopt if none reaches t.
  std::optional<std::vector<std::vector<Vertex>>> restarts(std::size_t i, int t, int rounds) {
    std::mt19937_64 rng(budget_.shuffle_seed.value_or(0x5eed) + i);
    for (int r = 0; r < rounds; ++r) {
      auto got = searches_[i].greedy_long(rng, 64 << (r % 6));
      if (static_cast<int>(got.size()) <= t) return got;
    }
    return std::nullopt;
  }

  int lower_bound(std::size_t i) const {
    const Graph& h = comps_[i].graph;
    return std::max((h.max_degree() + 1) / 2, (h.m() + h.n() - 1) / std::max(1, h.n()));
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  const Graph& g_;
  SearchBudget budget_;
  std::int64_t nodes_ = 0;
  CycleSearch::Clock::time_point deadline_;
  std::vector<Component> comps_;
  std::vector<CycleSearch> searches_;
};

}  // namespace detail

/// Minimum cycle decomposition. Components are solved independently by
/// iterative deepening from a lower bound, seeded by a greedy incumbent.
inline CycleDecomposition min_cycle_decomposition(const Graph& g, const SearchBudget& b = {}) {
  detail::ExactEngine eng(g, b);
  std::vector<std::vector<std::vector<Vertex>>> best(eng.components());
  for (std::size_t i = 0; i < eng.components(); ++i) best[i] = eng.greedy(i);
  auto incumbent = [&] {
    std::vector<std::vector<Vertex>> all;
    for (std::size_t i = 0; i < eng.components(); ++i) {
      auto r = detail::relabel(best[i], eng.component(i).labels);
      all.insert(all.end(), r.begin(), r.end());
    }
    return detail::assemble(g.n(), std::move(all));
  };
  auto total = [&] {
    std::size_t s = 0;
    for (const auto& c : best) s += c.size();
    return static_cast<int>(s);
  };
  try {
    for (std::size_t i = 0; i < eng.components(); ++i) {
      if (b.target && total() <= *b.target) break;
      for (int t = eng.lower_bound(i); t < static_cast<int>(best[i].size()); ++t)
        if (auto r = eng.within(i, t)) {
          best[i] = *r;
          break;
        }
    }
  } catch (const ResourceLimit& e) {
    throw ResourceLimit(e.what(), incumbent());
  }
  return incumbent();
}

/// Any decomposition into at most k cycles, or nullopt when none exists.
inline std::optional<CycleDecomposition> decompose_within(const Graph& g, int k, const SearchBudget& b = {}) {
  detail::ExactEngine eng(g, b);
  const std::size_t cc = eng.components();
  std::vector<std::vector<std::vector<Vertex>>> sol(cc);
  std::vector<int> lb(cc);
  int lb_sum = 0, greedy_sum = 0;
  for (std::size_t i = 0; i < cc; ++i) {
    lb[i] = eng.lower_bound(i);
    lb_sum += lb[i];
    sol[i] = eng.greedy(i);
    greedy_sum += static_cast<int>(sol[i].size());
  }
  auto assemble = [&] {
    std::vector<std::vector<Vertex>> all;
    for (std::size_t i = 0; i < cc; ++i) {
      auto r = detail::relabel(sol[i], eng.component(i).labels);
      all.insert(all.end(), r.begin(), r.end());
    }
    return detail::assemble(g.n(), std::move(all));
  };
  if (greedy_sum <= k) return assemble();
  if (lb_sum > k) return std::nullopt;
  try {
    // Per-block Hajós bounds sum to at most the bound of g, so when k is at
    // least that, aim straight at each block's own bound.
    if (k >= hajos_bound(g.n())) {
      bool all = true;
      for (std::size_t i = 0; i < cc && all; ++i) {
        const int own = hajos_bound(eng.component(i).graph.n());
        if (static_cast<int>(sol[i].size()) <= own) continue;
        if (auto got = eng.restarts(i, own, 48)) sol[i] = *got;
        else if ((got = eng.within(i, own))) sol[i] = *got;
        else all = false;
      }
      if (all) return assemble();
    }
    // Tighten components one at a time; each gets the slack left by the others'
    // current counts, so a component is only minimised as far as needed.
    int used = greedy_sum;
    for (std::size_t i = 0; i < cc && used > k; ++i) {
      const int others = used - static_cast<int>(sol[i].size());
      std::optional<std::vector<std::vector<Vertex>>> got;
      for (int t = lb[i]; t < static_cast<int>(sol[i].size()); ++t)
        if ((got = eng.within(i, t))) break;
      if (got) sol[i] = *got;
      used = others + static_cast<int>(sol[i].size());
    }
    if (used <= k) return assemble();
    return std::nullopt;
  } catch (const ResourceLimit& e) {
    throw ResourceLimit(e.what(), assemble());
  }
}

/// True iff g decomposes into at most floor((n-1)/2) cycles. Tries each
/// component against its own bound first, which is stronger and usually quick.
inline bool hajos_check(const Graph& g, const SearchBudget& b = {}) {
  detail::ExactEngine eng(g, b);
  bool all = true;
  for (std::size_t i = 0; i < eng.components() && all; ++i) {
    const Graph& h = eng.component(i).graph;
    if (static_cast<int>(eng.greedy(i).size()) <= hajos_bound(h.n())) continue;
    all = eng.within(i, hajos_bound(h.n())).has_value();
  }
  if (all) return true;
  return decompose_within(g, hajos_bound(g.n()), b).has_value();
}

}  // namespace hajos
