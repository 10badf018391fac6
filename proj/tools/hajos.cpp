// hajos: decompose, verify and batch-check even graphs against the Hajós bound.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include "json_codec.hpp"

namespace {

using namespace hajos;
using hajos::cli::json;

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kNotEven = 3, kResource = 4, kCounterexample = 5 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Range {
  int lo = 0, hi = 0;
};

/// "7" or "3..9".
Range parse_range(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) return {std::stoi(s), std::stoi(s)};
    Range r{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    if (r.lo > r.hi) throw ParseError("empty range " + s);
    return r;
  } catch (const std::logic_error&) {
    throw ParseError("bad range '" + s + "'");
  }
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Budget {
  std::int64_t nodes = SearchBudget{}.max_nodes;
  std::int64_t millis = SearchBudget{}.max_millis;
  SearchBudget get() const {
    SearchBudget b;
    b.max_nodes = nodes;
    b.max_millis = millis;
    return b;
  }
};

struct Generator {
  std::string enumerate;
  std::vector<std::string> random_pw;  // n (or a..b), k
  std::string complete_odd, complete_bipartite;
  int count = 1;
  std::uint64_t seed = 1;

  void add_flags(CLI::App* app) {
    app->add_option("--enumerate", enumerate, "every connected even graph on n vertices (n or a..b, n <= 10)");
    app->add_option("--random-pw", random_pw, "random even graph of bounded pathwidth: n (or a..b) and k")
        ->expected(2);
    app->add_option("--complete-odd", complete_odd, "K_{2k+1} for k (or a..b)");
    app->add_option("--complete-bipartite", complete_bipartite, "K_{2k,2k} for k (or a..b)");
    app->add_option("--count", count, "instances for --random-pw");
    app->add_option("--seed", seed, "seed for --random-pw");
  }

  struct Item {
    std::string id;
    Graph graph;
  };

  std::vector<Item> items() const {
    const int kinds = !enumerate.empty() + !random_pw.empty() + !complete_odd.empty() + !complete_bipartite.empty();
    if (kinds != 1) throw ParseError("choose exactly one of --enumerate, --random-pw, --complete-odd, --complete-bipartite");
    std::vector<Item> out;
    if (!enumerate.empty()) {
      const Range r = parse_range(enumerate);
      if (r.hi > kMaxEnumerate) throw CorpusError("TooLarge: enumeration is capped at n=" + std::to_string(kMaxEnumerate));
      for (int n = std::max(r.lo, 1); n <= r.hi; ++n) {
        int idx = 0;
        for (auto& g : enumerate_even_connected(n))
          out.push_back({"enum:" + std::to_string(n) + ":" + std::to_string(idx++), std::move(g)});
      }
    } else if (!random_pw.empty()) {
      const Range r = parse_range(random_pw[0]);
      const int k = parse_range(random_pw[1]).lo;
      for (int i = 0; i < count; ++i) {
        const std::uint64_t s = splitmix(seed + static_cast<std::uint64_t>(i));
        Rng rng(s);
        const int n = r.lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(r.hi - r.lo + 1)));
        out.push_back({"pw" + std::to_string(k) + ":" + std::to_string(n) + ":" + std::to_string(s),
                       random_even_bounded_pw(n, k, s)});
      }
    } else if (!complete_odd.empty()) {
      const Range r = parse_range(complete_odd);
      for (int k = std::max(r.lo, 1); k <= r.hi; ++k)
        out.push_back({"K" + std::to_string(2 * k + 1), complete_graph(2 * k + 1)});
    } else {
      const Range r = parse_range(complete_bipartite);
      for (int k = std::max(r.lo, 1); k <= r.hi; ++k)
        out.push_back({"K" + std::to_string(2 * k) + "," + std::to_string(2 * k), hajos::complete_bipartite(2 * k, 2 * k)});
    }
    return out;
  }
};

struct Solved {
  int code = kOk;
  std::string method;
  std::optional<CycleDecomposition> decomposition;
  std::optional<ReductionTrace> trace;
  bool verified = false;
  std::string error;
};

/// Decomposes g; every decomposition returned has been verified in-process.
Solved solve(const Graph& g, bool exact, const SearchBudget& b) {
  Solved s;
  if (!is_even_graph(g)) {
    s.code = kNotEven;
    s.error = "NotEven";
    return s;
  }
  try {
    if (exact) {
      s.method = "exact";
      auto d = min_cycle_decomposition(g, b);
      if (static_cast<int>(d.cycles.size()) > hajos_bound(g.n())) throw CounterexampleCandidate(g);
      s.decomposition = std::move(d);
    } else {
      auto r = hajos_decompose(g, {5, b});
      s.method = r.trace.plans.empty() ? "exact" : "reduction";
      s.decomposition = to_decomposition(r.colouring);
      s.trace = std::move(r.trace);
    }
    s.verified = verify_decomposition(g, *s.decomposition).ok;
    if (!s.verified) {
      s.code = kInvalid;
      s.error = "output failed verification";
      s.decomposition.reset();
    }
  } catch (const CounterexampleCandidate& e) {
    s.code = kCounterexample;
    s.error = e.what();
  } catch (const ResourceLimit& e) {
    s.code = kResource;
    s.error = e.what();
  } catch (const LiftAborted& e) {
    s.code = kInvalid;
    s.error = std::string(e.what()) + " at plan " + std::to_string(e.level());
    s.trace = e.trace();
  }
  return s;
}

int cmd_decompose(const std::string& file, bool exact, bool trace, const Budget& budget) {
  const Graph g = parse_graph(read_input(file));
  const Solved s = solve(g, exact, budget.get());
  if (s.code == kInvalid && s.trace) std::cerr << cli::trace_json(*s.trace).dump() << "\n";
  if (s.code != kOk) {
    std::cerr << "error: " << s.error << "\n";
    return s.code;
  }
  json out = cli::decomposition_json(*s.decomposition);
  out["m"] = g.m();
  out["bound"] = hajos_bound(g.n());
  out["method"] = s.method;
  out["verified"] = true;
  if (trace && s.trace) out["trace"] = cli::trace_json(*s.trace);
  std::cout << out.dump() << "\n";
  return kOk;
}

int cmd_verify(const std::string& graph_file, const std::string& cert_file) {
  const Graph g = parse_graph(read_input(graph_file));
  CycleDecomposition d;
  try {
    d = cli::decomposition_from_json(json::parse(read_input(cert_file)), g.n());
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  for (const auto& c : d.cycles)
    for (Vertex x : c)
      if (x < 0 || x >= g.n()) throw ParseError("certificate: vertex " + std::to_string(x) + " out of range");
  const Verdict v = verify_decomposition(g, d);
  for (const auto& viol : v.violations) std::cout << viol.describe() << "\n";
  std::cout << (v.ok ? "valid" : "invalid") << " cycles=" << d.cycles.size() << " bound=" << hajos_bound(g.n())
            << "\n";
  return v.ok ? kOk : kInvalid;
}

int cmd_check(const Generator& gen, bool exact, bool as_json, int jobs, const Budget& budget) {
  const auto items = gen.items();
  std::vector<json> records(items.size());
  std::vector<int> codes(items.size(), kOk);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      const auto& [id, g] = items[i];
      const auto t0 = std::chrono::steady_clock::now();
      const Solved s = solve(g, exact, budget.get());
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
      json r{{"id", id},
             {"n", g.n()},
             {"m", g.m()},
             {"method", s.method},
             {"cycles", s.decomposition ? static_cast<int>(s.decomposition->cycles.size()) : -1},
             {"bound", hajos_bound(g.n())},
             {"verified", s.verified},
             {"millis", ms.count()}};
      if (!s.error.empty()) r["error"] = s.error;
      records[i] = std::move(r);
      codes[i] = s.code;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(jobs, 1); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int verified = 0, counterexamples = 0, limits = 0, other = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (codes[i] == kOk) ++verified;
    else if (codes[i] == kCounterexample) ++counterexamples;
    else if (codes[i] == kResource) ++limits;
    else ++other;
  }
  const json summary{{"total", items.size()},
                     {"verified", verified},
                     {"counterexamples", counterexamples},
                     {"resource_limits", limits},
                     {"failed", other}};
  if (as_json) {
    std::cout << json{{"records", records}, {"summary", summary}}.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (codes[i] != kOk) std::cout << records[i].dump() << "\n";
    std::cout << "checked " << items.size() << " graphs: " << verified << " verified, " << counterexamples
              << " counterexample candidates, " << limits << " resource limits, " << other << " failed\n";
  }
  if (counterexamples) return kCounterexample;
  if (other) return kInvalid;
  if (limits) return kResource;
  return kOk;
}

int cmd_pathwidth(const std::string& file, int k, const Budget& budget) {
  const Graph g = parse_graph(read_input(file));
  auto pd = find_path_decomposition(g, k, budget.get());
  if (!pd) {
    std::cout << json{{"found", false}, {"k", k}}.dump() << "\n";
    return kInvalid;
  }
  std::cout << cli::path_decomposition_json(g.n() > 0 ? smooth(*pd) : *pd).dump() << "\n";
  return kOk;
}

int cmd_gen(const Generator& gen) {
  for (const auto& item : gen.items()) std::cout << to_graph6(item.graph) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle decompositions of even graphs within the Hajós bound"};
  app.require_subcommand(1);
  Budget budget;
  auto budget_flags = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", budget.nodes, "search node budget");
    sub->add_option("--budget-ms", budget.millis, "search time budget in milliseconds");
  };

  std::string file, cert;
  bool exact = false, trace = false, as_json = false;
  int jobs = 1, width = 6;
  Generator gen;

  auto* dec = app.add_subcommand("decompose", "decompose one graph (edge list or graph6; - for stdin)");
  dec->add_option("graph", file)->required();
  dec->add_flag("--exact", exact, "use the exact solver only");
  dec->add_flag("--trace", trace, "include the reduction trace");
  budget_flags(dec);

  auto* ver = app.add_subcommand("verify", "check a decomposition certificate against a graph");
  ver->add_option("graph", file)->required();
  ver->add_option("certificate", cert)->required();

  auto* chk = app.add_subcommand("check", "decompose and verify a generated corpus");
  gen.add_flags(chk);
  chk->add_flag("--exact", exact, "use the exact solver only");
  chk->add_flag("--json", as_json, "print the full report as JSON");
  chk->add_option("--jobs", jobs, "worker threads");
  budget_flags(chk);

  auto* pw = app.add_subcommand("pathwidth", "smooth path decomposition of width at most k");
  pw->add_option("graph", file)->required();
  pw->add_option("-k", width, "width cap (at most 6)");
  budget_flags(pw);

  auto* gn = app.add_subcommand("gen", "print a generated corpus as graph6");
  gen.add_flags(gn);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*dec) return cmd_decompose(file, exact, trace, budget);
    if (*ver) return cmd_verify(file, cert);
    if (*chk) return cmd_check(gen, exact, as_json, jobs, budget);
    if (*pw) return cmd_pathwidth(file, width, budget);
    if (*gn) return cmd_gen(gen);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PathwidthError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  }
  return kUsage;
}
