// Acceptance gate: each criterion prints one pass/fail line and the exit
// code reports the conjunction. An optional argument selects a single
// criterion by number.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "incflow/bench.hpp"
#include "incflow/incflow.hpp"
#include "incflow/oracle.hpp"
#include "incflow/reachability.hpp"
#include "incflow/sampler.hpp"
#include "incflow/sparsify.hpp"

using namespace incflow;
using oracle::EdgeList;

namespace {

// ---------------------------------------------------------------------------
// shared generators

EdgeList random_edges(int n, int m, std::mt19937_64& rng, int burst_every = 0) {
  EdgeList edges;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (burst_every > 0 && !edges.empty() &&
        rng() % static_cast<std::uint64_t>(burst_every) == 0) {
      const auto& [a, b] = edges[rng() % edges.size()];
      u = a;
      v = b;
    } else {
      u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      v = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      if (v >= u) ++v;
    }
    edges.emplace_back(u, v);
  }
  return edges;
}

// ---------------------------------------------------------------------------
// criteria

// random streams at the default constant: at most one of 20 runs may ever
// dip below (1 - eps) * F*
bool criterion_1() {
  int clean_runs = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const bench::Workload w = bench::random_stream_workload(60, 1200, seed);
    bench::RunConfig cfg;
    cfg.flow.seed = seed;
    cfg.verify_every = 1;
    const bench::RunStats stats = bench::run(w, 0.25, cfg);
    if (stats.violations == 0) ++clean_runs;
  }
  return clean_runs >= 19;
}

// same streams at c = 50: per-step violation rate across all seeds <= 5%
bool criterion_2() {
  std::int64_t steps = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const bench::Workload w = bench::random_stream_workload(60, 1200, seed);
    bench::RunConfig cfg;
    cfg.flow.seed = seed;
    cfg.flow.sample_constant = 50.0;
    cfg.verify_every = 1;
    const bench::RunStats stats = bench::run(w, 0.25, cfg);
    steps += static_cast<std::int64_t>(w.edges.size());
    violations += stats.violations;
  }
  return violations * 20 <= steps;  // <= 5%
}

// 1000 random insertion sequences with parallel bursts: the packing stays
// valid after every single insertion
bool criterion_3() {
  for (int trial = 0; trial < 1000; ++trial) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(trial));
    const int n = 2 + static_cast<int>(rng() % 49);
    const int m = 1 + static_cast<int>(rng() % 500);
    const EdgeList edges = random_edges(n, m, rng, 4);
    ForestPacking p(n);
    EdgeList seen;
    for (const auto& [u, v] : edges) {
      p.insert(u, v);
      seen.emplace_back(u, v);
      if (!oracle::verify_ni_packing(n, seen, p.indices())) return false;
    }
  }
  return true;
}

// the same states obey sum(1/l_e) <= 2 n log2(m)
bool criterion_4() {
  for (int trial = 0; trial < 1000; ++trial) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(trial));
    const int n = 2 + static_cast<int>(rng() % 49);
    const int m = 1 + static_cast<int>(rng() % 500);
    const EdgeList edges = random_edges(n, m, rng, 4);
    ForestPacking p(n);
    for (const auto& [u, v] : edges) {
      p.insert(u, v);
      const int count = p.edge_count();
      if (count >= 2 && p.inverse_index_sum() > 2.0 * n * std::log2(count))
        return false;
    }
  }
  return true;
}

// weights (1, 1/2, 1/4): empirical draw frequencies and exact prefixes
bool criterion_5() {
  CumulativeIndex t;
  t.insert(0, 1.0);
  t.insert(1, 0.5);
  t.insert(2, 0.25);
  std::mt19937_64 rng(20240);
  const int draws = 70000;
  int hits[3] = {0, 0, 0};
  for (int i = 0; i < draws; ++i) ++hits[t.sample(rng)];
  const double expect[3] = {4.0 / 7.0, 2.0 / 7.0, 1.0 / 7.0};
  for (int i = 0; i < 3; ++i)
    if (std::abs(static_cast<double>(hits[i]) / draws - expect[i]) > 0.01)
      return false;

  CumulativeIndex r(/*exact_rational=*/true);
  r.insert_unit_fraction(0, 1);
  r.insert_unit_fraction(1, 2);
  r.insert_unit_fraction(2, 4);
  return r.prefix(0) == 0.0 && r.prefix(1) == 1.0 && r.prefix(2) == 1.5 &&
         r.total() == 1.75 && r.prefix_rational(2) == Rational{3, 2} &&
         r.total_rational() == Rational{7, 4};
}

// 10000 arc insertions on 100 vertices: reached set always equals a fresh
// BFS, and the pending-scan counter stays within twice the arcs inserted
bool criterion_6() {
  const int n = 100;
  std::mt19937_64 rng(17);
  ReachabilityTree r(n, 0);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::vector<char> seen(static_cast<size_t>(n));
  std::vector<int> stack;
  for (int i = 0; i < 10000; ++i) {
    const int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    r.insert({u, v, Arc{i, Direction::UV}});
    adj[static_cast<size_t>(u)].push_back(v);

    std::fill(seen.begin(), seen.end(), 0);
    seen[0] = 1;
    stack.assign(1, 0);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const int y : adj[static_cast<size_t>(x)])
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = 1;
          stack.push_back(y);
        }
    }
    for (int x = 0; x < n; ++x)
      if (r.reachable(x) != static_cast<bool>(seen[static_cast<size_t>(x)]))
        return false;
  }
  return r.pending_scans() <= 2 * r.arcs_inserted();
}

// balanced digraphs, lambda = 1, beta = gamma = 1, eps = 0.5: every cut of
// the sparsifier lies within (1 +- eps) of its capacity in >= 95 trials
bool criterion_7() {
  std::mt19937_64 rng(4242);
  int good = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    DirectedMultiGraph g{n, {}};
    if (trial % 2 == 0) {
      // Eulerian cycle through a random vertex order
      std::vector<int> order(static_cast<size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int i = 0; i < n; ++i)
        g.arcs.emplace_back(order[static_cast<size_t>(i)],
                            order[static_cast<size_t>((i + 1) % n)]);
    } else {
      // union of directed cycles over random vertex subsets
      const int cycles = 2 + static_cast<int>(rng() % 3);
      for (int c = 0; c < cycles; ++c) {
        std::vector<int> verts(static_cast<size_t>(n));
        std::iota(verts.begin(), verts.end(), 0);
        std::shuffle(verts.begin(), verts.end(), rng);
        const int len = 3 + static_cast<int>(rng() % (n - 2));
        for (int i = 0; i < len; ++i)
          g.arcs.emplace_back(verts[static_cast<size_t>(i)],
                              verts[static_cast<size_t>((i + 1) % len)]);
      }
    }
    const std::vector<double> lambda(g.arcs.size(), 1.0);
    const double eps = 0.5;
    const WeightedDigraph h = sample_sparsifier(g, lambda, 1.0, 1.0, eps, rng);
    bool ok = true;
    for (std::uint32_t side = 1; side + 1 < (1u << n) && ok; ++side) {
      int cap = 0;
      for (const auto& [tail, head] : g.arcs)
        if (((side >> tail) & 1u) && !((side >> head) & 1u)) ++cap;
      const double w = h.cut_weight(side);
      if (w < (1.0 - eps) * cap - 1e-9 || w > (1.0 + eps) * cap + 1e-9)
        ok = false;
    }
    if (ok) ++good;
  }
  return good >= 95;
}

// exhaustive residual balance: all connected graphs on <= 6 vertices, all
// conservation-respecting unit flows with F < F*, every cut of the residual
// graph keeps balance >= eps / 2 at the tightest eps = 1 - F / F*
bool criterion_8() {
  struct CutInfo {
    int capacity = 0;
    std::vector<std::pair<int, int>> crossing;  // (edge id, +-1 sign)
  };

  for (int n = 2; n <= 6; ++n) {
    EdgeList all_pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const int pairs = static_cast<int>(all_pairs.size());

    for (std::uint32_t pick = 0; pick < (1u << pairs); ++pick) {
      EdgeList edges;
      for (int i = 0; i < pairs; ++i)
        if ((pick >> i) & 1u) edges.push_back(all_pairs[static_cast<size_t>(i)]);
      const int m = static_cast<int>(edges.size());
      if (m < n - 1) continue;
      // connectivity via one sweep
      {
        DisjointSets sets;
        for (int x = 0; x < n; ++x) sets.add(x);
        for (const auto& [u, v] : edges) sets.merge(u, v);
        bool connected = true;
        for (int x = 1; x < n; ++x)
          if (!sets.connected(0, x)) connected = false;
        if (!connected) continue;
      }
      const int best = oracle::exact_max_flow(n, edges, 0, n - 1);

      // crossing lists per cut side
      const std::uint32_t full = (1u << n) - 1u;
      std::vector<CutInfo> cuts(static_cast<size_t>(full));
      for (std::uint32_t side = 1; side < full; ++side) {
        CutInfo& c = cuts[static_cast<size_t>(side)];
        for (int e = 0; e < m; ++e) {
          const auto& [u, v] = edges[static_cast<size_t>(e)];
          const bool uin = (side >> u) & 1u, vin = (side >> v) & 1u;
          if (uin == vin) continue;
          ++c.capacity;
          c.crossing.emplace_back(e, uin ? 1 : -1);
        }
      }

      // enumerate flows: per-edge values in {-1, 0, 1} relative to (u, v),
      // pruned by conservation once a vertex sees its last incident edge
      std::vector<int> last_edge(static_cast<size_t>(n), -1);
      for (int e = 0; e < m; ++e) {
        const auto& [u, v] = edges[static_cast<size_t>(e)];
        last_edge[static_cast<size_t>(u)] = e;
        last_edge[static_cast<size_t>(v)] = e;
      }
      std::vector<int> value(static_cast<size_t>(m));
      std::vector<int> imbalance(static_cast<size_t>(n));
      bool ok = true;

      const auto check_flow = [&] {
        const int flow = imbalance[0];
        if (flow < 0 || flow >= best) return true;
        const double eps = 1.0 - static_cast<double>(flow) / best;
        for (std::uint32_t side = 1; side < full; ++side) {
          const CutInfo& c = cuts[static_cast<size_t>(side)];
          int net = 0;
          for (const auto& [e, sign] : c.crossing)
            net += sign * value[static_cast<size_t>(e)];
          if (net <= 0) continue;  // balance >= 1
          const double bal = static_cast<double>(c.capacity - net) /
                             static_cast<double>(c.capacity + net);
          if (bal < eps / 2.0 - 1e-12) return false;
        }
        return true;
      };

      const auto descend = [&](const auto& self, int e) -> void {
        if (!ok) return;
        if (e == m) {
          if (!check_flow()) ok = false;
          return;
        }
        const auto& [u, v] = edges[static_cast<size_t>(e)];
        const bool close_u = last_edge[static_cast<size_t>(u)] == e && u != 0 &&
                             u != n - 1;
        const bool close_v = last_edge[static_cast<size_t>(v)] == e && v != 0 &&
                             v != n - 1;
        for (const int val : {-1, 0, 1}) {
          imbalance[static_cast<size_t>(u)] += val;
          imbalance[static_cast<size_t>(v)] -= val;
          if ((!close_u || imbalance[static_cast<size_t>(u)] == 0) &&
              (!close_v || imbalance[static_cast<size_t>(v)] == 0))
            value[static_cast<size_t>(e)] = val, self(self, e + 1);
          imbalance[static_cast<size_t>(u)] -= val;
          imbalance[static_cast<size_t>(v)] += val;
        }
      };
      descend(descend, 0);
      if (!ok) return false;
    }
  }
  return true;
}

// NI decompositions of random graphs: overlap ratio <= gamma on every cut,
// and inside E_i an index-l edge of class i keeps connectivity at least
// l - 2^(i-2) + 1 (forests 2^(i-2)..l-1 each certify one disjoint path)
bool criterion_9() {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int m = 3 + static_cast<int>(rng() % 23);
    const EdgeList edges = random_edges(n, m, rng, 4);
    ForestPacking p(n);
    for (const auto& [u, v] : edges) p.insert(u, v);
    const Decomposition d = ni_decomposition(p);

    for (std::uint32_t side = 1; side + 1 < (1u << n); ++side) {
      const double ratio = oracle::gamma_overlap_check(n, edges, d, side);
      if (!std::isnan(ratio) && ratio > d.gamma + 1e-9) return false;
    }
    for (size_t i = 0; i < d.classes.size(); ++i) {
      EdgeList sub;
      for (const int e : d.subgraphs[i])
        sub.push_back(edges[static_cast<size_t>(e)]);
      const int floor_below =
          i == 0 ? 1 : static_cast<int>(std::lround(std::pow(2.0, i - 1)));
      for (const int e : d.classes[i]) {
        const auto& [u, v] = edges[static_cast<size_t>(e)];
        const int index = p.indices()[static_cast<size_t>(e)];
        const int required = i == 0 ? 1 : index - floor_below + 1;
        if (oracle::edge_connectivity_between(n, sub, u, v) < required)
          return false;
      }
    }
  }
  return true;
}

// counter identities on the criterion-1 configuration
bool criterion_10() {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const bench::Workload w = bench::random_stream_workload(60, 1200, seed);
    bench::RunConfig cfg;
    cfg.flow.seed = seed;
    cfg.verify_every = 0;
    const bench::RunStats stats = bench::run(w, 0.25, cfg);
    const auto m = static_cast<std::int64_t>(w.edges.size());
    const auto phases = static_cast<std::int64_t>(stats.phases.size());

    if (stats.final_flow != static_cast<int>(phases)) return false;
    if (phases > oracle::exact_max_flow(w.n, w.edges, w.s, w.t)) return false;
    std::int64_t partition = stats.trailing_phase_edges;
    for (const auto& ph : stats.phases) partition += ph.edges_inserted;
    if (partition != m) return false;
    if (stats.direct_arcs != 2 * m) return false;
    const std::int64_t arcs_in = stats.steps.back().arcs_in_reach;
    if (arcs_in > 2 * m + phases * 2 * stats.sample_budget) return false;
  }
  return true;
}

// two-stage bipartite stream with q = 25: no flow in stage one, one
// augmentation per sink edge in stage two, zero violations
bool criterion_11() {
  const int q = 25;
  const bench::Workload w = bench::bipartite_workload(q);
  bench::RunConfig cfg;
  cfg.verify_every = 1;
  const bench::RunStats stats = bench::run(w, 0.5, cfg);
  if (stats.violations != 0 || stats.final_flow != q) return false;
  if (stats.final_flow != oracle::exact_max_flow(w.n, w.edges, w.s, w.t))
    return false;
  if (stats.phases.size() != static_cast<size_t>(q)) return false;
  const int stage_one = q * (q - 1);
  for (const auto& ph : stats.phases)
    if (ph.end_step <= stage_one) return false;
  return true;
}

// distinct k-projections of cuts with u(C) <= alpha * k number at most
// 2 n^(2 alpha)
bool criterion_12() {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int m = 2 + static_cast<int>(rng() % (3 * n));
    DirectedMultiGraph g{n, {}};
    for (int i = 0; i < m; ++i) {
      const int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % (n - 1));
      if (v >= u) ++v;
      g.arcs.emplace_back(u, v);
    }
    for (const double k : {1.0, 2.0, 3.0}) {
      for (const double alpha : {1.0, 1.5, 2.0}) {
        std::set<std::vector<int>> projections;
        for (std::uint32_t side = 1; side + 1 < (1u << n); ++side) {
          int forward = 0;
          for (const auto& [tail, head] : g.arcs)
            if (((side >> tail) & 1u) && !((side >> head) & 1u)) ++forward;
          if (forward > alpha * k) continue;
          projections.insert(oracle::k_projection(g, k, side));
        }
        if (static_cast<double>(projections.size()) >
            2.0 * std::pow(n, 2.0 * alpha))
          return false;
      }
    }
  }
  return true;
}

struct Criterion {
  const char* name;
  bool (*check)();
};

constexpr Criterion kCriteria[] = {
    {"approximation correctness", criterion_1},
    {"stressed-sampling correctness", criterion_2},
    {"ni packing validity", criterion_3},
    {"inverse-sum bound", criterion_4},
    {"sampler distribution", criterion_5},
    {"reachability equivalence", criterion_6},
    {"sparsifier cut preservation", criterion_7},
    {"residual balance", criterion_8},
    {"overlap and connectivity", criterion_9},
    {"work accounting", criterion_10},
    {"bipartite adversarial stream", criterion_11},
    {"cut-projection counting", criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 12) {
      std::fprintf(stderr, "usage: %s [1-12]\n", argv[0]);
      return 2;
    }
  }
  bool all_ok = true;
  for (int i = 1; i <= 12; ++i) {
    if (only != 0 && i != only) continue;
    const Criterion& c = kCriteria[i - 1];
    const bool ok = c.check();
    std::printf("criterion %2d (%s): %s\n", i, c.name, ok ? "pass" : "FAIL");
    std::fflush(stdout);
    if (!ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
