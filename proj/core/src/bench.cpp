#include "incflow/bench.hpp"

#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "incflow/oracle.hpp"

namespace incflow::bench {

Workload bipartite_workload(int q) {
  if (q < 1) throw std::invalid_argument("bipartite workload needs q >= 1");
  const int n = 2 * q;
  Workload w{"bipartite", n, 0, n - 1, {}};
  // left side {0..q-1} with s = 0, right side {q..2q-1} with t = 2q-1
  for (VertexId u = 0; u < q; ++u)
    for (VertexId v = q; v < n - 1; ++v) w.edges.emplace_back(u, v);
  for (VertexId u = 0; u < q; ++u) w.edges.emplace_back(u, w.t);
  return w;
}

Workload parallel_stress_workload(int n, VertexId u, VertexId v, int count) {
  if (count < 0) throw std::invalid_argument("negative edge count");
  Workload w{"parallel-stress", n, 0, n - 1, {}};
  for (int i = 0; i < count; ++i) w.edges.emplace_back(u, v);
  return w;
}

Workload random_stream_workload(int n, int m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  Workload w{"random-stream", n, 0, n - 1, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < m; ++i) {
    VertexId u = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
    VertexId v = static_cast<VertexId>(rng() % static_cast<unsigned>(n - 1));
    if (v >= u) ++v;
    w.edges.emplace_back(u, v);
  }
  return w;
}

Workload gen_workload(const std::string& kind, int n, int m,
                      std::uint64_t seed) {
  if (kind == "bipartite") return bipartite_workload(n / 2);
  if (kind == "parallel-stress")
    return parallel_stress_workload(std::max(n, 2), 0, 1, m);
  if (kind == "random-stream") return random_stream_workload(n, m, seed);
  throw std::invalid_argument("unknown workload kind: " + kind);
}

Workload parse_edge_list(std::istream& in, const std::string& name) {
  Workload w{name, 0, 0, 0, {}};
  std::string line;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> w.n >> w.s >> w.t))
        throw std::runtime_error("bad header on line " +
                                 std::to_string(line_no));
      have_header = true;
      continue;
    }
    VertexId u, v;
    if (!(fields >> u >> v))
      throw std::runtime_error("bad edge on line " + std::to_string(line_no));
    w.edges.emplace_back(u, v);
  }
  if (!have_header) throw std::runtime_error("empty edge-list input");
  return w;
}

void write_edge_list(std::ostream& out, const Workload& w) {
  out << w.n << ' ' << w.s << ' ' << w.t << '\n';
  for (const auto& [u, v] : w.edges) out << u << ' ' << v << '\n';
}

RunStats run(const Workload& w, double epsilon, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const int verify_every =
      config.verify_every.value_or(w.n <= 60 ? 1 : 0);
  IncrementalFlow flow(w.n, w.s, w.t, epsilon, config.flow);
  std::optional<oracle::ExactFlowOracle> exact;
  if (verify_every > 0) exact.emplace(w.n, w.s, w.t);

  RunStats stats;
  stats.sample_budget = flow.sample_budget();
  if (!w.edges.empty())
    stats.steps.push_back({0, flow.phase(), 0,
                           exact ? std::optional<int>(0) : std::nullopt, false,
                           0, 0});
  int step = 0;
  for (const auto& [u, v] : w.edges) {
    ++step;
    flow.insert(u, v);
    if (exact) exact->add_edge(u, v);
    StepRecord rec{step,
                   flow.phase(),
                   flow.value(),
                   std::nullopt,
                   false,
                   flow.arcs_into_reachability_total(),
                   flow.samples_drawn_total()};
    if (exact && step % verify_every == 0) {
      rec.exact = exact->value();
      rec.violation =
          flow.value() < (1.0 - epsilon) * (*rec.exact) - 1e-9;
      if (rec.violation) ++stats.violations;
    }
    stats.steps.push_back(rec);
  }
  stats.phases = flow.completed_phases();
  stats.trailing_phase_edges = flow.current_phase_edges();
  stats.direct_arcs = flow.direct_arcs_total();
  stats.final_flow = flow.value();
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return stats;
}

void emit_csv(const RunStats& stats, std::ostream& out) {
  out << "step,phase,F,Fstar,violation,arcs_in_D,samples_drawn\n";
  for (const StepRecord& r : stats.steps) {
    out << r.step << ',' << r.phase << ',' << r.flow << ',';
    if (r.exact) out << *r.exact;
    out << ',' << (r.violation ? 1 : 0) << ',' << r.arcs_in_reach << ','
        << r.samples_drawn << '\n';
  }
}

void emit_csv(const RunStats& stats, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  emit_csv(stats, out);
  if (!out.good()) throw std::runtime_error("write failure on " + path);
}

}  // namespace incflow::bench
