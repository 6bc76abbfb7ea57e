#ifndef INCFLOW_BENCH_HPP
#define INCFLOW_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incflow/incflow.hpp"

namespace incflow::bench {

struct Workload {
  std::string name;
  int n = 0;
  VertexId s = 0;
  VertexId t = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

// Adversarial two-stage instance: first every edge between the s-side and
// the non-sink t-side vertices, then the q edges into the sink, each of
// which raises the max flow by one.
Workload bipartite_workload(int q);
// `count` parallel copies of (u, v).
Workload parallel_stress_workload(int n, VertexId u, VertexId v, int count);
// m uniform random non-loop pairs on n vertices, s = 0, t = n-1.
Workload random_stream_workload(int n, int m, std::uint64_t seed);

// Dispatcher for the CLI kinds "bipartite", "parallel-stress" and
// "random-stream". For bipartite, q = n / 2.
Workload gen_workload(const std::string& kind, int n, int m,
                      std::uint64_t seed);

// Edge-list text format: first line "n s t", then one "u v" pair per line
// in insertion order; '#' starts a comment line.
Workload parse_edge_list(std::istream& in, const std::string& name = "file");
void write_edge_list(std::ostream& out, const Workload& w);

struct StepRecord {
  int step;
  int phase;
  int flow;
  std::optional<int> exact;  // oracle value, when verified this step
  bool violation;
  std::int64_t arcs_in_reach;   // cumulative arcs handed to the reach tree
  std::int64_t samples_drawn;   // cumulative sampler draws
};

struct RunStats {
  std::vector<StepRecord> steps;  // steps.size() == edges + 1, step 0 first
  std::vector<PhaseRecord> phases;
  int trailing_phase_edges = 0;  // inserted after the last augmentation
  std::int64_t direct_arcs = 0;
  std::int64_t sample_budget = 0;
  int final_flow = 0;
  int violations = 0;
  double wall_seconds = 0.0;
};

struct RunConfig {
  IncFlowConfig flow;
  // Oracle verification cadence; 0 disables. Defaults to every step for
  // n <= 60 and disabled above.
  std::optional<int> verify_every;
};

RunStats run(const Workload& w, double epsilon, const RunConfig& config = {});

// CSV columns: step,phase,F,Fstar,violation,arcs_in_D,samples_drawn.
void emit_csv(const RunStats& stats, std::ostream& out);
void emit_csv(const RunStats& stats, const std::string& path);

}  // namespace incflow::bench

#endif  // INCFLOW_BENCH_HPP
