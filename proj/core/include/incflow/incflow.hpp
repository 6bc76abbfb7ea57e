#ifndef INCFLOW_INCFLOW_HPP
#define INCFLOW_INCFLOW_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "incflow/graph.hpp"
#include "incflow/reachability.hpp"
#include "incflow/sampler.hpp"

namespace incflow {

struct IncFlowConfig {
  // Multiplier c in the per-phase sample budget ceil(c * n * log2(n)^2 / eps).
  double sample_constant = 5390.0;
  std::uint64_t seed = 0;
  bool exact_rational = false;
  // Literal draws one sample at a time; Batch draws per-edge multinomial
  // counts, which is distribution-equivalent for the resampled arc set and
  // far cheaper when the budget dwarfs the edge count.
  enum class SampleMode { Auto, Literal, Batch };
  SampleMode sample_mode = SampleMode::Auto;
};

struct PhaseRecord {
  int phase;                      // 1-based
  int edges_inserted;             // m_k
  std::int64_t samples_drawn;     // draws at the start of this phase
  std::int64_t resample_arcs;     // arcs the phase started with
  int end_step;                   // insertion count when the phase ended
};

// Maintains a (1-eps)-approximate s-t max flow under edge insertions by
// keeping a sampled residual subgraph and an incremental reachability tree
// over it. Each found augmenting path raises the flow by one and starts a
// new phase with a fresh sample.
class IncrementalFlow {
 public:
  IncrementalFlow(int vertex_count, VertexId source, VertexId sink,
                  double epsilon, IncFlowConfig config = {});

  // Inserts an undirected edge; returns whether an augmentation occurred.
  bool insert(VertexId u, VertexId v);

  int value() const { return graph_.flow_value(); }
  std::vector<FlowState> flow() const;
  const UndirectedMultiGraph& graph() const { return graph_; }
  const WeightedSampler& sampler() const { return sampler_; }

  // Discards the sampled graph and redraws the per-phase budget from the
  // current residual graph. Called internally right after each
  // augmentation; exposed for tests.
  void resample();

  std::int64_t sample_budget() const { return rho_; }
  double epsilon() const { return epsilon_; }
  int phase() const { return phase_; }
  int current_phase_edges() const { return phase_edges_; }
  const std::vector<PhaseRecord>& completed_phases() const {
    return completed_;
  }
  std::int64_t direct_arcs_total() const { return direct_arcs_total_; }
  std::int64_t resample_arcs_total() const { return resample_arcs_total_; }
  std::int64_t arcs_into_reachability_total() const {
    return direct_arcs_total_ + resample_arcs_total_;
  }
  std::int64_t samples_drawn_total() const { return samples_drawn_total_; }
  const std::vector<DirectedArc>& sampled_arcs() const { return sample_; }
  // Every sampled arc currently has a residual copy in the graph.
  bool sample_is_residual_subset() const;

 private:
  void augment_and_start_phase();
  bool use_batch_sampling() const;

  int n_;
  VertexId s_;
  VertexId t_;
  double epsilon_;
  IncFlowConfig config_;
  std::int64_t rho_;
  std::mt19937_64 rng_;

  UndirectedMultiGraph graph_;
  WeightedSampler sampler_;
  std::vector<DirectedArc> sample_;  // arc set H of the current phase
  std::unique_ptr<ReachabilityTree> reach_;

  int phase_ = 1;
  int phase_edges_ = 0;
  std::int64_t phase_samples_ = 0;
  std::int64_t phase_resample_arcs_ = 0;
  std::vector<PhaseRecord> completed_;
  std::int64_t direct_arcs_total_ = 0;
  std::int64_t resample_arcs_total_ = 0;
  std::int64_t samples_drawn_total_ = 0;
  std::vector<char> drawn_;  // per-edge dedup flags, reused across phases
};

// ceil(c * n * log2(n)^2 / eps), at least 1.
std::int64_t sample_budget(int vertex_count, double epsilon, double constant);

}  // namespace incflow

#endif  // INCFLOW_INCFLOW_HPP
