#include "incflow/incflow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace incflow {

std::int64_t sample_budget(int vertex_count, double epsilon, double constant) {
  const double lg = std::log2(static_cast<double>(vertex_count));
  const double rho = constant * vertex_count * lg * lg / epsilon;
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(rho)));
}

IncrementalFlow::IncrementalFlow(int vertex_count, VertexId source,
                                 VertexId sink, double epsilon,
                                 IncFlowConfig config)
    : n_(vertex_count),
      s_(source),
      t_(sink),
      epsilon_(epsilon),
      config_(config),
      rho_(0),
      rng_(config.seed),
      graph_(vertex_count, source, sink),
      sampler_(vertex_count, config.exact_rational) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (config.sample_constant <= 0.0)
    throw std::invalid_argument("sample constant must be positive");
  rho_ = incflow::sample_budget(vertex_count, epsilon, config.sample_constant);
  reach_ = std::make_unique<ReachabilityTree>(n_, s_);
}

std::vector<FlowState> IncrementalFlow::flow() const {
  std::vector<FlowState> f;
  f.reserve(graph_.edges().size());
  for (const auto& e : graph_.edges()) f.push_back(e.state);
  return f;
}

bool IncrementalFlow::insert(VertexId u, VertexId v) {
  const EdgeId e = graph_.add_edge(u, v);
  sampler_.insert(u, v);
  const DirectedArc fwd{u, v, {e, Direction::UV}};
  const DirectedArc bwd{v, u, {e, Direction::VU}};
  sample_.push_back(fwd);
  sample_.push_back(bwd);
  reach_->insert(fwd);
  reach_->insert(bwd);
  direct_arcs_total_ += 2;
  ++phase_edges_;
  if (!reach_->reachable(t_)) return false;
  augment_and_start_phase();
  return true;
}

void IncrementalFlow::augment_and_start_phase() {
  std::vector<DirectedArc> tree_path = reach_->path_to(t_);
  std::vector<Arc> path;
  path.reserve(tree_path.size());
  for (const DirectedArc& a : tree_path) path.push_back(a.arc);
  graph_.augment_path(path);
  completed_.push_back({phase_, phase_edges_, phase_samples_,
                        phase_resample_arcs_, graph_.edge_count()});
  ++phase_;
  phase_edges_ = 0;
  resample();
}

bool IncrementalFlow::use_batch_sampling() const {
  switch (config_.sample_mode) {
    case IncFlowConfig::SampleMode::Literal:
      return false;
    case IncFlowConfig::SampleMode::Batch:
      return true;
    case IncFlowConfig::SampleMode::Auto:
      break;
  }
  return rho_ > 32 * std::max(1, graph_.edge_count());
}

void IncrementalFlow::resample() {
  sample_.clear();
  drawn_.assign(static_cast<size_t>(graph_.edge_count()), 0);
  const CumulativeIndex& table = sampler_.table();
  if (!table.empty()) {
    if (use_batch_sampling()) {
      // Per-edge draw counts of the rho-fold categorical sample, generated
      // as a chain of conditional binomials. Only the drawn/not-drawn
      // indicator matters for the arc set.
      double remaining_mass = table.total();
      std::int64_t remaining = rho_;
      for (int i = 0; i < table.size() && remaining > 0; ++i) {
        const double w = table.weight(i);
        std::int64_t count;
        if (i + 1 == table.size() || remaining_mass <= w) {
          count = remaining;
        } else {
          std::binomial_distribution<std::int64_t> bin(
              remaining, std::min(1.0, w / remaining_mass));
          count = bin(rng_);
        }
        remaining -= count;
        remaining_mass -= w;
        if (count > 0) drawn_[static_cast<size_t>(table.id(i))] = 1;
      }
    } else {
      for (std::int64_t i = 0; i < rho_; ++i) {
        const EdgeId e = sampler_.sample(rng_);
        drawn_[static_cast<size_t>(e)] = 1;
      }
    }
  }
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    if (!drawn_[static_cast<size_t>(e)]) continue;
    for (const Direction d : {Direction::UV, Direction::VU}) {
      const Arc a{e, d};
      const int mult = graph_.residual_multiplicity(a);
      for (int c = 0; c < mult; ++c)
        sample_.push_back({graph_.arc_tail(a), graph_.arc_head(a), a});
    }
  }
  samples_drawn_total_ += rho_;
  phase_samples_ = rho_;
  phase_resample_arcs_ = static_cast<std::int64_t>(sample_.size());
  resample_arcs_total_ += phase_resample_arcs_;
  reach_ = std::make_unique<ReachabilityTree>(
      n_, s_, std::span<const DirectedArc>(sample_));
}

bool IncrementalFlow::sample_is_residual_subset() const {
  for (const DirectedArc& a : sample_)
    if (graph_.residual_multiplicity(a.arc) < 1) return false;
  return true;
}

}  // namespace incflow
