#ifndef INCFLOW_GRAPH_HPP
#define INCFLOW_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace incflow {

using VertexId = int;
using EdgeId = int;

// Unit flow carried by an edge, relative to its stored endpoint order (u, v).
enum class FlowState : std::uint8_t { Zero, Forward, Backward };

enum class Direction : std::uint8_t { UV, VU };

// A directed copy of an undirected edge in the residual graph.
struct Arc {
  EdgeId edge;
  Direction dir;

  bool operator==(const Arc&) const = default;
};

inline Direction reverse(Direction d) {
  return d == Direction::UV ? Direction::VU : Direction::UV;
}

// Undirected uncapacitated multigraph with a maintained unit s-t flow.
// Append-only: edges are never removed and vertex count is fixed.
class UndirectedMultiGraph {
 public:
  struct Edge {
    VertexId u;
    VertexId v;
    FlowState state;
  };

  UndirectedMultiGraph(int vertex_count, VertexId source, VertexId sink);

  // Appends an edge with zero flow. Rejects self-loops and out-of-range
  // endpoints. Parallel edges are allowed.
  EdgeId add_edge(VertexId u, VertexId v);

  // Number of residual copies of the given directed arc: 1 each way for a
  // zero-flow edge, 2 against the flow and 0 with it otherwise.
  int residual_multiplicity(Arc a) const;

  // Pushes one unit along a residual s->t path and bumps the flow value.
  // The path must consist of residual-present arcs, be vertex-consecutive
  // from s to t, and touch each underlying edge at most once. On any
  // violation the graph is left unchanged.
  void augment_path(std::span<const Arc> path);

  int flow_value() const { return flow_value_; }

  // Net outflow at s recomputed from the edge states; equals flow_value().
  int recompute_flow_value() const;

  // Checks flow conservation at every vertex other than s and t.
  bool conservation_holds() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexId source() const { return s_; }
  VertexId sink() const { return t_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexId arc_tail(Arc a) const;
  VertexId arc_head(Arc a) const;

 private:
  int n_;
  VertexId s_;
  VertexId t_;
  std::vector<Edge> edges_;
  int flow_value_ = 0;
};

}  // namespace incflow

#endif  // INCFLOW_GRAPH_HPP
