#include "incflow/graph.hpp"

#include <stdexcept>
#include <string>

namespace incflow {

UndirectedMultiGraph::UndirectedMultiGraph(int vertex_count, VertexId source,
                                           VertexId sink)
    : n_(vertex_count), s_(source), t_(sink) {
  if (vertex_count < 2) throw std::invalid_argument("need at least 2 vertices");
  if (source < 0 || source >= n_ || sink < 0 || sink >= n_)
    throw std::invalid_argument("terminal out of range");
  if (source == sink) throw std::invalid_argument("source equals sink");
}

EdgeId UndirectedMultiGraph::add_edge(VertexId u, VertexId v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("vertex out of range: (" + std::to_string(u) +
                                "," + std::to_string(v) + ")");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  edges_.push_back({u, v, FlowState::Zero});
  return static_cast<EdgeId>(edges_.size()) - 1;
}

int UndirectedMultiGraph::residual_multiplicity(Arc a) const {
  const Edge& e = edges_.at(static_cast<size_t>(a.edge));
  switch (e.state) {
    case FlowState::Zero:
      return 1;
    case FlowState::Forward:  // flow u -> v, residual capacity only v -> u
      return a.dir == Direction::VU ? 2 : 0;
    case FlowState::Backward:
      return a.dir == Direction::UV ? 2 : 0;
  }
  return 0;
}

VertexId UndirectedMultiGraph::arc_tail(Arc a) const {
  const Edge& e = edges_.at(static_cast<size_t>(a.edge));
  return a.dir == Direction::UV ? e.u : e.v;
}

VertexId UndirectedMultiGraph::arc_head(Arc a) const {
  const Edge& e = edges_.at(static_cast<size_t>(a.edge));
  return a.dir == Direction::UV ? e.v : e.u;
}

void UndirectedMultiGraph::augment_path(std::span<const Arc> path) {
  if (path.empty()) throw std::invalid_argument("empty augmenting path");
  if (arc_tail(path.front()) != s_)
    throw std::invalid_argument("path does not start at s");
  if (arc_head(path.back()) != t_)
    throw std::invalid_argument("path does not end at t");
  std::vector<char> used(edges_.size(), 0);
  for (size_t i = 0; i < path.size(); ++i) {
    const Arc a = path[i];
    if (a.edge < 0 || static_cast<size_t>(a.edge) >= edges_.size())
      throw std::invalid_argument("unknown edge on path");
    if (i > 0 && arc_head(path[i - 1]) != arc_tail(a))
      throw std::invalid_argument("path arcs are not consecutive");
    if (residual_multiplicity(a) < 1)
      throw std::invalid_argument("non-residual arc on path");
    if (used[static_cast<size_t>(a.edge)])
      throw std::invalid_argument("edge repeated on path");
    used[static_cast<size_t>(a.edge)] = 1;
  }
  for (const Arc a : path) {
    Edge& e = edges_[static_cast<size_t>(a.edge)];
    if (e.state == FlowState::Zero) {
      e.state = a.dir == Direction::UV ? FlowState::Forward
                                       : FlowState::Backward;
    } else {
      // residual-present arc against existing flow: cancel it
      e.state = FlowState::Zero;
    }
  }
  ++flow_value_;
}

int UndirectedMultiGraph::recompute_flow_value() const {
  int out = 0;
  for (const Edge& e : edges_) {
    if (e.state == FlowState::Zero) continue;
    const int sign = e.state == FlowState::Forward ? 1 : -1;
    if (e.u == s_) out += sign;
    if (e.v == s_) out -= sign;
  }
  return out;
}

bool UndirectedMultiGraph::conservation_holds() const {
  std::vector<int> net(static_cast<size_t>(n_), 0);
  for (const Edge& e : edges_) {
    if (e.state == FlowState::Zero) continue;
    const int sign = e.state == FlowState::Forward ? 1 : -1;
    net[static_cast<size_t>(e.u)] += sign;
    net[static_cast<size_t>(e.v)] -= sign;
  }
  for (VertexId v = 0; v < n_; ++v) {
    if (v == s_ || v == t_) continue;
    if (net[static_cast<size_t>(v)] != 0) return false;
  }
  return true;
}

}  // namespace incflow
