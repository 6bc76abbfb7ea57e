#include "incflow/reachability.hpp"

#include <algorithm>
#include <stdexcept>

namespace incflow {

ReachabilityTree::ReachabilityTree(int vertex_count, VertexId source)
    : source_(source),
      reached_(static_cast<size_t>(vertex_count), 0),
      parent_(static_cast<size_t>(vertex_count)),
      pending_(static_cast<size_t>(vertex_count)) {
  if (source < 0 || source >= vertex_count)
    throw std::invalid_argument("source out of range");
  reached_[static_cast<size_t>(source)] = 1;
}

ReachabilityTree::ReachabilityTree(int vertex_count, VertexId source,
                                   std::span<const DirectedArc> arcs)
    : ReachabilityTree(vertex_count, source) {
  for (const DirectedArc& a : arcs) insert(a);
}

void ReachabilityTree::attach_and_expand(VertexId v, const DirectedArc& via) {
  parent_[static_cast<size_t>(v)] = via;
  reached_[static_cast<size_t>(v)] = 1;
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    std::vector<DirectedArc> waiting;
    waiting.swap(pending_[static_cast<size_t>(x)]);
    for (const DirectedArc& a : waiting) {
      ++pending_scans_;
      if (reached_[static_cast<size_t>(a.head)]) continue;
      parent_[static_cast<size_t>(a.head)] = a;
      reached_[static_cast<size_t>(a.head)] = 1;
      stack.push_back(a.head);
    }
  }
}

void ReachabilityTree::insert(const DirectedArc& a) {
  ++arcs_inserted_;
  if (a.tail < 0 || a.head < 0 ||
      static_cast<size_t>(a.tail) >= reached_.size() ||
      static_cast<size_t>(a.head) >= reached_.size())
    throw std::invalid_argument("arc endpoint out of range");
  if (!reached_[static_cast<size_t>(a.tail)]) {
    ++pending_scans_;
    pending_[static_cast<size_t>(a.tail)].push_back(a);
    return;
  }
  if (reached_[static_cast<size_t>(a.head)]) return;  // non-tree arc
  attach_and_expand(a.head, a);
}

std::vector<DirectedArc> ReachabilityTree::path_to(VertexId v) const {
  if (v < 0 || static_cast<size_t>(v) >= reached_.size())
    throw std::invalid_argument("vertex out of range");
  if (!reached_[static_cast<size_t>(v)])
    throw std::invalid_argument("vertex not reached");
  std::vector<DirectedArc> path;
  for (VertexId x = v; x != source_;) {
    const DirectedArc& p = parent_[static_cast<size_t>(x)];
    path.push_back(p);
    x = p.tail;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace incflow
