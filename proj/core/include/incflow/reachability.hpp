#ifndef INCFLOW_REACHABILITY_HPP
#define INCFLOW_REACHABILITY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "incflow/graph.hpp"

namespace incflow {

// A residual arc together with its endpoints, so extracted paths can be
// mapped back to augmentations.
struct DirectedArc {
  VertexId tail;
  VertexId head;
  Arc arc;
};

// Incremental single-source reachability with parent arcs for path
// extraction. Build-then-grow only: no arc deletions. Arcs whose tail is
// not yet reached wait in per-vertex pending lists and are scanned at most
// once more when the tail joins, so total work is linear in arcs inserted.
class ReachabilityTree {
 public:
  ReachabilityTree(int vertex_count, VertexId source);
  ReachabilityTree(int vertex_count, VertexId source,
                   std::span<const DirectedArc> arcs);

  void insert(const DirectedArc& a);
  bool reachable(VertexId v) const {
    return reached_[static_cast<size_t>(v)] != 0;
  }
  // Tree path from the source to v; v must be reached. Vertex-simple by
  // construction.
  std::vector<DirectedArc> path_to(VertexId v) const;

  VertexId source() const { return source_; }
  std::int64_t arcs_inserted() const { return arcs_inserted_; }
  // Pending-list work counter: one tick when an arc is filed, one when it
  // is scanned during a drain. Bounded by 2 * arcs_inserted().
  std::int64_t pending_scans() const { return pending_scans_; }

 private:
  void attach_and_expand(VertexId v, const DirectedArc& via);

  VertexId source_;
  std::vector<char> reached_;
  std::vector<DirectedArc> parent_;  // valid where reached, except source
  std::vector<std::vector<DirectedArc>> pending_;
  std::int64_t arcs_inserted_ = 0;
  std::int64_t pending_scans_ = 0;
};

}  // namespace incflow

#endif  // INCFLOW_REACHABILITY_HPP
