#ifndef INCFLOW_NI_PACKING_HPP
#define INCFLOW_NI_PACKING_HPP

#include <vector>

#include "incflow/graph.hpp"
#include "incflow/union_find.hpp"

namespace incflow {

// Ordered sequence of maximal spanning forests partitioning the inserted
// edges. Forest indices are 1-based; the index assigned to an edge never
// changes afterwards. Vertices join a forest lazily, one level per
// insertion, tracked by last_tree.
class ForestPacking {
 public:
  explicit ForestPacking(int vertex_count);

  // Places the edge into the first forest where its endpoints are
  // disconnected and returns that forest index.
  int insert(VertexId u, VertexId v);

  // Least forest index i >= 1 with u and v disconnected in forest i.
  // Level 0 counts as connected; levels beyond the packing (or with an
  // absent endpoint) count as disconnected. Callers pass
  // upper_bound = min(last_tree(u), last_tree(v)).
  int find_tree(VertexId u, VertexId v, int upper_bound);

  int forest_count() const { return forest_count_; }
  int last_tree(VertexId v) const {
    return last_tree_[static_cast<size_t>(v)];
  }
  int vertex_count() const { return static_cast<int>(last_tree_.size()); }
  int edge_count() const { return static_cast<int>(index_.size()); }
  int index_of(EdgeId e) const { return index_[static_cast<size_t>(e)]; }
  // Assigned forest indices in edge-insertion order.
  const std::vector<int>& indices() const { return index_; }
  // Running sum of inverse indices.
  double inverse_index_sum() const { return inverse_sum_; }

 private:
  bool connected_in(VertexId u, VertexId v, int level);

  int forest_count_ = 0;
  std::vector<DisjointSets> trees_;
  std::vector<int> last_tree_;
  std::vector<int> index_;
  double inverse_sum_ = 0.0;
};

}  // namespace incflow

#endif  // INCFLOW_NI_PACKING_HPP
