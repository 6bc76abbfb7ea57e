#include "incflow/ni_packing.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace incflow {

ForestPacking::ForestPacking(int vertex_count)
    : last_tree_(static_cast<size_t>(vertex_count), 0) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

bool ForestPacking::connected_in(VertexId u, VertexId v, int level) {
  if (level == 0) return true;
  if (level > forest_count_) return false;
  DisjointSets& t = trees_[static_cast<size_t>(level - 1)];
  if (!t.contains(u) || !t.contains(v)) return false;
  return t.connected(u, v);
}

int ForestPacking::find_tree(VertexId u, VertexId v, int upper_bound) {
#ifndef NDEBUG
  // Within [0, upper_bound] connectivity is monotone non-increasing in the
  // level; the binary search relies on it.
  for (int i = 1; i <= upper_bound; ++i)
    assert(!(connected_in(u, v, i) && !connected_in(u, v, i - 1)));
#endif
  int lo = 0, hi = upper_bound;
  while (lo <= hi) {
    const int mid = (lo + hi) / 2;
    if (connected_in(u, v, mid))
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return lo;  // level 0 is always connected, so lo >= 1
}

int ForestPacking::insert(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loops have no forest index");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("vertex out of range");
  const int upper_bound = std::min(last_tree(u), last_tree(v));
  const int i = find_tree(u, v, upper_bound);
  if (i > upper_bound + 1)
    throw std::logic_error("forest index skipped a level");
  if (i > forest_count_) {
    ++forest_count_;
    trees_.emplace_back();
  }
  for (const VertexId x : {u, v}) {
    if (i > last_tree_[static_cast<size_t>(x)]) {
      ++last_tree_[static_cast<size_t>(x)];
      assert(last_tree_[static_cast<size_t>(x)] == i);
      trees_[static_cast<size_t>(i - 1)].add(x);
    }
  }
  trees_[static_cast<size_t>(i - 1)].merge(u, v);
  index_.push_back(i);
  inverse_sum_ += 1.0 / i;
  return i;
}

}  // namespace incflow
