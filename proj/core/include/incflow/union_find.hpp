#ifndef INCFLOW_UNION_FIND_HPP
#define INCFLOW_UNION_FIND_HPP

#include <unordered_map>
#include <vector>

namespace incflow {

// Disjoint sets over a growable universe of integer elements, with path
// compression and union by size. Elements must be added before use; adding
// an element twice is an error. Union of already-merged elements is a no-op.
class DisjointSets {
 public:
  void add(int element);
  // Representative element of the set containing `element`.
  int find(int element);
  void merge(int a, int b);
  bool connected(int a, int b) { return find(a) == find(b); }
  bool contains(int element) const {
    return slot_of_.find(element) != slot_of_.end();
  }
  int size() const { return static_cast<int>(element_.size()); }

 private:
  int find_slot(int slot);
  int slot_checked(int element) const;

  std::unordered_map<int, int> slot_of_;
  std::vector<int> parent_;   // slot -> parent slot
  std::vector<int> size_;     // valid at roots
  std::vector<int> element_;  // slot -> element id
};

}  // namespace incflow

#endif  // INCFLOW_UNION_FIND_HPP
