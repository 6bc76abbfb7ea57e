#include "incflow/union_find.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace incflow {

void DisjointSets::add(int element) {
  auto [it, inserted] =
      slot_of_.emplace(element, static_cast<int>(parent_.size()));
  if (!inserted)
    throw std::invalid_argument("element already present: " +
                                std::to_string(element));
  parent_.push_back(it->second);
  size_.push_back(1);
  element_.push_back(element);
}

int DisjointSets::slot_checked(int element) const {
  auto it = slot_of_.find(element);
  if (it == slot_of_.end())
    throw std::invalid_argument("unknown element: " + std::to_string(element));
  return it->second;
}

int DisjointSets::find_slot(int slot) {
  int root = slot;
  while (parent_[static_cast<size_t>(root)] != root)
    root = parent_[static_cast<size_t>(root)];
  while (parent_[static_cast<size_t>(slot)] != root) {
    int next = parent_[static_cast<size_t>(slot)];
    parent_[static_cast<size_t>(slot)] = root;
    slot = next;
  }
  return root;
}

int DisjointSets::find(int element) {
  return element_[static_cast<size_t>(find_slot(slot_checked(element)))];
}

void DisjointSets::merge(int a, int b) {
  int ra = find_slot(slot_checked(a));
  int rb = find_slot(slot_checked(b));
  if (ra == rb) return;
  if (size_[static_cast<size_t>(ra)] < size_[static_cast<size_t>(rb)])
    std::swap(ra, rb);
  parent_[static_cast<size_t>(rb)] = ra;
  size_[static_cast<size_t>(ra)] += size_[static_cast<size_t>(rb)];
}

}  // namespace incflow
