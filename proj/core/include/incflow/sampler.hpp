#ifndef INCFLOW_SAMPLER_HPP
#define INCFLOW_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "incflow/graph.hpp"
#include "incflow/ni_packing.hpp"

namespace incflow {

// Exact unit-fraction arithmetic for the optional rational prefix mode.
struct Rational {
  long long num = 0;
  long long den = 1;

  bool operator==(const Rational&) const = default;
};

Rational rational_add_unit_fraction(Rational r, long long denom);

// Draws a uniform double in [0, 1) from 53 random bits; avoids the
// implementation-defined behaviour of std::uniform_real_distribution so
// seeded runs are reproducible.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Append-only table of (id, prefix weight) entries with strictly increasing
// prefixes, supporting predecessor search for categorical sampling. Because
// entries arrive in prefix order, the search-tree contract is realized as a
// sorted array with binary search.
class CumulativeIndex {
 public:
  explicit CumulativeIndex(bool exact_rational = false)
      : exact_rational_(exact_rational) {}

  // Registers `id` with weight w; its prefix is the total mass so far.
  void insert(int id, double w);
  // Same, with weight 1/denom tracked exactly in rational mode.
  void insert_unit_fraction(int id, long long denom);

  // Id of the entry whose half-open prefix interval contains z; z >= total
  // mass maps to the last entry. Rejects an empty table.
  int search(double z) const;
  int sample(std::mt19937_64& rng) const { return search(total_ * uniform01(rng)); }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  double total() const { return total_; }
  int id(int i) const { return ids_[static_cast<size_t>(i)]; }
  double prefix(int i) const { return prefix_[static_cast<size_t>(i)]; }
  double weight(int i) const;

  bool exact_rational() const { return exact_rational_; }
  Rational prefix_rational(int i) const;
  Rational total_rational() const;

 private:
  bool exact_rational_;
  std::vector<int> ids_;
  std::vector<double> prefix_;
  double total_ = 0.0;
  std::vector<Rational> prefix_exact_;
  Rational total_exact_;
};

// Maintains NI indices for inserted edges together with the cumulative
// table for the distribution { index^-1 / L }.
class WeightedSampler {
 public:
  explicit WeightedSampler(int vertex_count, bool exact_rational = false)
      : packing_(vertex_count), table_(exact_rational) {}

  // Registers the edge in the packing and the table; returns its NI index.
  int insert(VertexId u, VertexId v);

  EdgeId sample(std::mt19937_64& rng) const;

  double total_mass() const { return table_.total(); }
  int edge_count() const { return table_.size(); }
  const ForestPacking& packing() const { return packing_; }
  const CumulativeIndex& table() const { return table_; }

 private:
  ForestPacking packing_;
  CumulativeIndex table_;
};

}  // namespace incflow

#endif  // INCFLOW_SAMPLER_HPP
