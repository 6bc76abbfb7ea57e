#ifndef INCFLOW_SPARSIFY_HPP
#define INCFLOW_SPARSIFY_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "incflow/ni_packing.hpp"

namespace incflow {

// Directed multigraph given as a flat arc list; arc ids are positions.
struct DirectedMultiGraph {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> arcs;

  int arc_count() const { return static_cast<int>(arcs.size()); }
};

// Sparsifier output: accumulated weights per (tail, head) pair. Parallel
// input copies collapse onto one weighted arc; cut weights are unchanged.
struct WeightedDigraph {
  int n = 0;
  std::map<std::pair<VertexId, VertexId>, double> weight;

  // Total weight of arcs leaving the vertex set given as a bitmask.
  double cut_weight(std::uint32_t side) const;
};

// Number of i.i.d. draws prescribed for the given parameters:
// ceil(128 * gamma * (beta+1) * ln(n) / (0.38 * eps^2) * sum(1/lambda)).
std::int64_t sparsifier_draw_count(int n, const std::vector<double>& lambda,
                                   double beta, double gamma, double eps);

// Draws arcs i.i.d. with probability proportional to 1/lambda and adds
// weight 1/(draws * p) per draw, so every arc weight is unbiased for its
// capacity.
WeightedDigraph sample_sparsifier(const DirectedMultiGraph& g,
                                  const std::vector<double>& lambda,
                                  double beta, double gamma, double eps,
                                  std::mt19937_64& rng);

// Dyadic connectivity classes: class i (1-based) holds edges with
// 2^(i-1) <= lambda < 2^i. Result is indexed from 0 for class 1.
std::vector<std::vector<int>> connectivity_classes(
    const std::vector<double>& lambda);

struct Decomposition {
  std::vector<std::vector<int>> classes;    // F_i, edge ids per class
  std::vector<std::vector<int>> subgraphs;  // E_i, edge ids per subgraph
  std::vector<double> pi;                   // required connectivity per class
  double gamma = 1.0;
};

// Decomposition induced by NI indices: E_1 = F_1, E_i = F_{i-1} u F_i,
// pi_i = 2^(i-1), gamma = 2.
Decomposition ni_decomposition(const ForestPacking& packing);
Decomposition ni_decomposition(const std::vector<int>& ni_indices);

// NI indices for the multigraph that doubles every edge: copy one of edge e
// gets 2*l_e - 1 and copy two gets 2*l_e. Output order: first copies in
// input order, then second copies.
std::vector<int> double_packing_indices(const std::vector<int>& indices);

}  // namespace incflow

#endif  // INCFLOW_SPARSIFY_HPP
