#ifndef INCFLOW_ORACLE_HPP
#define INCFLOW_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "incflow/graph.hpp"
#include "incflow/sparsify.hpp"

namespace incflow::oracle {

// Brute-force ground truth for small instances. Cut-enumerating functions
// take the cut side as a vertex bitmask and are capped at 20 vertices.

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Exact unit-capacity undirected max-flow value by repeated residual BFS.
int exact_max_flow(int n, const EdgeList& edges, VertexId s, VertexId t);
int exact_max_flow(const UndirectedMultiGraph& g);

// Incremental wrapper keeping its own flow so per-step verification does
// not recompute from scratch.
class ExactFlowOracle {
 public:
  ExactFlowOracle(int n, VertexId s, VertexId t);
  void add_edge(VertexId u, VertexId v);
  int value();

 private:
  struct Residual {
    VertexId head;
    int cap;
    int rev;  // index of the reverse arc in adj_[head]
  };
  bool augment_once();

  int n_;
  VertexId s_, t_;
  std::vector<std::vector<Residual>> adj_;
  int value_ = 0;
  bool saturated_ = false;  // no augmenting path since the last change
};

// Residual directed multigraph of the maintained flow, one arc per
// residual copy.
DirectedMultiGraph residual_digraph(const UndirectedMultiGraph& g);

// Forward/backward arc ratio of the cut leaving `side`; +infinity when no
// arc crosses backward.
double balance(const DirectedMultiGraph& g, std::uint32_t side);

// True iff every cut of the residual graph has balance >= eps/2.
// Precondition (checked): flow value <= (1-eps) * max flow.
bool residual_balance_check(const UndirectedMultiGraph& g, double eps);

// Max-flow between the endpoints of edge e in (n, edges).
int edge_connectivity(int n, const EdgeList& edges, int edge_index);
int edge_connectivity_between(int n, const EdgeList& edges, VertexId u,
                              VertexId v);

// Arc ids leaving `side` whose underlying edge connectivity is >= k.
std::vector<int> k_projection(const DirectedMultiGraph& g, double k,
                              std::uint32_t side);

// Checks that grouping edges by the given indices yields a valid NI forest
// packing: each level acyclic, each edge's endpoints connected on every
// lower level, every index >= 1.
bool verify_ni_packing(int n, const EdgeList& edges,
                       const std::vector<int>& indices);

// Overlap ratio sum_i u(C n E_i) * 2^(i-1) / pi_i divided by u(C) for the
// cut leaving `side`; NaN when the cut is empty.
double gamma_overlap_check(int n, const EdgeList& edges,
                           const Decomposition& d, std::uint32_t side);

// Undirected cut capacity of `side` restricted to the given edge ids.
int cut_capacity(const EdgeList& edges, const std::vector<int>& edge_ids,
                 std::uint32_t side);

}  // namespace incflow::oracle

#endif  // INCFLOW_ORACLE_HPP
