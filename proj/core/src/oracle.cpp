#include "incflow/oracle.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "incflow/union_find.hpp"

namespace incflow::oracle {

namespace {

void check_enumeration_cap(int n) {
  if (n > 20)
    throw std::invalid_argument("cut enumeration is capped at 20 vertices");
}

}  // namespace

ExactFlowOracle::ExactFlowOracle(int n, VertexId s, VertexId t)
    : n_(n), s_(s), t_(t), adj_(static_cast<size_t>(n)) {
  if (s < 0 || s >= n || t < 0 || t >= n || s == t)
    throw std::invalid_argument("bad terminals");
}

void ExactFlowOracle::add_edge(VertexId u, VertexId v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw std::invalid_argument("bad edge");
  auto& au = adj_[static_cast<size_t>(u)];
  auto& av = adj_[static_cast<size_t>(v)];
  au.push_back({v, 1, static_cast<int>(av.size())});
  av.push_back({u, 1, static_cast<int>(au.size()) - 1});
  saturated_ = false;
}

bool ExactFlowOracle::augment_once() {
  std::vector<std::pair<VertexId, int>> via(static_cast<size_t>(n_), {-1, -1});
  std::queue<VertexId> queue;
  queue.push(s_);
  via[static_cast<size_t>(s_)] = {s_, 0};
  while (!queue.empty() && via[static_cast<size_t>(t_)].first < 0) {
    const VertexId x = queue.front();
    queue.pop();
    auto& arcs = adj_[static_cast<size_t>(x)];
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      const Residual& r = arcs[static_cast<size_t>(i)];
      if (r.cap <= 0 || via[static_cast<size_t>(r.head)].first >= 0) continue;
      via[static_cast<size_t>(r.head)] = {x, i};
      queue.push(r.head);
    }
  }
  if (via[static_cast<size_t>(t_)].first < 0) return false;
  for (VertexId x = t_; x != s_;) {
    auto [prev, idx] = via[static_cast<size_t>(x)];
    Residual& fwd = adj_[static_cast<size_t>(prev)][static_cast<size_t>(idx)];
    fwd.cap -= 1;
    adj_[static_cast<size_t>(x)][static_cast<size_t>(fwd.rev)].cap += 1;
    x = prev;
  }
  return true;
}

int ExactFlowOracle::value() {
  while (!saturated_) {
    if (augment_once())
      ++value_;
    else
      saturated_ = true;
  }
  return value_;
}

int exact_max_flow(int n, const EdgeList& edges, VertexId s, VertexId t) {
  ExactFlowOracle oracle(n, s, t);
  for (const auto& [u, v] : edges) oracle.add_edge(u, v);
  return oracle.value();
}

int exact_max_flow(const UndirectedMultiGraph& g) {
  EdgeList edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return exact_max_flow(g.vertex_count(), edges, g.source(), g.sink());
}

DirectedMultiGraph residual_digraph(const UndirectedMultiGraph& g) {
  DirectedMultiGraph out{g.vertex_count(), {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (const Direction d : {Direction::UV, Direction::VU}) {
      const Arc a{e, d};
      const int mult = g.residual_multiplicity(a);
      for (int c = 0; c < mult; ++c)
        out.arcs.emplace_back(g.arc_tail(a), g.arc_head(a));
    }
  }
  return out;
}

double balance(const DirectedMultiGraph& g, std::uint32_t side) {
  int forward = 0, backward = 0;
  for (const auto& [tail, head] : g.arcs) {
    const bool tail_in = (side >> tail) & 1u;
    const bool head_in = (side >> head) & 1u;
    if (tail_in && !head_in) ++forward;
    if (!tail_in && head_in) ++backward;
  }
  if (backward == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(forward) / static_cast<double>(backward);
}

bool residual_balance_check(const UndirectedMultiGraph& g, double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("eps must lie in (0, 1)");
  const int n = g.vertex_count();
  if (n > 12)
    throw std::invalid_argument("residual balance check is capped at 12");
  const int best = exact_max_flow(g);
  if (g.flow_value() > (1.0 - eps) * best + 1e-9)
    throw std::invalid_argument("flow exceeds (1-eps) * max flow");
  const DirectedMultiGraph residual = residual_digraph(g);
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t side = 1; side < full; ++side)
    if (balance(residual, side) < eps / 2.0 - 1e-12) return false;
  return true;
}

int edge_connectivity_between(int n, const EdgeList& edges, VertexId u,
                              VertexId v) {
  return exact_max_flow(n, edges, u, v);
}

int edge_connectivity(int n, const EdgeList& edges, int edge_index) {
  const auto& [u, v] = edges.at(static_cast<size_t>(edge_index));
  return edge_connectivity_between(n, edges, u, v);
}

std::vector<int> k_projection(const DirectedMultiGraph& g, double k,
                              std::uint32_t side) {
  EdgeList undirected;
  undirected.reserve(g.arcs.size());
  for (const auto& [tail, head] : g.arcs) undirected.emplace_back(tail, head);
  std::vector<int> out;
  for (int i = 0; i < g.arc_count(); ++i) {
    const auto& [tail, head] = g.arcs[static_cast<size_t>(i)];
    const bool crosses = ((side >> tail) & 1u) && !((side >> head) & 1u);
    if (!crosses) continue;
    if (edge_connectivity_between(g.n, undirected, tail, head) >= k)
      out.push_back(i);
  }
  return out;
}

bool verify_ni_packing(int n, const EdgeList& edges,
                       const std::vector<int>& indices) {
  if (edges.size() != indices.size()) return false;
  int levels = 0;
  for (const int l : indices) {
    if (l < 1) return false;
    levels = std::max(levels, l);
  }
  // forest check per level
  std::vector<DisjointSets> forest(static_cast<size_t>(levels));
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v] = edges[e];
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    DisjointSets& f = forest[static_cast<size_t>(indices[e] - 1)];
    if (!f.contains(u)) f.add(u);
    if (!f.contains(v)) f.add(v);
    if (f.connected(u, v)) return false;  // cycle within one forest
    f.merge(u, v);
  }
  // maximality: an edge on level i must have connected endpoints on every
  // lower level
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v] = edges[e];
    for (int j = 0; j < indices[e] - 1; ++j) {
      DisjointSets& f = forest[static_cast<size_t>(j)];
      if (!f.contains(u) || !f.contains(v) || !f.connected(u, v)) return false;
    }
  }
  return true;
}

int cut_capacity(const EdgeList& edges, const std::vector<int>& edge_ids,
                 std::uint32_t side) {
  int count = 0;
  for (const int id : edge_ids) {
    const auto& [u, v] = edges[static_cast<size_t>(id)];
    if ((((side >> u) & 1u) ^ ((side >> v) & 1u)) != 0) ++count;
  }
  return count;
}

double gamma_overlap_check(int n, const EdgeList& edges, const Decomposition& d,
                           std::uint32_t side) {
  check_enumeration_cap(n);
  int total = 0;
  for (const auto& [u, v] : edges)
    if ((((side >> u) & 1u) ^ ((side >> v) & 1u)) != 0) ++total;
  if (total == 0) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (size_t i = 0; i < d.subgraphs.size(); ++i) {
    const int crossing = cut_capacity(edges, d.subgraphs[i], side);
    sum += crossing * std::pow(2.0, static_cast<double>(i)) / d.pi[i];
  }
  return sum / total;
}

}  // namespace incflow::oracle
