#include "incflow/sparsify.hpp"

#include <cmath>
#include <stdexcept>

#include "incflow/sampler.hpp"

namespace incflow {

double WeightedDigraph::cut_weight(std::uint32_t side) const {
  double total = 0.0;
  for (const auto& [arc, w] : weight) {
    const bool tail_in = (side >> arc.first) & 1u;
    const bool head_in = (side >> arc.second) & 1u;
    if (tail_in && !head_in) total += w;
  }
  return total;
}

std::int64_t sparsifier_draw_count(int n, const std::vector<double>& lambda,
                                   double beta, double gamma, double eps) {
  double inverse_sum = 0.0;
  for (const double l : lambda) {
    if (!(l >= 1.0))
      throw std::invalid_argument("connectivity parameters must be >= 1");
    inverse_sum += 1.0 / l;
  }
  const double rho =
      128.0 * gamma * (beta + 1.0) * std::log(static_cast<double>(n)) /
      (0.38 * eps * eps) * inverse_sum;
  return static_cast<std::int64_t>(std::ceil(rho));
}

WeightedDigraph sample_sparsifier(const DirectedMultiGraph& g,
                                  const std::vector<double>& lambda,
                                  double beta, double gamma, double eps,
                                  std::mt19937_64& rng) {
  if (!(beta >= 1.0) || !(gamma >= 1.0))
    throw std::invalid_argument("beta and gamma must be >= 1");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("eps must lie in (0, 1)");
  if (lambda.size() != g.arcs.size())
    throw std::invalid_argument("one connectivity parameter per arc required");
  if (g.arcs.empty()) return {g.n, {}};

  const std::int64_t draws = sparsifier_draw_count(g.n, lambda, beta, gamma, eps);
  CumulativeIndex table;
  double inverse_sum = 0.0;
  for (int i = 0; i < g.arc_count(); ++i) {
    table.insert(i, 1.0 / lambda[static_cast<size_t>(i)]);
    inverse_sum += 1.0 / lambda[static_cast<size_t>(i)];
  }
  WeightedDigraph out{g.n, {}};
  for (std::int64_t i = 0; i < draws; ++i) {
    const int arc = table.sample(rng);
    const double p = (1.0 / lambda[static_cast<size_t>(arc)]) / inverse_sum;
    out.weight[g.arcs[static_cast<size_t>(arc)]] +=
        1.0 / (static_cast<double>(draws) * p);
  }
  return out;
}

std::vector<std::vector<int>> connectivity_classes(
    const std::vector<double>& lambda) {
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
    const double l = lambda[static_cast<size_t>(i)];
    if (!(l >= 1.0))
      throw std::invalid_argument("connectivity parameters must be >= 1");
    const int c = static_cast<int>(std::floor(std::log2(l))) + 1;
    if (static_cast<size_t>(c) > classes.size())
      classes.resize(static_cast<size_t>(c));
    classes[static_cast<size_t>(c - 1)].push_back(i);
  }
  return classes;
}

Decomposition ni_decomposition(const std::vector<int>& ni_indices) {
  std::vector<double> lambda(ni_indices.begin(), ni_indices.end());
  Decomposition d;
  d.classes = connectivity_classes(lambda);
  d.gamma = 2.0;
  d.subgraphs.resize(d.classes.size());
  d.pi.resize(d.classes.size());
  for (size_t i = 0; i < d.classes.size(); ++i) {
    d.pi[i] = std::pow(2.0, static_cast<double>(i));  // 2^(i-1), 1-based
    d.subgraphs[i] = d.classes[i];
    if (i > 0)
      d.subgraphs[i].insert(d.subgraphs[i].end(), d.classes[i - 1].begin(),
                            d.classes[i - 1].end());
  }
  return d;
}

Decomposition ni_decomposition(const ForestPacking& packing) {
  return ni_decomposition(packing.indices());
}

std::vector<int> double_packing_indices(const std::vector<int>& indices) {
  std::vector<int> out;
  out.reserve(indices.size() * 2);
  for (const int l : indices) out.push_back(2 * l - 1);
  for (const int l : indices) out.push_back(2 * l);
  return out;
}

}  // namespace incflow
