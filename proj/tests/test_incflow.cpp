#include <doctest.h>

#include <stdexcept>

#include <random>

#include "incflow/incflow.hpp"
#include "incflow/oracle.hpp"

using incflow::IncFlowConfig;
using incflow::IncrementalFlow;

TEST_CASE("sample budget formula") {
  // 5390 * 16 * log2(16)^2 / 0.5
  CHECK(incflow::sample_budget(16, 0.5, 5390.0) == 2759680);
  CHECK(incflow::sample_budget(2, 0.9, 5390.0) >= 1);
  CHECK(incflow::sample_budget(2, 0.5, 1e-9) >= 1);
}

TEST_CASE("constructor validates epsilon") {
  CHECK_THROWS_AS(IncrementalFlow(4, 0, 3, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(IncrementalFlow(4, 0, 3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(IncrementalFlow(4, 0, 0, 0.5), std::invalid_argument);
}

TEST_CASE("inserting (s,t) augments immediately") {
  IncrementalFlow f(2, 0, 1, 0.5);
  CHECK(f.insert(0, 1));
  CHECK(f.value() == 1);
  CHECK(f.phase() == 2);
}

TEST_CASE("an edge away from the terminals does not augment") {
  IncrementalFlow f(4, 0, 3, 0.5);
  CHECK(!f.insert(1, 2));
  CHECK(f.value() == 0);
}

TEST_CASE("resample of a saturated s-t edge leaves t unreachable") {
  // one edge (s,t) carrying flow: both residual copies point t -> s
  IncrementalFlow f(2, 0, 1, 0.5);
  f.insert(0, 1);
  CHECK(f.value() == 1);
  for (const auto& a : f.sampled_arcs()) CHECK(a.tail == 1);
  CHECK(f.insert(0, 1));  // a second parallel edge augments again
  CHECK(f.value() == 2);
}

TEST_CASE("flow query satisfies conservation and counts one unit per phase") {
  IncrementalFlow f(5, 0, 4, 0.5);
  std::mt19937_64 rng(1);
  int augmentations = 0;
  for (int i = 0; i < 40; ++i) {
    int u = static_cast<int>(rng() % 5);
    int v = static_cast<int>(rng() % 4);
    if (v >= u) ++v;
    if (f.insert(u, v)) ++augmentations;
    CHECK(f.graph().conservation_holds());
    CHECK(f.sample_is_residual_subset());
  }
  CHECK(f.value() == augmentations);
  CHECK(f.phase() == augmentations + 1);
}

TEST_CASE("bipartite adversarial stream augments once per sink edge") {
  const int q = 6;
  const int n = 2 * q;
  IncrementalFlow f(n, 0, n - 1, 0.5);
  for (int u = 0; u < q; ++u)
    for (int v = q; v < n - 1; ++v) CHECK(!f.insert(u, v));
  CHECK(f.value() == 0);
  for (int u = 0; u < q; ++u) CHECK(f.insert(u, n - 1));
  CHECK(f.value() == q);
  CHECK(f.value() == incflow::oracle::exact_max_flow(f.graph()));
}

TEST_CASE("direct arc accounting totals 2m") {
  IncrementalFlow f(6, 0, 5, 0.5);
  std::mt19937_64 rng(8);
  const int m = 50;
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rng() % 6);
    int v = static_cast<int>(rng() % 5);
    if (v >= u) ++v;
    f.insert(u, v);
  }
  CHECK(f.direct_arcs_total() == 2 * m);
  // per-phase edge counts partition the stream
  int counted = f.current_phase_edges();
  for (const auto& ph : f.completed_phases()) counted += ph.edges_inserted;
  CHECK(counted == m);
}

TEST_CASE("literal and batch sampling agree in distribution") {
  // same seeds, both modes: final flow equals the exact value either way on
  // a stream the default budget trivially supersamples
  for (const auto mode : {IncFlowConfig::SampleMode::Literal,
                          IncFlowConfig::SampleMode::Batch}) {
    IncFlowConfig cfg;
    cfg.sample_constant = 2.0;  // keep the literal path affordable
    cfg.sample_mode = mode;
    cfg.seed = 99;
    IncrementalFlow f(8, 0, 7, 0.5, cfg);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 120; ++i) {
      int u = static_cast<int>(rng() % 8);
      int v = static_cast<int>(rng() % 7);
      if (v >= u) ++v;
      f.insert(u, v);
    }
    const int exact = incflow::oracle::exact_max_flow(f.graph());
    CHECK(f.value() >= static_cast<int>((1.0 - 0.5) * exact));
    CHECK(f.value() <= exact);
  }
}
