#pragma once

#include <cstdint>
#include <vector>

#include "tiergraph/csr_graph.hpp"
#include "tiergraph/types.hpp"

namespace tiergraph {

// Per-node importance estimate; finite, non-negative, one value per node.
using ScoreVector = std::vector<double>;

// Sorted unique ids of labeled nodes, the only admissible sampling seeds.
struct TrainIdSet {
  std::vector<NodeId> ids;

  // Sorts, deduplicates and range-checks.
  static TrainIdSet from_ids(std::vector<NodeId> raw, NodeId num_nodes);
};

// `count` distinct nodes drawn uniformly from 0..num_nodes-1, deterministic
// per seed. Synthetic stand-in for a dataset's labeled split.
TrainIdSet draw_random_train_ids(NodeId num_nodes, NodeId count, std::uint64_t seed);

struct PagerankConfig {
  std::uint32_t iterations = 5;
  double damp = 0.85;
};

// values[u] = out_degree(u).
ScoreVector degree_score(const CsrGraph& g);

// Fixed-iteration-count pagerank against edge direction. Each round:
//   normalized[j] = score[j] / max(in_degree[j], 1)
//   pulled[j]     = sum of normalized over j's out-neighbors
//   score[j]      = (1 - damp) / N + damp * pulled[j]
// starting from score[i] = 1/N. Double-buffered, so the result is
// bit-identical for any worker count.
ScoreVector reverse_pagerank(const CsrGraph& g, const PagerankConfig& cfg);

// Same recurrence, but labeled nodes start from (1/N) * (N / |tid|).
// With every node labeled the weight is 1 and the output is bit-identical
// to reverse_pagerank.
ScoreVector weighted_reverse_pagerank(const CsrGraph& g, const PagerankConfig& cfg,
                                      const TrainIdSet& tid);

// Node ids by descending score, ties broken by ascending id.
std::vector<NodeId> score_ordering(const ScoreVector& scores);

}  // namespace tiergraph
