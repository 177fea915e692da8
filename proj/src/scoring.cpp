#include "tiergraph/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "tiergraph/parallel.hpp"
#include "tiergraph/rng.hpp"

namespace tiergraph {

TrainIdSet TrainIdSet::from_ids(std::vector<NodeId> raw, NodeId num_nodes) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  if (!raw.empty() && raw.back() >= num_nodes)
    throw DomainError("train id " + std::to_string(raw.back()) +
                      " out of range for num_nodes=" + std::to_string(num_nodes));
  return TrainIdSet{std::move(raw)};
}

TrainIdSet draw_random_train_ids(NodeId num_nodes, NodeId count, std::uint64_t seed) {
  if (count < 1 || count > num_nodes)
    throw DomainError("need 1 <= count <= num_nodes, got count=" + std::to_string(count) +
                      " for " + std::to_string(num_nodes) + " nodes");
  RngStream rng(derive_stream_key(seed, {0x6C61ull}));
  std::vector<std::uint64_t> picks;
  sample_index_subset(rng, num_nodes, count, picks);
  std::sort(picks.begin(), picks.end());
  return TrainIdSet{std::move(picks)};
}

ScoreVector degree_score(const CsrGraph& g) {
  const NodeId n = g.num_nodes();
  ScoreVector scores(n);
  for (NodeId u = 0; u < n; ++u) scores[u] = static_cast<double>(g.out_degree(u));
  return scores;
}

namespace {

void check_config(const PagerankConfig& cfg) {
  if (cfg.iterations < 1)
    throw DomainError("pagerank: iterations must be >= 1");
  if (!(cfg.damp > 0.0 && cfg.damp < 1.0))
    throw DomainError("pagerank: damp must lie in (0,1), got " + std::to_string(cfg.damp));
}

// Runs the reverse-pagerank recurrence on an already-initialized score vector.
ScoreVector run_iterations(const CsrGraph& g, const PagerankConfig& cfg,
                           ScoreVector score) {
  const auto n = static_cast<std::int64_t>(g.num_nodes());
  const double base = (1.0 - cfg.damp) / static_cast<double>(n);
  const auto indeg = in_degrees(g);

  ScoreVector normalized(n), next(n);
  const int workers = worker_count();
  for (std::uint32_t iter = 0; iter < cfg.iterations; ++iter) {
#pragma omp parallel for schedule(static) num_threads(workers)
    for (std::int64_t j = 0; j < n; ++j)
      normalized[j] = score[j] / static_cast<double>(std::max<EdgeIdx>(indeg[j], 1));

    // each row is summed sequentially in storage order; no cross-thread
    // reduction touches a float, so the result is schedule-independent
#pragma omp parallel for schedule(static) num_threads(workers)
    for (std::int64_t j = 0; j < n; ++j) {
      double pulled = 0.0;
      for (const NodeId w : g.row(static_cast<NodeId>(j))) pulled += normalized[w];
      next[j] = base + cfg.damp * pulled;
    }
    score.swap(next);
  }
  return score;
}

}  // namespace

ScoreVector reverse_pagerank(const CsrGraph& g, const PagerankConfig& cfg) {
  check_config(cfg);
  const NodeId n = g.num_nodes();
  if (n == 0) return {};
  ScoreVector score(n, 1.0 / static_cast<double>(n));
  return run_iterations(g, cfg, std::move(score));
}

ScoreVector weighted_reverse_pagerank(const CsrGraph& g, const PagerankConfig& cfg,
                                      const TrainIdSet& tid) {
  check_config(cfg);
  if (tid.ids.empty())
    throw DomainError("weighted reverse pagerank needs a non-empty train id set; "
                      "use reverse_pagerank when no nodes are labeled");
  const NodeId n = g.num_nodes();
  if (n == 0) return {};
  const double weight =
      static_cast<double>(n) / static_cast<double>(tid.ids.size());
  ScoreVector score(n, 1.0 / static_cast<double>(n));
  for (const NodeId id : tid.ids) {
    if (id >= n) throw DomainError("train id " + std::to_string(id) + " out of range");
    score[id] *= weight;
  }
  return run_iterations(g, cfg, std::move(score));
}

std::vector<NodeId> score_ordering(const ScoreVector& scores) {
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (!std::isfinite(scores[i]) || scores[i] < 0.0)
      throw DomainError("score " + std::to_string(i) + " is not finite and >= 0");
  std::vector<NodeId> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  return order;
}

}  // namespace tiergraph
