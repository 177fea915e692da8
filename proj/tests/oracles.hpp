#pragma once

// Independent reference implementations used only to check the library.
// They take the dense / brute-force route on purpose; keep them free of the
// CSR-based production code paths.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tiergraph/csr_graph.hpp"
#include "tiergraph/scoring.hpp"
#include "tiergraph/tiering.hpp"

namespace tiergraph::testing {

// Reverse-pagerank recurrence over a dense adjacency matrix.
inline std::vector<double> dense_reverse_pagerank(const CsrGraph& g,
                                                  const PagerankConfig& cfg,
                                                  const std::vector<NodeId>* labeled = nullptr) {
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (NodeId u = 0; u < n; ++u)
    for (const NodeId v : g.row(u)) adj[u][v] = 1;

  std::vector<double> indeg(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    double d = 0.0;
    for (std::size_t u = 0; u < n; ++u) d += adj[u][v];
    indeg[v] = std::max(d, 1.0);
  }

  std::vector<double> score(n, 1.0 / static_cast<double>(n));
  if (labeled && !labeled->empty()) {
    const double weight = static_cast<double>(n) / static_cast<double>(labeled->size());
    for (const NodeId id : *labeled) score[id] *= weight;
  }

  const double base = (1.0 - cfg.damp) / static_cast<double>(n);
  std::vector<double> normalized(n), next(n);
  for (std::uint32_t iter = 0; iter < cfg.iterations; ++iter) {
    for (std::size_t j = 0; j < n; ++j) normalized[j] = score[j] / indeg[j];
    for (std::size_t j = 0; j < n; ++j) {
      double pulled = 0.0;
      for (std::size_t v = 0; v < n; ++v)
        if (adj[j][v]) pulled += normalized[v];
      next[j] = base + cfg.damp * pulled;
    }
    score = next;
  }
  return score;
}

// Exact inclusion probabilities of uniform k-subset sampling from row `node`,
// by enumerating every subset.
inline std::vector<double> enumerated_inclusion_probs(const CsrGraph& gt, NodeId node,
                                                      std::uint32_t fanout) {
  const auto row = gt.row(node);
  const std::size_t deg = row.size();
  const std::size_t k = std::min<std::size_t>(fanout, deg);
  std::vector<double> probs(gt.num_nodes(), 0.0);
  if (k == 0) return probs;

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::uint64_t num_subsets = 0;
  std::vector<std::uint64_t> member_count(gt.num_nodes(), 0);
  while (true) {
    ++num_subsets;
    for (const std::size_t i : pick) ++member_count[row[i]];
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == deg - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  for (NodeId u = 0; u < gt.num_nodes(); ++u)
    probs[u] = static_cast<double>(member_count[u]) / static_cast<double>(num_subsets);
  return probs;
}

inline double linf_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Replays every single access through resolve(), cycling the requesting
// device per row exactly as simulate_trace documents.
inline TrafficReport per_access_replay(const AccessCounter& counter,
                                       const TierLayout& layout) {
  TrafficReport report;
  const std::uint64_t row_bytes = layout.bytes_per_row();
  for (std::uint64_t row = 0; row < layout.num_rows; ++row) {
    for (std::uint64_t r = 0; r < counter.counts[row]; ++r) {
      const auto requesting = static_cast<std::uint32_t>(r % layout.num_devices);
      const Location loc = resolve(layout, row, requesting);
      if (loc.tier == Tier::LocalHot ||
          (loc.tier == Tier::InterleavedDevice && loc.device == requesting)) {
        ++report.local_accesses;
        report.local_bytes += row_bytes;
      } else if (loc.tier == Tier::InterleavedDevice) {
        ++report.peer_accesses;
        report.peer_bytes += row_bytes;
      } else {
        ++report.host_accesses;
        report.host_bytes += row_bytes;
      }
    }
  }
  return report;
}

}  // namespace tiergraph::testing
