#include "tiergraph/sampling.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

#include "tiergraph/parallel.hpp"

namespace tiergraph {

namespace {
// domain separation between the per-epoch shuffle and the draw streams
constexpr std::uint64_t kShuffleTag = 0x5348ull;
constexpr std::uint64_t kSampleTag = 0x534Dull;
}  // namespace

void validate_fanouts(const FanoutSpec& spec) {
  if (spec.fanouts.empty()) throw DomainError("fanouts must be non-empty");
  if (spec.fanouts.size() > 5)
    throw DomainError("fanout depth " + std::to_string(spec.fanouts.size()) +
                      " exceeds the supported maximum of 5");
  for (const std::uint32_t f : spec.fanouts)
    if (f < 1) throw DomainError("every fanout must be >= 1");
}

AccessCounter make_access_counter(std::vector<std::uint64_t> counts) {
  AccessCounter c;
  c.counts = std::move(counts);
  c.total = 0;
  for (const std::uint64_t v : c.counts) c.total += v;
  return c;
}

RngStream BatchRng::stream(std::uint32_t layer, NodeId node) const {
  return RngStream(derive_stream_key(rng_seed, {kSampleTag, epoch, batch_index, layer, node}));
}

std::vector<NodeId> sample_in_neighbors(const CsrGraph& gt, NodeId node,
                                        std::uint32_t fanout, RngStream& rng) {
  if (node >= gt.num_nodes())
    throw DomainError("node " + std::to_string(node) + " out of range");
  const auto neighbors = gt.row(node);
  std::vector<NodeId> out;
  if (neighbors.size() <= fanout) {
    out.assign(neighbors.begin(), neighbors.end());
    return out;
  }
  std::vector<std::uint64_t> picks;
  sample_index_subset(rng, neighbors.size(), fanout, picks);
  out.reserve(fanout);
  for (const std::uint64_t p : picks) out.push_back(neighbors[p]);
  return out;
}

std::vector<NodeId> build_minibatch(const CsrGraph& gt, std::span<const NodeId> seeds,
                                    const FanoutSpec& fanouts, const BatchRng& rng,
                                    std::vector<NodeId>* raw_draws) {
  validate_fanouts(fanouts);
  if (seeds.empty()) throw DomainError("build_minibatch: seeds must be non-empty");
  for (const NodeId s : seeds)
    if (s >= gt.num_nodes()) throw DomainError("seed " + std::to_string(s) + " out of range");

  std::vector<NodeId> frontier(seeds.begin(), seeds.end());
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());

  std::vector<NodeId> members = frontier;
  if (raw_draws) raw_draws->insert(raw_draws->end(), seeds.begin(), seeds.end());

  std::vector<NodeId> next, sampled;
  for (std::uint32_t layer = 0; layer < fanouts.fanouts.size(); ++layer) {
    next.clear();
    for (const NodeId v : frontier) {
      auto stream = rng.stream(layer, v);
      sampled = sample_in_neighbors(gt, v, fanouts.fanouts[layer], stream);
      next.insert(next.end(), sampled.begin(), sampled.end());
    }
    if (raw_draws) raw_draws->insert(raw_draws->end(), next.begin(), next.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = next;
    members.insert(members.end(), frontier.begin(), frontier.end());
    if (frontier.empty()) break;
  }

  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

AccessCounter run_training_trace(const CsrGraph& g, const TrainIdSet& tid,
                                 const FanoutSpec& fanouts, const TraceConfig& cfg) {
  validate_fanouts(fanouts);
  if (tid.ids.empty()) throw DomainError("run_training_trace: train id set is empty");
  if (cfg.batch_size < 1) throw DomainError("batch_size must be >= 1");
  if (cfg.epochs < 1) throw DomainError("epochs must be >= 1");
  const NodeId n = g.num_nodes();
  for (const NodeId id : tid.ids)
    if (id >= n) throw DomainError("train id " + std::to_string(id) + " out of range");

  const CsrGraph gt = transpose(g);
  const int workers = worker_count();
  std::vector<std::vector<std::uint64_t>> partial(workers);

  for (std::uint64_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::vector<NodeId> order = tid.ids;
    RngStream shuffle_rng(derive_stream_key(cfg.rng_seed, {kShuffleTag, epoch}));
    shuffle_in_place(shuffle_rng, order);

    const std::uint64_t num_batches = (order.size() + cfg.batch_size - 1) / cfg.batch_size;
#pragma omp parallel num_threads(workers)
    {
      auto& local = partial[omp_get_thread_num()];
      if (local.empty()) local.assign(n, 0);
      std::vector<NodeId> raw;
#pragma omp for schedule(dynamic)
      for (std::int64_t b = 0; b < static_cast<std::int64_t>(num_batches); ++b) {
        const std::uint64_t begin = static_cast<std::uint64_t>(b) * cfg.batch_size;
        const std::uint64_t end = std::min<std::uint64_t>(begin + cfg.batch_size, order.size());
        const std::span<const NodeId> seeds(order.data() + begin, end - begin);
        const BatchRng rng{cfg.rng_seed, epoch, static_cast<std::uint64_t>(b)};
        if (cfg.dedup_per_batch) {
          for (const NodeId id : build_minibatch(gt, seeds, fanouts, rng)) ++local[id];
        } else {
          raw.clear();
          build_minibatch(gt, seeds, fanouts, rng, &raw);
          for (const NodeId id : raw) ++local[id];
        }
      }
    }
  }

  std::vector<std::uint64_t> counts(n, 0);
  for (const auto& local : partial) {
    if (local.empty()) continue;
    for (NodeId u = 0; u < n; ++u) counts[u] += local[u];
  }
  return make_access_counter(std::move(counts));
}

std::vector<double> cumulative_access_curve(const AccessCounter& counter,
                                            std::span<const NodeId> ordering) {
  const NodeId n = counter.counts.size();
  if (counter.total == 0)
    throw DomainError("cumulative_access_curve: counter total is zero");
  if (ordering.size() != n)
    throw DomainError("ordering length " + std::to_string(ordering.size()) +
                      " != num_nodes " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (const NodeId u : ordering) {
    if (u >= n || seen[u])
      throw DomainError("ordering is not a permutation of node ids");
    seen[u] = true;
  }

  std::vector<double> out(n);
  std::uint64_t prefix = 0;
  const auto total = static_cast<double>(counter.total);
  for (NodeId k = 0; k < n; ++k) {
    prefix += counter.counts[ordering[k]];
    out[k] = static_cast<double>(prefix) / total;
  }
  return out;
}

}  // namespace tiergraph
