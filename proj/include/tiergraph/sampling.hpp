#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tiergraph/csr_graph.hpp"
#include "tiergraph/rng.hpp"
#include "tiergraph/scoring.hpp"
#include "tiergraph/types.hpp"

namespace tiergraph {

// Per-layer sample counts, seed layer outward: (25, 10) samples 25 in-neighbors
// around each seed, then 10 around each of those.
struct FanoutSpec {
  std::vector<std::uint32_t> fanouts;
};

// Throws DomainError unless non-empty, every fanout >= 1, depth <= 5.
void validate_fanouts(const FanoutSpec& spec);

struct TraceConfig {
  std::uint64_t batch_size = 1000;
  std::uint64_t epochs = 1;
  std::uint64_t rng_seed = 0;
  bool dedup_per_batch = true;
};

// Per-node access counts measured from a sampling trace.
struct AccessCounter {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

AccessCounter make_access_counter(std::vector<std::uint64_t> counts);

// Names one minibatch's position within a trace. Draw streams are keyed by
// (rng_seed, epoch, batch, layer, node), so no schedule can alter them.
struct BatchRng {
  std::uint64_t rng_seed = 0;
  std::uint64_t epoch = 0;
  std::uint64_t batch_index = 0;

  RngStream stream(std::uint32_t layer, NodeId node) const;
};

// Uniform without replacement from row `node` of the transposed graph; returns
// all in-neighbors when there are at most `fanout` of them.
std::vector<NodeId> sample_in_neighbors(const CsrGraph& gt, NodeId node,
                                        std::uint32_t fanout, RngStream& rng);

// Layer-by-layer expansion from the seeds; each layer's frontier is the
// deduplicated union of the previous frontier's samples. Returns the sorted
// unique union of seeds and all frontiers. When raw_draws is given it receives
// every access (each seed once plus every individual draw); its order is
// unspecified but its multiset is deterministic.
std::vector<NodeId> build_minibatch(const CsrGraph& gt, std::span<const NodeId> seeds,
                                    const FanoutSpec& fanouts, const BatchRng& rng,
                                    std::vector<NodeId>* raw_draws = nullptr);

// Shuffle tid each epoch, split into batches, expand each batch, and count:
// one increment per unique minibatch member (dedup_per_batch) or one per raw
// access. Counters are bit-identical across runs and worker counts.
AccessCounter run_training_trace(const CsrGraph& g, const TrainIdSet& tid,
                                 const FanoutSpec& fanouts, const TraceConfig& cfg);

// out[k] = fraction of all accesses covered by the first k+1 nodes of
// `ordering`; monotone, ends at 1.0. Throws DomainError when total is zero or
// ordering is not a permutation.
std::vector<double> cumulative_access_curve(const AccessCounter& counter,
                                            std::span<const NodeId> ordering);

}  // namespace tiergraph
