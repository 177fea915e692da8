#pragma once

#include <vector>

#include "tiergraph/csr_graph.hpp"
#include "tiergraph/feature_matrix.hpp"
#include "tiergraph/scoring.hpp"
#include "tiergraph/types.hpp"

namespace tiergraph {

// Old node id -> new node id bijection.
struct NodePermutation {
  std::vector<NodeId> new_id_of;

  NodeId size() const { return new_id_of.size(); }
  NodeId operator[](NodeId old_id) const { return new_id_of[old_id]; }
};

// Throws DomainError unless perm is a bijection on 0..N-1.
void validate_permutation(const NodePermutation& perm);

// new_id_of[u] = rank of u by descending score, ties broken by ascending old
// id; the highest-scored node maps to new id 0.
NodePermutation permutation_from_scores(const ScoreVector& scores);

NodePermutation invert(const NodePermutation& perm);

// Relabel and relocate: new row perm[u] holds, position by position in the old
// order, perm[v] for each old target v of u. Rows are NOT re-sorted. Runs the
// scatter / prefix-sum / remapped block-copy phases in parallel; output is
// bit-identical to sequential_reorder_oracle for any worker count.
CsrGraph reorder_graph(const CsrGraph& g, const NodePermutation& perm);

// Single-threaded reference of the same contract, kept as an equivalence
// oracle for the parallel path.
CsrGraph sequential_reorder_oracle(const CsrGraph& g, const NodePermutation& perm);

// New row perm[u] = old row u, bytes unchanged.
FeatureMatrix reorder_features(const FeatureMatrix& f, const NodePermutation& perm);

}  // namespace tiergraph
