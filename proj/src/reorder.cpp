#include "tiergraph/reorder.hpp"

#include <cstring>
#include <string>

#include "tiergraph/parallel.hpp"

namespace tiergraph {

void validate_permutation(const NodePermutation& perm) {
  const NodeId n = perm.size();
  std::vector<bool> seen(n, false);
  for (NodeId u = 0; u < n; ++u) {
    const NodeId v = perm.new_id_of[u];
    if (v >= n)
      throw DomainError("permutation: new id " + std::to_string(v) + " out of range");
    if (seen[v])
      throw DomainError("permutation: new id " + std::to_string(v) + " assigned twice");
    seen[v] = true;
  }
}

NodePermutation permutation_from_scores(const ScoreVector& scores) {
  const auto order = score_ordering(scores);
  NodePermutation perm;
  perm.new_id_of.resize(order.size());
  for (NodeId rank = 0; rank < order.size(); ++rank) perm.new_id_of[order[rank]] = rank;
  return perm;
}

NodePermutation invert(const NodePermutation& perm) {
  validate_permutation(perm);
  NodePermutation inv;
  inv.new_id_of.resize(perm.size());
  for (NodeId u = 0; u < perm.size(); ++u) inv.new_id_of[perm.new_id_of[u]] = u;
  return inv;
}

CsrGraph reorder_graph(const CsrGraph& g, const NodePermutation& perm) {
  const auto n = static_cast<std::int64_t>(g.num_nodes());
  if (perm.size() != g.num_nodes())
    throw DomainError("permutation length " + std::to_string(perm.size()) +
                      " != num_nodes " + std::to_string(g.num_nodes()));
  validate_permutation(perm);

  const int workers = worker_count();
  CsrGraph out;
  out.offsets.assign(n + 1, 0);

  // scatter row lengths; race-free because perm values are unique
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::int64_t u = 0; u < n; ++u)
    out.offsets[perm.new_id_of[u] + 1] = g.out_degree(static_cast<NodeId>(u));

  for (std::int64_t u = 0; u < n; ++u) out.offsets[u + 1] += out.offsets[u];

  // remap values and relocate each old row into its new block
  out.targets.resize(g.num_edges());
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::int64_t u = 0; u < n; ++u) {
    const auto src = g.row(static_cast<NodeId>(u));
    NodeId* dst = out.targets.data() + out.offsets[perm.new_id_of[u]];
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = perm.new_id_of[src[i]];
  }
  return out;
}

CsrGraph sequential_reorder_oracle(const CsrGraph& g, const NodePermutation& perm) {
  const NodeId n = g.num_nodes();
  if (perm.size() != n)
    throw DomainError("permutation length " + std::to_string(perm.size()) +
                      " != num_nodes " + std::to_string(n));
  validate_permutation(perm);

  std::vector<EdgeIdx> nd_new(n + 1, 0);
  for (NodeId i = 0; i < n; ++i)
    nd_new[perm.new_id_of[i] + 1] = g.offsets[i + 1] - g.offsets[i];
  nd_new[0] = 0;
  for (NodeId i = 0; i < n; ++i) nd_new[i + 1] += nd_new[i];

  std::vector<NodeId> edg(g.targets);
  for (EdgeIdx i = 0; i < edg.size(); ++i) edg[i] = perm.new_id_of[edg[i]];

  std::vector<NodeId> edg_new(edg.size());
  for (NodeId i = 0; i < n; ++i) {
    const EdgeIdx len = g.offsets[i + 1] - g.offsets[i];
    for (EdgeIdx j = 0; j < len; ++j)
      edg_new[nd_new[perm.new_id_of[i]] + j] = edg[g.offsets[i] + j];
  }

  CsrGraph out;
  out.offsets = std::move(nd_new);
  out.targets = std::move(edg_new);
  return out;
}

FeatureMatrix reorder_features(const FeatureMatrix& f, const NodePermutation& perm) {
  validate_features(f);
  if (perm.size() != f.num_rows)
    throw DomainError("permutation length " + std::to_string(perm.size()) +
                      " != num_rows " + std::to_string(f.num_rows));
  validate_permutation(perm);

  FeatureMatrix out;
  out.num_rows = f.num_rows;
  out.dim = f.dim;
  out.elem_bytes = f.elem_bytes;
  out.data.resize(f.data.size());

  const auto n = static_cast<std::int64_t>(f.num_rows);
  const std::uint64_t rb = f.row_bytes();
  const int workers = worker_count();
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::int64_t u = 0; u < n; ++u)
    std::memcpy(out.data.data() + perm.new_id_of[u] * rb, f.data.data() + u * rb, rb);
  return out;
}

}  // namespace tiergraph
