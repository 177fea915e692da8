#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tiergraph/types.hpp"

namespace tiergraph {

// Directed edge list, the ingestion intermediate. Edge (src, dst) means
// src has an outgoing edge to dst.
struct EdgeList {
  NodeId num_nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> pairs;
};

// Compressed sparse row adjacency. Row u spans targets[offsets[u]..offsets[u+1])
// and lists u's out-neighbors. After ingestion rows are sorted ascending with
// duplicates removed ("canonical"); reordering relaxes the sorted property.
struct CsrGraph {
  std::vector<EdgeIdx> offsets;  // length num_nodes + 1, offsets[0] == 0
  std::vector<NodeId> targets;   // length num_edges

  NodeId num_nodes() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  EdgeIdx num_edges() const { return targets.size(); }

  std::span<const NodeId> row(NodeId u) const {
    return {targets.data() + offsets[u], targets.data() + offsets[u + 1]};
  }
  EdgeIdx out_degree(NodeId u) const { return offsets[u + 1] - offsets[u]; }

  bool operator==(const CsrGraph&) const = default;
};

// Structural validity check: offsets monotone from 0 to num_edges, targets in
// range, and (when require_sorted_rows) rows strictly ascending.
// Throws FormatError on violation.
void validate_csr(const CsrGraph& g, bool require_sorted_rows = false);

// Build a canonical CSR graph: rows sorted ascending, duplicate edges removed,
// self-loops kept. Throws DomainError naming the offending pair if an id is
// out of range.
CsrGraph from_edge_list(const EdgeList& edges);

// Edge (u,v) in g becomes (v,u). Result is canonical.
CsrGraph transpose(const CsrGraph& g);

std::vector<EdgeIdx> out_degrees(const CsrGraph& g);
std::vector<EdgeIdx> in_degrees(const CsrGraph& g);

// Preferential-attachment generator. Every node past the first
// `edges_per_new_node` attaches to that many distinct existing nodes, chosen
// proportionally to degree; edges are oriented existing -> new so the
// attachment hubs accumulate heavy-tailed out-degrees. Deterministic per seed.
// Edge count is exactly (num_nodes - edges_per_new_node) * edges_per_new_node.
CsrGraph generate_power_law(NodeId num_nodes, NodeId edges_per_new_node,
                            std::uint64_t seed);

}  // namespace tiergraph
