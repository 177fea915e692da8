#include "tiergraph/csr_graph.hpp"

#include <algorithm>
#include <string>

#include "tiergraph/rng.hpp"

namespace tiergraph {

void validate_csr(const CsrGraph& g, bool require_sorted_rows) {
  if (g.offsets.empty()) throw FormatError("csr: offsets array is empty");
  if (g.offsets.front() != 0) throw FormatError("csr: offsets[0] != 0");
  const NodeId n = g.num_nodes();
  for (NodeId u = 0; u < n; ++u) {
    if (g.offsets[u + 1] < g.offsets[u])
      throw FormatError("csr: offsets decrease at node " + std::to_string(u));
  }
  if (g.offsets.back() != g.targets.size())
    throw FormatError("csr: offsets[num_nodes]=" + std::to_string(g.offsets.back()) +
                      " but num_edges=" + std::to_string(g.targets.size()));
  for (EdgeIdx i = 0; i < g.targets.size(); ++i) {
    if (g.targets[i] >= n)
      throw FormatError("csr: target " + std::to_string(g.targets[i]) +
                        " out of range at edge " + std::to_string(i));
  }
  if (require_sorted_rows) {
    for (NodeId u = 0; u < n; ++u) {
      const auto r = g.row(u);
      for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] <= r[i - 1])
          throw FormatError("csr: row " + std::to_string(u) + " not strictly ascending");
    }
  }
}

CsrGraph from_edge_list(const EdgeList& edges) {
  const NodeId n = edges.num_nodes;
  for (const auto& [src, dst] : edges.pairs) {
    if (src >= n || dst >= n)
      throw DomainError("edge (" + std::to_string(src) + "," + std::to_string(dst) +
                        ") out of range for num_nodes=" + std::to_string(n));
  }

  std::vector<EdgeIdx> raw(n + 1, 0);
  for (const auto& [src, dst] : edges.pairs) ++raw[src + 1];
  for (NodeId u = 0; u < n; ++u) raw[u + 1] += raw[u];

  std::vector<NodeId> flat(edges.pairs.size());
  std::vector<EdgeIdx> cursor(raw.begin(), raw.end() - 1);
  for (const auto& [src, dst] : edges.pairs) flat[cursor[src]++] = dst;

  // canonicalize: sort each row, drop duplicate edges, keep self-loops
  CsrGraph g;
  g.offsets.resize(n + 1);
  g.offsets[0] = 0;
  g.targets.reserve(flat.size());
  for (NodeId u = 0; u < n; ++u) {
    std::sort(flat.begin() + raw[u], flat.begin() + raw[u + 1]);
    for (EdgeIdx i = raw[u]; i < raw[u + 1]; ++i)
      if (i == raw[u] || flat[i] != flat[i - 1]) g.targets.push_back(flat[i]);
    g.offsets[u + 1] = g.targets.size();
  }
  g.targets.shrink_to_fit();
  return g;
}

CsrGraph transpose(const CsrGraph& g) {
  const NodeId n = g.num_nodes();
  CsrGraph t;
  t.offsets.assign(n + 1, 0);
  for (const NodeId v : g.targets) ++t.offsets[v + 1];
  for (NodeId u = 0; u < n; ++u) t.offsets[u + 1] += t.offsets[u];

  t.targets.resize(g.targets.size());
  std::vector<EdgeIdx> cursor(t.offsets.begin(), t.offsets.end() - 1);
  // walking sources in ascending order leaves every transposed row sorted
  for (NodeId u = 0; u < n; ++u)
    for (const NodeId v : g.row(u)) t.targets[cursor[v]++] = u;
  return t;
}

std::vector<EdgeIdx> out_degrees(const CsrGraph& g) {
  const NodeId n = g.num_nodes();
  std::vector<EdgeIdx> deg(n);
  for (NodeId u = 0; u < n; ++u) deg[u] = g.out_degree(u);
  return deg;
}

std::vector<EdgeIdx> in_degrees(const CsrGraph& g) {
  std::vector<EdgeIdx> deg(g.num_nodes(), 0);
  for (const NodeId v : g.targets) ++deg[v];
  return deg;
}

CsrGraph generate_power_law(NodeId num_nodes, NodeId edges_per_new_node,
                            std::uint64_t seed) {
  const NodeId m = edges_per_new_node;
  if (m < 1 || num_nodes <= m)
    throw DomainError("generate_power_law: need num_nodes > edges_per_new_node >= 1, got " +
                      std::to_string(num_nodes) + ", " + std::to_string(m));

  EdgeList edges;
  edges.num_nodes = num_nodes;
  edges.pairs.reserve((num_nodes - m) * m);

  // attachment pool: one entry per edge endpoint, so a draw is
  // degree-proportional
  std::vector<NodeId> pool;
  pool.reserve(2 * (num_nodes - m) * m);
  std::vector<NodeId> attach_to(m);
  for (NodeId i = 0; i < m; ++i) attach_to[i] = i;

  RngStream rng(derive_stream_key(seed, {0x67656Eull /*gen*/}));
  std::vector<std::uint64_t> picks;
  for (NodeId source = m; source < num_nodes; ++source) {
    for (const NodeId t : attach_to) {
      edges.pairs.emplace_back(t, source);  // hub -> newcomer
      pool.push_back(t);
      pool.push_back(source);
    }
    if (source + 1 == num_nodes) break;
    // next node's targets: m distinct draws from the pool
    attach_to.clear();
    while (attach_to.size() < m) {
      sample_index_subset(rng, pool.size(), m - attach_to.size(), picks);
      for (const std::uint64_t p : picks) attach_to.push_back(pool[p]);
      std::sort(attach_to.begin(), attach_to.end());
      attach_to.erase(std::unique(attach_to.begin(), attach_to.end()), attach_to.end());
    }
  }
  return from_edge_list(edges);
}

}  // namespace tiergraph
