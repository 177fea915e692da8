#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiergraph/csr_graph.hpp"
#include "tiergraph/feature_matrix.hpp"
#include "tiergraph/types.hpp"

namespace tiergraph {

// Binary container formats, all little-endian:
//   CSRG v1: magic "CSRG", u32 version, u64 num_nodes, u64 num_edges,
//            (num_nodes+1) x u64 offsets, num_edges x u64 targets
//   SCOR v1: magic "SCOR", u32 version, u64 num_nodes, num_nodes x f64
//   PERM v1: magic "PERM", u32 version, u64 num_nodes, num_nodes x u64 new ids
//   ACNT v1: magic "ACNT", u32 version, u64 num_nodes, num_nodes x u64 counts
//   FEAT v1: magic "FEAT", u32 version, u64 num_rows, u64 dim, u32 elem_bytes,
//            num_rows*dim*elem_bytes raw bytes
// Loads throw FormatError naming the expected magic on a bad header and a
// truncation error when the payload is shorter than the header declares.

void save_csr(const CsrGraph& g, const std::string& path);
CsrGraph load_csr(const std::string& path);

void save_scores(const std::vector<double>& scores, const std::string& path);
std::vector<double> load_scores(const std::string& path);

void save_u64_vector(const std::vector<std::uint64_t>& values, const char magic[4],
                     const std::string& path);
std::vector<std::uint64_t> load_u64_vector(const char magic[4], const std::string& path);

void save_features(const FeatureMatrix& f, const std::string& path);
FeatureMatrix load_features(const std::string& path);

// Text edge list: one "src dst" pair per line, whitespace-separated, full-line
// '#' comments and blank lines ignored. Node count is max id + 1 unless
// overridden. Malformed lines raise FormatError citing the line number.
EdgeList parse_edge_list_text(const std::string& path,
                              std::optional<NodeId> num_nodes_override = {});

// Text id list: one decimal node id per line ('#' comments allowed).
std::vector<NodeId> parse_id_list_text(const std::string& path);
void write_id_list_text(const std::vector<NodeId>& ids, const std::string& path);

// node_id,score rows for inspection.
void write_scores_csv(const std::vector<double>& scores, const std::string& path);

// rank,node_id,count,cumulative_fraction rows; one per node in ordering order.
void write_curve_csv(const std::vector<NodeId>& ordering,
                     const std::vector<std::uint64_t>& counts,
                     const std::vector<double>& curve, const std::string& path);

// FNV-1a over the file bytes; used to record input digests in run manifests.
std::uint64_t fnv1a64_file(const std::string& path);

}  // namespace tiergraph
