#include "tiergraph/io.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "bulk array I/O assumes a little-endian host");

namespace tiergraph {

namespace {

constexpr std::uint32_t kFormatVersion = 1;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  return in;
}

void write_bytes(std::ofstream& out, const void* p, std::size_t n) {
  out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void write_u32(std::ofstream& out, std::uint32_t v) { write_bytes(out, &v, 4); }
void write_u64(std::ofstream& out, std::uint64_t v) { write_bytes(out, &v, 8); }

void read_exact(std::ifstream& in, void* p, std::size_t n, const std::string& path,
                const char* what) {
  in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n)
    throw FormatError(path + ": truncated while reading " + what + " (wanted " +
                      std::to_string(n) + " bytes, got " + std::to_string(in.gcount()) + ")");
}

std::uint32_t read_u32(std::ifstream& in, const std::string& path, const char* what) {
  std::uint32_t v;
  read_exact(in, &v, 4, path, what);
  return v;
}

std::uint64_t read_u64(std::ifstream& in, const std::string& path, const char* what) {
  std::uint64_t v;
  read_exact(in, &v, 8, path, what);
  return v;
}

void write_header(std::ofstream& out, const char magic[4], std::uint64_t count) {
  write_bytes(out, magic, 4);
  write_u32(out, kFormatVersion);
  write_u64(out, count);
}

std::uint64_t read_header(std::ifstream& in, const char magic[4], const std::string& path) {
  char got[4];
  read_exact(in, got, 4, path, "magic");
  if (std::memcmp(got, magic, 4) != 0)
    throw FormatError(path + ": bad magic \"" + std::string(got, 4) + "\", expected \"" +
                      std::string(magic, 4) + "\"");
  const std::uint32_t version = read_u32(in, path, "version");
  if (version != kFormatVersion)
    throw FormatError(path + ": unsupported version " + std::to_string(version));
  return read_u64(in, path, "element count");
}

void check_write(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void save_csr(const CsrGraph& g, const std::string& path) {
  auto out = open_out(path);
  write_bytes(out, "CSRG", 4);
  write_u32(out, kFormatVersion);
  write_u64(out, g.num_nodes());
  write_u64(out, g.num_edges());
  write_bytes(out, g.offsets.data(), g.offsets.size() * sizeof(EdgeIdx));
  write_bytes(out, g.targets.data(), g.targets.size() * sizeof(NodeId));
  check_write(out, path);
}

CsrGraph load_csr(const std::string& path) {
  auto in = open_in(path);
  char got[4];
  read_exact(in, got, 4, path, "magic");
  if (std::memcmp(got, "CSRG", 4) != 0)
    throw FormatError(path + ": bad magic \"" + std::string(got, 4) +
                      "\", expected \"CSRG\"");
  const std::uint32_t version = read_u32(in, path, "version");
  if (version != kFormatVersion)
    throw FormatError(path + ": unsupported version " + std::to_string(version));
  const std::uint64_t n = read_u64(in, path, "num_nodes");
  const std::uint64_t e = read_u64(in, path, "num_edges");

  CsrGraph g;
  g.offsets.resize(n + 1);
  read_exact(in, g.offsets.data(), (n + 1) * sizeof(EdgeIdx), path, "offsets");
  g.targets.resize(e);
  if (e > 0) read_exact(in, g.targets.data(), e * sizeof(NodeId), path, "targets");
  validate_csr(g);
  return g;
}

void save_scores(const std::vector<double>& scores, const std::string& path) {
  auto out = open_out(path);
  write_header(out, "SCOR", scores.size());
  write_bytes(out, scores.data(), scores.size() * sizeof(double));
  check_write(out, path);
}

std::vector<double> load_scores(const std::string& path) {
  auto in = open_in(path);
  const std::uint64_t n = read_header(in, "SCOR", path);
  std::vector<double> scores(n);
  if (n > 0) read_exact(in, scores.data(), n * sizeof(double), path, "scores");
  for (std::uint64_t i = 0; i < n; ++i)
    if (!std::isfinite(scores[i]) || scores[i] < 0.0)
      throw FormatError(path + ": score " + std::to_string(i) + " is not finite and >= 0");
  return scores;
}

void save_u64_vector(const std::vector<std::uint64_t>& values, const char magic[4],
                     const std::string& path) {
  auto out = open_out(path);
  write_header(out, magic, values.size());
  write_bytes(out, values.data(), values.size() * sizeof(std::uint64_t));
  check_write(out, path);
}

std::vector<std::uint64_t> load_u64_vector(const char magic[4], const std::string& path) {
  auto in = open_in(path);
  const std::uint64_t n = read_header(in, magic, path);
  std::vector<std::uint64_t> values(n);
  if (n > 0) read_exact(in, values.data(), n * sizeof(std::uint64_t), path, "values");
  return values;
}

void save_features(const FeatureMatrix& f, const std::string& path) {
  validate_features(f);
  auto out = open_out(path);
  write_bytes(out, "FEAT", 4);
  write_u32(out, kFormatVersion);
  write_u64(out, f.num_rows);
  write_u64(out, f.dim);
  write_u32(out, f.elem_bytes);
  write_bytes(out, f.data.data(), f.data.size());
  check_write(out, path);
}

FeatureMatrix load_features(const std::string& path) {
  auto in = open_in(path);
  char got[4];
  read_exact(in, got, 4, path, "magic");
  if (std::memcmp(got, "FEAT", 4) != 0)
    throw FormatError(path + ": bad magic \"" + std::string(got, 4) +
                      "\", expected \"FEAT\"");
  const std::uint32_t version = read_u32(in, path, "version");
  if (version != kFormatVersion)
    throw FormatError(path + ": unsupported version " + std::to_string(version));
  FeatureMatrix f;
  f.num_rows = read_u64(in, path, "num_rows");
  f.dim = read_u64(in, path, "dim");
  f.elem_bytes = read_u32(in, path, "elem_bytes");
  f.data.resize(f.num_rows * f.dim * f.elem_bytes);
  if (!f.data.empty()) read_exact(in, f.data.data(), f.data.size(), path, "feature data");
  return f;
}

EdgeList parse_edge_list_text(const std::string& path,
                              std::optional<NodeId> num_nodes_override) {
  auto in = open_in(path);
  EdgeList edges;
  NodeId max_id = 0;
  bool any_id = false;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') continue;

    std::istringstream fields(line);
    NodeId src, dst;
    // '-' would wrap through unsigned extraction instead of failing
    if (line.find('-') != std::string::npos || !(fields >> src >> dst))
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": expected \"src dst\", got \"" + line + "\"");
    std::string extra;
    if (fields >> extra)
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": trailing token \"" + extra + "\"");
    edges.pairs.emplace_back(src, dst);
    max_id = std::max({max_id, src, dst});
    any_id = true;
  }
  edges.num_nodes = num_nodes_override.value_or(any_id ? max_id + 1 : 0);
  return edges;
}

std::vector<NodeId> parse_id_list_text(const std::string& path) {
  auto in = open_in(path);
  std::vector<NodeId> ids;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') continue;
    std::istringstream fields(line);
    NodeId id;
    if (line.find('-') != std::string::npos || !(fields >> id))
      throw FormatError(path + ":" + std::to_string(line_no) + ": expected a node id, got \"" +
                        line + "\"");
    ids.push_back(id);
  }
  return ids;
}

void write_id_list_text(const std::vector<NodeId>& ids, const std::string& path) {
  auto out = open_out(path);
  for (const NodeId id : ids) out << id << '\n';
  check_write(out, path);
}

void write_scores_csv(const std::vector<double>& scores, const std::string& path) {
  auto out = open_out(path);
  out << "node_id,score\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < scores.size(); ++i) out << i << ',' << scores[i] << '\n';
  check_write(out, path);
}

void write_curve_csv(const std::vector<NodeId>& ordering,
                     const std::vector<std::uint64_t>& counts,
                     const std::vector<double>& curve, const std::string& path) {
  if (ordering.size() != counts.size() || ordering.size() != curve.size())
    throw DomainError("curve csv: ordering, counts and curve lengths differ");
  auto out = open_out(path);
  out << "rank,node_id,count,cumulative_fraction\n";
  out << std::setprecision(17);
  for (std::size_t rank = 0; rank < ordering.size(); ++rank)
    out << rank << ',' << ordering[rank] << ',' << counts[ordering[rank]] << ','
        << curve[rank] << '\n';
  check_write(out, path);
}

std::uint64_t fnv1a64_file(const std::string& path) {
  auto in = open_in(path);
  std::uint64_t h = 0xCBF29CE484222325ull;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001B3ull;
    }
  }
  return h;
}

}  // namespace tiergraph
