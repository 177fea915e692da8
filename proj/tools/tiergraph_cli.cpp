// Pipeline driver: ingest -> score -> reorder -> trace -> simulate that ties
// the library modules together behind subcommands. Progress goes to stderr;
// files are the only machine-readable output. Every run is reproducible from
// its config plus seeds, and --manifest records those along with input
// digests.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tiergraph/csr_graph.hpp"
#include "tiergraph/io.hpp"
#include "tiergraph/parallel.hpp"
#include "tiergraph/reorder.hpp"
#include "tiergraph/rng.hpp"
#include "tiergraph/sampling.hpp"
#include "tiergraph/scoring.hpp"
#include "tiergraph/tiering.hpp"
#include "tiergraph/types.hpp"

namespace tg = tiergraph;

namespace {

// Run record written by --manifest: command, resolved options, input digests.
class Manifest {
 public:
  void set_command(const std::string& name) { command_ = name; }

  template <typename T>
  void record(const std::string& key, const T& value) {
    std::ostringstream s;
    s << std::setprecision(17) << value;
    entries_.emplace_back(key, s.str());
  }

  void record_input(const std::string& path) { inputs_.push_back(path); }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw tg::IoError("cannot open for writing: " + path);
    out << "command=" << command_ << '\n';
    for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
    for (const std::string& input : inputs_) {
      std::ostringstream hex;
      hex << std::hex << std::setw(16) << std::setfill('0') << tg::fnv1a64_file(input);
      out << "input_digest." << input << "=fnv1a64:" << hex.str() << '\n';
    }
    out.flush();
    if (!out) throw tg::IoError("write failed: " + path);
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> inputs_;
};

std::string join_u32(const std::vector<std::uint32_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

struct GenOpts {
  std::uint64_t nodes = 0;
  std::uint64_t edges_per_node = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string labels_out;
  double label_fraction = 0.01;
  std::uint64_t label_seed = 1;
  std::string features_out;
  std::uint64_t dim = 128;
};

void run_gen(const GenOpts& o, Manifest& manifest) {
  manifest.set_command("gen");
  manifest.record("nodes", o.nodes);
  manifest.record("edges_per_node", o.edges_per_node);
  manifest.record("seed", o.seed);
  manifest.record("out", o.out);

  const tg::CsrGraph g = tg::generate_power_law(o.nodes, o.edges_per_node, o.seed);
  tg::save_csr(g, o.out);
  std::cerr << "gen: " << g.num_nodes() << " nodes, " << g.num_edges() << " edges -> "
            << o.out << '\n';

  if (!o.labels_out.empty()) {
    manifest.record("labels", o.labels_out);
    manifest.record("label_fraction", o.label_fraction);
    manifest.record("label_seed", o.label_seed);
    if (!(o.label_fraction > 0.0 && o.label_fraction <= 1.0))
      throw tg::DomainError("label fraction must lie in (0,1]");
    const auto want = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::llround(o.label_fraction *
                                                   static_cast<double>(o.nodes))));
    const auto tid = tg::draw_random_train_ids(o.nodes, want, o.label_seed);
    tg::write_id_list_text(tid.ids, o.labels_out);
    std::cerr << "gen: " << tid.ids.size() << " labeled nodes -> " << o.labels_out << '\n';
  }
  if (!o.features_out.empty()) {
    manifest.record("features", o.features_out);
    manifest.record("dim", o.dim);
    tg::save_features(tg::make_test_features(o.nodes, o.dim), o.features_out);
    std::cerr << "gen: " << o.nodes << "x" << o.dim << " f32 features -> "
              << o.features_out << '\n';
  }
}

struct IngestOpts {
  std::string edges;
  std::string out;
  std::uint64_t num_nodes = 0;  // 0 = infer
  bool compact = false;
};

void run_ingest(const IngestOpts& o, Manifest& manifest) {
  manifest.set_command("ingest");
  manifest.record("edges", o.edges);
  manifest.record("out", o.out);
  manifest.record("compact", o.compact ? 1 : 0);
  manifest.record_input(o.edges);

  std::optional<tg::NodeId> override_n;
  if (o.num_nodes > 0) {
    override_n = o.num_nodes;
    manifest.record("num_nodes", o.num_nodes);
  }
  tg::EdgeList edges = tg::parse_edge_list_text(o.edges, override_n);

  if (o.compact) {
    // remap sparse external ids onto 0..K-1 and report the mapping
    std::vector<tg::NodeId> ids;
    ids.reserve(edges.pairs.size() * 2);
    for (const auto& [s, d] : edges.pairs) {
      ids.push_back(s);
      ids.push_back(d);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const std::string remap_path = o.out + ".remap";
    std::ofstream remap(remap_path, std::ios::trunc);
    if (!remap) throw tg::IoError("cannot open for writing: " + remap_path);
    for (tg::NodeId new_id = 0; new_id < ids.size(); ++new_id)
      remap << ids[new_id] << ' ' << new_id << '\n';
    remap.flush();
    if (!remap) throw tg::IoError("write failed: " + remap_path);

    const auto rank = [&](tg::NodeId old_id) {
      return static_cast<tg::NodeId>(
          std::lower_bound(ids.begin(), ids.end(), old_id) - ids.begin());
    };
    for (auto& [s, d] : edges.pairs) {
      s = rank(s);
      d = rank(d);
    }
    edges.num_nodes = ids.size();
    std::cerr << "ingest: compacted " << ids.size() << " distinct ids, remap -> "
              << remap_path << '\n';
  }

  const tg::CsrGraph g = tg::from_edge_list(edges);
  tg::save_csr(g, o.out);

  auto deg = tg::out_degrees(g);
  std::sort(deg.begin(), deg.end());
  const auto pct = [&](double p) -> tg::EdgeIdx {
    if (deg.empty()) return 0;
    return deg[static_cast<std::size_t>(p * static_cast<double>(deg.size() - 1))];
  };
  std::cerr << "ingest: N=" << g.num_nodes() << " E=" << g.num_edges()
            << " out-degree p50=" << pct(0.5) << " p90=" << pct(0.9)
            << " p99=" << pct(0.99) << " max=" << (deg.empty() ? 0 : deg.back())
            << " -> " << o.out << '\n';
}

struct ScoreOpts {
  std::string graph;
  std::string function;
  std::string out;
  std::string labels;
  std::string csv;
  tg::PagerankConfig cfg;
};

void run_score(const ScoreOpts& o, Manifest& manifest) {
  manifest.set_command("score");
  manifest.record("graph", o.graph);
  manifest.record("function", o.function);
  manifest.record("out", o.out);
  manifest.record("iterations", o.cfg.iterations);
  manifest.record("damp", o.cfg.damp);
  manifest.record_input(o.graph);

  const tg::CsrGraph g = tg::load_csr(o.graph);
  tg::ScoreVector scores;
  if (o.function == "degree") {
    scores = tg::degree_score(g);
  } else if (o.function == "rpr") {
    scores = tg::reverse_pagerank(g, o.cfg);
  } else if (o.function == "wrpr") {
    if (o.labels.empty())
      throw tg::DomainError("wrpr needs --labels (degree and rpr do not)");
    manifest.record("labels", o.labels);
    manifest.record_input(o.labels);
    const auto tid =
        tg::TrainIdSet::from_ids(tg::parse_id_list_text(o.labels), g.num_nodes());
    scores = tg::weighted_reverse_pagerank(g, o.cfg, tid);
  } else {
    throw tg::DomainError("unknown score function \"" + o.function +
                          "\" (expected degree|rpr|wrpr)");
  }

  tg::save_scores(scores, o.out);
  if (!o.csv.empty()) {
    manifest.record("csv", o.csv);
    tg::write_scores_csv(scores, o.csv);
  }

  const auto order = tg::score_ordering(scores);
  std::cerr << "score: top nodes:";
  for (std::size_t i = 0; i < std::min<std::size_t>(10, order.size()); ++i)
    std::cerr << ' ' << order[i];
  std::cerr << " -> " << o.out << '\n';
}

struct ReorderOpts {
  std::string graph;
  std::string scores;
  std::string out_graph;
  std::string out_perm;
  std::string features;
  std::string out_features;
};

void run_reorder(const ReorderOpts& o, Manifest& manifest) {
  manifest.set_command("reorder");
  manifest.record("graph", o.graph);
  manifest.record("scores", o.scores);
  manifest.record("out_graph", o.out_graph);
  manifest.record("out_perm", o.out_perm);
  manifest.record_input(o.graph);
  manifest.record_input(o.scores);

  const tg::CsrGraph g = tg::load_csr(o.graph);
  const tg::ScoreVector scores = tg::load_scores(o.scores);
  if (scores.size() != g.num_nodes())
    throw tg::DomainError("score file covers " + std::to_string(scores.size()) +
                          " nodes but the graph has " + std::to_string(g.num_nodes()));

  const auto t0 = std::chrono::steady_clock::now();
  const tg::NodePermutation perm = tg::permutation_from_scores(scores);
  const tg::CsrGraph reordered = tg::reorder_graph(g, perm);
  tg::FeatureMatrix reordered_features;
  if (!o.features.empty()) {
    manifest.record("features", o.features);
    manifest.record("out_features", o.out_features);
    manifest.record_input(o.features);
    if (o.out_features.empty())
      throw tg::DomainError("--features needs --out-features");
    const tg::FeatureMatrix f = tg::load_features(o.features);
    reordered_features = tg::reorder_features(f, perm);
  }
  const auto elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - t0);

  tg::save_csr(reordered, o.out_graph);
  tg::save_u64_vector(perm.new_id_of, "PERM", o.out_perm);
  if (!o.features.empty()) tg::save_features(reordered_features, o.out_features);

  std::cerr << "reorder: " << g.num_nodes() << " nodes, " << g.num_edges()
            << " edges in " << std::fixed << std::setprecision(3) << elapsed.count()
            << " s with " << tg::worker_count() << " workers -> " << o.out_graph << '\n';
}

struct TraceOpts {
  std::string graph;
  std::string labels;
  std::vector<std::uint32_t> fanouts;
  std::string out;
  tg::TraceConfig cfg;
  bool no_dedup = false;
};

void run_trace(const TraceOpts& o, Manifest& manifest) {
  manifest.set_command("trace");
  manifest.record("graph", o.graph);
  manifest.record("labels", o.labels);
  manifest.record("fanouts", join_u32(o.fanouts));
  manifest.record("batch_size", o.cfg.batch_size);
  manifest.record("epochs", o.cfg.epochs);
  manifest.record("seed", o.cfg.rng_seed);
  manifest.record("dedup", o.no_dedup ? 0 : 1);
  manifest.record("out", o.out);
  manifest.record_input(o.graph);
  manifest.record_input(o.labels);

  const tg::CsrGraph g = tg::load_csr(o.graph);
  const auto tid =
      tg::TrainIdSet::from_ids(tg::parse_id_list_text(o.labels), g.num_nodes());
  tg::TraceConfig cfg = o.cfg;
  cfg.dedup_per_batch = !o.no_dedup;

  const tg::AccessCounter counter =
      tg::run_training_trace(g, tid, tg::FanoutSpec{o.fanouts}, cfg);
  tg::save_u64_vector(counter.counts, "ACNT", o.out);

  const auto top = *std::max_element(counter.counts.begin(), counter.counts.end());
  std::cerr << "trace: " << counter.total << " accesses over " << cfg.epochs
            << " epoch(s); top node share "
            << static_cast<double>(top) / static_cast<double>(counter.total) << " -> "
            << o.out << '\n';
}

struct SimulateOpts {
  std::string counter;
  std::string scores;
  std::string order_file;
  std::string structure_of;
  std::string out;
  std::string curve;
  std::vector<double> fractions{0.0, 0.01, 0.05, 0.10, 0.25};
  double replicated_fraction = 0.0;
  std::uint32_t devices = 1;
  std::uint64_t dim = 128;
  std::uint32_t elem_bytes = 4;
  std::uint64_t device_budget_bytes = 0;
  tg::LinkCostModel cost;
};

std::vector<tg::NodeId> ordering_for(const SimulateOpts& o, std::size_t num_nodes,
                                     Manifest& manifest) {
  if (o.scores.empty() == o.order_file.empty())
    throw tg::DomainError("need exactly one ordering source: --scores or --order-file");
  if (!o.scores.empty()) {
    manifest.record("scores", o.scores);
    manifest.record_input(o.scores);
    const auto scores = tg::load_scores(o.scores);
    if (scores.size() != num_nodes)
      throw tg::DomainError("score file covers " + std::to_string(scores.size()) +
                            " nodes but the counter has " + std::to_string(num_nodes));
    return tg::score_ordering(scores);
  }
  manifest.record("order_file", o.order_file);
  manifest.record_input(o.order_file);
  return tg::parse_id_list_text(o.order_file);
}

void run_simulate(const SimulateOpts& o, Manifest& manifest) {
  manifest.set_command("simulate");
  manifest.record("counter", o.counter);
  manifest.record("out", o.out);
  manifest.record("replicated_fraction", o.replicated_fraction);
  manifest.record("devices", o.devices);
  manifest.record("dim", o.dim);
  manifest.record("elem_bytes", o.elem_bytes);
  manifest.record("device_budget_bytes", o.device_budget_bytes);
  manifest.record("local_gbps", o.cost.local_gbps);
  manifest.record("peer_gbps", o.cost.peer_gbps);
  manifest.record("host_gbps", o.cost.host_gbps);
  manifest.record_input(o.counter);
  {
    std::ostringstream fr;
    fr << std::setprecision(17);
    for (std::size_t i = 0; i < o.fractions.size(); ++i)
      fr << (i ? "," : "") << o.fractions[i];
    manifest.record("fractions", fr.str());
  }

  tg::validate_cost_model(o.cost);
  const auto counter = tg::make_access_counter(tg::load_u64_vector("ACNT", o.counter));
  const auto ordering = ordering_for(o, counter.counts.size(), manifest);

  std::uint64_t dim = o.dim;
  std::uint32_t elem_bytes = o.elem_bytes;
  if (!o.structure_of.empty()) {
    // tier the adjacency itself: one pseudo-row per node, sized like its
    // average neighbor list, 8-byte ids
    manifest.record("structure_of", o.structure_of);
    manifest.record_input(o.structure_of);
    const tg::CsrGraph g = tg::load_csr(o.structure_of);
    if (g.num_nodes() != counter.counts.size())
      throw tg::DomainError("structure graph has " + std::to_string(g.num_nodes()) +
                            " nodes but the counter covers " +
                            std::to_string(counter.counts.size()));
    dim = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::llround(
               static_cast<double>(g.num_edges()) /
               static_cast<double>(std::max<tg::NodeId>(g.num_nodes(), 1)))));
    elem_bytes = sizeof(tg::NodeId);
    std::cerr << "simulate: structure rows sized as " << dim << " x " << elem_bytes
              << " B (average neighbor list)\n";
  }

  const auto rows = tg::hot_fraction_sweep(counter, ordering, o.fractions,
                                           o.replicated_fraction, o.devices, dim,
                                           elem_bytes, o.device_budget_bytes);
  tg::write_report_csv(rows, o.cost, o.out);
  std::cerr << "simulate: " << rows.size() << " sweep rows -> " << o.out << '\n';

  if (!o.curve.empty()) {
    manifest.record("curve", o.curve);
    const auto curve = tg::cumulative_access_curve(counter, ordering);
    tg::write_curve_csv(ordering, counter.counts, curve, o.curve);
    std::cerr << "simulate: access curve -> " << o.curve << '\n';
  }
}

struct CompareOpts {
  std::string counter;
  std::string out_dir;
  std::vector<std::string> score_files;
};

void run_compare(const CompareOpts& o, Manifest& manifest) {
  manifest.set_command("compare");
  manifest.record("counter", o.counter);
  manifest.record("out_dir", o.out_dir);
  manifest.record_input(o.counter);

  const auto counter = tg::make_access_counter(tg::load_u64_vector("ACNT", o.counter));
  for (const std::string& path : o.score_files) {
    manifest.record("score_file", path);
    manifest.record_input(path);
    const auto scores = tg::load_scores(path);
    if (scores.size() != counter.counts.size())
      throw tg::DomainError("score file " + path + " covers " +
                            std::to_string(scores.size()) + " nodes but the counter has " +
                            std::to_string(counter.counts.size()));
    const auto ordering = tg::score_ordering(scores);
    const auto curve = tg::cumulative_access_curve(counter, ordering);

    std::string stem = path;
    if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
      stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
      stem = stem.substr(0, dot);
    const std::string out = o.out_dir + "/" + stem + "_curve.csv";
    tg::write_curve_csv(ordering, counter.counts, curve, out);

    const auto share_at = [&](double frac) {
      const auto k = static_cast<std::size_t>(frac * static_cast<double>(curve.size()));
      return k == 0 ? 0.0 : curve[k - 1];
    };
    std::cerr << "compare: " << path << " top-1% share " << share_at(0.01)
              << ", top-10% " << share_at(0.10) << ", top-25% " << share_at(0.25)
              << " -> " << out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph locality toolkit: score, reorder, trace and tier"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value config file; flags override it");

  int threads = 0;
  app.add_option("--threads", threads, "worker count (0 = TIERGRAPH_THREADS or all cores)");
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "write a reproduction manifest here");

  GenOpts gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic power-law graph");
  gen_cmd->add_option("--nodes", gen.nodes)->required();
  gen_cmd->add_option("--edges-per-node", gen.edges_per_node)->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out)->required();
  gen_cmd->add_option("--labels", gen.labels_out, "also draw a labeled node set");
  gen_cmd->add_option("--label-fraction", gen.label_fraction);
  gen_cmd->add_option("--label-seed", gen.label_seed);
  gen_cmd->add_option("--features", gen.features_out, "also write an f32 feature file");
  gen_cmd->add_option("--dim", gen.dim);

  IngestOpts ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "edge-list text to binary CSR");
  ingest_cmd->add_option("--edges", ingest.edges)->required();
  ingest_cmd->add_option("--out", ingest.out)->required();
  auto* nn_opt = ingest_cmd->add_option("--num-nodes", ingest.num_nodes,
                                        "override the max-id+1 inference");
  ingest_cmd->add_flag("--compact", ingest.compact,
                       "remap sparse ids densely; writes <out>.remap")
      ->excludes(nn_opt);

  ScoreOpts score;
  auto* score_cmd = app.add_subcommand("score", "compute per-node importance scores");
  score_cmd->add_option("--graph", score.graph)->required();
  score_cmd->add_option("--function", score.function, "degree|rpr|wrpr")->required();
  score_cmd->add_option("--out", score.out)->required();
  score_cmd->add_option("--labels", score.labels, "labeled ids (required for wrpr)");
  score_cmd->add_option("--iterations", score.cfg.iterations);
  score_cmd->add_option("--damp", score.cfg.damp);
  score_cmd->add_option("--csv", score.csv, "also export node_id,score rows");

  ReorderOpts reorder;
  auto* reorder_cmd =
      app.add_subcommand("reorder", "relabel graph (and features) by descending score");
  reorder_cmd->add_option("--graph", reorder.graph)->required();
  reorder_cmd->add_option("--scores", reorder.scores)->required();
  reorder_cmd->add_option("--out-graph", reorder.out_graph)->required();
  reorder_cmd->add_option("--out-perm", reorder.out_perm)->required();
  reorder_cmd->add_option("--features", reorder.features);
  reorder_cmd->add_option("--out-features", reorder.out_features);

  TraceOpts trace;
  auto* trace_cmd =
      app.add_subcommand("trace", "neighbor-sampling access counts from labeled seeds");
  trace_cmd->add_option("--graph", trace.graph)->required();
  trace_cmd->add_option("--labels", trace.labels)->required();
  trace_cmd->add_option("--fanouts", trace.fanouts, "per-layer sample counts")
      ->required()
      ->delimiter(',');
  trace_cmd->add_option("--out", trace.out)->required();
  trace_cmd->add_option("--batch-size", trace.cfg.batch_size);
  trace_cmd->add_option("--epochs", trace.cfg.epochs);
  trace_cmd->add_option("--seed", trace.cfg.rng_seed);
  trace_cmd->add_flag("--no-dedup", trace.no_dedup,
                      "count every raw access instead of unique minibatch members");

  SimulateOpts simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "replay a counter against tier layouts");
  simulate_cmd->add_option("--counter", simulate.counter)->required();
  simulate_cmd->add_option("--scores", simulate.scores, "ordering from a score file");
  simulate_cmd->add_option("--order-file", simulate.order_file,
                           "ordering from a text id list");
  simulate_cmd->add_option("--structure-of", simulate.structure_of,
                           "size rows like this graph's average neighbor list "
                           "instead of --dim/--elem-bytes");
  simulate_cmd->add_option("--out", simulate.out)->required();
  simulate_cmd->add_option("--curve", simulate.curve, "also write the access curve");
  simulate_cmd->add_option("--fractions", simulate.fractions)->delimiter(',');
  simulate_cmd->add_option("--replicated-fraction", simulate.replicated_fraction);
  simulate_cmd->add_option("--devices", simulate.devices);
  simulate_cmd->add_option("--dim", simulate.dim);
  simulate_cmd->add_option("--elem-bytes", simulate.elem_bytes);
  simulate_cmd->add_option("--device-budget-bytes", simulate.device_budget_bytes);
  simulate_cmd->add_option("--local-gbps", simulate.cost.local_gbps);
  simulate_cmd->add_option("--peer-gbps", simulate.cost.peer_gbps);
  simulate_cmd->add_option("--host-gbps", simulate.cost.host_gbps);

  CompareOpts compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "one access curve per score function");
  compare_cmd->add_option("--counter", compare.counter)->required();
  compare_cmd->add_option("--out-dir", compare.out_dir)->required();
  compare_cmd->add_option("scores", compare.score_files, "score files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) {
      std::cerr << "error: usage: " << e.what() << '\n';
      return 1;
    }
    return app.exit(e);  // --help and friends
  }

  if (threads > 0) tg::set_worker_count(threads);

  Manifest manifest;
  try {
    if (gen_cmd->parsed()) run_gen(gen, manifest);
    if (ingest_cmd->parsed()) run_ingest(ingest, manifest);
    if (score_cmd->parsed()) run_score(score, manifest);
    if (reorder_cmd->parsed()) run_reorder(reorder, manifest);
    if (trace_cmd->parsed()) run_trace(trace, manifest);
    if (simulate_cmd->parsed()) run_simulate(simulate, manifest);
    if (compare_cmd->parsed()) run_compare(compare, manifest);

    if (!manifest_path.empty()) {
      manifest.record("threads", tg::worker_count());
      manifest.write(manifest_path);
    }
  } catch (const tg::DomainError& e) {
    std::cerr << "error: domain: " << e.what() << '\n';
    return 2;
  } catch (const tg::FormatError& e) {
    std::cerr << "error: format: " << e.what() << '\n';
    return 3;
  } catch (const tg::IoError& e) {
    std::cerr << "error: io: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 5;
  }
  return 0;
}
