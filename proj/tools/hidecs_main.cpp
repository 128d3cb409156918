// Command-line front end: dataset auditing, decomposition runs, measure
// evaluation, clique/semilattice pipeline, estimators, simulation, table
// replication and DOT export.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hidecs/analysis.hpp"
#include "hidecs/cliques.hpp"
#include "hidecs/datasets.hpp"
#include "hidecs/dot.hpp"
#include "hidecs/graph.hpp"
#include "hidecs/measures.hpp"
#include "hidecs/replicate.hpp"
#include "hidecs/search.hpp"

namespace {

using namespace hidecs;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

struct GraphSource {
  std::string dataset;  // embedded dataset name
  std::string input;    // or an interaction file
  std::string restrict_set;  // optional named set (A, B, C, D, A1..D3)

  Graph load() const {
    Graph g = [&] {
      if (!dataset.empty()) return load_dataset(dataset).graph();
      if (!input.empty())
        return symmetrize(parse_interactions(read_file(input))).first;
      throw Error("need --dataset or --input");
    }();
    if (restrict_set.empty()) return g;
    if (dataset != "indian-village")
      throw Error("--restrict applies to the indian-village dataset");
    return induced_subgraph(g, reference_partitions().set(restrict_set));
  }

  // Vertices of the restricted universe in the ORIGINAL numbering.
  std::vector<Vertex> original_ids(const Graph& unrestricted) const {
    if (!restrict_set.empty()) return reference_partitions().set(restrict_set);
    std::vector<Vertex> all(unrestricted.vertex_count());
    for (int v = 0; v < unrestricted.vertex_count(); ++v) all[v] = v;
    return all;
  }

  void add_options(CLI::App* cmd, bool dataset_only = false) {
    cmd->add_option("--dataset", dataset,
                    "embedded dataset (indian-village, community-privacy)");
    if (!dataset_only)
      cmd->add_option("--input", input, "interaction file to load instead");
    cmd->add_option("--restrict", restrict_set,
                    "restrict to a named reference set (A..D, A1..D3)");
  }
};

// Named partitions: the reference ids, a '/'-separated list of named sets
// (each cell optionally a '+' union, e.g. "A+B/C+D" or "C1/C2"), or a JSON
// partition file path. The universe is the union of the cells; measures
// evaluate on its induced subgraph, so partial covers are fine.
Partition resolve_partition(const std::string& arg, const Graph& g,
                            std::vector<std::string>* labels) {
  const auto& ref = reference_partitions();
  const auto check_range = [&g](const Partition& p) {
    if (!p.universe().empty() && p.universe().back() >= g.vertex_count())
      throw Error("partition id " + std::to_string(p.universe().back() + 1) +
                  " is outside the graph");
    return p;
  };
  if (ref.partitions.count(arg)) {
    if (labels) *labels = ref.labels.at(arg);
    return check_range(ref.get(arg));
  }
  if (std::ifstream probe(arg); probe.good()) {
    const Partition p = parse_partition_file(read_file(arg));
    if (labels) {
      labels->clear();
      for (int i = 1; i <= p.cell_count(); ++i)
        labels->push_back(std::to_string(i));
    }
    return check_range(p);
  }
  if (arg.find('/') != std::string::npos) {
    std::vector<std::vector<Vertex>> cells;
    std::vector<std::string> cell_labels;
    std::stringstream ss(arg);
    std::string cell_spec;
    while (std::getline(ss, cell_spec, '/')) {
      std::vector<Vertex> cell;
      std::stringstream us(cell_spec);
      std::string name;
      while (std::getline(us, name, '+')) {
        const auto& set = ref.set(name);
        cell.insert(cell.end(), set.begin(), set.end());
      }
      cells.push_back(std::move(cell));
      cell_labels.push_back(cell_spec);
    }
    if (labels) *labels = cell_labels;
    std::vector<Vertex> univ;
    for (const auto& cell : cells) univ.insert(univ.end(), cell.begin(), cell.end());
    return check_range(Partition(std::move(univ), std::move(cells)));
  }
  throw Error("'" + arg +
              "' is not a reference partition id, a readable partition file, "
              "or a named-cell expression");
}

int cmd_check(const GraphSource& src, bool promote) {
  const DatasetBundle bundle = load_dataset(src.dataset);
  const auto [graph, report] = symmetrize(bundle.table);
  std::ostringstream out;
  out << "dataset: " << bundle.name << "\n";
  out << "vertices: " << graph.vertex_count() << "\n";
  out << "raw directed entries: " << bundle.table.directed_entry_count() << "\n";
  out << "symmetric links: " << graph.link_count() << "\n";
  out << "one-way entries: " << report.count() << "\n";
  std::map<Vertex, int> touch;
  for (const auto& [a, b] : report.one_way) {
    ++touch[a];
    ++touch[b];
  }
  Vertex worst = -1;
  for (const auto& [v, n] : touch)
    if (worst == -1 || n > touch[worst]) worst = v;
  if (worst != -1)
    out << "most involved vertex: " << (worst + 1) << " ("
        << touch[worst] << " entries)\n";
  out << report.to_text();
  if (promote) {
    const Graph promoted = symmetrize_promoting(bundle.table);
    out << "links with promotion instead: " << promoted.link_count() << "\n";
  }
  std::cout << out.str();
  return 0;
}

int cmd_eval(const GraphSource& src, const std::string& partition_arg,
             const std::string& measure_name) {
  const Graph base = [&] {
    if (!src.dataset.empty()) return load_dataset(src.dataset).graph();
    return symmetrize(parse_interactions(read_file(src.input))).first;
  }();
  const Partition p = resolve_partition(partition_arg, base, nullptr);
  const MeasureSpec spec = MeasureSpec::from_name(measure_name);
  const MeasureValue v = evaluate(spec, base, p);
  std::cout << spec.name() << " = " << format_measure(spec.id, v.value) << "\n";
  if (v.degenerate) std::cout << "degenerate: value fixed at 0\n";
  for (const auto& [name, value] : v.intermediates)
    std::cout << "  " << name << " = " << value << "\n";
  return 0;
}

SearchConfig make_config(const std::string& measure, int latis,
                         std::uint64_t seed, std::optional<int> max_depth,
                         int min_size, const std::string& tie_policy,
                         long long tie_cap, int threads) {
  SearchConfig cfg;
  cfg.measure = MeasureSpec::from_name(measure);
  cfg.latis = latis;
  cfg.seed = seed;
  cfg.max_depth = max_depth;
  cfg.min_size = min_size;
  cfg.tie_branch_cap = tie_cap;
  cfg.threads = threads;
  if (tie_policy == "auto")
    cfg.tie_policy = TiePolicy::kAuto;
  else if (tie_policy == "first-canonical")
    cfg.tie_policy = TiePolicy::kFirstCanonical;
  else if (tie_policy == "exhaustive")
    cfg.tie_policy = TiePolicy::kExhaustive;
  else if (tie_policy == "seeded-random")
    cfg.tie_policy = TiePolicy::kSeededRandom;
  else
    throw Error("unknown tie policy '" + tie_policy + "'");
  return cfg;
}

// Map a tree over local vertex ids back to the original numbering.
nlohmann::json tree_json_renumbered(const TreeNode* node,
                                    const std::vector<Vertex>& ids) {
  nlohmann::json j;
  nlohmann::json members = nlohmann::json::array();
  for (Vertex v : node->members) members.push_back(ids[v] + 1);
  j["members"] = members;
  if (!node->is_leaf()) {
    j["value"] = node->split_value;
    j["children"] = nlohmann::json::array(
        {tree_json_renumbered(node->left.get(), ids),
         tree_json_renumbered(node->right.get(), ids)});
  }
  return j;
}

int cmd_decompose(const GraphSource& src, const std::string& algo,
                  const SearchConfig& cfg, const std::string& out_path) {
  const Graph base = [&] {
    if (!src.dataset.empty()) return load_dataset(src.dataset).graph();
    return symmetrize(parse_interactions(read_file(src.input))).first;
  }();
  std::vector<Vertex> ids = src.original_ids(base);
  std::sort(ids.begin(), ids.end());
  const Graph g = src.restrict_set.empty() ? base : induced_subgraph(base, ids);

  nlohmann::json doc;
  doc["seed"] = cfg.seed;
  doc["algo"] = algo;
  doc["measure"] = cfg.measure.name();
  if (algo == "topdown") {
    const DecompositionTree tree = decompose_topdown(g, cfg);
    doc["tree"] = tree_json_renumbered(tree.root.get(), ids);
    doc["value"] = tree.root->split_value;
  } else if (algo == "bldup") {
    const AgglomerationResult result = bldup_agglomerate(g, cfg);
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& cell : result.partition.cells()) {
      nlohmann::json arr = nlohmann::json::array();
      for (Vertex v : cell) arr.push_back(ids[v] + 1);
      sets.push_back(arr);
    }
    doc["sets"] = sets;
    doc["value"] = result.value;
    doc["merges"] = result.merges;
  } else if (algo == "stabl") {
    const StablResult result = stabl_search(g, cfg);
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& cell : result.partition.cells()) {
      nlohmann::json arr = nlohmann::json::array();
      for (Vertex v : cell) arr.push_back(ids[v] + 1);
      sets.push_back(arr);
    }
    doc["sets"] = sets;
    doc["value"] = result.value;
    doc["tie_trace"] = result.tie_trace;
    doc["evaluations"] = result.evaluations;
    if (result.cap_hit) doc["tie_branch_cap_hit"] = true;
  } else {
    throw Error("unknown algorithm '" + algo + "'");
  }
  write_output(out_path, doc.dump(2) + "\n");
  return 0;
}

int cmd_cliques(const GraphSource& src, const std::string& out_path) {
  const Graph g = src.load();
  std::ostringstream out;
  for (const auto& clique : maximal_cliques(g)) {
    for (std::size_t i = 0; i < clique.size(); ++i)
      out << (i ? ", " : "") << (clique[i] + 1);
    out << "\n";
  }
  write_output(out_path, out.str());
  return 0;
}

int cmd_recompose(const GraphSource& src, const std::string& out_path) {
  const Graph g = src.load();
  const Semilattice s = recompose_semilattice(g, maximal_cliques(g));
  write_output(out_path, serialize_semilattice(s));
  return 0;
}

int cmd_estimate(int vertices, long long links, int side, long long samples,
                 std::uint64_t seed, int workers, const std::string& mode,
                 const GraphSource& src) {
  std::ostringstream out;
  out << "# seed: " << seed << "\n";
  out << "mode: " << mode << "\n";
  if (mode == "graphs") {
    const CutSample s =
        estimate_cut_stats(vertices, links, side, samples, seed, workers);
    const long long nsq1 = static_cast<long long>(vertices) * (vertices - 1) / 2;
    const long long mn = static_cast<long long>(side) * (vertices - side);
    out << "m: " << vertices << "  links: " << links << "  split: " << side
        << "/" << (vertices - side) << "  samples: " << samples << "\n";
    out << "analytic expected cut: "
        << expected_cut_links(vertices, links, side, vertices - side) << "\n";
    out << "denominator product mn(nsq1-mn): " << mn * (nsq1 - mn) << "\n";
    out << "sample mean: " << s.mean << "\n";
    out << "sample variance: " << s.variance << "\n";
  } else if (mode == "splits") {
    const Graph g = src.load();
    const CutSample s = estimate_cut_stats_splits(g, side, samples, seed, workers);
    out << "m: " << g.vertex_count() << "  links: " << g.link_count()
        << "  split: " << side << "/" << (g.vertex_count() - side)
        << "  samples: " << samples << "\n";
    out << "analytic expected cut: "
        << expected_cut_links(g.vertex_count(), g.link_count(), side,
                              g.vertex_count() - side)
        << "\n";
    out << "sample mean: " << s.mean << "\n";
    out << "sample variance: " << s.variance << "\n";
  } else {
    throw Error("mode must be graphs or splits");
  }
  std::cout << out.str();
  return 0;
}

int cmd_simulate(const GraphSource& src, long long trials, std::uint64_t seed,
                 int workers, long long max_steps) {
  const Graph g = src.load();
  const double mean = simulate_homeostasis(g, trials, seed, workers, max_steps);
  std::cout << "# seed: " << seed << "\n";
  std::cout << "trials: " << trials << "\n";
  std::cout << "mean settle time: " << mean << "\n";
  return 0;
}

int cmd_pair(const GraphSource& src, const std::string& a_arg,
             const std::string& b_arg) {
  const Graph base = src.load();
  std::vector<std::string> labels_a, labels_b;
  const Partition pa = resolve_partition(a_arg, base, &labels_a);
  const Partition pb = resolve_partition(b_arg, base, &labels_b);
  const PartitionPairing pairing = pair_partitions(pa, pb);
  for (const auto& pair : pairing.pairs)
    std::cout << labels_a[pair.a_cell] << " <-> " << labels_b[pair.b_cell]
              << " (" << pair.overlap << " in common)\n";
  auto print_unpaired = [](const char* side, const std::vector<int>& cells,
                           const std::vector<std::string>& labels) {
    if (cells.empty()) return;
    std::cout << "unpaired " << side << ":";
    for (int c : cells) std::cout << " " << labels[c];
    std::cout << "\n";
  };
  print_unpaired("a", pairing.unpaired_a, labels_a);
  print_unpaired("b", pairing.unpaired_b, labels_b);
  std::cout << "total overlap: " << pairing.total_overlap << "\n";
  return 0;
}

int cmd_matrix(const GraphSource& src, const std::string& partition_arg,
               bool series, const std::string& out_path) {
  const Graph base = [&] {
    if (!src.dataset.empty()) return load_dataset(src.dataset).graph();
    return symmetrize(parse_interactions(read_file(src.input))).first;
  }();
  std::vector<std::string> labels;
  const Partition p = resolve_partition(partition_arg, base, &labels);
  const CohesionCouplingMatrix m = cohesion_coupling_matrix(base, p, labels);
  std::string text = m.to_text();
  if (series) text += "\n" + sorted_ratio_series(m).to_csv();
  write_output(out_path, text);
  return 0;
}

int cmd_replicate(const std::string& scope_name, std::uint64_t seed,
                  const std::string& h3graph_path,
                  const std::string& graph_a_path) {
  ReplicationScope scope;
  if (scope_name == "deterministic")
    scope = ReplicationScope::kDeterministic;
  else if (scope_name == "all")
    scope = ReplicationScope::kAll;
  else
    throw Error("scope must be deterministic or all");
  ExternalData ext;
  if (!h3graph_path.empty()) ext.hidecs3_graph_text = read_file(h3graph_path);
  if (!graph_a_path.empty()) ext.graph_a_text = read_file(graph_a_path);
  const ReplicationReport report = replicate_suite(scope, seed, ext);
  std::cout << report.to_text();
  return report.exit_status();
}

int cmd_export_dot(const std::string& tree_path,
                   const std::string& semilattice_path,
                   const std::string& out_path) {
  if (!tree_path.empty()) {
    nlohmann::json doc = nlohmann::json::parse(read_file(tree_path));
    const nlohmann::json& tree = doc.contains("tree") ? doc["tree"] : doc;
    write_output(out_path, export_dot(parse_tree(tree.dump())));
    return 0;
  }
  if (!semilattice_path.empty()) {
    const Semilattice s = parse_semilattice(read_file(semilattice_path));
    write_output(out_path, export_dot(s, layout_layers(s)));
    return 0;
  }
  throw Error("need --tree or --semilattice");
}

int cmd_export_data(const std::string& dataset, bool requirements,
                    const std::string& out_path) {
  const DatasetBundle bundle = load_dataset(dataset);
  write_output(out_path, requirements ? bundle.requirements_text()
                                      : bundle.interactions_text());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph decomposition measures and searches for the misfit "
               "interaction networks, with the published tables embedded"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "audit a dataset's interaction table");
  GraphSource check_src;
  check_src.add_options(check, true);
  bool check_promote = false;
  check->add_flag("--promote", check_promote,
                  "also report the link count under one-way promotion");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a measure on a partition");
  GraphSource eval_src;
  eval_src.add_options(eval);
  std::string eval_partition, eval_measure = "h2-decomp";
  eval->add_option("--partition", eval_partition,
                   "reference id, named cells like C1/C2 or A+B/C+D, or a "
                   "JSON partition file")
      ->required();
  eval->add_option("--measure", eval_measure, "measure identifier");

  // decompose
  auto* dec = app.add_subcommand("decompose", "run a decomposition search");
  GraphSource dec_src;
  dec_src.add_options(dec);
  std::string dec_algo = "topdown", dec_measure = "h2-decomp",
              dec_tie = "auto", dec_out;
  int dec_latis = 100, dec_min_size = 3, dec_threads = 1;
  int dec_max_depth = -1;
  long long dec_tie_cap = 100000;
  std::uint64_t dec_seed = 0;
  dec->add_option("--algo", dec_algo, "topdown, bldup or stabl");
  dec->add_option("--measure", dec_measure, "measure identifier");
  dec->add_option("--latis", dec_latis, "random restarts per bisection");
  dec->add_option("--seed", dec_seed, "random seed")->required();
  dec->add_option("--max-depth", dec_max_depth, "depth bound (topdown)");
  dec->add_option("--min-size", dec_min_size, "smallest cell ever split");
  dec->add_option("--tie-policy", dec_tie,
                  "auto, first-canonical, exhaustive or seeded-random");
  dec->add_option("--tie-branch-cap", dec_tie_cap,
                  "evaluation budget for exhaustive ties");
  dec->add_option("--threads", dec_threads, "restart workers");
  dec->add_option("--out", dec_out, "output file (default stdout)");

  // cliques
  auto* cliques = app.add_subcommand("cliques", "list all maximal cliques");
  GraphSource cliques_src;
  cliques_src.add_options(cliques);
  std::string cliques_out;
  cliques->add_option("--out", cliques_out, "output file");

  // recompose
  auto* rec = app.add_subcommand(
      "recompose", "maximal cliques recombined into an overlap semilattice");
  GraphSource rec_src;
  rec_src.add_options(rec);
  std::string rec_out;
  rec->add_option("--out", rec_out, "output file");

  // estimate
  auto* est = app.add_subcommand("estimate", "Monte Carlo cut statistics");
  GraphSource est_src;
  int est_m = 9, est_side = 5, est_workers = 1;
  long long est_links = 14, est_samples = 1000000;
  std::uint64_t est_seed = 0;
  std::string est_mode = "graphs";
  est->add_option("--vertices", est_m, "vertex count (graphs mode)");
  est->add_option("--links", est_links, "link count (graphs mode)");
  est->add_option("--side", est_side, "size of one side of the split")
      ->required();
  est->add_option("--samples", est_samples, "sample count");
  est->add_option("--seed", est_seed, "random seed")->required();
  est->add_option("--workers", est_workers, "worker streams");
  est->add_option("--mode", est_mode,
                  "graphs: random graphs, fixed split; splits: random splits "
                  "of a fixed graph (needs --dataset/--input)");
  est_src.add_options(est);

  // simulate
  auto* sim = app.add_subcommand("simulate", "lights settling simulation");
  GraphSource sim_src;
  sim_src.add_options(sim);
  long long sim_trials = 100000, sim_max_steps = 10000000;
  int sim_workers = 1;
  std::uint64_t sim_seed = 0;
  sim->add_option("--trials", sim_trials, "trial count");
  sim->add_option("--seed", sim_seed, "random seed")->required();
  sim->add_option("--workers", sim_workers, "worker streams");
  sim->add_option("--max-steps", sim_max_steps,
                  "abort if a trial runs longer than this many seconds "
                  "(0 = unlimited)");

  // pair
  auto* pair = app.add_subcommand("pair", "best cell pairing of two partitions");
  GraphSource pair_src;
  pair_src.add_options(pair);
  std::string pair_a, pair_b;
  pair->add_option("--partition-a", pair_a, "first partition")->required();
  pair->add_option("--partition-b", pair_b, "second partition")->required();

  // matrix
  auto* matrix = app.add_subcommand("matrix", "cohesion/coupling matrix");
  GraphSource matrix_src;
  matrix_src.add_options(matrix);
  std::string matrix_partition, matrix_out;
  bool matrix_series = false;
  matrix->add_option("--partition", matrix_partition, "partition to score")
      ->required();
  matrix->add_flag("--series", matrix_series,
                   "append the sorted cohesion/coupling series as CSV");
  matrix->add_option("--out", matrix_out, "output file");

  // replicate
  auto* rep = app.add_subcommand("replicate", "run the published-value checks");
  std::string rep_scope = "all", rep_h3graph, rep_graph_a;
  std::uint64_t rep_seed = 0;
  rep->add_option("--scope", rep_scope, "deterministic or all");
  rep->add_option("--seed", rep_seed, "random seed")->required();
  rep->add_option("--hidecs3-graph", rep_h3graph,
                  "user-transcribed interaction file for the drawn instance");
  rep->add_option("--graph-a", rep_graph_a,
                  "user-transcribed interaction file for the drawn instance");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "render a tree or semilattice");
  std::string dot_tree, dot_semilattice, dot_out;
  dot->add_option("--tree", dot_tree, "tree JSON file");
  dot->add_option("--semilattice", dot_semilattice, "semilattice JSON file");
  dot->add_option("--out", dot_out, "output file");

  // export-data
  auto* exp = app.add_subcommand("export-data", "write an embedded dataset");
  std::string exp_dataset, exp_out;
  bool exp_requirements = false;
  exp->add_option("--dataset", exp_dataset, "dataset name")->required();
  exp->add_flag("--requirements", exp_requirements,
                "write the requirement texts instead of the interactions");
  exp->add_option("--out", exp_out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_src, check_promote);
    if (eval->parsed()) return cmd_eval(eval_src, eval_partition, eval_measure);
    if (dec->parsed()) {
      std::optional<int> depth;
      if (dec_max_depth >= 0) depth = dec_max_depth;
      return cmd_decompose(dec_src, dec_algo,
                           make_config(dec_measure, dec_latis, dec_seed, depth,
                                       dec_min_size, dec_tie, dec_tie_cap,
                                       dec_threads),
                           dec_out);
    }
    if (cliques->parsed()) return cmd_cliques(cliques_src, cliques_out);
    if (rec->parsed()) return cmd_recompose(rec_src, rec_out);
    if (est->parsed())
      return cmd_estimate(est_m, est_links, est_side, est_samples, est_seed,
                          est_workers, est_mode, est_src);
    if (sim->parsed()) return cmd_simulate(sim_src, sim_trials, sim_seed,
                                           sim_workers, sim_max_steps);
    if (pair->parsed()) return cmd_pair(pair_src, pair_a, pair_b);
    if (matrix->parsed())
      return cmd_matrix(matrix_src, matrix_partition, matrix_series, matrix_out);
    if (rep->parsed())
      return cmd_replicate(rep_scope, rep_seed, rep_h3graph, rep_graph_a);
    if (dot->parsed()) return cmd_export_dot(dot_tree, dot_semilattice, dot_out);
    if (exp->parsed()) return cmd_export_data(exp_dataset, exp_requirements,
                                              exp_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
