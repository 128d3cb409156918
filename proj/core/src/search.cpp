#include "hidecs/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "hidecs/rng.hpp"

namespace hidecs {

namespace {

// Local view of an induced subgraph: vertices renumbered 0..n-1.
struct LocalGraph {
  std::vector<Vertex> ids;  // local -> global, ascending
  std::vector<std::vector<int>> adj;
  long long links = 0;

  int n() const { return static_cast<int>(ids.size()); }
};

LocalGraph make_local(const Graph& g, const std::vector<Vertex>& subset) {
  LocalGraph lg;
  lg.ids = subset;
  std::sort(lg.ids.begin(), lg.ids.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < lg.n(); ++i) {
    Vertex v = lg.ids[i];
    if (v < 0 || v >= g.vertex_count()) throw Error("vertex outside graph");
    if (local[v] != -1) throw Error("duplicate vertex in subset");
    local[v] = i;
  }
  lg.adj.assign(lg.n(), {});
  for (const auto& [a, b] : g.links())
    if (local[a] != -1 && local[b] != -1) {
      lg.adj[local[a]].push_back(local[b]);
      lg.adj[local[b]].push_back(local[a]);
      ++lg.links;
    }
  return lg;
}

// One steepest-descent pass from a random start; returns (value, assignment
// normalized so that local vertex 0 sits on side A).
struct ClimbOutcome {
  double value = 0.0;
  std::vector<std::uint8_t> in_a;
};

ClimbOutcome climb_once(const LocalGraph& lg, const MeasureSpec& measure,
                        std::uint64_t seed) {
  const int n = lg.n();
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> in_a(n);
  int a = 0;
  do {
    a = 0;
    for (int v = 0; v < n; ++v) {
      in_a[v] = rng.next_bool() ? 1 : 0;
      a += in_a[v];
    }
  } while (a == 0 || a == n);

  std::vector<int> cnt_a(n, 0);  // neighbors on side A
  for (int v = 0; v < n; ++v)
    for (int u : lg.adj[v])
      if (in_a[u]) ++cnt_a[v];

  long long la = 0, lb = 0, cut = 0;
  for (int v = 0; v < n; ++v) {
    const int deg = static_cast<int>(lg.adj[v].size());
    if (in_a[v]) {
      la += cnt_a[v];
      cut += deg - cnt_a[v];
    } else {
      lb += deg - cnt_a[v];
    }
  }
  la /= 2;
  lb /= 2;

  double cur = bipartition_value(measure.id, n, lg.links, a, n - a, la, lb, cut);
  for (;;) {
    int best_v = -1;
    double best_val = cur;
    for (int v = 0; v < n; ++v) {
      const int deg = static_cast<int>(lg.adj[v].size());
      int na, nb;
      long long nla, nlb, ncut;
      if (in_a[v]) {
        if (a == 1) continue;
        na = a - 1;
        nb = n - a + 1;
        nla = la - cnt_a[v];
        nlb = lb + (deg - cnt_a[v]);
        ncut = cut + cnt_a[v] - (deg - cnt_a[v]);
      } else {
        if (n - a == 1) continue;
        na = a + 1;
        nb = n - a - 1;
        nla = la + cnt_a[v];
        nlb = lb - (deg - cnt_a[v]);
        ncut = cut - cnt_a[v] + (deg - cnt_a[v]);
      }
      const double val =
          bipartition_value(measure.id, n, lg.links, na, nb, nla, nlb, ncut);
      if (measure.better(val, best_val)) {
        best_val = val;
        best_v = v;
      }
    }
    if (best_v == -1) break;
    const int v = best_v;
    const int deg = static_cast<int>(lg.adj[v].size());
    if (in_a[v]) {
      --a;
      la -= cnt_a[v];
      lb += deg - cnt_a[v];
      cut += cnt_a[v] - (deg - cnt_a[v]);
      in_a[v] = 0;
      for (int u : lg.adj[v]) --cnt_a[u];
    } else {
      ++a;
      la += cnt_a[v];
      lb -= deg - cnt_a[v];
      cut -= cnt_a[v] - (deg - cnt_a[v]);
      in_a[v] = 1;
      for (int u : lg.adj[v]) ++cnt_a[u];
    }
    cur = best_val;
  }

  if (!in_a[0])
    for (auto& bit : in_a) bit = !bit;
  return {cur, std::move(in_a)};
}

bool outcome_precedes(const MeasureSpec& measure, const ClimbOutcome& a,
                      const ClimbOutcome& b) {
  if (measure.better(a.value, b.value, 0.0)) return true;
  if (measure.better(b.value, a.value, 0.0)) return false;
  return a.in_a < b.in_a;
}

}  // namespace

BisectResult bisect_best(const Graph& g, const std::vector<Vertex>& subset,
                         const SearchConfig& cfg) {
  if (subset.size() < 2) throw Error("bisect_best needs at least two vertices");
  if (cfg.latis < 1) throw Error("latis must be at least 1");
  const LocalGraph lg = make_local(g, subset);

  const int workers = std::max(1, cfg.threads);
  std::vector<std::optional<ClimbOutcome>> best_per_worker(workers);
  auto run_chunk = [&](int w) {
    for (int k = w; k < cfg.latis; k += workers) {
      ClimbOutcome out =
          climb_once(lg, cfg.measure, cfg.seed + static_cast<std::uint64_t>(k));
      if (!best_per_worker[w] ||
          outcome_precedes(cfg.measure, out, *best_per_worker[w]))
        best_per_worker[w] = std::move(out);
    }
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& t : pool) t.join();
  }
  std::optional<ClimbOutcome> best;
  for (auto& cand : best_per_worker)
    if (cand && (!best || outcome_precedes(cfg.measure, *cand, *best)))
      best = std::move(cand);

  std::vector<Vertex> cell_a, cell_b;
  for (int v = 0; v < lg.n(); ++v)
    (best->in_a[v] ? cell_a : cell_b).push_back(lg.ids[v]);
  return {Partition(lg.ids, {std::move(cell_a), std::move(cell_b)}),
          best->value};
}

int DecompositionTree::depth() const {
  auto rec = [](auto&& self, const TreeNode* node) -> int {
    if (!node || node->is_leaf()) return 0;
    return 1 + std::max(self(self, node->left.get()),
                        self(self, node->right.get()));
  };
  return rec(rec, root.get());
}

std::vector<const TreeNode*> DecompositionTree::internal_nodes() const {
  std::vector<const TreeNode*> out;
  auto rec = [&out](auto&& self, const TreeNode* node) -> void {
    if (!node || node->is_leaf()) return;
    out.push_back(node);
    self(self, node->left.get());
    self(self, node->right.get());
  };
  rec(rec, root.get());
  return out;
}

std::vector<const TreeNode*> DecompositionTree::leaves() const {
  std::vector<const TreeNode*> out;
  auto rec = [&out](auto&& self, const TreeNode* node) -> void {
    if (!node) return;
    if (node->is_leaf()) {
      out.push_back(node);
      return;
    }
    self(self, node->left.get());
    self(self, node->right.get());
  };
  rec(rec, root.get());
  return out;
}

DecompositionTree decompose_topdown(const Graph& g, const SearchConfig& cfg) {
  if (g.vertex_count() < 2)
    throw Error("decompose_topdown needs at least two vertices");
  SplitMix64 seed_stream(cfg.seed);

  auto rec = [&](auto&& self, std::vector<Vertex> members,
                 int depth) -> std::unique_ptr<TreeNode> {
    auto node = std::make_unique<TreeNode>();
    std::sort(members.begin(), members.end());
    node->members = std::move(members);
    const int size = static_cast<int>(node->members.size());
    const bool stop = size <= cfg.min_size || is_clique(g, node->members) ||
                      (cfg.max_depth && depth >= *cfg.max_depth);
    if (stop) return node;

    SearchConfig sub = cfg;
    sub.seed = seed_stream.next_u64();
    BisectResult split = bisect_best(g, node->members, sub);
    node->split_value = split.value;
    node->left = self(self, split.partition.cells()[0], depth + 1);
    node->right = self(self, split.partition.cells()[1], depth + 1);
    return node;
  };

  std::vector<Vertex> all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  DecompositionTree tree;
  tree.root = rec(rec, std::move(all), 0);
  return tree;
}

namespace {

nlohmann::json tree_to_json(const TreeNode* node) {
  nlohmann::json j;
  nlohmann::json members = nlohmann::json::array();
  for (Vertex v : node->members) members.push_back(v + 1);
  j["members"] = members;
  if (!node->is_leaf()) {
    j["value"] = node->split_value;
    j["children"] =
        nlohmann::json::array({tree_to_json(node->left.get()),
                               tree_to_json(node->right.get())});
  }
  return j;
}

std::unique_ptr<TreeNode> tree_from_json(const nlohmann::json& j) {
  auto node = std::make_unique<TreeNode>();
  for (const auto& v : j.at("members"))
    node->members.push_back(v.get<int>() - 1);
  if (j.contains("children")) {
    node->split_value = j.at("value").get<double>();
    node->left = tree_from_json(j.at("children").at(0));
    node->right = tree_from_json(j.at("children").at(1));
  }
  return node;
}

}  // namespace

std::string serialize_tree(const DecompositionTree& t) {
  return tree_to_json(t.root.get()).dump(2) + "\n";
}

DecompositionTree parse_tree(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("tree file is not valid JSON: ") + e.what());
  }
  DecompositionTree t;
  t.root = tree_from_json(doc);
  return t;
}

namespace {

// Partition-level value for measures that depend only on the cut total and
// the sum of pairwise cell-size products (h2-notes and h3-bldup).
double agglomeration_value(MeasureId id, int m, long long l, double cut,
                           double size_products) {
  const double nsq1 = static_cast<double>(m) * (m - 1) / 2.0;
  const double s2 = size_products;
  const double denom = s2 * (nsq1 - s2);
  if (denom <= 0) return 0.0;
  if (id == MeasureId::kH2Notes)
    return (nsq1 * cut - static_cast<double>(l) * s2) / std::sqrt(denom);
  const double nom = cut - (nsq1 > 0 ? l / nsq1 : 0.0) * s2;
  return (nom > 0 ? 1.0 : (nom < 0 ? -1.0 : 0.0)) * nom * nom / denom;
}

}  // namespace

AgglomerationResult bldup_agglomerate(const Graph& g, const SearchConfig& cfg) {
  const MeasureSpec& measure = cfg.measure;
  if (measure.arity() != Arity::kAnyPartition ||
      measure.direction() != Direction::kMinimize)
    throw Error("bldup needs an any-partition minimizing measure");

  const int m = g.vertex_count();
  const long long l = g.link_count();
  std::vector<std::vector<Vertex>> cells(m);
  std::vector<long long> size(m, 1);
  std::vector<std::vector<long long>> between(m, std::vector<long long>(m, 0));
  for (int v = 0; v < m; ++v) cells[v] = {v};
  for (const auto& [a, b] : g.links()) {
    ++between[a][b];
    ++between[b][a];
  }
  double cut = static_cast<double>(l);
  double s2 = static_cast<double>(m) * (m - 1) / 2.0;

  AgglomerationResult result{Partition::unit([&] {
                               std::vector<Vertex> u(m);
                               for (int v = 0; v < m; ++v) u[v] = v;
                               return u;
                             }()),
                             agglomeration_value(measure.id, m, l, cut, s2), 0};

  std::vector<int> alive;
  for (int v = 0; v < m; ++v) alive.push_back(v);
  double cur = result.value;
  for (;;) {
    int bi = -1, bj = -1;
    double best = cur;
    for (std::size_t x = 0; x < alive.size(); ++x)
      for (std::size_t y = x + 1; y < alive.size(); ++y) {
        const int i = alive[x], j = alive[y];
        const double ncut = cut - static_cast<double>(between[i][j]);
        const double ns2 = s2 - static_cast<double>(size[i]) * size[j];
        const double val = agglomeration_value(measure.id, m, l, ncut, ns2);
        if (val < best - 1e-9) {
          best = val;
          bi = i;
          bj = j;
        }
      }
    if (bi == -1) break;
    cut -= static_cast<double>(between[bi][bj]);
    s2 -= static_cast<double>(size[bi]) * size[bj];
    cells[bi].insert(cells[bi].end(), cells[bj].begin(), cells[bj].end());
    size[bi] += size[bj];
    for (int k : alive)
      if (k != bi && k != bj) {
        between[bi][k] += between[bj][k];
        between[k][bi] = between[bi][k];
      }
    alive.erase(std::find(alive.begin(), alive.end(), bj));
    cells[bj].clear();
    cur = best;
    ++result.merges;
  }

  std::vector<std::vector<Vertex>> final_cells;
  for (int i : alive) final_cells.push_back(cells[i]);
  std::vector<Vertex> universe(m);
  for (int v = 0; v < m; ++v) universe[v] = v;
  result.partition = Partition(std::move(universe), std::move(final_cells));
  result.value = cur;
  return result;
}

namespace {

// Incremental state for the element-move search. Cells keep their creation
// order; removing an empty cell compacts the order. The aggregate sums make
// each candidate move an O(1) evaluation once the element's links into
// every cell are bucketed.
struct StablState {
  MeasureId id;
  int m;
  long long l;
  double nsq1;
  std::vector<std::vector<Vertex>> cells;
  std::vector<int> cell_of;
  std::vector<long long> internal;     // l_i
  std::vector<long long> degree_sum;   // sum of degrees per cell
  double nom = 0, denom = 0;           // h3-stabl aggregates
  double esum = 0, asum = 0;           // newman-q aggregates

  static double half(double s) { return (s * (s - 1) + 1) / 2.0; }

  double stabl_term_nom(long long li, double s) const {
    double t = -half(s);
    if (l > 0) t += li * nsq1 / static_cast<double>(l);
    return t;
  }
  double stabl_term_denom(double s) const {
    return half(s) * std::exp2(-2.0 * s);
  }

  void init(const Graph& g, MeasureId measure) {
    id = measure;
    m = g.vertex_count();
    l = g.link_count();
    nsq1 = static_cast<double>(m) * (m - 1) / 2.0;
    cells.assign(m, {});
    cell_of.resize(m);
    internal.assign(m, 0);
    degree_sum.assign(m, 0);
    for (int v = 0; v < m; ++v) {
      cells[v] = {v};
      cell_of[v] = v;
      degree_sum[v] = g.degree(v);
    }
    recompute_aggregates();
  }

  void recompute_aggregates() {
    nom = denom = esum = asum = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const double s = static_cast<double>(cells[i].size());
      nom += stabl_term_nom(internal[i], s);
      denom += stabl_term_denom(s);
      if (l > 0) {
        esum += static_cast<double>(internal[i]) / l;
        const double ai = static_cast<double>(degree_sum[i]) / (2.0 * l);
        asum += ai * ai;
      }
    }
  }

  double value() const {
    if (id == MeasureId::kNewmanQ) return l == 0 ? 0.0 : esum - asum;
    if (denom <= 0) return 0.0;
    const double sg = nom > 0 ? 1.0 : (nom < 0 ? -1.0 : 0.0);
    return sg * nom * nom / denom;
  }

  // Value after moving vertex v (degree deg, d_src links into its cell,
  // d_dst links into the destination) from cell src to cell dst.
  double move_value(int src, int dst, int deg, int d_src, int d_dst) const {
    const double ss = static_cast<double>(cells[src].size());
    const double sd = static_cast<double>(cells[dst].size());
    if (id == MeasureId::kNewmanQ) {
      if (l == 0) return 0.0;
      double e = esum, a2 = asum;
      const double two_l = 2.0 * static_cast<double>(l);
      e -= static_cast<double>(internal[src]) / l;
      e -= static_cast<double>(internal[dst]) / l;
      double asrc = static_cast<double>(degree_sum[src]) / two_l;
      double adst = static_cast<double>(degree_sum[dst]) / two_l;
      a2 -= asrc * asrc + adst * adst;
      const long long nsrc_int = internal[src] - d_src;
      const long long ndst_int = internal[dst] + d_dst;
      const long long nsrc_deg = degree_sum[src] - deg;
      const long long ndst_deg = degree_sum[dst] + deg;
      if (ss > 1) {
        e += static_cast<double>(nsrc_int) / l;
        const double na = static_cast<double>(nsrc_deg) / two_l;
        a2 += na * na;
      }
      e += static_cast<double>(ndst_int) / l;
      const double nd = static_cast<double>(ndst_deg) / two_l;
      a2 += nd * nd;
      return e - a2;
    }
    double n = nom, d = denom;
    n -= stabl_term_nom(internal[src], ss) + stabl_term_nom(internal[dst], sd);
    d -= stabl_term_denom(ss) + stabl_term_denom(sd);
    if (ss > 1) {
      n += stabl_term_nom(internal[src] - d_src, ss - 1);
      d += stabl_term_denom(ss - 1);
    }
    n += stabl_term_nom(internal[dst] + d_dst, sd + 1);
    d += stabl_term_denom(sd + 1);
    if (d <= 0) return 0.0;
    const double sg = n > 0 ? 1.0 : (n < 0 ? -1.0 : 0.0);
    return sg * n * n / d;
  }

  void apply(int v, int dst, int deg, int d_src, int d_dst) {
    const int src = cell_of[v];
    auto& sc = cells[src];
    sc.erase(std::find(sc.begin(), sc.end(), v));
    cells[dst].push_back(v);
    cell_of[v] = dst;
    internal[src] -= d_src;
    internal[dst] += d_dst;
    degree_sum[src] -= deg;
    degree_sum[dst] += deg;
    if (sc.empty()) {
      cells.erase(cells.begin() + src);
      internal.erase(internal.begin() + src);
      degree_sum.erase(degree_sum.begin() + src);
      for (int& c : cell_of)
        if (c > src) --c;
    }
    recompute_aggregates();
  }

  std::vector<int> canonical_key() const {
    std::vector<int> key(m, -1);
    int next = 0;
    std::vector<int> relabel(cells.size(), -1);
    for (int v = 0; v < m; ++v) {
      int c = cell_of[v];
      if (relabel[c] == -1) relabel[c] = next++;
      key[v] = relabel[c];
    }
    return key;
  }
};

struct Candidate {
  int v, dst, deg, d_src, d_dst;
  double value;
};

// All candidate moves, in (element, destination cell) order.
std::vector<Candidate> stabl_candidates(const Graph& g, const StablState& st,
                                        long long* evaluations) {
  std::vector<Candidate> out;
  const int k = static_cast<int>(st.cells.size());
  std::vector<int> bucket(k, 0);
  for (int v = 0; v < st.m; ++v) {
    std::fill(bucket.begin(), bucket.end(), 0);
    for (Vertex u : g.neighbors(v)) ++bucket[st.cell_of[u]];
    const int src = st.cell_of[v];
    for (int dst = 0; dst < k; ++dst) {
      if (dst == src) continue;
      out.push_back({v, dst, g.degree(v), bucket[src], bucket[dst],
                     st.move_value(src, dst, g.degree(v), bucket[src],
                                   bucket[dst])});
      ++*evaluations;
    }
  }
  return out;
}

bool tie_equal(double a, double best) {
  return std::abs(a - best) <= 1e-9 * std::max(1.0, std::abs(best));
}

struct ExhaustiveSearch {
  const Graph& g;
  const SearchConfig& cfg;
  long long evaluations = 0;
  bool cap_hit = false;
  std::set<std::vector<int>> visited;
  double best_value;
  StablState best_state;
  std::vector<int> best_trace;
  std::vector<int> trace;

  ExhaustiveSearch(const Graph& graph, const SearchConfig& config)
      : g(graph), cfg(config) {}

  void run(StablState st) {
    best_state = st;
    best_value = st.value();
    visited.insert(st.canonical_key());
    dfs(std::move(st));
  }

  void dfs(StablState st) {
    const double cur = st.value();
    auto cands = stabl_candidates(g, st, &evaluations);
    double best = cur;
    for (const auto& c : cands)
      if (c.value > best) best = c.value;
    if (!(best > cur + 1e-9)) {
      // terminal
      if (cur > best_value) {
        best_value = cur;
        best_state = st;
        best_trace = trace;
      }
      return;
    }
    std::vector<const Candidate*> ties;
    for (const auto& c : cands)
      if (tie_equal(c.value, best)) ties.push_back(&c);
    trace.push_back(static_cast<int>(ties.size()));
    for (const Candidate* c : ties) {
      if (evaluations >= cfg.tie_branch_cap) {
        cap_hit = true;
        break;
      }
      StablState child = st;
      child.apply(c->v, c->dst, c->deg, c->d_src, c->d_dst);
      if (visited.insert(child.canonical_key()).second) dfs(std::move(child));
    }
    trace.pop_back();
  }
};

}  // namespace

StablResult stabl_search(const Graph& g, const SearchConfig& cfg) {
  const MeasureSpec& measure = cfg.measure;
  if (measure.direction() != Direction::kMaximize)
    throw Error("stabl needs a maximizing measure");
  if (measure.id != MeasureId::kH3Stabl && measure.id != MeasureId::kNewmanQ)
    throw Error("stabl supports h3-stabl and newman-q");

  TiePolicy policy = cfg.tie_policy;
  if (policy == TiePolicy::kAuto)
    policy = g.vertex_count() <= 24 ? TiePolicy::kExhaustive
                                    : TiePolicy::kFirstCanonical;

  StablState st;
  st.init(g, measure.id);

  StablResult result{Partition::unit([&] {
                       std::vector<Vertex> u(g.vertex_count());
                       for (int v = 0; v < g.vertex_count(); ++v) u[v] = v;
                       return u;
                     }()),
                     st.value(),
                     {},
                     0,
                     false};

  if (policy == TiePolicy::kExhaustive) {
    ExhaustiveSearch search(g, cfg);
    search.run(st);
    result.evaluations = search.evaluations;
    result.cap_hit = search.cap_hit;
    result.value = search.best_value;
    result.tie_trace = search.best_trace;
    std::vector<std::vector<Vertex>> cells = search.best_state.cells;
    for (auto& cell : cells) std::sort(cell.begin(), cell.end());
    result.partition = Partition(result.partition.universe(), std::move(cells));
    return result;
  }

  SplitMix64 rng(cfg.seed);
  for (;;) {
    auto cands = stabl_candidates(g, st, &result.evaluations);
    const double cur = st.value();
    double best = cur;
    for (const auto& c : cands)
      if (c.value > best) best = c.value;
    if (!(best > cur + 1e-9)) break;
    std::vector<const Candidate*> ties;
    for (const auto& c : cands)
      if (tie_equal(c.value, best)) ties.push_back(&c);
    result.tie_trace.push_back(static_cast<int>(ties.size()));
    const Candidate* pick =
        policy == TiePolicy::kSeededRandom
            ? ties[rng.next_below(ties.size())]
            : ties.front();  // candidates are already in canonical order
    st.apply(pick->v, pick->dst, pick->deg, pick->d_src, pick->d_dst);
  }
  result.value = st.value();
  std::vector<std::vector<Vertex>> cells = st.cells;
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  result.partition = Partition(result.partition.universe(), std::move(cells));
  return result;
}

BisectResult brute_force_bipartition(const Graph& g,
                                     const std::vector<Vertex>& subset,
                                     const MeasureSpec& measure) {
  if (subset.size() < 2 || subset.size() > 20)
    throw Error("brute_force_bipartition handles 2..20 vertices");
  const LocalGraph lg = make_local(g, subset);
  const int n = lg.n();
  std::vector<Link> local_links;
  for (int v = 0; v < n; ++v)
    for (int u : lg.adj[v])
      if (v < u) local_links.emplace_back(v, u);

  double best_val = 0;
  std::uint32_t best_mask = 0;
  bool have = false;
  // local vertex 0 stays on side A; bits select side B among vertices 1..n-1
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    int b = 0;
    long long la = 0, lb = 0, cut = 0;
    for (int v = 1; v < n; ++v)
      if (mask & (1u << (v - 1))) ++b;
    for (const auto& [x, y] : local_links) {
      const bool xb = x > 0 && (mask & (1u << (x - 1)));
      const bool yb = y > 0 && (mask & (1u << (y - 1)));
      if (xb == yb)
        ++(xb ? lb : la);
      else
        ++cut;
    }
    const double val =
        bipartition_value(measure.id, n, lg.links, n - b, b, la, lb, cut);
    if (!have || measure.better(val, best_val, 0.0)) {
      best_val = val;
      best_mask = mask;
      have = true;
    }
  }
  std::vector<Vertex> cell_a, cell_b;
  cell_a.push_back(lg.ids[0]);
  for (int v = 1; v < n; ++v)
    ((best_mask & (1u << (v - 1))) ? cell_b : cell_a).push_back(lg.ids[v]);
  return {Partition(lg.ids, {std::move(cell_a), std::move(cell_b)}), best_val};
}

std::vector<Vertex> LookaheadTrap::left_ring() const {
  std::vector<Vertex> out;
  for (const auto& [name, members] : clusters)
    if (name[0] == 'L') out.insert(out.end(), members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> LookaheadTrap::right_ring() const {
  std::vector<Vertex> out;
  for (const auto& [name, members] : clusters)
    if (name[0] == 'R') out.insert(out.end(), members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Vertex>& LookaheadTrap::cluster(const std::string& name) const {
  for (const auto& [n, members] : clusters)
    if (n == name) return members;
  throw Error("no cluster named '" + name + "'");
}

LookaheadTrap lookahead_trap() {
  LookaheadTrap trap;
  std::vector<Link> links;
  auto add = [&links](Vertex a, Vertex b) {
    links.emplace_back(std::min(a, b), std::max(a, b));
  };
  // triangles 0..3 on the left (vertices 0..11), 4..7 on the right (12..23)
  for (int c = 0; c < 8; ++c) {
    const Vertex base = 3 * c;
    add(base, base + 1);
    add(base, base + 2);
    add(base + 1, base + 2);
    const std::string name =
        (c < 4 ? "L" : "R") + std::to_string(c < 4 ? c : c - 4);
    trap.clusters.emplace_back(
        name, std::vector<Vertex>{base, base + 1, base + 2});
  }
  // ring links between consecutive clusters on each side (cyclic)
  for (int c = 0; c < 4; ++c) {
    add(3 * c + 2, 3 * ((c + 1) % 4));
    add(12 + 3 * c + 2, 12 + 3 * ((c + 1) % 4));
  }
  // the hub: all of L2, one member of each right cluster
  trap.x = 24;
  for (Vertex v : {6, 7, 8}) add(trap.x, v);
  for (int c = 0; c < 4; ++c) add(trap.x, 12 + 3 * c);
  trap.graph = Graph(25, std::move(links));
  return trap;
}

}  // namespace hidecs
