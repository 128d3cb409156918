#include "hidecs/replicate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "hidecs/analysis.hpp"
#include "hidecs/cliques.hpp"
#include "hidecs/datasets.hpp"
#include "hidecs/graph.hpp"
#include "hidecs/measures.hpp"
#include "hidecs/rng.hpp"
#include "hidecs/search.hpp"

namespace hidecs {

int ReplicationReport::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::kPass;
  return n;
}
int ReplicationReport::failed() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::kFail;
  return n;
}
int ReplicationReport::skipped() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::kSkip;
  return n;
}
int ReplicationReport::deterministic_failures() const {
  int n = 0;
  for (const auto& c : checks)
    n += c.status == CheckStatus::kFail && c.deterministic;
  return n;
}

std::string ReplicationReport::to_text() const {
  std::ostringstream out;
  out << "# replication report (seed " << seed << ")\n";
  for (const auto& c : checks) {
    const char* tag = c.status == CheckStatus::kPass   ? "[PASS]"
                      : c.status == CheckStatus::kFail ? "[FAIL]"
                                                       : "[SKIP]";
    out << tag << " " << c.id;
    for (std::size_t i = c.id.size(); i < 34; ++i) out << ' ';
    out << " computed=" << (c.computed.empty() ? "-" : c.computed)
        << " target=" << c.target;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }
  out << "overall: " << passed() << " passed, " << failed() << " failed ("
      << deterministic_failures() << " deterministic), " << skipped()
      << " skipped\n";
  return out.str();
}

const CheckResult& ReplicationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw Error("no check named '" + id + "'");
}

namespace {

std::string fmt(double v, int decimals = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

Graph random_graph(int m, SplitMix64& rng, double density = -1.0) {
  if (density < 0) density = 0.2 + 0.6 * rng.next_double();
  std::vector<Link> links;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (rng.next_double() < density) links.emplace_back(i, j);
  return Graph(m, std::move(links));
}

std::vector<Vertex> full_universe(int m) {
  std::vector<Vertex> u(m);
  for (int v = 0; v < m; ++v) u[v] = v;
  return u;
}

Partition random_bipartition(int m, SplitMix64& rng) {
  std::vector<Vertex> a, b;
  do {
    a.clear();
    b.clear();
    for (int v = 0; v < m; ++v) (rng.next_bool() ? a : b).push_back(v);
  } while (a.empty() || b.empty());
  return Partition(full_universe(m), {std::move(a), std::move(b)});
}

Partition random_partition(int m, SplitMix64& rng) {
  const int k = 1 + static_cast<int>(rng.next_below(m));
  std::vector<std::vector<Vertex>> cells(k);
  for (int v = 0; v < m; ++v) cells[rng.next_below(k)].push_back(v);
  cells.erase(std::remove_if(cells.begin(), cells.end(),
                             [](const auto& c) { return c.empty(); }),
              cells.end());
  return Partition(full_universe(m), std::move(cells));
}

bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

// Published 12x12 cohesion/coupling table for the reference 12-set
// decomposition, 3-decimal cells, order A1..A3, B1..B4, C1..C2, D1..D3.
constexpr double kReferenceMatrix[12][12] = {
    {.444, .173, .095, .210, .063, .056, .061, .092, .052, .074, .037, .009},
    {.173, .778, .238, .123, .079, .231, .131, .029, .046, .111, .176, .077},
    {.095, .238, .381, .063, .061, .179, .052, .037, .025, .155, .095, .099},
    {.210, .123, .063, .500, .222, .231, .172, .116, .098, .065, .083, .017},
    {.063, .079, .061, .222, .476, .226, .130, .193, .084, .012, .036, .055},
    {.056, .231, .179, .231, .226, .682, .341, .058, .059, .076, .125, .051},
    {.061, .131, .052, .172, .130, .341, .618, .087, .032, .068, .061, .133},
    {.092, .029, .037, .116, .193, .058, .087, .447, .184, .058, .174, .064},
    {.052, .046, .025, .098, .084, .059, .032, .184, .353, .034, .142, .113},
    {.074, .111, .155, .065, .012, .076, .068, .058, .034, .576, .292, .141},
    {.037, .176, .095, .083, .036, .125, .061, .174, .142, .292, .576, .205},
    {.009, .077, .099, .017, .055, .051, .133, .064, .113, .141, .205, .385}};

class Suite {
 public:
  Suite(ReplicationScope scope, std::uint64_t seed, const ExternalData& ext)
      : scope_(scope), ext_(ext) {
    report_.seed = seed;
    seeds_ = SplitMix64(seed);
  }

  ReplicationReport run() {
    data_audit();
    bipartition_tables();
    notes_tables();
    matrix_checks();
    modularity_checks();
    estimator_checks();
    search_target_checks();
    property_suites();
    trap_checks();
    homeostasis_check();
    external_checks();
    return std::move(report_);
  }

 private:
  void value_check(const std::string& id, double computed, double target,
                   double tol, bool deterministic, const std::string& note = "",
                   int decimals = 4) {
    CheckResult c;
    c.id = id;
    c.computed = fmt(computed, decimals);
    c.target = fmt(target, decimals) + " +/- " + fmt(tol, decimals);
    c.status = std::abs(computed - target) <= tol ? CheckStatus::kPass
                                                  : CheckStatus::kFail;
    c.deterministic = deterministic;
    c.note = note;
    report_.checks.push_back(std::move(c));
  }

  void exact_check(const std::string& id, long long computed, long long target,
                   const std::string& note = "") {
    CheckResult c;
    c.id = id;
    c.computed = std::to_string(computed);
    c.target = std::to_string(target) + " (exact)";
    c.status = computed == target ? CheckStatus::kPass : CheckStatus::kFail;
    c.note = note;
    report_.checks.push_back(std::move(c));
  }

  void bool_check(const std::string& id, bool ok, const std::string& target,
                  const std::string& computed, bool deterministic,
                  const std::string& note = "") {
    CheckResult c;
    c.id = id;
    c.computed = computed;
    c.target = target;
    c.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
    c.deterministic = deterministic;
    c.note = note;
    report_.checks.push_back(std::move(c));
  }

  void skip_check(const std::string& id, const std::string& target,
                  const std::string& why) {
    CheckResult c;
    c.id = id;
    c.target = target;
    c.status = CheckStatus::kSkip;
    c.note = why;
    report_.checks.push_back(std::move(c));
  }

  // Stochastic checks are skipped in deterministic scope.
  bool stochastic_allowed(const std::string& id, const std::string& target) {
    if (scope_ == ReplicationScope::kAll) return true;
    CheckResult c;
    c.id = id;
    c.target = target;
    c.status = CheckStatus::kSkip;
    c.deterministic = false;
    c.note = "stochastic: excluded from deterministic scope";
    report_.checks.push_back(std::move(c));
    return false;
  }

  const Graph& iv() {
    if (!iv_) iv_ = load_dataset("indian-village").graph();
    return *iv_;
  }

  Partition two_sets(const std::vector<Vertex>& a,
                     const std::vector<Vertex>& b) {
    std::vector<Vertex> universe = a;
    universe.insert(universe.end(), b.begin(), b.end());
    return Partition(std::move(universe), {a, b});
  }

  std::vector<Vertex> union_sets(const std::vector<Vertex>& a,
                                 const std::vector<Vertex>& b) {
    std::vector<Vertex> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  void data_audit() {
    const auto bundle = load_dataset("indian-village");
    const auto [graph, report] = symmetrize(bundle.table);
    exact_check("audit-iv-one-way", report.count(), 50);
    exact_check("audit-iv-one-way-vertex-33", report.touching(32), 30);
    exact_check("audit-iv-links", graph.link_count(), 1383);
  }

  void bipartition_tables() {
    const auto& ref = reference_partitions();
    const auto& A = ref.set("A");
    const auto& B = ref.set("B");
    const auto& C = ref.set("C");
    const auto& D = ref.set("D");

    const Partition c1c2 = two_sets(ref.set("C1"), ref.set("C2"));
    value_check("decomp-c1-c2", hidecs2_decomp(iv(), c1c2).value, -89.60, 0.01,
                true, "", 2);

    const double ab_cd =
        hidecs2_decomp(iv(), two_sets(union_sets(A, B), union_sets(C, D))).value;
    const double ac_bd =
        hidecs2_decomp(iv(), two_sets(union_sets(A, C), union_sets(B, D))).value;
    const double ad_bc =
        hidecs2_decomp(iv(), two_sets(union_sets(A, D), union_sets(B, C))).value;
    value_check("option-ab-cd", ab_cd, -645.04, 0.01, true, "", 2);
    value_check("option-ac-bd", ac_bd, -434.40, 0.01, true, "", 2);
    value_check("option-ad-bc", ad_bc, -562.65, 0.01, true, "", 2);
    bool_check("option-ordering", ab_cd < ad_bc && ad_bc < ac_bd,
               "{A+B,C+D} < {A+D,B+C} < {A+C,B+D}",
               fmt(ab_cd, 2) + " < " + fmt(ad_bc, 2) + " < " + fmt(ac_bd, 2),
               true);

    const struct {
      const char* id;
      const std::vector<Vertex>&x, &y;
      double target;
    } pairs[] = {{"pairwise-a-b", A, B, -197.83}, {"pairwise-a-c", A, C, -257.00},
                 {"pairwise-a-d", A, D, -197.98}, {"pairwise-b-c", B, C, -341.70},
                 {"pairwise-b-d", B, D, -345.84}, {"pairwise-c-d", C, D, -297.75}};
    for (const auto& p : pairs)
      value_check(p.id, hidecs2_decomp(iv(), two_sets(p.x, p.y)).value,
                  p.target, 0.01, true, "", 2);
  }

  void notes_tables() {
    const auto& ref = reference_partitions();
    const struct {
      const char* id;
      const char* partition;
      double target;
    } rows[] = {{"notes-ca-pi1", "ca-pi1", -434.40},
                {"notes-ca-pi2", "ca-pi2", -945.57},
                {"notes-ca-pi4", "ca-pi4", -1072.62},
                {"notes-rpg1-pi4", "rpg1-pi4", -1182.20},
                {"notes-rpg2-pi4", "rpg2-pi4", -1089.22}};
    for (const auto& row : rows)
      value_check(row.id, hidecs2_notes(iv(), ref.get(row.partition)).value,
                  row.target, 0.01, true, "", 2);
  }

  void matrix_checks() {
    const auto& ref = reference_partitions();
    const auto matrix = cohesion_coupling_matrix(iv(), ref.get("ca-pi4"),
                                                 ref.labels.at("ca-pi4"));
    value_check("matrix-a1-cohesion", matrix.at(0, 0), .444, .0005, true, "", 4);
    value_check("matrix-a2-cohesion", matrix.at(1, 1), .778, .0005, true, "", 4);
    value_check("matrix-b3-cohesion", matrix.at(5, 5), .682, .0005, true, "", 4);
    value_check("matrix-a1-a2-coupling", matrix.at(0, 1), .173, .0005, true, "",
                4);
    value_check("matrix-d2-d3-coupling", matrix.at(10, 11), .205, .0005, true,
                "", 4);
    int mismatches = 0;
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j)
        if (std::abs(round_half_away(matrix.at(i, j), 3) -
                     kReferenceMatrix[i][j]) > 1e-9)
          ++mismatches;
    bool_check("matrix-full-12x12", mismatches == 0,
               "all 144 cells match at 3 decimals",
               std::to_string(mismatches) + " mismatches", true);
  }

  void modularity_checks() {
    const auto& ref = reference_partitions();
    value_check("q-newman-4", newman_q(iv(), ref.get("newman-4")).value, .297,
                .002, true, "", 3);
    const double q2 = newman_q(iv(), ref.get("ca-pi2")).value;
    const double q4 = newman_q(iv(), ref.get("ca-pi4")).value;
    const bool pi4_hit = std::abs(q4 - .208) <= .005;
    const bool pi2_hit = std::abs(q2 - .208) <= .005;
    bool_check("q-ca", pi4_hit || pi2_hit, "0.208 +/- 0.005 for ca-pi2 or ca-pi4",
               "ca-pi4=" + fmt(q4, 3) + " ca-pi2=" + fmt(q2, 3), true,
               pi4_hit ? "matched by the 12-set ca-pi4"
                       : (pi2_hit ? "matched by the 4-set ca-pi2" : ""));
    value_check("q-rpg1", newman_q(iv(), ref.get("rpg1-pi4")).value, .193, .005,
                true, "", 3);
    value_check("q-rpg2", newman_q(iv(), ref.get("rpg2-pi4")).value, .176, .005,
                true, "", 3);
  }

  void estimator_checks() {
    exact_check("estimate-denominator-product",
                75LL * 66 * (9870 - 75LL * 66), 24354000,
                "mn(nsq1-mn) for the 141-vertex 75/66 split");
    const bool run_mean = stochastic_allowed("estimate-small-mean", "7.7778 +/- 0.01");
    const bool run_var = stochastic_allowed("estimate-small-variance", "2.60 +/- 0.15");
    const bool run_iv = stochastic_allowed("estimate-iv-variance", "293.60 +/- 10%");
    if (run_mean && run_var && run_iv) {
      const CutSample small =
          estimate_cut_stats(9, 14, 5, 1000000, seeds_.next_u64());
      value_check("estimate-small-mean", small.mean, 7.7778, 0.01, false);
      value_check("estimate-small-variance", small.variance, 2.60, 0.15, false,
                  "uniform random graphs with a fixed split converge to "
                  "2.1728; see docs/replication-notes.md");
      const CutSample large =
          estimate_cut_stats(141, 1383, 75, 100000, seeds_.next_u64());
      value_check("estimate-iv-variance", large.variance, 293.60, 29.36, false,
                  "", 2);
    }
  }

  void search_target_checks() {
    const std::string top_target = "-91.60 +/- 0.01";
    if (!stochastic_allowed("search-c-top", top_target)) {
      stochastic_allowed("search-c-distinct-trees", ">= 30 of 100");
      stochastic_allowed("search-c-leaf-window", "[-145.18, -136.44]");
      return;
    }
    const auto& ref = reference_partitions();
    const Graph c_graph = induced_subgraph(iv(), ref.set("C"));

    SearchConfig cfg;
    cfg.measure = MeasureSpec{MeasureId::kH2Decomp};
    cfg.latis = 6;
    cfg.max_depth = 3;
    cfg.min_size = 3;

    double best_top = 0;
    bool have_top = false;
    std::set<std::vector<std::vector<Vertex>>> distinct;
    double leaf_min = 0, leaf_max = 0;
    bool have_leaf = false;
    for (int run = 0; run < 100; ++run) {
      cfg.seed = seeds_.next_u64();
      const DecompositionTree tree = decompose_topdown(c_graph, cfg);
      const double top = tree.root->split_value;
      if (!have_top || top < best_top) {
        best_top = top;
        have_top = true;
      }
      const Partition leaves = tree_level_partition(tree, 3);
      std::vector<std::vector<Vertex>> key = leaves.cells();
      std::sort(key.begin(), key.end());
      distinct.insert(key);
      const double r = hidecs2_notes(c_graph, leaves).value;
      if (!have_leaf) {
        leaf_min = leaf_max = r;
        have_leaf = true;
      }
      leaf_min = std::min(leaf_min, r);
      leaf_max = std::max(leaf_max, r);
    }
    value_check("search-c-top", best_top, -91.60, 0.01, false,
                "best top split over 100 runs, latis 6", 2);
    bool_check("search-c-distinct-trees", distinct.size() >= 30,
               ">= 30 of 100", std::to_string(distinct.size()), false);
    const double lo = -144.68 - 0.5, hi = -136.94 + 0.5;
    bool_check("search-c-leaf-window", leaf_min >= lo && leaf_max <= hi,
               "[-145.18, -136.44]",
               "[" + fmt(leaf_min, 2) + ", " + fmt(leaf_max, 2) + "]", false,
               "this search finds leaf partitions below the published best; "
               "see docs/replication-notes.md");
  }

  void property_suites() {
    // order preservation, two-cell equality, proportionality
    {
      SplitMix64 rng(seeds_.next_u64());
      bool order_ok = true, equal_ok = true, prop_ok = true;
      for (int i = 0; i < 1000; ++i) {
        const int m = 4 + static_cast<int>(rng.next_below(17));
        const Graph g = random_graph(m, rng);
        const Partition p1 = random_bipartition(m, rng);
        const Partition p2 = random_bipartition(m, rng);
        const MeasureValue d1 = hidecs2_decomp(g, p1);
        const MeasureValue d2 = hidecs2_decomp(g, p2);
        const MeasureValue a1 = hidecs2_actual(g, p1);
        const MeasureValue a2 = hidecs2_actual(g, p2);
        if (!close(d1.value, d2.value) && !close(a1.value, a2.value))
          if ((d1.value < d2.value) != (a1.value < a2.value)) order_ok = false;
        if (!close(d1.value, hidecs2_notes(g, p1).value)) equal_ok = false;
        const double nsq1 = static_cast<double>(m) * (m - 1) / 2.0;
        if (!d1.degenerate &&
            !close(d1.value, nsq1 * a1.intermediate("STR")))
          prop_ok = false;
      }
      bool_check("property-order-preservation", order_ok,
                 "1000 random instances", order_ok ? "all consistent" : "violated",
                 true);
      bool_check("property-two-cell-equality", equal_ok, "1000 random instances",
                 equal_ok ? "all equal" : "violated", true);
      bool_check("property-proportionality", prop_ok, "1000 random instances",
                 prop_ok ? "all equal" : "violated", true);
    }
    // EXP of the unit partition
    {
      SplitMix64 rng(seeds_.next_u64());
      bool ok = true;
      for (int m = 2; m <= 50; ++m) {
        const Graph g = random_graph(m, rng);
        const double exp_value =
            hidecs3_stabl(g, Partition::unit(full_universe(m))).value;
        if (!close(exp_value, -2.0 * m)) ok = false;
      }
      bool_check("property-stabl-unit", ok, "EXP(unit) = -2m for m in 2..50",
                 ok ? "all exact" : "violated", true);
    }
    // modularity identities and invariances
    {
      SplitMix64 rng(seeds_.next_u64());
      bool ok = true;
      for (int i = 0; i < 1000 && ok; ++i) {
        const int m = 3 + static_cast<int>(rng.next_below(15));
        const Graph g = random_graph(m, rng);
        const Partition single = Partition::single_cell(full_universe(m));
        if (std::abs(newman_q(g, single).value) > 1e-12) ok = false;
        const Partition p = random_partition(m, rng);
        const double q = newman_q(g, p).value;
        if (q > 1.0 + 1e-12) ok = false;
        std::vector<std::vector<Vertex>> shuffled = p.cells();
        for (std::size_t j = shuffled.size(); j > 1; --j)
          std::swap(shuffled[j - 1], shuffled[rng.next_below(j)]);
        const Partition relabeled(p.universe(), std::move(shuffled));
        if (!close(q, newman_q(g, relabeled).value, 1e-12)) ok = false;
      }
      bool_check("property-q-identities", ok,
                 "Q(single)=0, Q<=1, relabel-invariant on 1000 instances",
                 ok ? "all hold" : "violated", true);
    }
    // invariance of every measure under vertex renumbering
    {
      SplitMix64 rng(seeds_.next_u64());
      bool ok = true;
      for (int i = 0; i < 1000 && ok; ++i) {
        const int m = 4 + static_cast<int>(rng.next_below(13));
        const Graph g = random_graph(m, rng);
        std::vector<int> perm(m);
        for (int v = 0; v < m; ++v) perm[v] = v;
        for (std::size_t j = perm.size(); j > 1; --j)
          std::swap(perm[j - 1], perm[rng.next_below(j)]);
        std::vector<Link> permuted_links;
        for (const auto& [a, b] : g.links())
          permuted_links.emplace_back(perm[a], perm[b]);
        const Graph h(m, std::move(permuted_links));
        const Partition bip = random_bipartition(m, rng);
        const Partition part = random_partition(m, rng);
        auto map_cells = [&perm](const Partition& p) {
          std::vector<std::vector<Vertex>> cells;
          for (const auto& cell : p.cells()) {
            std::vector<Vertex> mapped;
            for (Vertex v : cell) mapped.push_back(perm[v]);
            cells.push_back(std::move(mapped));
          }
          return Partition(full_universe(static_cast<int>(p.universe().size())),
                           std::move(cells));
        };
        const Partition bip_h = map_cells(bip);
        const Partition part_h = map_cells(part);
        for (const auto& spec : MeasureSpec::all()) {
          const Partition& p0 =
              spec.arity() == Arity::kBipartitionOnly ? bip : part;
          const Partition& p1 =
              spec.arity() == Arity::kBipartitionOnly ? bip_h : part_h;
          if (!close(evaluate(spec, g, p0).value, evaluate(spec, h, p1).value))
            ok = false;
        }
      }
      bool_check("property-renumber-invariance", ok,
                 "all 7 measures on 1000 instances", ok ? "all equal" : "violated",
                 true);
    }
    // rpg range guarantees
    {
      SplitMix64 rng(seeds_.next_u64());
      bool ok = true;
      for (int i = 0; i < 1000 && ok; ++i) {
        const int m = 2 + static_cast<int>(rng.next_below(15));
        const Graph g = random_graph(m, rng);
        const MeasureValue v = hidecs2_rpg(g, random_bipartition(m, rng));
        for (const char* name : {"f1", "f2", "f3"}) {
          const double f = v.intermediate(name);
          if (f < -1e-12 || f > 1.0 + 1e-12) ok = false;
        }
        const double f4 = v.intermediate("f4");
        if (f4 <= 0 || f4 > 1.0 + 1e-12 || v.value < -1e-12) ok = false;
      }
      bool_check("property-rpg-bounds", ok,
                 "f1,f2,f3 in [0,1], f4 in (0,1], RSCORE >= 0 on 1000 instances",
                 ok ? "all hold" : "violated", true);
    }
    // clique enumeration against subset brute force; best-bipartition value
    // against a full re-evaluation sweep
    {
      SplitMix64 rng(seeds_.next_u64());
      bool cliques_ok = true, bipartition_ok = true;
      for (int i = 0; i < 200; ++i) {
        const int m = 2 + static_cast<int>(rng.next_below(9));
        const Graph g = random_graph(m, rng);
        std::vector<std::vector<Vertex>> expected;
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
          std::vector<Vertex> members;
          for (int v = 0; v < m; ++v)
            if (mask & (1u << v)) members.push_back(v);
          if (!is_clique(g, members)) continue;
          bool maximal = true;
          for (int v = 0; v < m && maximal; ++v) {
            if (mask & (1u << v)) continue;
            std::vector<Vertex> extended = members;
            extended.push_back(v);
            if (is_clique(g, extended)) maximal = false;
          }
          if (maximal) expected.push_back(std::move(members));
        }
        std::sort(expected.begin(), expected.end(),
                  [](const auto& a, const auto& b) {
                    if (a.size() != b.size()) return a.size() > b.size();
                    return a < b;
                  });
        if (maximal_cliques(g) != expected) cliques_ok = false;

        if (m >= 2) {
          const MeasureSpec spec = MeasureSpec::all()[i % 7];
          const BisectResult fast =
              brute_force_bipartition(g, full_universe(m), spec);
          bool have = false;
          double best = 0;
          for (std::uint32_t mask = 1; mask < (1u << (m - 1)); ++mask) {
            std::vector<Vertex> a{0}, b;
            for (int v = 1; v < m; ++v)
              ((mask & (1u << (v - 1))) ? b : a).push_back(v);
            const double val =
                evaluate(spec, g, Partition(full_universe(m), {a, b})).value;
            if (!have || spec.better(val, best, 0.0)) {
              best = val;
              have = true;
            }
          }
          if (!close(fast.value, best)) bipartition_ok = false;
        }
      }
      bool_check("oracle-maximal-cliques", cliques_ok,
                 "200 random graphs, m <= 10",
                 cliques_ok ? "all equal" : "violated", true);
      bool_check("oracle-best-bipartition", bipartition_ok,
                 "200 random graphs, m <= 10",
                 bipartition_ok ? "all equal" : "violated", true);
    }
    // hill climb against the exact optimum
    {
      SplitMix64 rng(seeds_.next_u64());
      int hits = 0;
      for (int i = 0; i < 50; ++i) {
        const Graph g = random_graph(10, rng);
        SearchConfig cfg;
        cfg.measure = MeasureSpec{MeasureId::kH2Decomp};
        cfg.latis = 500;
        cfg.seed = rng.next_u64();
        const BisectResult climbed = bisect_best(g, full_universe(10), cfg);
        const BisectResult exact =
            brute_force_bipartition(g, full_universe(10), cfg.measure);
        if (close(climbed.value, exact.value, 1e-6)) ++hits;
      }
      bool_check("oracle-bisect-latis-500", hits >= 45,
                 ">= 45 of 50 optimal", std::to_string(hits) + " of 50", true);
    }
  }

  void trap_checks() {
    if (!stochastic_allowed("trap-greedy-side", "x lands in the right ring")) {
      stochastic_allowed("trap-cohesion-cluster", "x lands with L2");
      return;
    }
    const LookaheadTrap trap = lookahead_trap();
    SearchConfig cfg;
    cfg.measure = MeasureSpec{MeasureId::kH2Decomp};
    cfg.latis = 64;
    cfg.seed = seeds_.next_u64();
    std::vector<Vertex> all = full_universe(trap.graph.vertex_count());
    const BisectResult split = bisect_best(trap.graph, all, cfg);
    const auto& cell_x =
        split.partition.cells()[split.partition.cell_of(trap.x)];
    const auto left = trap.left_ring();
    const auto right = trap.right_ring();
    const bool no_left = std::none_of(left.begin(), left.end(), [&](Vertex v) {
      return std::binary_search(cell_x.begin(), cell_x.end(), v);
    });
    const bool all_right = std::all_of(right.begin(), right.end(), [&](Vertex v) {
      return std::binary_search(cell_x.begin(), cell_x.end(), v);
    });
    bool_check("trap-greedy-side", no_left && all_right,
               "x lands in the right ring",
               no_left && all_right ? "x grouped with R0..R3"
                                    : "x grouped differently",
               false);

    SearchConfig stabl_cfg;
    stabl_cfg.measure = MeasureSpec{MeasureId::kH3Stabl};
    stabl_cfg.seed = seeds_.next_u64();
    const StablResult cohesive = stabl_search(trap.graph, stabl_cfg);
    const auto& cell =
        cohesive.partition.cells()[cohesive.partition.cell_of(trap.x)];
    const auto& l2 = trap.cluster("L2");
    const bool with_l2 = std::all_of(l2.begin(), l2.end(), [&](Vertex v) {
      return std::binary_search(cell.begin(), cell.end(), v);
    });
    bool_check("trap-cohesion-cluster", with_l2, "x lands with L2",
               with_l2 ? "x grouped with L2" : "x grouped differently", false);
  }

  void homeostasis_check() {
    if (!stochastic_allowed("homeostasis-ratio", "[3, 7]")) return;
    std::vector<Link> complete;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) complete.emplace_back(i, j);
    const Graph k5(5, std::move(complete));
    const Graph isolated(5, {});
    const double dense =
        simulate_homeostasis(k5, 100000, seeds_.next_u64());
    const double sparse =
        simulate_homeostasis(isolated, 100000, seeds_.next_u64());
    const double ratio = dense / sparse;
    bool_check("homeostasis-ratio", ratio >= 3.0 && ratio <= 7.0, "[3, 7]",
               fmt(ratio, 2) + " (" + fmt(dense, 2) + " / " + fmt(sparse, 2) +
                   ")",
               false);
  }

  void external_checks() {
    if (!ext_.hidecs3_graph_text) {
      skip_check("external-h3graph-stabl", "265361.889 +/- 0.5",
                 "skipped: external data");
      skip_check("external-h3graph-q", "0.472 +/- 0.005",
                 "skipped: external data");
    } else {
      const auto [graph, report] =
          symmetrize(parse_interactions(*ext_.hidecs3_graph_text));
      SearchConfig cfg;
      cfg.measure = MeasureSpec{MeasureId::kH3Stabl};
      cfg.seed = seeds_.next_u64();
      const StablResult best = stabl_search(graph, cfg);
      value_check("external-h3graph-stabl", best.value, 265361.889, 0.5, false,
                  "user-supplied transcription", 3);
      SearchConfig qcfg;
      qcfg.measure = MeasureSpec{MeasureId::kNewmanQ};
      qcfg.seed = seeds_.next_u64();
      const StablResult q_best = stabl_search(graph, qcfg);
      value_check("external-h3graph-q", q_best.value, 0.472, 0.005, false,
                  "user-supplied transcription", 3);
    }
    if (!ext_.graph_a_text) {
      skip_check("external-graph-a", "identical split under all three measures",
                 "skipped: external data");
    } else {
      const auto [graph, report] =
          symmetrize(parse_interactions(*ext_.graph_a_text));
      std::vector<Vertex> all = full_universe(graph.vertex_count());
      std::vector<Partition> splits;
      for (MeasureId id :
           {MeasureId::kH2Actual, MeasureId::kH2Decomp, MeasureId::kH2Rpg}) {
        SearchConfig cfg;
        cfg.measure = MeasureSpec{id};
        cfg.latis = 200;
        cfg.seed = seeds_.next_u64();
        splits.push_back(bisect_best(graph, all, cfg).partition);
      }
      const bool same = splits[0].same_blocks(splits[1]) &&
                        splits[1].same_blocks(splits[2]);
      bool_check("external-graph-a", same,
                 "identical split under all three measures",
                 same ? "all three agree" : "splits differ", false,
                 "user-supplied transcription");
    }
  }

  ReplicationScope scope_;
  ExternalData ext_;
  ReplicationReport report_;
  SplitMix64 seeds_{0};
  std::optional<Graph> iv_;
};

}  // namespace

ReplicationReport replicate_suite(ReplicationScope scope, std::uint64_t seed,
                                  const ExternalData& ext) {
  return Suite(scope, seed, ext).run();
}

std::vector<std::string> replication_check_ids() {
  const ReplicationReport report =
      replicate_suite(ReplicationScope::kDeterministic, 0);
  std::vector<std::string> ids;
  for (const auto& c : report.checks) ids.push_back(c.id);
  return ids;
}

}  // namespace hidecs
