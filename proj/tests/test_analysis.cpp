#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hidecs/analysis.hpp"
#include "hidecs/datasets.hpp"
#include "hidecs/graph.hpp"
#include "hidecs/measures.hpp"
#include "hidecs/rng.hpp"

using namespace hidecs;

namespace {

std::vector<Vertex> all_of(const Graph& g) {
  std::vector<Vertex> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
  return out;
}

}  // namespace

TEST_CASE("cohesion and coupling ratios") {
  // a clique cell scores a full diagonal; unlinked cells score zero
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}});
  const Partition p({0, 1, 2, 3, 4}, {{0, 1, 2}, {3, 4}});
  const CohesionCouplingMatrix m = cohesion_coupling_matrix(g, p);
  CHECK(m.at(0, 0) == doctest::Approx(1.0));
  CHECK(m.at(1, 1) == doctest::Approx(0.0));
  CHECK(m.at(0, 1) == doctest::Approx(0.0));
  CHECK(m.at(1, 0) == m.at(0, 1));

  // singleton cells have no internal slots; defined as 0
  const CohesionCouplingMatrix s =
      cohesion_coupling_matrix(g, Partition({0, 1}, {{0}, {1}}));
  CHECK(s.at(0, 0) == 0.0);
  CHECK(s.at(0, 1) == doctest::Approx(1.0));

  // entries stay in [0,1] and the matrix is exactly symmetric
  SplitMix64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(12));
    std::vector<Link> links;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.next_bool()) links.emplace_back(a, b);
    const Graph h(n, links);
    std::vector<std::vector<Vertex>> cells(1 + rng.next_below(4));
    for (int v = 0; v < n; ++v) cells[rng.next_below(cells.size())].push_back(v);
    cells.erase(std::remove_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.empty(); }),
                cells.end());
    const CohesionCouplingMatrix r =
        cohesion_coupling_matrix(h, Partition(all_of(h), cells));
    for (int i = 0; i < r.size(); ++i)
      for (int j = 0; j < r.size(); ++j) {
        CHECK(r.at(i, j) >= 0.0);
        CHECK(r.at(i, j) <= 1.0);
        CHECK(r.at(i, j) == r.at(j, i));
      }
  }
}

TEST_CASE("matrix text uses 3-decimal dot cells") {
  const Graph g(4, {{0, 1}, {0, 2}, {1, 2}});
  const Partition p({0, 1, 2, 3}, {{0, 1, 2}, {3}});
  const std::string text =
      cohesion_coupling_matrix(g, p, {"M", "N"}).to_text();
  CHECK(text.find("1.000") != std::string::npos);
  CHECK(text.find(".000") != std::string::npos);
}

TEST_CASE("sorted ratio series") {
  const auto& ref = reference_partitions();
  const Graph iv = load_dataset("indian-village").graph();
  const CohesionCouplingMatrix m =
      cohesion_coupling_matrix(iv, ref.get("ca-pi4"), ref.labels.at("ca-pi4"));
  const RatioSeries series = sorted_ratio_series(m);
  REQUIRE(series.cohesion.size() == 12);
  REQUIRE(series.coupling.size() == 66);
  CHECK(series.cohesion[0] == doctest::Approx(0.7778).epsilon(1e-3));
  CHECK(series.cohesion[1] == doctest::Approx(0.6818).epsilon(1e-3));
  CHECK(std::is_sorted(series.cohesion.rbegin(), series.cohesion.rend()));
  CHECK(std::is_sorted(series.coupling.rbegin(), series.coupling.rend()));

  // invariant under cell reordering
  auto cells = ref.get("ca-pi4").cells();
  std::rotate(cells.begin(), cells.begin() + 5, cells.end());
  const RatioSeries rotated = sorted_ratio_series(cohesion_coupling_matrix(
      iv, Partition(ref.get("ca-pi4").universe(), cells)));
  CHECK(rotated.cohesion == series.cohesion);
  CHECK(rotated.coupling == series.coupling);

  // all-clique cells give a constant full series
  const Graph tri(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const RatioSeries ones = sorted_ratio_series(cohesion_coupling_matrix(
      tri, Partition({0, 1, 2, 3, 4, 5}, {{0, 1, 2}, {3, 4, 5}})));
  CHECK(ones.cohesion == std::vector<double>{1.0, 1.0});

  CHECK(series.to_csv().rfind("rank,cohesion,coupling\n", 0) == 0);
}

TEST_CASE("tree level partitions") {
  // a reference-shaped tree: level 2 holds the four letter sets and level 4
  // the twelve subsets, with one branch bottoming out a level early
  const auto& ref = reference_partitions();
  auto leaf = [&](const std::string& name) {
    auto node = std::make_unique<TreeNode>();
    node->members = ref.set(name);
    return node;
  };
  auto join = [](std::unique_ptr<TreeNode> l, std::unique_ptr<TreeNode> r) {
    auto node = std::make_unique<TreeNode>();
    node->members = l->members;
    node->members.insert(node->members.end(), r->members.begin(),
                         r->members.end());
    std::sort(node->members.begin(), node->members.end());
    node->left = std::move(l);
    node->right = std::move(r);
    return node;
  };
  auto a = join(leaf("A1"), join(leaf("A2"), leaf("A3")));
  auto b = join(join(leaf("B1"), leaf("B2")), join(leaf("B3"), leaf("B4")));
  auto c = join(leaf("C1"), leaf("C2"));  // leaves at level 3
  auto d = join(leaf("D1"), join(leaf("D2"), leaf("D3")));
  DecompositionTree tree;
  tree.root = join(join(std::move(a), std::move(c)),
                   join(std::move(b), std::move(d)));

  CHECK(tree_level_partition(tree, 0).cell_count() == 1);
  const Partition level2 = tree_level_partition(tree, 2);
  CHECK(level2.cell_count() == 4);
  CHECK(level2.same_blocks(Partition(level2.universe(),
                                     {ref.set("A"), ref.set("B"), ref.set("C"),
                                      ref.set("D")})));
  const Partition level4 = tree_level_partition(tree, 4);
  CHECK(level4.same_blocks(ref.get("ca-pi4")));
  // leaves persist below their depth
  CHECK(tree_level_partition(tree, 9).same_blocks(level4));
  CHECK_THROWS_AS(tree_level_partition(tree, -1), Error);
}

TEST_CASE("partition pairing") {
  const auto& ref = reference_partitions();
  // identical partitions pair cell for cell at full overlap
  const PartitionPairing self =
      pair_partitions(ref.get("ca-pi4"), ref.get("ca-pi4"));
  CHECK(self.total_overlap == 141);
  for (const auto& pair : self.pairs) CHECK(pair.a_cell == pair.b_cell);

  // the reference pairing against the first embedded 16-set run
  const PartitionPairing pp =
      pair_partitions(ref.get("ca-pi4"), ref.get("rpg1-pi4"));
  REQUIRE(pp.pairs.size() == 12);
  CHECK(pp.unpaired_b.size() == 4);
  CHECK(pp.pairs[5].overlap == 10);  // B3 row
  CHECK(pp.pairs[7].overlap == 15);  // C1 row

  CHECK_THROWS_AS(
      pair_partitions(ref.get("ca-pi4"),
                      Partition({0, 1}, {{0}, {1}})),
      Error);
}

TEST_CASE("pairing matches exhaustive assignment") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 6 + static_cast<int>(rng.next_below(8));
    auto random_cells = [&](int k) {
      std::vector<std::vector<Vertex>> cells;
      do {
        cells.assign(k, {});
        for (int v = 0; v < m; ++v) cells[rng.next_below(k)].push_back(v);
        cells.erase(std::remove_if(cells.begin(), cells.end(),
                                   [](const auto& c) { return c.empty(); }),
                    cells.end());
      } while (cells.empty());
      return cells;
    };
    std::vector<Vertex> universe;
    for (int v = 0; v < m; ++v) universe.push_back(v);
    const Partition pa(universe, random_cells(3));
    const Partition pb(universe, random_cells(5));
    const PartitionPairing pairing = pair_partitions(pa, pb);

    // exhaustive search over all injections of the smaller side
    const Partition& small = pa.cell_count() <= pb.cell_count() ? pa : pb;
    const Partition& large = pa.cell_count() <= pb.cell_count() ? pb : pa;
    std::vector<int> idx(large.cell_count());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    long long best = -1;
    do {
      long long total = 0;
      for (int i = 0; i < small.cell_count(); ++i) {
        const auto& sc = small.cells()[i];
        const auto& lc = large.cells()[idx[i]];
        for (Vertex v : sc)
          if (std::binary_search(lc.begin(), lc.end(), v)) ++total;
      }
      best = std::max(best, total);
    } while (std::next_permutation(idx.begin(), idx.end()));
    CHECK(pairing.total_overlap == best);
  }
}

TEST_CASE("cut estimator on forced cases") {
  // complete graph: the cut is forced to a*(m-a)
  const CutSample forced = estimate_cut_stats(6, 15, 2, 500, 9);
  CHECK(forced.mean == doctest::Approx(8.0));
  CHECK(forced.variance == doctest::Approx(0.0));

  CHECK_THROWS_AS(estimate_cut_stats(4, 99, 2, 10, 1), Error);
  CHECK_THROWS_AS(estimate_cut_stats(4, 3, 0, 10, 1), Error);
  CHECK_THROWS_AS(estimate_cut_stats(4, 3, 2, 0, 1), Error);
}

TEST_CASE("cut estimator mean tracks the analytic expectation") {
  SplitMix64 seeds(44);
  int within = 0;
  const int runs = 20;
  for (int i = 0; i < runs; ++i) {
    const CutSample s = estimate_cut_stats(9, 14, 5, 20000, seeds.next_u64());
    const double analytic = expected_cut_links(9, 14, 5, 4);
    const double stderr_mean = std::sqrt(s.variance / 20000.0);
    if (std::abs(s.mean - analytic) <= 3.0 * stderr_mean) ++within;
  }
  CHECK(within >= runs - 1);  // 3-sigma misses are rare
}

TEST_CASE("cut estimator worker split is deterministic") {
  const CutSample one = estimate_cut_stats(9, 14, 5, 10000, 5, 1);
  const CutSample same = estimate_cut_stats(9, 14, 5, 10000, 5, 1);
  CHECK(one.mean == same.mean);
  CHECK(one.variance == same.variance);
}

TEST_CASE("split-sampling estimator") {
  const Graph iv = load_dataset("indian-village").graph();
  const CutSample s = estimate_cut_stats_splits(iv, 75, 20000, 11);
  CHECK(s.mean == doctest::Approx(693.60).epsilon(0.01));
  CHECK(s.variance == doctest::Approx(293.60).epsilon(0.10));
}

TEST_CASE("lights settle times") {
  // one isolated light: geometric with mean 2
  const Graph one(1, {});
  CHECK(simulate_homeostasis(one, 40000, 3) == doctest::Approx(2.0).epsilon(0.02));

  // two isolated lights: mean of the larger of two geometrics, 8/3
  const Graph two(2, {});
  CHECK(simulate_homeostasis(two, 40000, 4) ==
        doctest::Approx(8.0 / 3.0).epsilon(0.02));

  CHECK_THROWS_AS(simulate_homeostasis(one, 0, 1), Error);

  // the step budget aborts rather than spinning on dense networks
  const Graph cp = load_dataset("community-privacy").graph();
  CHECK_THROWS_AS(simulate_homeostasis(cp, 1, 1, 1, 1000), Error);
}

TEST_CASE("layout sweeps remove the hand-checked crossing") {
  Semilattice s;
  s.levels = 2;
  s.nodes = {{0, 0, {0}}, {1, 0, {1}}, {2, 1, {1}}, {3, 1, {0}}};
  s.arcs = {{0, 3}, {1, 2}};
  // canonical order (0,1) below and (2,3) above crosses once
  CHECK(count_crossings(s, {{0, 1}, {2, 3}}) == 1);
  const LayeredLayout layout = layout_layers(s);
  CHECK(layout.initial_crossings == 1);
  CHECK(layout.crossings == 0);

  // a tree has a planar layered drawing
  const Graph forest(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
  const Semilattice tree_like =
      recompose_semilattice(forest, maximal_cliques(forest));
  CHECK(layout_layers(tree_like).crossings == 0);
}

TEST_CASE("layout never increases crossings") {
  SplitMix64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    Semilattice s;
    s.levels = 2 + static_cast<int>(rng.next_below(2));
    int id = 0;
    std::vector<std::vector<int>> by_level(s.levels);
    for (int level = 0; level < s.levels; ++level) {
      const int width = 2 + static_cast<int>(rng.next_below(5));
      for (int i = 0; i < width; ++i) {
        s.nodes.push_back({id, level, {id}});
        by_level[level].push_back(id);
        ++id;
      }
    }
    for (int level = 0; level + 1 < s.levels; ++level)
      for (int child : by_level[level])
        if (!by_level[level + 1].empty())
          s.arcs.emplace_back(
              child,
              by_level[level + 1][rng.next_below(by_level[level + 1].size())]);
    const LayeredLayout layout = layout_layers(s);
    CHECK(layout.crossings <= layout.initial_crossings);
  }
}
