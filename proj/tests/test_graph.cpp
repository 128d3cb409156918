#include <doctest.h>

#include <set>
#include <sstream>

#include "hidecs/datasets.hpp"
#include "hidecs/graph.hpp"
#include "hidecs/rng.hpp"

using namespace hidecs;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph two_triangles() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace

TEST_CASE("interaction parsing") {
  const auto table = parse_interactions("1 : 2\n2 : 1\n");
  CHECK(table.vertex_count == 2);
  CHECK(table.entries.size() == 2);
  const auto [g, report] = symmetrize(table);
  CHECK(g.link_count() == 1);
  CHECK(report.count() == 0);

  CHECK_THROWS_AS(parse_interactions("1 : 1\n"), Error);
  CHECK_THROWS_AS(parse_interactions("1 : 2\n1 : 3\n"), Error);
  CHECK_THROWS_AS(parse_interactions("1 = 2\n"), Error);
  CHECK_THROWS_AS(parse_interactions("1 : 2, x\n"), Error);

  // line numbers in messages
  try {
    parse_interactions("1 : 2\n\nbroken\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  // comments and blanks
  const auto commented = parse_interactions("# header\n\n1 : 2 # inline\n2 : 1\n");
  CHECK(commented.entries.size() == 2);

  // ids out of a declared range are rejected at symmetrization
  RawInteractionTable bad;
  bad.vertex_count = 2;
  bad.entries = {{0, {5}}};
  CHECK_THROWS_AS(symmetrize(bad), Error);
}

TEST_CASE("an empty target list declares an isolated vertex") {
  const auto table = parse_interactions("1 : 2\n2 : 1\n3 :\n");
  CHECK(table.vertex_count == 3);
  const auto [g, report] = symmetrize(table);
  CHECK(g.vertex_count() == 3);
  CHECK(g.degree(2) == 0);
  CHECK(report.count() == 0);
  CHECK_THROWS_AS(parse_interactions("1 : 2,,3\n"), Error);
}

TEST_CASE("symmetrize of an asymmetric table") {
  RawInteractionTable table;
  table.vertex_count = 3;
  table.entries = {{0, {1, 2}}, {1, {0}}, {2, {}}};
  const auto [g, report] = symmetrize(table);
  CHECK(g.link_count() == 1);
  CHECK(g.has_link(0, 1));
  REQUIRE(report.count() == 1);
  CHECK(report.one_way[0] == std::pair<Vertex, Vertex>{0, 2});
  CHECK(report.to_text() == "1 -> 3\n");

  const Graph promoted = symmetrize_promoting(table);
  CHECK(promoted.link_count() == 2);
}

TEST_CASE("symmetrize is idempotent on its own output") {
  const auto bundle = load_dataset("indian-village");
  const auto [g, report] = symmetrize(bundle.table);
  // print the symmetric graph as a table (both directions) and re-run
  RawInteractionTable mirrored;
  mirrored.vertex_count = g.vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    mirrored.entries.emplace_back(v, g.neighbors(v));
  const auto [g2, report2] = symmetrize(parse_interactions(
      serialize_interactions(mirrored)));
  CHECK(report2.count() == 0);
  CHECK(g2.links() == g.links());
}

TEST_CASE("induced subgraph") {
  const Graph g = triangle();
  const Graph same = induced_subgraph(g, {0, 1, 2});
  CHECK(same.link_count() == 3);
  const Graph edge = induced_subgraph(g, {0, 1});
  CHECK(edge.vertex_count() == 2);
  CHECK(edge.link_count() == 1);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 7}), Error);
}

TEST_CASE("clique predicate") {
  const Graph g = triangle();
  CHECK(is_clique(g, {0, 1, 2}));
  CHECK(is_clique(g, {1}));
  CHECK(is_clique(g, {}));
  const Graph path(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_clique(path, {0, 1, 2}));
}

TEST_CASE("link stats") {
  const Graph g = two_triangles();
  const Partition split({0, 1, 2, 3, 4, 5}, {{0, 1, 2}, {3, 4, 5}});
  const LinkStats stats = link_stats(g, split);
  CHECK(stats.internal == std::vector<long long>{3, 3});
  CHECK(stats.cut == 0);

  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const LinkStats k4_stats =
      link_stats(k4, Partition({0, 1, 2, 3}, {{0, 1}, {2, 3}}));
  CHECK(k4_stats.internal == std::vector<long long>{1, 1});
  CHECK(k4_stats.cut == 4);
}

TEST_CASE("total equals internal plus cut on random graphs") {
  SplitMix64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const int m = 2 + static_cast<int>(rng.next_below(14));
    std::vector<Link> links;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (rng.next_bool()) links.emplace_back(a, b);
    const Graph g(m, links);
    CHECK(g.link_count() <= g.max_links());

    std::vector<std::vector<Vertex>> cells(1 + rng.next_below(4));
    for (int v = 0; v < m; ++v) cells[rng.next_below(cells.size())].push_back(v);
    cells.erase(std::remove_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.empty(); }),
                cells.end());
    std::vector<Vertex> universe(m);
    for (int v = 0; v < m; ++v) universe[v] = v;
    const LinkStats stats = link_stats(g, Partition(universe, cells));
    long long internal = 0;
    for (long long x : stats.internal) internal += x;
    CHECK(internal + stats.cut == g.link_count());
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({0, 1}, {{0}, {0, 1}}), Error);   // overlap
  CHECK_THROWS_AS(Partition({0, 1}, {{0}}), Error);           // not covering
  CHECK_THROWS_AS(Partition({0, 1}, {{0}, {}, {1}}), Error);  // empty cell
  CHECK_THROWS_AS(Partition({0}, {{0, 1}}), Error);           // outside universe

  const Partition p({2, 0, 1}, {{1, 0}, {2}});
  CHECK(p.universe() == std::vector<Vertex>{0, 1, 2});
  CHECK(p.cell_of(2) == 1);
}

TEST_CASE("partition file round trip") {
  const Partition p({0, 1, 2, 3}, {{0, 2}, {1, 3}});
  const Partition q = parse_partition_file(serialize_partition(p));
  CHECK(p.same_blocks(q));
  CHECK_THROWS_AS(parse_partition_file("{}"), Error);
  CHECK_THROWS_AS(parse_partition_file("not json"), Error);
  CHECK_THROWS_AS(parse_partition_file(R"({"sets": [[0]]})"), Error);
}
