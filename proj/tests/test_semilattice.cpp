#include <doctest.h>

#include <algorithm>
#include <set>

#include "hidecs/cliques.hpp"
#include "hidecs/datasets.hpp"
#include "hidecs/graph.hpp"

using namespace hidecs;

namespace {

void check_structure(const Semilattice& s) {
  // arcs climb exactly one level, and every node is the union of its
  // children (vertices at level 0 have none)
  for (const auto& [child, parent] : s.arcs)
    CHECK(s.node(parent).level == s.node(child).level + 1);
  for (const auto& node : s.nodes) {
    if (node.level == 0) {
      CHECK(node.members.size() == 1);
      continue;
    }
    std::set<Vertex> from_children;
    for (const auto& [child, parent] : s.arcs)
      if (parent == node.id)
        from_children.insert(s.node(child).members.begin(),
                             s.node(child).members.end());
    CHECK(std::set<Vertex>(node.members.begin(), node.members.end()) ==
          from_children);
  }
}

}  // namespace

TEST_CASE("disjoint cliques stay apart") {
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
  const auto cliques = maximal_cliques(g);
  const Semilattice s = recompose_semilattice(g, cliques);
  CHECK(s.levels == 2);  // no overlap, nothing merges above the sets
  CHECK(s.level_nodes(1).size() == 2);
  check_structure(s);
}

TEST_CASE("overlap components merge level by level") {
  const Graph g(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {5, 6}});
  const std::vector<std::vector<Vertex>> sets = {{0, 1, 2}, {2, 3, 4}, {5, 6}};
  const Semilattice s = recompose_semilattice(g, sets);
  REQUIRE(s.levels == 3);
  const auto top = s.level_nodes(2);
  REQUIRE(top.size() == 2);
  CHECK(s.node(top[0]).members == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(s.node(top[1]).members == std::vector<Vertex>{5, 6});
  check_structure(s);

  CHECK_THROWS_AS(recompose_semilattice(g, {}), Error);
}

TEST_CASE("vertices may sit under several sets") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  const Semilattice s = recompose_semilattice(g, maximal_cliques(g));
  int parents_of_1 = 0;
  for (const auto& [child, parent] : s.arcs) {
    (void)parent;
    if (s.node(child).level == 0 && s.node(child).members == std::vector<Vertex>{1})
      ++parents_of_1;
  }
  CHECK(parents_of_1 == 2);  // vertex 1 belongs to the cliques {0,1} and {1,2}
  check_structure(s);
}

TEST_CASE("the dwelling dataset recomposes into a deep overlap structure") {
  const Graph g = load_dataset("community-privacy").graph();
  const auto cliques = maximal_cliques(g);
  CHECK(cliques.size() > 30);  // heavily overlapping cover
  const Semilattice s = recompose_semilattice(g, cliques);
  CHECK(s.levels >= 3);
  check_structure(s);
  // serialization round trip
  const Semilattice back = parse_semilattice(serialize_semilattice(s));
  CHECK(back.nodes.size() == s.nodes.size());
  CHECK(back.arcs == s.arcs);
  CHECK(back.levels == s.levels);
}
