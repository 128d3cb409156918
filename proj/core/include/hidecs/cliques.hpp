#pragma once

#include <string>
#include <vector>

#include "hidecs/graph.hpp"

namespace hidecs {

// All maximal cliques, each reported once in canonical order: size
// descending, then lexicographic on the sorted member lists.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

// Leveled overlap structure. Level 0 holds one node per graph vertex,
// level 1 the given vertex sets, and each further level the connected
// components of the previous level's overlap graph (nodes adjacent iff
// their sets intersect), each component merged into the union of its
// members. Arcs run from a node to a containing node one level up.
struct SemilatticeNode {
  int id = 0;
  int level = 0;
  std::vector<Vertex> members;
};

struct Semilattice {
  std::vector<SemilatticeNode> nodes;           // ordered by (level, id)
  std::vector<std::pair<int, int>> arcs;        // child id -> parent id
  int levels = 0;

  std::vector<int> level_nodes(int level) const;
  const SemilatticeNode& node(int id) const { return nodes[id]; }
};

// Construction stops when a level holds a single node or adds no merging.
Semilattice recompose_semilattice(const Graph& g,
                                  const std::vector<std::vector<Vertex>>& sets);

std::string serialize_semilattice(const Semilattice& s);  // JSON, 1-based ids
Semilattice parse_semilattice(const std::string& text);

}  // namespace hidecs
