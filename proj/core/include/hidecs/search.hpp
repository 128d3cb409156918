#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hidecs/graph.hpp"
#include "hidecs/measures.hpp"

namespace hidecs {

enum class TiePolicy {
  kAuto,           // exhaustive up to 24 vertices, first-canonical above
  kFirstCanonical,  // lowest element id, then lowest destination cell index
  kExhaustive,      // branch on ties, memoized, bounded by tie_branch_cap
  kSeededRandom,
};

struct SearchConfig {
  MeasureSpec measure{MeasureId::kH2Decomp};
  int latis = 1;  // number of random starting bipartitions per bisection
  std::uint64_t seed = 0;
  std::optional<int> max_depth;
  int min_size = 3;  // cells this small are never split
  TiePolicy tie_policy = TiePolicy::kAuto;
  long long tie_branch_cap = 100000;
  int threads = 1;
};

struct BisectResult {
  Partition partition;  // two cells; the cell holding the smallest vertex first
  double value = 0.0;
};

// LATIS random restarts of steepest single-vertex descent. Restart k seeds
// its generator with cfg.seed + k; the start is a fair coin per vertex,
// resampled whenever a side comes out empty. Restarts may run on
// cfg.threads workers; the merge is by (value, canonical assignment), so
// the result does not depend on the schedule.
BisectResult bisect_best(const Graph& g, const std::vector<Vertex>& subset,
                         const SearchConfig& cfg);

struct TreeNode {
  std::vector<Vertex> members;
  double split_value = 0.0;  // meaningful on internal nodes only
  std::unique_ptr<TreeNode> left, right;

  bool is_leaf() const { return !left; }
};

struct DecompositionTree {
  std::unique_ptr<TreeNode> root;

  int depth() const;
  std::vector<const TreeNode*> internal_nodes() const;
  std::vector<const TreeNode*> leaves() const;
};

// Recursive bisection. A cell becomes a leaf when it is a clique, has at
// most cfg.min_size vertices, or sits at cfg.max_depth. Every split draws
// its bisection seed from a SplitMix64 stream over cfg.seed in depth-first
// preorder, so trees are reproducible node by node.
DecompositionTree decompose_topdown(const Graph& g, const SearchConfig& cfg);

std::string serialize_tree(const DecompositionTree& t);  // JSON, 1-based ids
DecompositionTree parse_tree(const std::string& text);

struct AgglomerationResult {
  Partition partition;
  double value = 0.0;
  int merges = 0;
};

// Starts from the unit partition and repeatedly applies the pair merge that
// most lowers the measure; stops when no merge lowers it. Requires an
// any-partition minimizing measure (h2-notes or h3-bldup).
AgglomerationResult bldup_agglomerate(const Graph& g, const SearchConfig& cfg);

struct StablResult {
  Partition partition;
  double value = 0.0;
  std::vector<int> tie_trace;  // equal-best move count per accepted cycle
  long long evaluations = 0;   // candidate partitions scored
  bool cap_hit = false;        // exhaustive search ran into tie_branch_cap
};

// Element-move search: from the unit partition, each cycle scores every
// (element, destination cell) move and applies the best; empty cells are
// dropped. Stops when no move raises the measure. Requires a maximizing
// measure (h3-stabl or newman-q).
StablResult stabl_search(const Graph& g, const SearchConfig& cfg);

// Exact optimum over all nonempty bipartitions of the subset (test oracle).
BisectResult brute_force_bipartition(const Graph& g,
                                     const std::vector<Vertex>& subset,
                                     const MeasureSpec& measure);

// A 25-vertex instance on which greedy top-down bisection provably
// misplaces the hub vertex: eight triangle clusters arranged as two rings
// (left ring L0..L3, right ring R0..R3), plus a vertex x linked to all of
// L2 but to only one member of each right cluster. At the first cut x has
// three links toward the left ring and four toward the right, so a cut
// minimizer pulls x right even though its tightest cluster is L2.
struct LookaheadTrap {
  Graph graph;
  Vertex x = 0;
  std::vector<std::pair<std::string, std::vector<Vertex>>> clusters;

  std::vector<Vertex> left_ring() const;
  std::vector<Vertex> right_ring() const;
  const std::vector<Vertex>& cluster(const std::string& name) const;
};
LookaheadTrap lookahead_trap();

}  // namespace hidecs
