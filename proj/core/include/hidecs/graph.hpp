#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hidecs {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vertices are 0-based everywhere inside the library; all file formats and
// printed output use 1-based ids matching the published tables.
using Vertex = int;
using Link = std::pair<Vertex, Vertex>;  // normalized: first < second

// A directed interaction table as read from an interaction file, before
// symmetrization. Entry order and target order are preserved verbatim.
struct RawInteractionTable {
  int vertex_count = 0;
  std::vector<std::pair<Vertex, std::vector<Vertex>>> entries;

  int directed_entry_count() const;
};

// Symmetric, unsigned, loop-free link structure.
class Graph {
 public:
  Graph() = default;
  // links may be unsorted and contain either orientation but no duplicates
  // or self-pairs.
  Graph(int vertex_count, std::vector<Link> links,
        std::vector<std::string> labels = {});

  int vertex_count() const { return m_; }
  long long link_count() const { return total_; }
  long long max_links() const {  // nsq1
    return static_cast<long long>(m_) * (m_ - 1) / 2;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_link(Vertex a, Vertex b) const;
  const std::vector<Link>& links() const { return links_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;

 private:
  int m_ = 0;
  long long total_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Link> links_;  // sorted
  std::vector<std::string> labels_;
};

// One record per directed entry that lacks its mirror: `from` listed `to`
// but not vice versa. Printed as "<from> -> <to>".
struct AsymmetryReport {
  std::vector<std::pair<Vertex, Vertex>> one_way;
  std::map<Vertex, int> per_vertex;

  int count() const { return static_cast<int>(one_way.size()); }
  int touching(Vertex v) const;
  std::string to_text() const;  // 1-based, one line per entry
};

// Disjoint nonempty cells covering `universe`. Cells and universe are kept
// sorted; cell order is the construction order.
class Partition {
 public:
  Partition(std::vector<Vertex> universe, std::vector<std::vector<Vertex>> cells);

  static Partition single_cell(std::vector<Vertex> universe);
  static Partition unit(std::vector<Vertex> universe);  // all singletons

  const std::vector<Vertex>& universe() const { return universe_; }
  const std::vector<std::vector<Vertex>>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  int cell_of(Vertex v) const;  // index into cells()

  bool same_blocks(const Partition& other) const;  // cell order ignored

 private:
  std::vector<Vertex> universe_;
  std::vector<std::vector<Vertex>> cells_;
  std::map<Vertex, int> cell_of_;
};

// Interaction file format: one line per source, `<id> : <id>, <id>, ...`,
// `#` starts a comment, blank lines ignored, ids decimal and 1-based.
// The declared vertex count is the largest id seen.
RawInteractionTable parse_interactions(const std::string& text);

// Canonical serialization; parse_interactions is its exact inverse.
std::string serialize_interactions(const RawInteractionTable& table);

// SYMET rule: keep link {i,j} iff j is listed under i AND i under j; the
// report collects every one-way entry in table order.
std::pair<Graph, AsymmetryReport> symmetrize(const RawInteractionTable& table);

// Promotion variant (one-way entries become links); off by default and
// exposed only for experimentation.
Graph symmetrize_promoting(const RawInteractionTable& table);

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);

// Per-cell internal link counts, cross-cell counts and the cut total,
// evaluated on g restricted to the partition's universe.
struct LinkStats {
  std::vector<long long> internal;            // l_i per cell
  std::vector<std::vector<long long>> cross;  // symmetric, zero diagonal
  long long cut = 0;                          // links split by the partition
  long long total = 0;                        // links inside the universe
};
LinkStats link_stats(const Graph& g, const Partition& p);

// Partition file: JSON document {"sets": [[ids...], ...]} with 1-based ids.
Partition parse_partition_file(const std::string& text,
                               const std::vector<Vertex>& universe_hint = {});
std::string serialize_partition(const Partition& p);

}  // namespace hidecs
