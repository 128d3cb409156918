#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hidecs/cliques.hpp"
#include "hidecs/graph.hpp"
#include "hidecs/search.hpp"

namespace hidecs {

// Symmetric matrix of link-density ratios: diagonal entry for cell M is
// l_M / (|M| choose 2) (0 for singletons), off-diagonal (M,N) is
// links(M,N) / (|M| * |N|). All entries lie in [0,1].
struct CohesionCouplingMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;

  double at(int i, int j) const { return values[i][j]; }
  int size() const { return static_cast<int>(labels.size()); }
  std::string to_text() const;  // aligned table, 3-decimal cells
};

CohesionCouplingMatrix cohesion_coupling_matrix(
    const Graph& g, const Partition& p,
    const std::vector<std::string>& labels = {});

// Diagonal and upper-triangle values, each sorted descending.
struct RatioSeries {
  std::vector<double> cohesion;
  std::vector<double> coupling;

  std::string to_csv() const;
};
RatioSeries sorted_ratio_series(const CohesionCouplingMatrix& m);

// The partition formed by the tree nodes at the given depth; leaves above
// that depth contribute themselves.
Partition tree_level_partition(const DecompositionTree& t, int level);

// Maximum-total-overlap one-to-one assignment between the cells of two
// partitions of the same universe; ties resolved toward the lowest cell
// indices. Cells of the larger partition left over are reported unpaired.
struct PartitionPairing {
  struct Pair {
    int a_cell = 0;
    int b_cell = 0;
    long long overlap = 0;
  };
  std::vector<Pair> pairs;        // ordered by a_cell
  std::vector<int> unpaired_a;
  std::vector<int> unpaired_b;
  long long total_overlap = 0;
};
PartitionPairing pair_partitions(const Partition& pa, const Partition& pb);

struct CutSample {
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
};

// Monte Carlo over graphs drawn uniformly among all graphs with exactly
// `total` links on m vertices, with a fixed a/(m-a) split: mean and
// variance of the cut count. Trials are split across `workers` streams
// with derived seeds; the worker count is part of the reproducibility
// contract and defaults to 1.
CutSample estimate_cut_stats(int m, long long total, int a, long long samples,
                             std::uint64_t seed, int workers = 1);

// Companion estimator: the graph is fixed and the a/(m-a) splits are drawn
// uniformly at random instead.
CutSample estimate_cut_stats_splits(const Graph& g, int a, long long samples,
                                    std::uint64_t seed, int workers = 1);

// Lights process: all lights start on. Each second the lights are visited
// in ascending order; a lit light goes out with probability 1/2, and an
// unlit light comes on with probability 1/2 if some currently lit light is
// connected to it. Returns the mean first second at which every light is
// out. Settle times grow exponentially with link density; max_steps > 0
// aborts with an error once any trial exceeds that many seconds.
double simulate_homeostasis(const Graph& g, long long trials,
                            std::uint64_t seed, int workers = 1,
                            long long max_steps = 0);

// Layered drawing order with barycenter crossing minimization.
struct LayeredLayout {
  std::vector<std::vector<int>> order;  // node ids per level, left to right
  long long crossings = 0;
  long long initial_crossings = 0;
};

LayeredLayout layout_layers(const Semilattice& s);

long long count_crossings(const Semilattice& s,
                          const std::vector<std::vector<int>>& order);

}  // namespace hidecs
