#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hidecs/graph.hpp"

namespace hidecs {

// All measures are evaluated on the induced subgraph of the partition's
// universe: vertex count, link count and the maximum-link constant are
// recomputed for that subgraph.

enum class MeasureId {
  kH2Actual,   // INFO, bipartition, minimize
  kH2Decomp,   // SCORE, bipartition, minimize
  kH2Notes,    // R(pi), any partition, minimize
  kH2Rpg,      // RSCORE, bipartition, minimize
  kH3Bldup,    // INFO2, any partition, minimize
  kH3Stabl,    // EXP, any partition, maximize
  kNewmanQ,    // Q, any partition, maximize
};

enum class Direction { kMinimize, kMaximize };
enum class Arity { kBipartitionOnly, kAnyPartition };

struct MeasureSpec {
  MeasureId id = MeasureId::kH2Decomp;

  Direction direction() const;
  Arity arity() const;
  std::string name() const;  // the CLI identifier, e.g. "h2-decomp"

  // true if `a` is strictly better than `b` by more than eps
  bool better(double a, double b, double eps = 1e-9) const;

  static MeasureSpec from_name(const std::string& name);
  static const std::vector<MeasureSpec>& all();
};

struct MeasureValue {
  double value = 0.0;
  bool degenerate = false;  // denominator vanished; value fixed at 0
  std::vector<std::pair<std::string, double>> intermediates;

  double intermediate(const std::string& name) const;
};

MeasureValue hidecs2_actual(const Graph& g, const Partition& p);
MeasureValue hidecs2_decomp(const Graph& g, const Partition& p);
MeasureValue hidecs2_notes(const Graph& g, const Partition& p);
MeasureValue hidecs2_rpg(const Graph& g, const Partition& p);
MeasureValue hidecs3_bldup(const Graph& g, const Partition& p);
MeasureValue hidecs3_stabl(const Graph& g, const Partition& p);
MeasureValue newman_q(const Graph& g, const Partition& p);

MeasureValue evaluate(const MeasureSpec& spec, const Graph& g,
                      const Partition& p);

// (total / nsq1) * a * b, the expected number of links cut by an a/b split
// of m vertices carrying `total` links.
double expected_cut_links(int m, long long total, int a, int b);

// Closed-form bipartition evaluation from summary counts; this is what the
// searches use for O(1) move evaluation. `n` vertices and `l` links refer
// to the induced subgraph being split.
double bipartition_value(MeasureId id, int n, long long l, int a, int b,
                         long long la, long long lb, long long cut);

// Display rounding used in all reports: half away from zero, 2 decimals for
// the HIDECS measures and 3 for Q and matrix cells.
double round_half_away(double x, int decimals);
std::string format_measure(MeasureId id, double value);

}  // namespace hidecs
