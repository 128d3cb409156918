#include "hidecs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "hidecs/measures.hpp"
#include "hidecs/rng.hpp"

namespace hidecs {

namespace {

// ".444" style cells, matching the published tables.
std::string ratio_cell(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.3f", round_half_away(v, 3));
  std::string s = buf;
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);
  return s;
}

}  // namespace

std::string CohesionCouplingMatrix::to_text() const {
  std::size_t w = 4;
  for (const auto& label : labels) w = std::max(w, label.size());
  std::ostringstream out;
  out << std::string(w, ' ');
  for (const auto& label : labels) {
    out << "  ";
    out << std::string(w >= label.size() ? w - label.size() : 0, ' ') << label;
  }
  out << "\n";
  for (int i = 0; i < size(); ++i) {
    const auto& label = labels[i];
    out << std::string(w >= label.size() ? w - label.size() : 0, ' ') << label;
    for (int j = 0; j < size(); ++j) {
      std::string cell = ratio_cell(values[i][j]);
      out << "  " << std::string(w >= cell.size() ? w - cell.size() : 0, ' ')
          << cell;
    }
    out << "\n";
  }
  return out.str();
}

CohesionCouplingMatrix cohesion_coupling_matrix(
    const Graph& g, const Partition& p, const std::vector<std::string>& labels) {
  const int k = p.cell_count();
  if (!labels.empty() && static_cast<int>(labels.size()) != k)
    throw Error("label count does not match cell count");
  CohesionCouplingMatrix m;
  m.labels = labels;
  if (m.labels.empty())
    for (int i = 0; i < k; ++i) m.labels.push_back(std::to_string(i + 1));
  m.values.assign(k, std::vector<double>(k, 0.0));
  const LinkStats stats = link_stats(g, p);
  for (int i = 0; i < k; ++i) {
    const double si = static_cast<double>(p.cells()[i].size());
    const double max_internal = si * (si - 1) / 2.0;
    m.values[i][i] =
        max_internal > 0 ? static_cast<double>(stats.internal[i]) / max_internal
                         : 0.0;
    for (int j = i + 1; j < k; ++j) {
      const double sj = static_cast<double>(p.cells()[j].size());
      const double v = static_cast<double>(stats.cross[i][j]) / (si * sj);
      m.values[i][j] = m.values[j][i] = v;
    }
  }
  return m;
}

RatioSeries sorted_ratio_series(const CohesionCouplingMatrix& m) {
  RatioSeries s;
  for (int i = 0; i < m.size(); ++i) {
    s.cohesion.push_back(m.values[i][i]);
    for (int j = i + 1; j < m.size(); ++j) s.coupling.push_back(m.values[i][j]);
  }
  std::sort(s.cohesion.rbegin(), s.cohesion.rend());
  std::sort(s.coupling.rbegin(), s.coupling.rend());
  return s;
}

std::string RatioSeries::to_csv() const {
  std::ostringstream out;
  out << "rank,cohesion,coupling\n";
  const std::size_t rows = std::max(cohesion.size(), coupling.size());
  for (std::size_t i = 0; i < rows; ++i) {
    out << (i + 1) << ",";
    if (i < cohesion.size()) out << ratio_cell(cohesion[i]);
    out << ",";
    if (i < coupling.size()) out << ratio_cell(coupling[i]);
    out << "\n";
  }
  return out.str();
}

Partition tree_level_partition(const DecompositionTree& t, int level) {
  if (level < 0) throw Error("level must be nonnegative");
  std::vector<std::vector<Vertex>> cells;
  std::function<void(const TreeNode*, int)> walk = [&](const TreeNode* node,
                                                       int depth) {
    if (depth == level || node->is_leaf()) {
      cells.push_back(node->members);
      return;
    }
    walk(node->left.get(), depth + 1);
    walk(node->right.get(), depth + 1);
  };
  walk(t.root.get(), 0);
  return Partition(t.root->members, std::move(cells));
}

PartitionPairing pair_partitions(const Partition& pa, const Partition& pb) {
  if (pa.universe() != pb.universe())
    throw Error("pair_partitions needs partitions of the same universe");
  const bool swapped = pa.cell_count() > pb.cell_count();
  const Partition& small = swapped ? pb : pa;
  const Partition& large = swapped ? pa : pb;
  const int ns = small.cell_count(), nl = large.cell_count();
  if (nl > 24) throw Error("pair_partitions handles up to 24 cells");

  std::vector<std::vector<long long>> overlap(ns, std::vector<long long>(nl, 0));
  for (Vertex v : pa.universe()) {
    const int ca = small.cell_of(v), cb = large.cell_of(v);
    ++overlap[ca][cb];
  }

  // Exact assignment by subset DP over the larger side; processing the
  // smaller side's cells in index order and preferring the lowest partner
  // makes the tie-break canonical.
  const int full = 1 << nl;
  const long long kNeg = -1;
  std::vector<std::vector<long long>> dp(ns + 1,
                                         std::vector<long long>(full, kNeg));
  dp[0][0] = 0;
  for (int i = 0; i < ns; ++i)
    for (int mask = 0; mask < full; ++mask) {
      if (dp[i][mask] == kNeg) continue;
      for (int j = 0; j < nl; ++j) {
        if (mask & (1 << j)) continue;
        long long& slot = dp[i + 1][mask | (1 << j)];
        slot = std::max(slot, dp[i][mask] + overlap[i][j]);
      }
    }
  long long best = kNeg;
  int best_mask = 0;
  for (int mask = 0; mask < full; ++mask)
    if (dp[ns][mask] > best) {
      best = dp[ns][mask];
      best_mask = mask;
    }

  // Reconstruct, preferring the lowest large-side index at every step.
  std::vector<int> partner(ns, -1);
  int mask = best_mask;
  for (int i = ns; i > 0; --i) {
    for (int j = 0; j < nl; ++j) {
      if (!(mask & (1 << j))) continue;
      const int prev = mask ^ (1 << j);
      if (dp[i - 1][prev] != kNeg &&
          dp[i - 1][prev] + overlap[i - 1][j] == dp[i][mask]) {
        partner[i - 1] = j;
        mask = prev;
        break;
      }
    }
  }

  PartitionPairing out;
  out.total_overlap = best;
  std::vector<bool> used(nl, false);
  for (int i = 0; i < ns; ++i) {
    used[partner[i]] = true;
    PartitionPairing::Pair pair;
    pair.a_cell = swapped ? partner[i] : i;
    pair.b_cell = swapped ? i : partner[i];
    pair.overlap = overlap[i][partner[i]];
    out.pairs.push_back(pair);
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const auto& x, const auto& y) { return x.a_cell < y.a_cell; });
  for (int j = 0; j < nl; ++j)
    if (!used[j]) (swapped ? out.unpaired_a : out.unpaired_b).push_back(j);
  return out;
}

namespace {

// Cut count of one uniformly random graph with exactly `total` links:
// sequential without-replacement draws over the nsq1 link slots, tracking
// only whether each drawn slot crosses the fixed split.
long long sample_cut(SplitMix64& rng, long long nsq1, long long crossing_slots,
                     long long total) {
  long long cut = 0;
  long long remaining_cross = crossing_slots;
  for (long long t = 0; t < total; ++t) {
    if (static_cast<long long>(rng.next_below(
            static_cast<std::uint64_t>(nsq1 - t))) < remaining_cross) {
      ++cut;
      --remaining_cross;
    }
  }
  return cut;
}

struct Accumulator {
  double sum = 0, sumsq = 0;
  long long n = 0;

  void add(double x) {
    sum += x;
    sumsq += x * x;
    ++n;
  }
  void merge(const Accumulator& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    n += o.n;
  }
  CutSample finish() const {
    CutSample out;
    out.mean = sum / static_cast<double>(n);
    out.variance = n > 1 ? (sumsq - sum * sum / static_cast<double>(n)) /
                               static_cast<double>(n - 1)
                         : 0.0;
    return out;
  }
};

CutSample run_workers(long long samples, std::uint64_t seed, int workers,
                      const std::function<double(SplitMix64&)>& one) {
  workers = std::max(1, workers);
  std::vector<Accumulator> acc(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto chunk = [&](int w) {
    try {
      SplitMix64 rng(mix_seed(seed + static_cast<std::uint64_t>(w)));
      const long long lo = samples * w / workers;
      const long long hi = samples * (w + 1) / workers;
      for (long long i = lo; i < hi; ++i) acc[w].add(one(rng));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  Accumulator total;
  for (const auto& a : acc) total.merge(a);
  return total.finish();
}

}  // namespace

CutSample estimate_cut_stats(int m, long long total, int a, long long samples,
                             std::uint64_t seed, int workers) {
  if (m < 2 || a < 1 || a >= m) throw Error("impossible split sizes");
  if (samples < 1) throw Error("need at least one sample");
  const long long nsq1 = static_cast<long long>(m) * (m - 1) / 2;
  if (total < 0 || total > nsq1) throw Error("impossible link count");
  const long long crossing_slots = static_cast<long long>(a) * (m - a);
  return run_workers(samples, seed, workers, [&](SplitMix64& rng) {
    return static_cast<double>(sample_cut(rng, nsq1, crossing_slots, total));
  });
}

CutSample estimate_cut_stats_splits(const Graph& g, int a, long long samples,
                                    std::uint64_t seed, int workers) {
  const int m = g.vertex_count();
  if (m < 2 || a < 1 || a >= m) throw Error("impossible split sizes");
  if (samples < 1) throw Error("need at least one sample");
  const auto& links = g.links();
  return run_workers(samples, seed, workers, [&, m, a](SplitMix64& rng) {
    // Uniform a-subset by partial Fisher-Yates.
    std::vector<int> ids(m);
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<std::uint8_t> in_a(m, 0);
    for (int i = 0; i < a; ++i) {
      const int j =
          i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m - i)));
      std::swap(ids[i], ids[j]);
      in_a[ids[i]] = 1;
    }
    long long cut = 0;
    for (const auto& [x, y] : links)
      if (in_a[x] != in_a[y]) ++cut;
    return static_cast<double>(cut);
  });
}

double simulate_homeostasis(const Graph& g, long long trials,
                            std::uint64_t seed, int workers,
                            long long max_steps) {
  if (trials < 1) throw Error("need at least one trial");
  const int n = g.vertex_count();
  const CutSample out =
      run_workers(trials, seed, workers, [&](SplitMix64& rng) {
        std::vector<std::uint8_t> on(n, 1);
        int lit = n;
        long long step = 0;
        while (lit > 0) {
          ++step;
          if (max_steps > 0 && step > max_steps)
            throw Error("a trial exceeded " + std::to_string(max_steps) +
                        " steps; the network is too densely linked to settle");
          for (int v = 0; v < n; ++v) {
            if (on[v]) {
              if (rng.next_bool()) {
                on[v] = 0;
                --lit;
              }
            } else {
              bool neighbor_on = false;
              for (Vertex u : g.neighbors(v))
                if (on[u]) {
                  neighbor_on = true;
                  break;
                }
              if (neighbor_on && rng.next_bool()) {
                on[v] = 1;
                ++lit;
              }
            }
          }
        }
        return static_cast<double>(step);
      });
  return out.mean;
}

long long count_crossings(const Semilattice& s,
                          const std::vector<std::vector<int>>& order) {
  std::map<int, int> pos;
  for (const auto& level : order)
    for (int i = 0; i < static_cast<int>(level.size()); ++i)
      pos[level[i]] = i;
  long long crossings = 0;
  for (int level = 0; level + 1 < static_cast<int>(order.size()); ++level) {
    std::vector<std::pair<int, int>> arcs;  // (child pos, parent pos)
    for (const auto& [child, parent] : s.arcs)
      if (s.node(child).level == level)
        arcs.emplace_back(pos.at(child), pos.at(parent));
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        const auto& [c1, p1] = arcs[i];
        const auto& [c2, p2] = arcs[j];
        if ((c1 - c2) * (p1 - p2) < 0) ++crossings;
      }
  }
  return crossings;
}

LayeredLayout layout_layers(const Semilattice& s) {
  LayeredLayout layout;
  for (int level = 0; level < s.levels; ++level)
    layout.order.push_back(s.level_nodes(level));
  layout.initial_crossings = count_crossings(s, layout.order);
  layout.crossings = layout.initial_crossings;
  if (s.levels < 2) return layout;

  std::vector<std::vector<int>> parents_of(s.nodes.size()),
      children_of(s.nodes.size());
  for (const auto& [child, parent] : s.arcs) {
    parents_of[child].push_back(parent);
    children_of[parent].push_back(child);
  }

  auto reorder = [&](std::vector<int>& level,
                     const std::vector<std::vector<int>>& neighbors,
                     const std::map<int, double>& anchor) {
    std::vector<std::pair<double, int>> keyed;
    for (int i = 0; i < static_cast<int>(level.size()); ++i) {
      const int id = level[i];
      double bary = static_cast<double>(i);  // keep position when isolated
      if (!neighbors[id].empty()) {
        double sum = 0;
        for (int nb : neighbors[id]) sum += anchor.at(nb);
        bary = sum / static_cast<double>(neighbors[id].size());
      }
      keyed.emplace_back(bary, id);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
    for (int i = 0; i < static_cast<int>(level.size()); ++i)
      level[i] = keyed[i].second;
  };

  for (;;) {
    std::vector<std::vector<int>> trial = layout.order;
    // downward sweep: order each level by mean position of the level below
    for (int level = 1; level < s.levels; ++level) {
      std::map<int, double> anchor;
      for (int i = 0; i < static_cast<int>(trial[level - 1].size()); ++i)
        anchor[trial[level - 1][i]] = i;
      reorder(trial[level], children_of, anchor);
    }
    // upward sweep
    for (int level = s.levels - 2; level >= 0; --level) {
      std::map<int, double> anchor;
      for (int i = 0; i < static_cast<int>(trial[level + 1].size()); ++i)
        anchor[trial[level + 1][i]] = i;
      reorder(trial[level], parents_of, anchor);
    }
    const long long crossings = count_crossings(s, trial);
    if (crossings < layout.crossings) {
      layout.order = std::move(trial);
      layout.crossings = crossings;
    } else {
      break;
    }
  }
  return layout;
}

}  // namespace hidecs
