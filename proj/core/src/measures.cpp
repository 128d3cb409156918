#include "hidecs/measures.hpp"

#include <cmath>
#include <cstdio>

namespace hidecs {

Direction MeasureSpec::direction() const {
  switch (id) {
    case MeasureId::kH3Stabl:
    case MeasureId::kNewmanQ:
      return Direction::kMaximize;
    default:
      return Direction::kMinimize;
  }
}

Arity MeasureSpec::arity() const {
  switch (id) {
    case MeasureId::kH2Actual:
    case MeasureId::kH2Decomp:
    case MeasureId::kH2Rpg:
      return Arity::kBipartitionOnly;
    default:
      return Arity::kAnyPartition;
  }
}

std::string MeasureSpec::name() const {
  switch (id) {
    case MeasureId::kH2Actual: return "h2-actual";
    case MeasureId::kH2Decomp: return "h2-decomp";
    case MeasureId::kH2Notes: return "h2-notes";
    case MeasureId::kH2Rpg: return "h2-rpg";
    case MeasureId::kH3Bldup: return "h3-bldup";
    case MeasureId::kH3Stabl: return "h3-stabl";
    case MeasureId::kNewmanQ: return "newman-q";
  }
  return "?";
}

bool MeasureSpec::better(double a, double b, double eps) const {
  return direction() == Direction::kMinimize ? a < b - eps : a > b + eps;
}

MeasureSpec MeasureSpec::from_name(const std::string& name) {
  for (const auto& spec : all())
    if (spec.name() == name) return spec;
  throw Error("unknown measure '" + name + "'");
}

const std::vector<MeasureSpec>& MeasureSpec::all() {
  static const std::vector<MeasureSpec> specs = {
      {MeasureId::kH2Actual}, {MeasureId::kH2Decomp}, {MeasureId::kH2Notes},
      {MeasureId::kH2Rpg},    {MeasureId::kH3Bldup},  {MeasureId::kH3Stabl},
      {MeasureId::kNewmanQ}};
  return specs;
}

double MeasureValue::intermediate(const std::string& name) const {
  for (const auto& [k, v] : intermediates)
    if (k == name) return v;
  throw Error("no intermediate named '" + name + "'");
}

namespace {

double signum(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

struct PartitionCounts {
  int m = 0;              // vertices in the universe
  long long l = 0;        // links in the induced subgraph
  double nsq1 = 0;        // m(m-1)/2
  long long cut = 0;      // links crossing cells
  double size_products = 0;  // sum over cell pairs of s_a * s_b
  std::vector<long long> internal;
  std::vector<int> sizes;
  std::vector<long long> cell_degree;  // sum of induced degrees per cell
};

PartitionCounts count_partition(const Graph& g, const Partition& p) {
  PartitionCounts c;
  c.m = static_cast<int>(p.universe().size());
  c.nsq1 = static_cast<double>(c.m) * (c.m - 1) / 2.0;
  const LinkStats stats = link_stats(g, p);
  c.l = stats.total;
  c.cut = stats.cut;
  c.internal = stats.internal;
  c.cell_degree.assign(p.cell_count(), 0);
  for (int ci = 0; ci < p.cell_count(); ++ci) {
    c.sizes.push_back(static_cast<int>(p.cells()[ci].size()));
    c.cell_degree[ci] = 2 * stats.internal[ci];
    for (int cj = 0; cj < p.cell_count(); ++cj)
      c.cell_degree[ci] += stats.cross[ci][cj];
  }
  double sum = 0, sumsq = 0;
  for (int s : c.sizes) {
    sum += s;
    sumsq += static_cast<double>(s) * s;
  }
  c.size_products = (sum * sum - sumsq) / 2.0;
  return c;
}

void require_bipartition(const Partition& p, const char* what) {
  if (p.cell_count() != 2)
    throw Error(std::string(what) + " requires exactly two cells");
}

}  // namespace

MeasureValue hidecs2_actual(const Graph& g, const Partition& p) {
  require_bipartition(p, "h2-actual");
  const auto c = count_partition(g, p);
  const double mn = static_cast<double>(c.sizes[0]) * c.sizes[1];
  const double rr = static_cast<double>(c.cut);
  const double nom = rr - (c.nsq1 > 0 ? c.l / c.nsq1 : 0.0) * mn;
  const double denom = mn * (c.nsq1 - mn);
  MeasureValue out;
  out.intermediates = {{"RR", rr}, {"nom", nom}, {"denom", denom}};
  if (denom <= 0) {
    out.degenerate = true;
    out.intermediates.emplace_back("STR", 0.0);
    out.intermediates.emplace_back("INFO", 0.0);
    return out;
  }
  const double str = nom / std::sqrt(denom);
  out.value = signum(nom) * nom * nom / denom;  // INFO = STR*|STR|
  out.intermediates.emplace_back("STR", str);
  out.intermediates.emplace_back("INFO", out.value);
  return out;
}

MeasureValue hidecs2_decomp(const Graph& g, const Partition& p) {
  require_bipartition(p, "h2-decomp");
  const auto c = count_partition(g, p);
  const double mn = static_cast<double>(c.sizes[0]) * c.sizes[1];
  const double rr = static_cast<double>(c.cut);
  const double nom = rr * c.nsq1 - static_cast<double>(c.l) * mn;
  const double denom = mn * (c.nsq1 - mn);
  MeasureValue out;
  out.intermediates = {{"RR", rr},
                       {"l_a", static_cast<double>(c.internal[0])},
                       {"l_b", static_cast<double>(c.internal[1])},
                       {"nom", nom},
                       {"denom", denom}};
  if (denom <= 0) {
    out.degenerate = true;
    out.intermediates.emplace_back("SCORE", 0.0);
    return out;
  }
  out.value = nom / std::sqrt(denom);
  out.intermediates.emplace_back("SCORE", out.value);
  return out;
}

MeasureValue hidecs2_notes(const Graph& g, const Partition& p) {
  const auto c = count_partition(g, p);
  const double s2 = c.size_products;
  const double nom = c.nsq1 * static_cast<double>(c.cut) -
                     static_cast<double>(c.l) * s2;
  const double denom = s2 * (c.nsq1 - s2);
  MeasureValue out;
  out.intermediates = {{"cut", static_cast<double>(c.cut)},
                       {"size_products", s2},
                       {"nom", nom},
                       {"denom", denom}};
  if (denom <= 0) {
    out.degenerate = true;
    out.intermediates.emplace_back("R", 0.0);
    return out;
  }
  out.value = nom / std::sqrt(denom);
  out.intermediates.emplace_back("R", out.value);
  return out;
}

MeasureValue hidecs2_rpg(const Graph& g, const Partition& p) {
  require_bipartition(p, "h2-rpg");
  const auto c = count_partition(g, p);
  const double a = c.sizes[0], b = c.sizes[1];
  const double la = static_cast<double>(c.internal[0]);
  const double lb = static_cast<double>(c.internal[1]);
  const double lab = static_cast<double>(c.cut);
  const double ma = a * (a - 1) / 2.0;
  const double mb = b * (b - 1) / 2.0;
  const double mab = a * b;  // theoretical maximum of links between cells
  const double f1 = ma == 0 ? 0.0 : 1.0 - la / ma;
  const double f2 = mab == 0 ? 0.0 : lab / mab;
  const double f3 = mb == 0 ? 0.0 : 1.0 - lb / mb;
  const double balance = (a - b) / (a + b);
  const double f4 = 1.0 - balance * balance;
  MeasureValue out;
  out.value = (f1 + f2 + f3) / f4;
  out.intermediates = {{"l_a", la},   {"l_b", lb}, {"l_ab", lab},
                       {"m_a", ma},   {"m_b", mb}, {"m_ab", mab},
                       {"f1", f1},    {"f2", f2},  {"f3", f3},
                       {"f4", f4},    {"RSCORE", out.value}};
  return out;
}

MeasureValue hidecs3_bldup(const Graph& g, const Partition& p) {
  const auto c = count_partition(g, p);
  const double s2 = c.size_products;
  const double nom = static_cast<double>(c.cut) -
                     (c.nsq1 > 0 ? c.l / c.nsq1 : 0.0) * s2;
  const double denom = s2 * (c.nsq1 - s2);
  MeasureValue out;
  out.intermediates = {{"cut", static_cast<double>(c.cut)},
                       {"size_products", s2},
                       {"nom", nom},
                       {"denom", denom}};
  if (denom <= 0) {
    out.degenerate = true;
    out.intermediates.emplace_back("STR2", 0.0);
    out.intermediates.emplace_back("INFO2", 0.0);
    return out;
  }
  out.value = signum(nom) * nom * nom / denom;
  out.intermediates.emplace_back("STR2", nom / std::sqrt(denom));
  out.intermediates.emplace_back("INFO2", out.value);
  return out;
}

MeasureValue hidecs3_stabl(const Graph& g, const Partition& p) {
  const auto c = count_partition(g, p);
  double nom = 0, denom = 0;
  for (std::size_t i = 0; i < c.sizes.size(); ++i) {
    const double s = c.sizes[i];
    const double half = (s * (s - 1) + 1) / 2.0;
    if (c.l > 0) nom += c.internal[i] * c.nsq1 / static_cast<double>(c.l);
    nom -= half;
    denom += half * std::exp2(-2.0 * s);
  }
  MeasureValue out;
  out.value = denom > 0 ? signum(nom) * nom * nom / denom : 0.0;
  out.intermediates = {{"nom", nom}, {"denom", denom}, {"EXP", out.value}};
  return out;
}

MeasureValue newman_q(const Graph& g, const Partition& p) {
  const auto c = count_partition(g, p);
  MeasureValue out;
  if (c.l == 0) {
    out.degenerate = true;
    out.intermediates = {{"Q", 0.0}};
    return out;
  }
  double q = 0;
  const double two_l = 2.0 * static_cast<double>(c.l);
  for (std::size_t i = 0; i < c.sizes.size(); ++i) {
    const double eii = static_cast<double>(c.internal[i]) / c.l;
    const double ai = static_cast<double>(c.cell_degree[i]) / two_l;
    q += eii - ai * ai;
  }
  out.value = q;
  out.intermediates = {{"Q", q}};
  return out;
}

MeasureValue evaluate(const MeasureSpec& spec, const Graph& g,
                      const Partition& p) {
  switch (spec.id) {
    case MeasureId::kH2Actual: return hidecs2_actual(g, p);
    case MeasureId::kH2Decomp: return hidecs2_decomp(g, p);
    case MeasureId::kH2Notes: return hidecs2_notes(g, p);
    case MeasureId::kH2Rpg: return hidecs2_rpg(g, p);
    case MeasureId::kH3Bldup: return hidecs3_bldup(g, p);
    case MeasureId::kH3Stabl: return hidecs3_stabl(g, p);
    case MeasureId::kNewmanQ: return newman_q(g, p);
  }
  throw Error("unknown measure");
}

double expected_cut_links(int m, long long total, int a, int b) {
  if (m < 2) throw Error("expected_cut_links needs at least two vertices");
  if (a + b != m) throw Error("cell sizes must sum to the vertex count");
  const double nsq1 = static_cast<double>(m) * (m - 1) / 2.0;
  if (total < 0 || static_cast<double>(total) > nsq1)
    throw Error("link count exceeds the maximum");
  return static_cast<double>(total) / nsq1 * a * b;
}

double bipartition_value(MeasureId id, int n, long long l, int a, int b,
                         long long la, long long lb, long long cut) {
  const double nsq1 = static_cast<double>(n) * (n - 1) / 2.0;
  const double mn = static_cast<double>(a) * b;
  const double rr = static_cast<double>(cut);
  switch (id) {
    case MeasureId::kH2Actual: {
      const double nom = rr - (nsq1 > 0 ? l / nsq1 : 0.0) * mn;
      const double denom = mn * (nsq1 - mn);
      return denom > 0 ? signum(nom) * nom * nom / denom : 0.0;
    }
    case MeasureId::kH2Decomp:
    case MeasureId::kH2Notes: {
      const double nom = rr * nsq1 - static_cast<double>(l) * mn;
      const double denom = mn * (nsq1 - mn);
      return denom > 0 ? nom / std::sqrt(denom) : 0.0;
    }
    case MeasureId::kH2Rpg: {
      const double ma = static_cast<double>(a) * (a - 1) / 2.0;
      const double mb = static_cast<double>(b) * (b - 1) / 2.0;
      const double f1 = ma == 0 ? 0.0 : 1.0 - la / ma;
      const double f2 = mn == 0 ? 0.0 : rr / mn;
      const double f3 = mb == 0 ? 0.0 : 1.0 - lb / mb;
      const double bal = (static_cast<double>(a) - b) / (a + b);
      return (f1 + f2 + f3) / (1.0 - bal * bal);
    }
    case MeasureId::kH3Bldup: {
      const double nom = rr - (nsq1 > 0 ? l / nsq1 : 0.0) * mn;
      const double denom = mn * (nsq1 - mn);
      return denom > 0 ? signum(nom) * nom * nom / denom : 0.0;
    }
    case MeasureId::kH3Stabl: {
      double nom = 0, denom = 0;
      const long long ints[2] = {la, lb};
      const int sizes[2] = {a, b};
      for (int i = 0; i < 2; ++i) {
        const double s = sizes[i];
        const double half = (s * (s - 1) + 1) / 2.0;
        if (l > 0) nom += ints[i] * nsq1 / static_cast<double>(l);
        nom -= half;
        denom += half * std::exp2(-2.0 * s);
      }
      return denom > 0 ? signum(nom) * nom * nom / denom : 0.0;
    }
    case MeasureId::kNewmanQ: {
      if (l == 0) return 0.0;
      const double two_l = 2.0 * static_cast<double>(l);
      const double da = 2.0 * la + rr, db = 2.0 * lb + rr;
      return (la + lb) / static_cast<double>(l) -
             (da / two_l) * (da / two_l) - (db / two_l) * (db / two_l);
    }
  }
  throw Error("unknown measure");
}

double round_half_away(double x, int decimals) {
  double scale = std::pow(10.0, decimals);
  return (x < 0 ? -std::floor(-x * scale + 0.5) : std::floor(x * scale + 0.5)) /
         scale;
}

std::string format_measure(MeasureId id, double value) {
  const int decimals = id == MeasureId::kNewmanQ ? 3 : 2;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals,
                round_half_away(value, decimals));
  return buf;
}

}  // namespace hidecs
