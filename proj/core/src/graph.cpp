#include "hidecs/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hidecs {

int RawInteractionTable::directed_entry_count() const {
  int n = 0;
  for (const auto& [src, targets] : entries) {
    (void)src;
    n += static_cast<int>(targets.size());
  }
  return n;
}

Graph::Graph(int vertex_count, std::vector<Link> links,
             std::vector<std::string> labels)
    : m_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) throw Error("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != m_)
    throw Error("label count does not match vertex count");
  adj_.assign(m_, {});
  for (auto [a, b] : links) {
    if (a > b) std::swap(a, b);
    if (a == b) throw Error("self link");
    if (a < 0 || b >= m_) throw Error("link endpoint out of range");
    links_.emplace_back(a, b);
  }
  std::sort(links_.begin(), links_.end());
  if (std::adjacent_find(links_.begin(), links_.end()) != links_.end())
    throw Error("duplicate link");
  for (auto [a, b] : links_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  total_ = static_cast<long long>(links_.size());
}

bool Graph::has_link(Vertex a, Vertex b) const {
  if (a == b) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::string Graph::label(Vertex v) const {
  if (!labels_.empty()) return labels_[v];
  return std::to_string(v + 1);
}

int AsymmetryReport::touching(Vertex v) const {
  int n = 0;
  for (const auto& [a, b] : one_way)
    if (a == v || b == v) ++n;
  return n;
}

std::string AsymmetryReport::to_text() const {
  std::ostringstream out;
  for (const auto& [a, b] : one_way) out << (a + 1) << " -> " << (b + 1) << "\n";
  return out.str();
}

Partition::Partition(std::vector<Vertex> universe,
                     std::vector<std::vector<Vertex>> cells)
    : universe_(std::move(universe)), cells_(std::move(cells)) {
  std::sort(universe_.begin(), universe_.end());
  if (std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
    throw Error("duplicate vertex in universe");
  std::size_t covered = 0;
  for (int ci = 0; ci < static_cast<int>(cells_.size()); ++ci) {
    auto& cell = cells_[ci];
    if (cell.empty()) throw Error("empty cell");
    std::sort(cell.begin(), cell.end());
    for (Vertex v : cell) {
      if (!std::binary_search(universe_.begin(), universe_.end(), v))
        throw Error("cell vertex outside universe");
      if (!cell_of_.emplace(v, ci).second) throw Error("overlapping cells");
    }
    covered += cell.size();
  }
  if (covered != universe_.size()) throw Error("cells do not cover universe");
}

Partition Partition::single_cell(std::vector<Vertex> universe) {
  auto cell = universe;
  return Partition(std::move(universe), {std::move(cell)});
}

Partition Partition::unit(std::vector<Vertex> universe) {
  std::vector<std::vector<Vertex>> cells;
  cells.reserve(universe.size());
  for (Vertex v : universe) cells.push_back({v});
  return Partition(std::move(universe), std::move(cells));
}

int Partition::cell_of(Vertex v) const {
  auto it = cell_of_.find(v);
  if (it == cell_of_.end()) throw Error("vertex not in partition");
  return it->second;
}

bool Partition::same_blocks(const Partition& other) const {
  if (universe_ != other.universe_) return false;
  auto key = [](const Partition& p) {
    std::vector<std::vector<Vertex>> cs = p.cells_;
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  return key(*this) == key(other);
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

RawInteractionTable parse_interactions(const std::string& text) {
  RawInteractionTable table;
  std::set<int> seen_sources;
  int max_id = 0;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = lines[ln];
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(ln + 1);

    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(where + ": expected '<id> : <targets>'");
    int src = 0;
    try {
      std::size_t used = 0;
      src = std::stoi(strip(line.substr(0, colon)), &used);
      if (used != strip(line.substr(0, colon)).size()) throw Error("");
    } catch (...) {
      throw Error(where + ": malformed source id");
    }
    if (src < 1) throw Error(where + ": ids are 1-based");
    if (!seen_sources.insert(src).second)
      throw Error(where + ": duplicate source line for id " +
                  std::to_string(src));

    std::vector<Vertex> targets;
    const std::string rest_text = strip(line.substr(colon + 1));
    std::stringstream rest(rest_text);
    std::string tok;
    // an empty target list declares an isolated vertex
    while (!rest_text.empty() && std::getline(rest, tok, ',')) {
      tok = strip(tok);
      if (tok.empty()) throw Error(where + ": empty target");
      int t = 0;
      try {
        std::size_t used = 0;
        t = std::stoi(tok, &used);
        if (used != tok.size()) throw Error("");
      } catch (...) {
        throw Error(where + ": malformed target '" + tok + "'");
      }
      if (t < 1) throw Error(where + ": ids are 1-based");
      if (t == src)
        throw Error(where + ": self-interaction " + std::to_string(src));
      targets.push_back(t - 1);
      max_id = std::max(max_id, t);
    }
    max_id = std::max(max_id, src);
    table.entries.emplace_back(src - 1, std::move(targets));
  }
  table.vertex_count = max_id;
  return table;
}

std::string serialize_interactions(const RawInteractionTable& table) {
  std::ostringstream out;
  for (const auto& [src, targets] : table.entries) {
    out << (src + 1) << " :";
    for (std::size_t i = 0; i < targets.size(); ++i)
      out << (i ? ", " : " ") << (targets[i] + 1);
    out << "\n";
  }
  return out.str();
}

std::pair<Graph, AsymmetryReport> symmetrize(const RawInteractionTable& table) {
  const int m = table.vertex_count;
  std::set<std::pair<Vertex, Vertex>> directed;
  for (const auto& [src, targets] : table.entries)
    for (Vertex t : targets) {
      if (src >= m || t >= m) throw Error("interaction id out of range");
      directed.emplace(src, t);
    }
  std::vector<Link> links;
  AsymmetryReport report;
  for (const auto& [src, targets] : table.entries)
    for (Vertex t : targets) {
      if (directed.count({t, src})) {
        if (src < t) links.emplace_back(src, t);
      } else {
        report.one_way.emplace_back(src, t);
        report.per_vertex[src]++;
        report.per_vertex[t]++;
      }
    }
  return {Graph(m, std::move(links)), std::move(report)};
}

Graph symmetrize_promoting(const RawInteractionTable& table) {
  const int m = table.vertex_count;
  std::set<Link> links;
  for (const auto& [src, targets] : table.entries)
    for (Vertex t : targets)
      links.emplace(std::min(src, t), std::max(src, t));
  return Graph(m, std::vector<Link>(links.begin(), links.end()));
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> vs = vertices;
  std::sort(vs.begin(), vs.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
    Vertex v = vs[i];
    if (v < 0 || v >= g.vertex_count()) throw Error("vertex outside graph");
    if (local[v] != -1) throw Error("duplicate vertex in subset");
    local[v] = i;
  }
  std::vector<Link> links;
  for (const auto& [a, b] : g.links())
    if (local[a] != -1 && local[b] != -1)
      links.emplace_back(local[a], local[b]);
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.reserve(vs.size());
    for (Vertex v : vs) labels.push_back(g.labels()[v]);
  }
  return Graph(static_cast<int>(vs.size()), std::move(links), std::move(labels));
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_link(vertices[i], vertices[j])) return false;
  return true;
}

LinkStats link_stats(const Graph& g, const Partition& p) {
  const int k = p.cell_count();
  LinkStats stats;
  stats.internal.assign(k, 0);
  stats.cross.assign(k, std::vector<long long>(k, 0));
  std::vector<int> cell(g.vertex_count(), -1);
  for (int ci = 0; ci < k; ++ci)
    for (Vertex v : p.cells()[ci]) cell[v] = ci;
  for (const auto& [a, b] : g.links()) {
    if (cell[a] == -1 || cell[b] == -1) continue;  // outside the universe
    ++stats.total;
    if (cell[a] == cell[b]) {
      ++stats.internal[cell[a]];
    } else {
      ++stats.cut;
      ++stats.cross[cell[a]][cell[b]];
      ++stats.cross[cell[b]][cell[a]];
    }
  }
  return stats;
}

Partition parse_partition_file(const std::string& text,
                               const std::vector<Vertex>& universe_hint) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("partition file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("sets") || !doc["sets"].is_array())
    throw Error("partition file needs a top-level \"sets\" array");
  std::vector<std::vector<Vertex>> cells;
  for (const auto& arr : doc["sets"]) {
    if (!arr.is_array()) throw Error("each entry of \"sets\" must be an array");
    std::vector<Vertex> cell;
    for (const auto& id : arr) {
      if (!id.is_number_integer() || id.get<long long>() < 1)
        throw Error("partition ids are positive integers");
      cell.push_back(id.get<int>() - 1);
    }
    cells.push_back(std::move(cell));
  }
  std::vector<Vertex> universe = universe_hint;
  if (universe.empty())
    for (const auto& cell : cells)
      universe.insert(universe.end(), cell.begin(), cell.end());
  return Partition(std::move(universe), std::move(cells));
}

std::string serialize_partition(const Partition& p) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& cell : p.cells()) {
    nlohmann::json arr = nlohmann::json::array();
    for (Vertex v : cell) arr.push_back(v + 1);
    sets.push_back(arr);
  }
  nlohmann::json doc;
  doc["sets"] = sets;
  return doc.dump(2) + "\n";
}

}  // namespace hidecs
