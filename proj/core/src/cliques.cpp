#include "hidecs/cliques.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

namespace hidecs {

namespace {

// Bron-Kerbosch with the Tomita pivot: pick u from P|X maximizing |P & N(u)|
// and branch only on P \ N(u).
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(const Graph& g) : g_(g) {}

  std::vector<std::vector<Vertex>> run() {
    std::vector<Vertex> p(g_.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    expand({}, std::move(p), {});
    std::sort(out_.begin(), out_.end(),
              [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return a < b;
              });
    return std::move(out_);
  }

 private:
  void expand(std::vector<Vertex> r, std::vector<Vertex> p,
              std::vector<Vertex> x) {
    if (p.empty() && x.empty()) {
      std::sort(r.begin(), r.end());
      out_.push_back(std::move(r));
      return;
    }
    Vertex pivot = -1;
    std::size_t best = 0;
    for (const auto* side : {&p, &x})
      for (Vertex u : *side) {
        std::size_t n = count_in(p, u);
        if (pivot == -1 || n > best) {
          pivot = u;
          best = n;
        }
      }
    std::vector<Vertex> candidates;
    for (Vertex v : p)
      if (!g_.has_link(pivot, v)) candidates.push_back(v);
    for (Vertex v : candidates) {
      std::vector<Vertex> r2 = r;
      r2.push_back(v);
      expand(std::move(r2), intersect_neighbors(p, v),
             intersect_neighbors(x, v));
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  std::size_t count_in(const std::vector<Vertex>& set, Vertex u) const {
    std::size_t n = 0;
    for (Vertex v : set)
      if (g_.has_link(u, v)) ++n;
    return n;
  }

  std::vector<Vertex> intersect_neighbors(const std::vector<Vertex>& set,
                                          Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u : set)
      if (g_.has_link(v, u)) out.push_back(u);
    return out;
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> out_;
};

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool overlaps(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    (a[i] < b[j]) ? ++i : ++j;
  }
  return false;
}

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  return CliqueEnumerator(g).run();
}

std::vector<int> Semilattice::level_nodes(int level) const {
  std::vector<int> out;
  for (const auto& n : nodes)
    if (n.level == level) out.push_back(n.id);
  return out;
}

Semilattice recompose_semilattice(
    const Graph& g, const std::vector<std::vector<Vertex>>& sets) {
  if (sets.empty()) throw Error("recompose_semilattice needs at least one set");
  Semilattice s;
  auto add_node = [&s](int level, std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    s.nodes.push_back({static_cast<int>(s.nodes.size()), level,
                       std::move(members)});
    return s.nodes.back().id;
  };

  // level 0: the vertices
  for (Vertex v = 0; v < g.vertex_count(); ++v) add_node(0, {v});

  // level 1: the given sets, canonical order
  std::vector<std::vector<Vertex>> level_sets = sets;
  for (auto& set : level_sets) {
    std::sort(set.begin(), set.end());
    for (Vertex v : set)
      if (v < 0 || v >= g.vertex_count()) throw Error("set vertex outside graph");
  }
  std::sort(level_sets.begin(), level_sets.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  std::vector<int> current;  // node ids of the top level so far
  for (const auto& set : level_sets) {
    int id = add_node(1, set);
    current.push_back(id);
    for (Vertex v : set) s.arcs.emplace_back(v, id);
  }
  s.levels = 2;

  while (current.size() > 1) {
    DisjointSets dsu(static_cast<int>(current.size()));
    bool merged_any = false;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j)
        if (overlaps(s.nodes[current[i]].members, s.nodes[current[j]].members)) {
          if (dsu.find(static_cast<int>(i)) != dsu.find(static_cast<int>(j))) {
            dsu.unite(static_cast<int>(i), static_cast<int>(j));
            merged_any = true;
          }
        }
    if (!merged_any) break;

    std::vector<std::vector<int>> components(current.size());
    for (std::size_t i = 0; i < current.size(); ++i)
      components[dsu.find(static_cast<int>(i))].push_back(
          static_cast<int>(i));

    // Components in canonical member order for stable ids.
    struct Comp {
      std::vector<Vertex> members;
      std::vector<int> children;  // indices into `current`
    };
    std::vector<Comp> comps;
    for (auto& group : components) {
      if (group.empty()) continue;
      Comp comp;
      comp.children = group;
      for (int idx : group) {
        const auto& ms = s.nodes[current[idx]].members;
        comp.members.insert(comp.members.end(), ms.begin(), ms.end());
      }
      std::sort(comp.members.begin(), comp.members.end());
      comp.members.erase(
          std::unique(comp.members.begin(), comp.members.end()),
          comp.members.end());
      comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
      if (a.members.size() != b.members.size())
        return a.members.size() > b.members.size();
      return a.members < b.members;
    });

    std::vector<int> next;
    for (const auto& comp : comps) {
      int id = add_node(s.levels, comp.members);
      next.push_back(id);
      for (int idx : comp.children) s.arcs.emplace_back(current[idx], id);
    }
    ++s.levels;
    current = std::move(next);
    if (current.size() == 1) break;
  }
  std::sort(s.arcs.begin(), s.arcs.end());
  return s;
}

std::string serialize_semilattice(const Semilattice& s) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : s.nodes) {
    nlohmann::json members = nlohmann::json::array();
    for (Vertex v : n.members) members.push_back(v + 1);
    nodes.push_back({{"id", n.id}, {"level", n.level}, {"members", members}});
  }
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [child, parent] : s.arcs)
    arcs.push_back({{"from", child}, {"to", parent}});
  nlohmann::json doc;
  doc["levels"] = s.levels;
  doc["nodes"] = nodes;
  doc["arcs"] = arcs;
  return doc.dump(2) + "\n";
}

Semilattice parse_semilattice(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("semilattice file is not valid JSON: ") + e.what());
  }
  Semilattice s;
  s.levels = doc.at("levels").get<int>();
  for (const auto& n : doc.at("nodes")) {
    SemilatticeNode node;
    node.id = n.at("id").get<int>();
    node.level = n.at("level").get<int>();
    for (const auto& v : n.at("members"))
      node.members.push_back(v.get<int>() - 1);
    s.nodes.push_back(std::move(node));
  }
  for (const auto& a : doc.at("arcs"))
    s.arcs.emplace_back(a.at("from").get<int>(), a.at("to").get<int>());
  return s;
}

}  // namespace hidecs
