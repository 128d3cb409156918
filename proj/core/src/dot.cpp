#include "hidecs/dot.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

namespace hidecs {

namespace {

std::string member_label(const std::vector<Vertex>& members) {
  std::ostringstream out;
  for (std::size_t i = 0; i < members.size(); ++i)
    out << (i ? " " : "") << (members[i] + 1);
  return out.str();
}

}  // namespace

std::string export_dot(const DecompositionTree& t) {
  std::ostringstream out;
  out << "digraph decomposition {\n";
  out << "  node [shape=box];\n";
  int counter = 0;
  std::vector<std::vector<int>> by_depth;
  std::function<int(const TreeNode*, int)> emit = [&](const TreeNode* node,
                                                      int depth) -> int {
    const int id = counter++;
    if (static_cast<int>(by_depth.size()) <= depth) by_depth.resize(depth + 1);
    by_depth[depth].push_back(id);
    out << "  n" << id << " [label=\"" << member_label(node->members);
    if (!node->is_leaf()) {
      char value[32];
      std::snprintf(value, sizeof value, "%.2f", node->split_value);
      out << "\\nsplit " << value;
    }
    out << "\"];\n";
    if (!node->is_leaf()) {
      const int left = emit(node->left.get(), depth + 1);
      const int right = emit(node->right.get(), depth + 1);
      out << "  n" << id << " -> n" << left << ";\n";
      out << "  n" << id << " -> n" << right << ";\n";
    }
    return id;
  };
  emit(t.root.get(), 0);
  for (const auto& level : by_depth) {
    out << "  { rank=same;";
    for (int id : level) out << " n" << id << ";";
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const Semilattice& s, const LayeredLayout& layout) {
  if (static_cast<int>(layout.order.size()) != s.levels)
    throw Error("layout does not match the semilattice");
  std::ostringstream out;
  out << "digraph semilattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int level = 0; level < s.levels; ++level) {
    out << "  { rank=same;";
    for (int id : layout.order[level]) out << " n" << id << ";";
    out << " }\n";
    for (int id : layout.order[level])
      out << "  n" << id << " [label=\"" << member_label(s.node(id).members)
          << "\"];\n";
    // invisible chain pins the left-to-right order within the rank
    for (std::size_t i = 0; i + 1 < layout.order[level].size(); ++i)
      out << "  n" << layout.order[level][i] << " -> n"
          << layout.order[level][i + 1]
          << " [style=invis, constraint=false];\n";
  }
  for (const auto& [child, parent] : s.arcs)
    out << "  n" << child << " -> n" << parent << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hidecs
