#pragma once

#include <string>

#include "hidecs/analysis.hpp"
#include "hidecs/cliques.hpp"
#include "hidecs/search.hpp"

namespace hidecs {

// Deterministic DOT renderings: canonical node and arc order, one rank per
// level, nodes labeled with their 1-based member ids. Byte-identical output
// for identical inputs.
std::string export_dot(const DecompositionTree& t);
std::string export_dot(const Semilattice& s, const LayeredLayout& layout);

}  // namespace hidecs
