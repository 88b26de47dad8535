#pragma once
// Localization of cobar constructions at the edge cycles 1 + s^-1 x.

#include "monoloc/barcobar.hpp"

#include <vector>

namespace monoloc {

/// Cobar of the chains of k through degree hi together with the cycles
/// 1 + s^-1 x, one per nondegenerate edge x, in edge order.
struct EdgeCycles {
  PresentedDgAlgebra cobar;
  std::vector<Polynomial> cycles;
  std::vector<std::string> edge_labels;
};
EdgeCycles edge_cycles(const SimplicialSet &k, int hi);

/// The cobar construction of k with an inverse v_x of 1 + s^-1 x adjoined for
/// every nondegenerate edge x. Throws NotReduced for sets with more than one
/// vertex and NotACycle if some 1 + s^-1 x fails to be a cycle.
PresentedDgAlgebra extended_cobar(const SimplicialSet &k, int hi = 2);

} // namespace monoloc
