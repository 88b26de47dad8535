#pragma once
// Kan's simplicial loop group G(K) of a reduced simplicial set, the
// fundamental group presentation, and the degree-0 comparison of Z[pi_1]
// with the extended cobar construction.

#include "monoloc/localization.hpp"

#include <vector>

namespace monoloc {

/// Level n of G(K): the free group on the (n+1)-simplices of K that are not
/// of the form s_0 y. Words refer to generators of the neighbouring levels.
struct LoopGroupLevel {
  int n = 0;
  std::vector<FormalSimplex> generators;
  std::vector<std::string> labels;
  /// faces[g][i] for i = 0..n, words in level n - 1 (none at level 0).
  std::vector<std::vector<GroupWord>> faces;
  /// degeneracies[g][j] for j = 0..n, words in level n + 1 (none at the top).
  std::vector<std::vector<GroupWord>> degeneracies;
};

/// Levels 0..hi with d_0 t(x) = t(d_1 x) t(d_0 x)^-1, d_i t(x) = t(d_{i+1} x)
/// and s_i t(x) = t(s_{i+1} x), where t(s_0 y) = 1. The simplicial identities
/// are checked on generators before returning. Throws NotReduced.
std::vector<LoopGroupLevel> kan_loop_group(const SimplicialSet &k, int hi);

/// Simplicial identities of the levels on every generator, after free
/// reduction.
ValidationReport validate_loop_group(const std::vector<LoopGroupLevel> &levels);

/// Group presentation with one generator per nondegenerate edge and the
/// relation d_1 s = d_2 s . d_0 s for each nondegenerate 2-simplex s.
MonoidPresentation pi1_presentation(const SimplicialSet &k);

/// Abelianization of a group presentation: the cokernel of the exponent-sum
/// matrix of the relators.
HomologyGroup abelianization(const MonoidPresentation &p);

struct H0Comparison {
  MonoidPresentation pi1;
  PresentedDgAlgebra group_ring;   ///< Z[pi_1] on x and x^-1
  PresentedDgAlgebra extended_h0;  ///< H_0 of the extended cobar
  RingMap to_cobar, from_cobar;    ///< x -> 1 + s^-1 x, x^-1 -> v_x and back
  RingCertificate certificate;
};

/// Z[pi_1(K)] against H_0 of the extended cobar construction of K.
H0Comparison h0_compare(const SimplicialSet &k, std::size_t budget = 100000);

} // namespace monoloc
