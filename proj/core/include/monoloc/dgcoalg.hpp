#pragma once
// Degreewise finite dg coalgebra windows: normalized chains with the
// Alexander-Whitney coproduct, law checks, admissible filtrations and
// filtered quasi-isomorphism checks.
//
// Sign table (used by every construction in the library):
//   tensor differential   d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy
//   chains                d = sum_i (-1)^i d_i, degenerate faces dropped
//   bar, internal term    [..|a_i|..] -> -(-1)^e_i [..|d a_i|..]
//   bar, merge term       [..|a_i|a_i+1|..] -> (-1)^(e_i + |a_i| + 1) [..|a_i a_i+1|..]
//                         where e_i = sum_{j<i} (|a_j| + 1)
//   bar coproduct         deconcatenation, no signs
//   cobar                 d(s^-1 c) = -s^-1(dc) + sum (-1)^|c'| s^-1 c' . s^-1 c''
//                         over the reduced coproduct, extended as a derivation
//   unit C -> B Omega C   c -> sum over iterated reduced coproducts of
//                         [c_(1)|...|c_(k)], all coefficients +1
//   counit Omega B A -> A s^-1[a] -> a, longer words -> 0

#include "monoloc/exactlin.hpp"
#include "monoloc/simplicial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace monoloc {

/// Sparse vector over a degree's basis.
using SparseVec = std::map<std::size_t, Integer>;
/// Sparse element of sum_p C_p (x) C_{n-p}; key (p, left index, right index).
using TensorVec = std::map<std::tuple<int, std::size_t, std::size_t>, Integer>;

void add_to(SparseVec &v, std::size_t i, const Integer &c);
void add_to(TensorVec &v, const std::tuple<int, std::size_t, std::size_t> &k, const Integer &c);

/// Window [0, hi] of a coaugmented dg coalgebra on free Z-modules.
struct DgCoalgebraWindow {
  ChainComplexWindow complex;
  std::vector<std::vector<std::string>> labels; ///< labels[n][i]
  std::vector<std::vector<TensorVec>> coproduct; ///< coproduct[n][i] = Delta e^n_i
  std::vector<Integer> counit;                   ///< on the degree-0 basis
  std::optional<std::size_t> coaugmentation;     ///< degree-0 basis index
  /// Source simplices when built by chains(); empty otherwise.
  std::vector<std::vector<SimplexKey>> simplices;

  int hi() const { return complex.hi(); }
  std::size_t rank(int n) const { return complex.rank(n); }
  /// Boundary of e^n_i as a sparse vector in degree n-1.
  SparseVec d(int n, std::size_t i) const;
  std::optional<std::size_t> index_of(int n, const std::string &label) const;
  std::optional<std::size_t> index_of(const SimplexKey &k) const;
  /// The same coalgebra restricted to degrees <= hi.
  DgCoalgebraWindow truncated(int hi) const;
  /// Delta of degree n as a matrix whose rows run over (p, i, j) in
  /// lexicographic order.
  IntMatrix coproduct_matrix(int n) const;
};

/// Normalized chains through degree hi with the Alexander-Whitney coproduct
/// (front face d_{k+1}..d_n tensor back face d_0^k), coaugmented by the
/// first vertex. Throws UnboundedDegree for lazy degrees.
DgCoalgebraWindow chains(const SimplicialSet &k, int hi);

/// Coassociativity, both counit laws, the coderivation law and, when degree
/// 0 is spanned by the coaugmentation, conilpotence (the n-fold reduced
/// coproduct kills degree n).
ValidationReport check_coalgebra(const DgCoalgebraWindow &c);

/// Degreewise map f_n : C_n -> D_n; components[n] is rank_D(n) x rank_C(n).
struct CoalgebraMap {
  std::vector<IntMatrix> components;
};

/// Chain map, coproduct and counit compatibility over the common window.
ValidationReport check_coalgebra_map(const DgCoalgebraWindow &c, const DgCoalgebraWindow &d,
                                     const CoalgebraMap &f);

/// The map induced on chains by a simplicial map; both windows must come
/// from chains() on the map's source and target.
CoalgebraMap chains_map(const SimplicialMap &f, const DgCoalgebraWindow &c,
                        const DgCoalgebraWindow &d);

struct AdmissibleFiltration {
  std::vector<std::vector<int>> level; ///< level[n][i] >= 0
  int max_level() const;
};

/// Level 0 is exactly the coaugmentation and d, Delta do not raise levels
/// (Delta F^n lies in the sum of F^p (x) F^q over p + q = n).
ValidationReport check_admissible(const DgCoalgebraWindow &c, const AdmissibleFiltration &f);

/// Level = degree, and 0 on the coaugmentation. Throws NotCoaugmented, and
/// FiltrationNotRespected when the result is not admissible.
AdmissibleFiltration skeletal_filtration(const DgCoalgebraWindow &c);

struct QuasiIsoVerdict {
  enum class Kind { QuasiIso, Fails };
  Kind kind = Kind::QuasiIso;
  int level = -1;       ///< filtration level of the first failure
  int cone_degree = -1; ///< degree where the cone of Gr_level f has homology
  int checked_through = 0;
  std::string detail;
  bool passed() const { return kind == Kind::QuasiIso; }
  std::string to_string() const;
};

/// Gr(f) is compared level by level through its mapping cone. Both windows
/// must reach degree hi + 1; QuasiIso then means every cone is acyclic in
/// degrees 0..hi. Throws FiltrationNotRespected when f raises a level.
QuasiIsoVerdict filtered_quasi_iso_window(const DgCoalgebraWindow &c, const DgCoalgebraWindow &d,
                                          const CoalgebraMap &f, const AdmissibleFiltration &fc,
                                          const AdmissibleFiltration &fd, int hi);

} // namespace monoloc
