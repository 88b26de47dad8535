#pragma once
// Bar and cobar constructions in finite windows, the nerve/bar comparison
// for monoids, and the unit and counit checks. Signs follow the table in
// dgcoalg.hpp.

#include "monoloc/dgcoalg.hpp"
#include "monoloc/rewrite.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace monoloc {

/// Augmentation ideal A+ of an augmented dg algebra through degree hi, with
/// products and differential expressed in a fixed basis.
struct AlgebraWindow {
  int hi = 0;
  std::vector<std::vector<std::string>> labels; ///< A+ basis, per degree
  /// Source words when built from a presentation; the basis element is
  /// word - augmentation(word).
  std::vector<std::vector<Word>> words;
  /// Filtration weights of basis elements (0 unless supplied).
  std::vector<std::vector<int>> weights;
  std::vector<std::vector<SparseVec>> differential; ///< into degree n-1
  /// Product of (p, i) and (q, j) for p + q <= hi, as a vector in degree p + q.
  std::map<std::tuple<int, std::size_t, int, std::size_t>, SparseVec> products;

  std::size_t rank(int n) const {
    return n < 0 || n > hi ? 0 : labels[static_cast<std::size_t>(n)].size();
  }
  const SparseVec &multiply(int p, std::size_t i, int q, std::size_t j) const;
};

/// A+ from a presentation with a complete system of unit-lead rules. In
/// degree 0 the basis is w - e(w) over nonempty irreducible words. Throws
/// InfiniteRank when some degree exceeds cap, InvalidInput without an
/// augmentation or a canonical system.
AlgebraWindow algebra_window(const PresentedDgAlgebra &a, const RewriteSystem &r, int hi,
                             std::size_t cap = 10000,
                             const std::vector<int> &generator_weights = {});

/// A+ of the monoid algebra straight from the table: basis m - 1 for m != 1,
/// with (m-1)(n-1) = (mn-1) - (m-1) - (n-1).
AlgebraWindow monoid_algebra_window(const FiniteMonoid &m, int hi);

using BarLetter = std::pair<int, std::size_t>; ///< (degree in A, basis index)

struct BarWindow {
  DgCoalgebraWindow window;
  std::vector<std::vector<std::vector<BarLetter>>> words; ///< words[n][i]
};

/// Tensor coalgebra on sA+ through total degree hi with deconcatenation and
/// the bar differential. Requires a.hi >= hi - 1.
BarWindow bar(const AlgebraWindow &a, int hi);

/// Sum of letter weights on every bar word.
AdmissibleFiltration weight_filtration(const BarWindow &b, const AlgebraWindow &a);

/// Generators of the cobar construction, one per non-coaugmentation basis
/// element of degree 1..hi, in degree order.
std::vector<BarLetter> cobar_generators(const DgCoalgebraWindow &c, int hi);

/// Tensor algebra on s^-1 of the reduced part through generator degree
/// hi - 1, labelled by the coalgebra labels. Throws NotConilpotent unless
/// degree 0 is spanned by the coaugmentation.
PresentedDgAlgebra cobar(const DgCoalgebraWindow &c, int hi);

/// Chain complex of a presented dg algebra through degree hi on irreducible
/// words (the empty word included). Throws InfiniteRank past cap.
struct AlgebraComplex {
  ChainComplexWindow complex;
  std::vector<std::vector<Word>> basis;
};
AlgebraComplex algebra_complex(const PresentedDgAlgebra &a, const RewriteSystem &r, int hi,
                               std::size_t cap = 10000);

struct IsoCertificate {
  std::vector<std::string> checks; ///< one line per verified identity
  /// Per degree: the basis bijection and both differentials.
  std::vector<IntMatrix> bijection, nerve_boundary, bar_boundary;
};

/// Compares C N(M) with B C(M) through degree hi under (m1,...,mn) ->
/// [m1-1|...|mn-1], checking d, the coproduct and the counit exactly.
/// Throws MismatchAt at the first failure.
IsoCertificate nerve_bar_iso_check(const FiniteMonoid &m, int hi);

struct WindowVerdict {
  bool passed = false;
  int checked_through = 0; ///< the cone is acyclic in degrees 0..checked_through
  std::string detail;
  std::vector<std::string> checks;
  HomologyTable source, target;
};

/// Omega B A -> A with both sides built through degree hi; interior degrees
/// are compared. A must be connected (generators of positive degree);
/// throws NotConnected otherwise.
WindowVerdict counit_check(const PresentedDgAlgebra &a, int hi, std::size_t budget = 100000,
                           std::size_t cap = 10000);

/// C -> B Omega C with the skeletal filtration on C and the weight
/// filtration on B Omega C, both built through degree hi (c must reach it).
/// Throws NotSimplyConnected unless C has one vertex and no 1-simplices.
WindowVerdict unit_check(const DgCoalgebraWindow &c, int hi, std::size_t cap = 10000);

} // namespace monoloc
