#pragma once
// Simplicial sets described by their nondegenerate simplices. Degenerate
// simplices are never stored: every face is returned in Eilenberg-Zilber
// normal form (nondegenerate base plus a strictly decreasing degeneracy word).

#include "monoloc/monoids.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace monoloc {

/// Identifier of a nondegenerate simplex. The meaning of data is private to
/// the simplicial set that issued the key.
struct SimplexKey {
  int dim = 0;
  std::vector<std::int64_t> data;
  friend auto operator<=>(const SimplexKey &, const SimplexKey &) = default;
  friend bool operator==(const SimplexKey &, const SimplexKey &) = default;
};

/// s_{j1} ... s_{jk} base with j1 > ... > jk.
struct FormalSimplex {
  SimplexKey base;
  std::vector<int> degens;

  int dim() const { return base.dim + static_cast<int>(degens.size()); }
  bool degenerate() const { return !degens.empty(); }
  friend auto operator<=>(const FormalSimplex &, const FormalSimplex &) = default;
  friend bool operator==(const FormalSimplex &, const FormalSimplex &) = default;
};

FormalSimplex nondegenerate(SimplexKey k);
/// Fully degenerate simplex of dimension n on the vertex v.
FormalSimplex degenerate_vertex(const SimplexKey &v, int n);

class SimplicialSet {
public:
  virtual ~SimplicialSet() = default;

  virtual std::string name() const = 0;
  virtual bool reduced() const = 0;
  /// Nondegenerate n-simplices in a fixed order; nullopt when degree n is
  /// unbounded (lazy sets).
  virtual std::optional<std::vector<SimplexKey>> simplices(int n) const = 0;
  virtual bool contains(const SimplexKey &k) const = 0;
  /// d_i of a nondegenerate simplex, 0 <= i <= dim.
  virtual FormalSimplex face(const SimplexKey &k, int i) const = 0;
  virtual std::string label(const SimplexKey &k) const = 0;

  /// Simplices of degree n, throwing UnboundedDegree for lazy degrees.
  std::vector<SimplexKey> simplices_or_throw(int n) const;
  /// Highest degree with a nondegenerate simplex when that is known.
  virtual std::optional<int> top_dimension() const { return std::nullopt; }
};

using SimplicialSetPtr = std::shared_ptr<const SimplicialSet>;

/// d_i and s_j of formal simplices, computed through normal forms.
FormalSimplex face(const SimplicialSet &k, const FormalSimplex &x, int i);
FormalSimplex degeneracy(const FormalSimplex &x, int j);
std::string formal_label(const SimplicialSet &k, const FormalSimplex &x);

/// Explicitly listed simplices with explicit faces.
class FiniteSimplicialSet : public SimplicialSet {
public:
  explicit FiniteSimplicialSet(std::string name = "K") : name_(std::move(name)) {}

  /// Adds a nondegenerate simplex; faces may be empty for vertices.
  SimplexKey add(std::string label, int dim, std::vector<FormalSimplex> faces);
  void set_reduced_flag(bool r) { reduced_flag_ = r; }
  bool reduced_flag() const { return reduced_flag_; }
  /// Overwrites a stored face. For building negative test cases.
  void corrupt_face(const SimplexKey &k, int i, FormalSimplex f);
  std::optional<SimplexKey> find(const std::string &label) const;

  std::string name() const override { return name_; }
  bool reduced() const override { return reduced_flag_; }
  std::optional<std::vector<SimplexKey>> simplices(int n) const override;
  bool contains(const SimplexKey &k) const override;
  FormalSimplex face(const SimplexKey &k, int i) const override;
  std::string label(const SimplexKey &k) const override;
  std::optional<int> top_dimension() const override;

private:
  struct Entry {
    std::string label;
    std::vector<FormalSimplex> faces;
  };
  std::string name_;
  bool reduced_flag_ = false;
  std::vector<std::vector<Entry>> levels_;
};

/// Checks face dimensions, d_i d_j = d_{j-1} d_i (i < j), the face/degeneracy
/// laws on formal degeneracies, and the reduced flag, for degrees <= up_to.
ValidationReport validate_simplicial(const SimplicialSet &k, int up_to);

/// Nerve of a finite monoid: n-simplices are n-tuples of non-identity elements.
class MonoidNerve : public SimplicialSet {
public:
  explicit MonoidNerve(FiniteMonoid m);
  const FiniteMonoid &monoid() const { return m_; }
  /// Key of the tuple of element indices (all non-identity).
  SimplexKey key(const std::vector<int> &elements) const;

  std::string name() const override;
  bool reduced() const override { return true; }
  std::optional<std::vector<SimplexKey>> simplices(int n) const override;
  bool contains(const SimplexKey &k) const override;
  FormalSimplex face(const SimplexKey &k, int i) const override;
  std::string label(const SimplexKey &k) const override;

private:
  FiniteMonoid m_;
};

std::shared_ptr<const MonoidNerve> nerve(const FiniteMonoid &m);

/// Delta^n / boundary: one vertex and one nondegenerate n-simplex.
std::shared_ptr<const FiniteSimplicialSet> minimal_sphere(int n);
/// The one-vertex set with nothing else.
std::shared_ptr<const FiniteSimplicialSet> point();

/// Ordered simplicial complex on vertices 0..n-1 generated by the given
/// facets (each a strictly increasing vertex list). Simplices are labelled by
/// their vertex strings, e.g. "013".
std::shared_ptr<const FiniteSimplicialSet> ordered_complex(int vertex_count,
                                                           const std::vector<std::vector<int>> &facets,
                                                           std::string name = "K");
std::shared_ptr<const FiniteSimplicialSet> standard_simplex(int n);
std::shared_ptr<const FiniteSimplicialSet> simplex_boundary(int n);

/// One vertex, an edge e and a 2-simplex with faces (e, s0 *, e).
std::shared_ptr<const FiniteSimplicialSet> rp2_model();

/// K with the subcomplex sub collapsed to its least vertex. Throws
/// NotASubcomplex when sub is not closed under faces.
SimplicialSetPtr quotient_by_subcomplex(SimplicialSetPtr k, const std::vector<SimplexKey> &sub);

/// Copy of k restricted to degrees <= n as an explicit finite set.
std::shared_ptr<const FiniteSimplicialSet> materialize(const SimplicialSet &k, int n);

/// The pushout K u_{u_w I} u_w J along the minimal circles of the edges in w,
/// with J = N(Z). The edge of the circle goes to the 1-simplex (+1) of N(Z).
/// New simplices are tuples of nonzero integers; their degrees >= 1 are
/// unbounded, so only membership, faces and truncated enumeration are offered.
class LocalizedNerve : public SimplicialSet {
public:
  LocalizedNerve(SimplicialSetPtr base, std::vector<SimplexKey> edges);

  const SimplicialSet &base() const { return *base_; }
  const std::vector<SimplexKey> &localized_edges() const { return edges_; }
  /// Key of the N(Z) tuple glued along the i-th localized edge. The tuple
  /// (1) is the edge itself and the empty tuple is the basepoint.
  FormalSimplex integer_simplex(std::size_t edge, const std::vector<std::int64_t> &tuple) const;
  /// New simplices of degree n whose contiguous partial sums all have
  /// absolute value at most radius, followed by those of the base.
  std::vector<SimplexKey> truncated_simplices(int n, std::int64_t radius) const;

  std::string name() const override;
  bool reduced() const override { return base_->reduced(); }
  std::optional<std::vector<SimplexKey>> simplices(int n) const override;
  bool contains(const SimplexKey &k) const override;
  FormalSimplex face(const SimplexKey &k, int i) const override;
  std::string label(const SimplexKey &k) const override;

private:
  SimplicialSetPtr base_;
  std::vector<SimplexKey> edges_;
  SimplexKey basepoint_;
};

/// K itself when w is empty, a LocalizedNerve otherwise. Throws InvalidInput
/// when k is not reduced or w contains something other than nondegenerate
/// 1-simplices of k.
SimplicialSetPtr localized_nerve(SimplicialSetPtr k, const std::vector<SimplexKey> &w);

/// Presentation of the fundamental monoid of a reduced set: generators are
/// the nondegenerate edges, one relation d1 x = d2 x . d0 x per nondegenerate
/// 2-simplex. For a LocalizedNerve each localized edge gets an inverse.
MonoidPresentation fundamental_monoid(const SimplicialSet &k);

enum class Grouplike { Yes, No, Unknown };
const char *to_string(Grouplike g);

struct GrouplikeReport {
  Grouplike verdict = Grouplike::Unknown;
  std::string reason;
  MonoidPresentation fundamental_monoid;
};

/// Decides whether the fundamental monoid of a reduced K is a group in the
/// decidable cases: no relation with an empty side (then nothing is
/// invertible), a finite completed monoid, or explicit inverses found by a
/// bounded search.
GrouplikeReport grouplike_test(const SimplicialSet &k, std::size_t budget = 100000);

/// Simplicial map given on nondegenerate simplices.
struct SimplicialMap {
  SimplicialSetPtr source;
  SimplicialSetPtr target;
  std::function<FormalSimplex(const SimplexKey &)> apply;
};

/// N(f) for a monoid homomorphism f.
SimplicialMap nerve_map(const MonoidMap &f);
/// The unique map to the point.
SimplicialMap collapse_map(SimplicialSetPtr k);
SimplicialMap identity_map(SimplicialSetPtr k);

} // namespace monoloc
