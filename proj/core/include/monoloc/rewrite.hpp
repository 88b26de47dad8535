#pragma once
// Finitely presented dg rings over Z (or Z/p): noncommutative polynomials,
// bounded Knuth-Bendix completion, normal forms, degreewise bases, H_0 rings,
// adjoining inverses and ring isomorphism certificates.

#include "monoloc/exactlin.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monoloc {

/// A word in generator indices; the empty word is the unit.
using Word = std::vector<int>;

struct Generator {
  std::string label;
  int degree = 0;
  friend bool operator==(const Generator &, const Generator &) = default;
};

/// Finite linear combination of words. Terms with zero coefficient are never
/// stored. Coefficients are plain integers; reduction mod p is done by
/// whoever owns the coefficient ring (see reduce_mod).
class Polynomial {
public:
  Polynomial() = default;
  static Polynomial constant(const Integer &c);
  static Polynomial monomial(Word w, const Integer &c = 1);
  static Polynomial generator(int g, const Integer &c = 1) { return monomial(Word{g}, c); }

  const std::map<Word, Integer> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Word &w) const;
  void add_term(const Word &w, const Integer &c);

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Integer &k);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Integer(-1); }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(Polynomial a, const Integer &k) { return a *= k; }
  friend Polynomial operator*(const Integer &k, Polynomial a) { return a *= k; }
  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  /// Coefficients taken to [0, p) and zero terms dropped; identity for p == 0.
  Polynomial reduce_mod(const Integer &p) const;

private:
  std::map<Word, Integer> terms_;
};

/// Degree-then-length-then-lex order on words. Ties in length are broken by
/// generator precedence (higher precedence compares larger).
class MonomialOrder {
public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<int> degrees, std::vector<int> precedence);

  int degree(const Word &w) const;
  /// Strict comparison a < b.
  bool less(const Word &a, const Word &b) const;
  std::size_t generator_count() const { return degrees_.size(); }

private:
  std::vector<int> degrees_;
  std::vector<int> precedence_;
};

struct Relation {
  Polynomial lhs;
  Polynomial rhs;
  friend bool operator==(const Relation &, const Relation &) = default;
};

/// Graded generators, two-sided relations and a derivation of degree -1.
///
/// Positive-degree generators are augmented to 0. A missing augmentation
/// means none is known (for instance after inverting an element whose
/// augmentation is not a unit).
struct PresentedDgAlgebra {
  std::vector<Generator> gens;
  std::vector<Polynomial> diff; ///< d(gens[i]); same length as gens
  std::vector<Relation> relations;
  std::optional<std::vector<Integer>> augmentation;
  Integer modulus = 0; ///< 0 for Z, a prime p for Z/p
  std::vector<std::string> notes;
  /// Generator precedence for the monomial order; empty means declaration order.
  std::vector<int> precedence;

  int add_generator(std::string label, int degree);
  std::optional<int> find(const std::string &label) const;
  int find_or_throw(const std::string &label) const;
  int degree(const Word &w) const;
  MonomialOrder order() const;
  /// Extends d as a derivation with Koszul signs: d(xy) = dx y + (-1)^|x| x dy.
  Polynomial differential(const Polynomial &p) const;
  /// Ring map to Z sending each generator to its augmentation value.
  std::optional<Integer> augment(const Polynomial &p) const;

  std::string to_string(const Polynomial &p) const;
  std::string word_string(const Word &w) const;
  /// Parses "2*a*b - (1 + t)^2" style expressions; labels that are not plain
  /// identifiers are written in backticks.
  Polynomial parse(const std::string &expr) const;

  friend bool operator==(const PresentedDgAlgebra &, const PresentedDgAlgebra &) = default;
};

/// lead * lhs -> rhs, where lhs is the leading word of (lead * lhs - rhs).
struct RewriteRule {
  Integer lead = 1;
  Word lhs;
  Polynomial rhs;
  Polynomial as_polynomial() const { return Polynomial::monomial(lhs, lead) - rhs; }
};

struct RewriteStep {
  std::size_t rule = 0;
  Word at; ///< the word that was rewritten
};

class RewriteSystem {
public:
  enum class Status { Complete, Incomplete };

  RewriteSystem() = default;
  RewriteSystem(MonomialOrder order, Integer modulus)
      : order_(std::move(order)), modulus_(std::move(modulus)) {}

  const MonomialOrder &order() const { return order_; }
  const std::vector<RewriteRule> &rules() const { return rules_; }
  const Integer &modulus() const { return modulus_; }
  Status status() const { return status_; }
  bool complete() const { return status_ == Status::Complete; }
  /// True when some rule has a leading coefficient that is not a unit. Such a
  /// system certifies equalities but does not yield a free monomial basis.
  bool has_nonunit_leads() const;
  std::size_t steps_used() const { return steps_used_; }

  /// Reduces to a fixed point. Rewrites the largest reducible term first, so
  /// every call terminates. Steps are appended to trace when given.
  Polynomial normal_form(const Polynomial &p, std::vector<RewriteStep> *trace = nullptr) const;
  bool reducible(const Word &w) const;

  std::string describe(const PresentedDgAlgebra &a) const;

private:
  friend class Completion;
  MonomialOrder order_;
  Integer modulus_ = 0;
  std::vector<RewriteRule> rules_;
  Status status_ = Status::Incomplete;
  std::size_t steps_used_ = 0;
};

/// Knuth-Bendix completion of the relations of a (all degrees) within a
/// budget counting critical pairs and reduction passes. Throws Unorientable
/// for relations that are not degree-homogeneous.
RewriteSystem complete(const PresentedDgAlgebra &a, std::size_t budget = 100000);

Polynomial normal_form(const Polynomial &p, const RewriteSystem &r);

struct BasisResult {
  enum class Status { Ok, CapExceeded };
  Status status = Status::Ok;
  std::vector<Word> basis; ///< sorted by the monomial order
};

/// Irreducible words of total degree n, at most cap of them. Requires a
/// complete system with unit leading coefficients.
BasisResult basis_in_degree(const PresentedDgAlgebra &a, const RewriteSystem &r, int n,
                            std::size_t cap = 10000);

/// Degree-0 presentation of H_0: degree-0 generators and relations plus
/// d(g) = 0 for each degree-1 generator g.
PresentedDgAlgebra h0_ring(const PresentedDgAlgebra &a);

/// Adjoins v_s with v_s * s = s * v_s = 1 for each degree-0 cycle s.
/// Throws NotACycle for elements that are not degree-0 cycles.
PresentedDgAlgebra adjoin_inverses(const PresentedDgAlgebra &a,
                                   const std::vector<Polynomial> &elements,
                                   const std::vector<std::string> &labels = {});

/// Ring map given by images of generators, each a polynomial in the target.
struct RingMap {
  std::vector<Polynomial> images;
};

/// Image of p under f, normalised in the target system at every product.
Polynomial apply_map(const Polynomial &p, const RingMap &f, const RewriteSystem &target);

struct RingCertificate {
  enum class Outcome { Pass, NotAHomomorphism, NotInverse, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::string detail;
  std::vector<std::string> checks; ///< one line per verified identity
  std::vector<std::vector<RewriteStep>> traces;
  bool passed() const { return outcome == Outcome::Pass; }
};

/// Checks that f : a -> b and g : b -> a are ring homomorphisms and mutually
/// inverse on generators, all up to normal forms of the completed systems.
RingCertificate ring_iso_certify(const PresentedDgAlgebra &a, const PresentedDgAlgebra &b,
                                 const RingMap &f, const RingMap &g,
                                 std::size_t budget = 100000);

/// Same with systems already completed by the caller.
RingCertificate ring_iso_certify(const PresentedDgAlgebra &a, const RewriteSystem &ra,
                                 const PresentedDgAlgebra &b, const RewriteSystem &rb,
                                 const RingMap &f, const RingMap &g);

const char *to_string(RingCertificate::Outcome o);

} // namespace monoloc
