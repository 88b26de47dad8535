#pragma once
// Finite monoids, finitely presented monoids and groups, monoid algebras and
// budgeted group completion.

#include "monoloc/rewrite.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace monoloc {

/// Monoid given by its multiplication table. Element labels are stable and
/// every downstream basis (nerve simplices, algebra generators) reuses them.
struct FiniteMonoid {
  std::vector<std::string> elements;
  int identity = 0;
  std::vector<std::vector<int>> table; ///< table[a][b] = a*b

  std::size_t size() const { return elements.size(); }
  int mul(int a, int b) const {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  std::optional<int> index_of(const std::string &label) const;
  /// Indices of the non-identity elements in label order of the table.
  std::vector<int> nonidentity() const;

  friend bool operator==(const FiniteMonoid &, const FiniteMonoid &) = default;
};

struct ValidationIssue {
  enum class Kind { MalformedTable, IdentityLaw, Associativity, SimplicialIdentity, Other };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(ValidationIssue::Kind k) const;
  std::string to_string() const;
};

const char *to_string(ValidationIssue::Kind k);

/// Exhaustive check of shape, identity law and associativity.
ValidationReport validate_monoid(const FiniteMonoid &m);

/// Throws MalformedTable (or InvalidInput) unless validate_monoid passes.
void require_valid(const FiniteMonoid &m);

bool is_group(const FiniteMonoid &m);

/// Cyclic group Z/n with elements "1", "g", "g2", ...
FiniteMonoid cyclic_group(int n);
FiniteMonoid trivial_monoid();
/// {1, b} with b*b = b.
FiniteMonoid idempotent_monoid();

/// Degree-0 presented algebra: one generator per non-identity element and one
/// relation per table entry, products equal to the identity becoming 1.
/// The augmentation sends every generator to 1.
PresentedDgAlgebra monoid_algebra(const FiniteMonoid &m);

/// Map of finite monoids given on elements.
struct MonoidMap {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<int> images; ///< images[i] is the target index of source element i
};

bool is_homomorphism(const MonoidMap &f);
MonoidMap identity_map(const FiniteMonoid &m);

// ------------------------------------------------------------ presentations

/// A generator or, in group presentations, its formal inverse.
struct Letter {
  int gen = 0;
  bool inverse = false;
  friend auto operator<=>(const Letter &, const Letter &) = default;
};
using GroupWord = std::vector<Letter>;

/// Generators and relations u = v. With group set, letters may be inverted
/// and the presented object is the group <gens | u v^-1>.
struct MonoidPresentation {
  std::vector<std::string> gens;
  std::vector<std::pair<GroupWord, GroupWord>> rels;
  bool group = false;

  std::optional<int> find(const std::string &label) const;
  std::string word_string(const GroupWord &w) const;
  /// Parses "ab", "a b^-1" or "1"; single-character labels may be run together.
  GroupWord parse_word(const std::string &s) const;
  std::string to_string() const;

  friend bool operator==(const MonoidPresentation &, const MonoidPresentation &) = default;
};

/// Presentation of a finite monoid on its non-identity elements.
MonoidPresentation presentation_of(const FiniteMonoid &m);

/// Monoid ring Z[M] of a presented monoid, augmented by sending every
/// generator to 1. For group presentations each generator x also gets an
/// inverse generator "x^-1" with x x^-1 = x^-1 x = 1.
PresentedDgAlgebra monoid_ring(const MonoidPresentation &p);

GroupWord inverse_word(const GroupWord &w);
GroupWord free_reduce(GroupWord w);
/// Relators u v^-1 of a group (or group-completed monoid) presentation.
std::vector<GroupWord> relators(const MonoidPresentation &p);

/// Coset table of the trivial subgroup, i.e. the right regular action.
/// Coset 0 is the identity. Column 2g is generator g, 2g+1 its inverse.
struct CosetTable {
  std::size_t generator_count = 0;
  std::vector<std::vector<int>> action;

  std::size_t order() const { return action.size(); }
  int act(int coset, const Letter &l) const {
    return action[static_cast<std::size_t>(coset)][static_cast<std::size_t>(2 * l.gen + (l.inverse ? 1 : 0))];
  }
  int act(int coset, const GroupWord &w) const;
  /// Shortlex spanning-tree representatives, one per coset.
  std::vector<GroupWord> representatives() const;
};

/// Todd-Coxeter (HLT strategy with coincidence processing) over the trivial
/// subgroup. Returns nullopt once more than max_cosets cosets were defined.
std::optional<CosetTable> enumerate_cosets(std::size_t generator_count,
                                           const std::vector<GroupWord> &relators,
                                           std::size_t max_cosets);

/// Result of adjoining formal inverses and simplifying.
struct GroupCompletion {
  enum class Kind { Free, Finite };
  Kind kind = Kind::Free;
  MonoidPresentation presentation; ///< simplified, group = true
  /// Image of each original generator as a word in the simplified generators.
  std::vector<GroupWord> generator_images;
  std::size_t free_rank = 0;           ///< for Kind::Free
  std::optional<CosetTable> table;     ///< for Kind::Finite
  std::vector<std::string> tietze_log; ///< eliminations performed

  std::string describe() const;
};

/// Honest "unknown within budget"; carries the best presentation reached.
struct Exhausted {
  std::string reason;
  MonoidPresentation presentation;
};

using CompletionResult = std::variant<GroupCompletion, Exhausted>;

/// Group completion: formal inverses, Tietze elimination of generators that
/// occur once in a relator, then coset enumeration of what remains with at
/// most budget cosets.
CompletionResult group_completion(const MonoidPresentation &p, std::size_t budget = 100000);

/// Decides whether the homomorphism induced on group completions by f is an
/// isomorphism, when both completions are finite or both are free of rank 0.
/// nullopt when the completions fall outside the decidable cases.
std::optional<bool> induced_completion_iso(const MonoidMap &f, const GroupCompletion &src,
                                           const GroupCompletion &dst);

} // namespace monoloc
