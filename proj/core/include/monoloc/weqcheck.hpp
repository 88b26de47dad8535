#pragma once
// Invariants of finite monoids and three-valued weak equivalence verdicts
// for monoid maps. A map is a weak equivalence when its nerve is one, so any
// invariant of the nerve that f fails to preserve refutes it.

#include "monoloc/dgcoalg.hpp"
#include "monoloc/monoids.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace monoloc {

struct MonoidInvariantBundle {
  HomologyTable nerve_homology; ///< window 0..hi of C N(M)
  CompletionResult completion;
  bool grouplike = false;

  std::string completion_summary() const;
};

MonoidInvariantBundle invariants(const FiniteMonoid &m, int hi, std::size_t budget = 100000);

struct WeqVerdict {
  enum class Kind { Distinguished, ConsistentUpToWindow, CertifiedEquivalent };
  Kind kind = Kind::ConsistentUpToWindow;
  /// For Distinguished: the invariant that differs, with both values.
  std::string witness;
  /// One line per verified fact; for CertifiedEquivalent this is the certificate.
  std::vector<std::string> checks;
  int hi = 0;
  MonoidInvariantBundle source, target;
};

const char *to_string(WeqVerdict::Kind k);

/// Compares nerve homology degree by degree, the mapping cone of C N(f) and
/// the induced map of group completions. Distinguished on any refutation;
/// CertifiedEquivalent when the cone is acyclic on all exact degrees of the
/// window and the completions are isomorphic via f; ConsistentUpToWindow
/// otherwise. Throws NotAHomomorphism.
WeqVerdict weq_verdict(const MonoidMap &f, int hi, std::size_t budget = 100000);

} // namespace monoloc
