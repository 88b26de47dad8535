#include "monoloc/weqcheck.hpp"

#include "monoloc/error.hpp"

namespace monoloc {

std::string MonoidInvariantBundle::completion_summary() const {
  if (const auto *g = std::get_if<GroupCompletion>(&completion))
    return g->describe();
  return "exhausted: " + std::get<Exhausted>(completion).reason;
}

MonoidInvariantBundle invariants(const FiniteMonoid &m, int hi, std::size_t budget) {
  require_valid(m);
  MonoidInvariantBundle b{homology_window(chains(*nerve(m), hi).complex),
                          group_completion(presentation_of(m), budget), is_group(m)};
  return b;
}

const char *to_string(WeqVerdict::Kind k) {
  switch (k) {
  case WeqVerdict::Kind::Distinguished:
    return "Distinguished";
  case WeqVerdict::Kind::ConsistentUpToWindow:
    return "ConsistentUpToWindow";
  case WeqVerdict::Kind::CertifiedEquivalent:
    return "CertifiedEquivalent";
  }
  return "?";
}

WeqVerdict weq_verdict(const MonoidMap &f, int hi, std::size_t budget) {
  if (!is_homomorphism(f))
    throw NotAHomomorphism("the map does not preserve products and the identity");
  WeqVerdict v;
  v.hi = hi;
  v.source = invariants(f.source, hi, budget);
  v.target = invariants(f.target, hi, budget);
  auto refute = [&](std::string witness) {
    v.kind = WeqVerdict::Kind::Distinguished;
    v.witness = std::move(witness);
    return v;
  };

  for (int n : v.source.nerve_homology.exact_degrees()) {
    const auto &a = v.source.nerve_homology.at(n);
    const auto &b = v.target.nerve_homology.at(n);
    if (!a.isomorphic(b))
      return refute("H_" + std::to_string(n) + " of the nerves: " + a.to_string() + " vs " +
                    b.to_string());
  }
  v.checks.push_back("nerve homology agrees in exact degrees of 0.." + std::to_string(hi));

  const auto nf = nerve_map(f);
  const DgCoalgebraWindow c = chains(*nf.source, hi), d = chains(*nf.target, hi);
  const CoalgebraMap cf = chains_map(nf, c, d);
  if (auto bad = first_cone_obstruction(c.complex, d.complex, cf.components))
    return refute("the cone of C N(f) has H_" + std::to_string(*bad) + " = " +
                  homology_window(mapping_cone(c.complex, d.complex, cf.components))
                      .at(*bad)
                      .to_string());
  v.checks.push_back("the cone of C N(f) is acyclic in degrees 0.." + std::to_string(hi - 1));

  const auto *gs = std::get_if<GroupCompletion>(&v.source.completion);
  const auto *gt = std::get_if<GroupCompletion>(&v.target.completion);
  std::optional<bool> iso;
  if (gs && gt)
    iso = induced_completion_iso(f, *gs, *gt);
  if (iso && !*iso)
    return refute("group completions: " + gs->describe() + " vs " + gt->describe() +
                  " are not isomorphic via f");
  if (!iso) {
    v.kind = WeqVerdict::Kind::ConsistentUpToWindow;
    v.checks.push_back("induced map of group completions undecided");
    return v;
  }
  v.checks.push_back("f induces an isomorphism of group completions (" + gs->describe() + ")");
  v.kind = WeqVerdict::Kind::CertifiedEquivalent;
  return v;
}

} // namespace monoloc
