#include <monoloc/catalog.hpp>
#include <monoloc/error.hpp>
#include <monoloc/weqcheck.hpp>

#include <doctest.h>

using namespace monoloc;

TEST_CASE("invariant bundles") {
  const MonoidInvariantBundle b = invariants(idempotent_monoid(), 5);
  CHECK(b.nerve_homology.at(0).isomorphic({1, {}, true}));
  for (int n = 1; n <= 4; ++n)
    CHECK(b.nerve_homology.at(n).is_zero());
  CHECK_FALSE(b.grouplike);
  REQUIRE(std::holds_alternative<GroupCompletion>(b.completion));

  const MonoidInvariantBundle z2 = invariants(cyclic_group(2), 5);
  CHECK(z2.nerve_homology.at(1).isomorphic({0, {2}, true}));
  CHECK(z2.grouplike);
  const auto &g = std::get<GroupCompletion>(z2.completion);
  CHECK(g.table->order() == 2);
  CHECK(z2.completion_summary().find("2") != std::string::npos);
}

TEST_CASE("verdicts") {
  const FiniteMonoid one = trivial_monoid();
  const WeqVerdict b = weq_verdict({idempotent_monoid(), one, {0, 0}}, 5);
  CHECK(b.kind == WeqVerdict::Kind::CertifiedEquivalent);
  CHECK_FALSE(b.checks.empty());

  const WeqVerdict z2 = weq_verdict({cyclic_group(2), one, {0, 0}}, 5);
  CHECK(z2.kind == WeqVerdict::Kind::Distinguished);
  CHECK(z2.witness.rfind("H_1", 0) == 0);

  for (const auto &[name, m] : bundled_monoids()) {
    INFO(name);
    CHECK(weq_verdict(identity_map(m), 5).kind == WeqVerdict::Kind::CertifiedEquivalent);
  }
  CHECK(std::string(to_string(WeqVerdict::Kind::ConsistentUpToWindow)) != to_string(WeqVerdict::Kind::Distinguished));
}

TEST_CASE("a map with equal homology but no inverse on completions") {
  // Z/3 -> Z/3, g -> 1: both nerves have the same homology, the cone does not vanish
  const FiniteMonoid z3 = cyclic_group(3);
  const WeqVerdict v = weq_verdict({z3, z3, {0, 0, 0}}, 4);
  CHECK(v.kind == WeqVerdict::Kind::Distinguished);
}

TEST_CASE("non-homomorphisms are rejected") {
  CHECK_THROWS_AS(weq_verdict({cyclic_group(2), idempotent_monoid(), {0, 1}}, 4), NotAHomomorphism);
}

TEST_CASE("verdicts on all maps between small monoids are never contradictory") {
  for (const auto &src : all_monoids(2))
    for (const auto &dst : all_monoids(3))
      for (int a = 0; a < 3; ++a) {
        const MonoidMap f{src, dst, {0, a}};
        if (!is_homomorphism(f))
          continue;
        const WeqVerdict v = weq_verdict(f, 4);
        // a certified map must preserve nerve homology in every exact degree
        if (v.kind == WeqVerdict::Kind::CertifiedEquivalent)
          for (int n : v.source.nerve_homology.exact_degrees())
            CHECK(v.source.nerve_homology.at(n).isomorphic(v.target.nerve_homology.at(n)));
        if (v.kind == WeqVerdict::Kind::Distinguished)
          CHECK_FALSE(v.witness.empty());
      }
}
