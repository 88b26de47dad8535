#include <monoloc/catalog.hpp>
#include <monoloc/error.hpp>
#include <monoloc/loopgroup.hpp>

#include <doctest.h>

using namespace monoloc;

namespace {

std::vector<std::size_t> ranks(const std::vector<LoopGroupLevel> &levels) {
  std::vector<std::size_t> r;
  for (const auto &l : levels)
    r.push_back(l.generators.size());
  return r;
}

std::size_t completion_order(const MonoidPresentation &p) {
  const auto c = group_completion(p);
  REQUIRE(std::holds_alternative<GroupCompletion>(c));
  const auto &g = std::get<GroupCompletion>(c);
  REQUIRE(g.kind == GroupCompletion::Kind::Finite);
  return g.table->order();
}

} // namespace

TEST_CASE("loop group levels") {
  const auto s1 = kan_loop_group(*minimal_sphere(1), 0);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].generators.size() == 1);

  CHECK(ranks(kan_loop_group(*point(), 3)) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(ranks(kan_loop_group(*minimal_sphere(2), 3)) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(ranks(kan_loop_group(*minimal_sphere(3), 3)) == std::vector<std::size_t>{0, 0, 1, 3});
  CHECK(ranks(kan_loop_group(*minimal_sphere(1), 3)) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(ranks(kan_loop_group(*rp2_model(), 3)) == std::vector<std::size_t>{1, 2, 3, 4});
}

TEST_CASE("loop group simplicial identities") {
  for (const auto &[name, k] : bundled_reduced_complexes()) {
    INFO(name);
    CHECK(validate_loop_group(kan_loop_group(*k, 3)).ok());
  }
  auto levels = kan_loop_group(*minimal_sphere(2), 2);
  // d_0 d_0 = d_0 d_1 fails once a face is replaced by its inverse
  levels[2].faces[0][0] = inverse_word(levels[2].faces[0][0]);
  levels[2].faces[0][0].push_back({0, false});
  CHECK_FALSE(validate_loop_group(levels).ok());
}

TEST_CASE("loop groups need reduced sets") {
  CHECK_THROWS_AS(kan_loop_group(*simplex_boundary(2), 1), NotReduced);
}

TEST_CASE("fundamental group presentations") {
  const MonoidPresentation s1 = pi1_presentation(*minimal_sphere(1));
  CHECK(s1.group);
  CHECK(s1.gens.size() == 1);
  CHECK(s1.rels.empty());
  CHECK(abelianization(s1).isomorphic({1, {}, true}));

  const MonoidPresentation d3 = pi1_presentation(*collapsed_boundary_d3());
  CHECK(d3.gens.size() == 3);
  CHECK(d3.rels.size() == 4);
  CHECK(completion_order(d3) == 1);

  const MonoidPresentation rp2 = pi1_presentation(*rp2_model());
  CHECK(completion_order(rp2) == 2);
  CHECK(abelianization(rp2).isomorphic({0, {2}, true}));

  CHECK(pi1_presentation(*minimal_sphere(2)).gens.empty());
}

TEST_CASE("abelianization matches H_1") {
  for (const auto &[name, k] : bundled_reduced_complexes()) {
    INFO(name);
    const auto h1 = homology_window(chains(*k, 2).complex).at(1);
    CHECK(abelianization(pi1_presentation(*k)).isomorphic(h1));
  }
  MonoidPresentation p;
  p.gens = {"a", "b"};
  p.group = true;
  p.rels = {{p.parse_word("a a a a"), {}}, {p.parse_word("b b b b b b"), {}}};
  CHECK(abelianization(p).isomorphic({0, {2, 12}, true}));
}

TEST_CASE("degree-zero comparison") {
  for (const auto &name : {"point", "sphere1", "sphere2", "collapsed-d3", "rp2"}) {
    INFO(name);
    const H0Comparison h = h0_compare(*builtin_simplicial_set(name));
    CHECK(h.certificate.passed());
  }
  const H0Comparison s2 = h0_compare(*minimal_sphere(2));
  CHECK(s2.extended_h0.gens.empty());
}

TEST_CASE("edge cycles and the extended cobar") {
  const EdgeCycles e = edge_cycles(*minimal_sphere(1), 2);
  REQUIRE(e.cycles.size() == 1);
  CHECK(e.edge_labels.size() == 1);
  const PresentedDgAlgebra ext = extended_cobar(*minimal_sphere(1));
  CHECK(ext.gens.size() == 2);
  CHECK(ext.relations.size() == 2);
  const PresentedDgAlgebra s2 = extended_cobar(*minimal_sphere(2), 3);
  CHECK(s2 == cobar(chains(*minimal_sphere(2), 3), 3));
  CHECK_THROWS_AS(extended_cobar(*simplex_boundary(2)), NotReduced);
}
