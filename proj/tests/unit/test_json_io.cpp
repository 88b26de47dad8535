#include <monoloc/catalog.hpp>
#include <monoloc/error.hpp>
#include <monoloc/json_io.hpp>

#include <doctest.h>

using namespace monoloc;

namespace {

template <class T, class F> void roundtrip(const T &x, F from) {
  const Json j = to_json(x);
  CHECK(from(Json::parse(j.dump())) == x);
}

} // namespace

TEST_CASE("integers and matrices") {
  CHECK(integer_from_json(to_json(Integer("-123456789012345678901234567890"))) ==
        Integer("-123456789012345678901234567890"));
  CHECK(integer_from_json(Json(7)) == 7);
  roundtrip(IntMatrix{{1, -2}, {3, 4}, {0, 0}}, matrix_from_json);
  roundtrip(IntMatrix(0, 3), matrix_from_json);
}

TEST_CASE("complexes and homology") {
  const auto c = chains(*nerve(cyclic_group(2)), 4).complex;
  roundtrip(c, complex_from_json);
  const HomologyTable h = homology_window(c);
  roundtrip(h, homology_from_json);
  const std::string csv = homology_csv(h);
  CHECK(csv.find("1,0,2,true") != std::string::npos);
}

TEST_CASE("monoids and maps") {
  for (const auto &[name, m] : bundled_monoids())
    roundtrip(m, monoid_from_json);
  const Json by_label = Json::parse(R"({"kind":"monoid","elements":["1","b"],"identity":"1",
                                        "table":[["1","b"],["b","b"]]})");
  CHECK(monoid_from_json(by_label) == idempotent_monoid());

  const MonoidMap f{idempotent_monoid(), trivial_monoid(), {0, 0}};
  const MonoidMap g = monoid_map_from_json(Json::parse(to_json(f).dump()));
  CHECK(g.source == f.source);
  CHECK(g.target == f.target);
  CHECK(g.images == f.images);
}

TEST_CASE("presentations and algebras") {
  roundtrip(pi1_presentation(*collapsed_boundary_d3()), presentation_from_json);
  roundtrip(presentation_of(cyclic_group(3)), presentation_from_json);
  roundtrip(monoid_algebra(cyclic_group(3)), dg_algebra_from_json);
  roundtrip(extended_cobar(*minimal_sphere(1)), dg_algebra_from_json);
  roundtrip(cobar(chains(*collapsed_boundary_d3(), 3), 3), dg_algebra_from_json);

  const Json j = Json::parse(R"({"kind":"dg-algebra","gens":[{"label":"x","deg":1}],
                                 "rels":["x*x = 0"]})");
  const PresentedDgAlgebra a = dg_algebra_from_json(j);
  REQUIRE(a.augmentation);
  CHECK((*a.augmentation)[0] == 0);
  CHECK(a.relations.size() == 1);

  const Json group = Json::parse(R"({"kind":"presentation","gens":["a"],"group":true,"rels":["a a^-1 a"]})");
  CHECK_THROWS_AS(presentation_from_json(group), InvalidInput);
}

TEST_CASE("simplicial sets and coalgebras") {
  for (const auto &name : {"rp2", "collapsed-d3", "sphere3"}) {
    const auto k = builtin_simplicial_set(name);
    const auto back = simplicial_set_from_json(Json::parse(to_json(*k, 3).dump()));
    CHECK(validate_simplicial(*back, 3).ok());
    CHECK(back->reduced());
    CHECK(chains(*back, 3).complex == chains(*k, 3).complex);
  }
  const auto c = chains(*nerve(cyclic_group(2)), 3);
  const DgCoalgebraWindow d = coalgebra_from_json(Json::parse(to_json(c).dump()));
  CHECK(d.complex == c.complex);
  CHECK(d.coproduct == c.coproduct);
  CHECK(d.labels == c.labels);
  CHECK(d.counit == c.counit);
  CHECK(d.coaugmentation == c.coaugmentation);
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(monoid_from_json(Json::parse(R"({"kind":"monoid"})")), InvalidInput);
  CHECK_THROWS_AS(monoid_from_json(Json::parse(R"({"kind":"homology","degrees":[]})")), InvalidInput);
  CHECK_THROWS_AS(simplicial_set_from_json(Json::parse(
                      R"({"kind":"simplicial-set","simplices":[{"label":"e","dim":1,"faces":["v","v"]}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(dg_algebra_from_json(Json::parse(R"({"kind":"dg-algebra","gens":[],"rels":["x = 1"]})")),
                  InvalidInput);
}

TEST_CASE("certificates serialize") {
  const Json v = to_json(weq_verdict({cyclic_group(2), trivial_monoid(), {0, 0}}, 4));
  CHECK(v.at("kind") == "weq-verdict");
  CHECK(v.dump().find("Distinguished") != std::string::npos);
  const Json h = to_json(h0_compare(*minimal_sphere(1)));
  CHECK(h.at("certificate").at("outcome") == "pass");
  const Json lg = to_json(kan_loop_group(*minimal_sphere(2), 2));
  CHECK(lg.dump().find("levels") != std::string::npos);
}
