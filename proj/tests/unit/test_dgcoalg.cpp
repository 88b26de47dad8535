#include <monoloc/barcobar.hpp>
#include <monoloc/catalog.hpp>
#include <monoloc/error.hpp>

#include <doctest.h>

using namespace monoloc;

namespace {

TensorVec reduced(const DgCoalgebraWindow &c, int n, std::size_t i) {
  TensorVec t = c.coproduct[static_cast<std::size_t>(n)][i];
  t.erase({0, *c.coaugmentation, i});
  t.erase({n, i, *c.coaugmentation});
  return t;
}

bool d_squared_zero(const ChainComplexWindow &c) {
  for (int n = c.lo() + 2; n <= c.hi(); ++n)
    if (!(c.boundary(n - 1) * c.boundary(n)).is_zero())
      return false;
  return true;
}

} // namespace

TEST_CASE("chains of minimal spheres") {
  const auto s1 = chains(*minimal_sphere(1), 3);
  CHECK(s1.rank(0) == 1);
  CHECK(s1.rank(1) == 1);
  CHECK(s1.complex.boundary(1).is_zero());
  CHECK(reduced(s1, 1, 0).empty());
  CHECK(check_coalgebra(s1).ok());

  const auto s2 = chains(*minimal_sphere(2), 4);
  CHECK(s2.rank(1) == 0);
  CHECK(s2.rank(2) == 1);
  CHECK(reduced(s2, 2, 0).empty());
  CHECK(check_coalgebra(s2).ok());
}

TEST_CASE("Alexander-Whitney on the nerve of Z/2") {
  const auto c = chains(*nerve(cyclic_group(2)), 4);
  const TensorVec expected{{{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{2, 0, 0}, 1}};
  CHECK(c.coproduct[2][0] == expected);
  CHECK(c.counit == std::vector<Integer>{1});
  CHECK(check_coalgebra(c).ok());
  CHECK(d_squared_zero(c.complex));
}

TEST_CASE("d^2 = 0 and coalgebra laws on the built-in sets") {
  for (const auto &name : {"point", "sphere1", "sphere2", "rp2", "collapsed-d3", "simplex3", "boundary3",
                           "nerve:z3", "nerve:idempotent"}) {
    const auto c = chains(*builtin_simplicial_set(name), 4);
    CHECK(d_squared_zero(c.complex));
    CHECK(check_coalgebra(c).ok());
  }
}

TEST_CASE("coalgebra law violations are reported") {
  auto c = chains(*nerve(cyclic_group(2)), 3);
  c.coproduct[1][0].erase({0, 0, 0});
  CHECK_FALSE(check_coalgebra(c).ok());

  auto d = chains(*minimal_sphere(1), 2);
  d.counit = {2};
  CHECK_FALSE(check_coalgebra(d).ok());
}

TEST_CASE("skeletal filtrations") {
  const auto s2 = chains(*minimal_sphere(2), 4);
  const auto f = skeletal_filtration(s2);
  CHECK(f.level[0] == std::vector<int>{0});
  CHECK(f.level[2] == std::vector<int>{2});
  CHECK(check_admissible(s2, f).ok());

  const auto z2 = chains(*nerve(cyclic_group(2)), 4);
  const auto g = skeletal_filtration(z2);
  for (int n = 1; n <= 4; ++n)
    CHECK(g.level[static_cast<std::size_t>(n)] == std::vector<int>{n});

  // putting the coaugmentation above level 0 breaks admissibility
  AdmissibleFiltration bad = f;
  bad.level[0][0] = 1;
  CHECK_FALSE(check_admissible(s2, bad).ok());

  CHECK_THROWS_AS(skeletal_filtration(chains(*simplex_boundary(2), 2)), FiltrationNotRespected);
  auto bare = s2;
  bare.coaugmentation.reset();
  CHECK_THROWS_AS(skeletal_filtration(bare), NotCoaugmented);
}

TEST_CASE("filtered quasi-isomorphisms") {
  const auto s2 = minimal_sphere(2);
  const auto c = chains(*s2, 5);
  const auto fc = skeletal_filtration(c);
  const CoalgebraMap id = chains_map(identity_map(SimplicialSetPtr(s2)), c, c);
  CHECK(check_coalgebra_map(c, c, id).ok());
  CHECK(filtered_quasi_iso_window(c, c, id, fc, fc, 4).passed());

  const auto pt = chains(*point(), 5);
  const CoalgebraMap collapse = chains_map(collapse_map(s2), c, pt);
  CHECK(check_coalgebra_map(c, pt, collapse).ok());
  const QuasiIsoVerdict v = filtered_quasi_iso_window(c, pt, collapse, fc, skeletal_filtration(pt), 4);
  CHECK_FALSE(v.passed());
  CHECK(v.level == 2);
}

TEST_CASE("nerve maps induce coalgebra maps") {
  const MonoidMap f{idempotent_monoid(), trivial_monoid(), {0, 0}};
  const auto c = chains(*nerve(f.source), 4), d = chains(*nerve(f.target), 4);
  const CoalgebraMap m = chains_map(nerve_map(f), c, d);
  CHECK(check_coalgebra_map(c, d, m).ok());
  CHECK(is_chain_map(c.complex, d.complex, m.components));
}

TEST_CASE("truncation keeps the lower degrees") {
  const auto c = chains(*nerve(cyclic_group(3)), 4);
  const auto t = c.truncated(2);
  CHECK(t.hi() == 2);
  CHECK(t.rank(2) == c.rank(2));
  CHECK(t.coproduct[2] == c.coproduct[2]);
  CHECK(check_coalgebra(t).ok());
}
