#include <monoloc/barcobar.hpp>
#include <monoloc/catalog.hpp>
#include <monoloc/error.hpp>

#include <doctest.h>

using namespace monoloc;

namespace {

PresentedDgAlgebra integers() {
  PresentedDgAlgebra a;
  a.augmentation = std::vector<Integer>{};
  return a;
}

PresentedDgAlgebra exterior() {
  PresentedDgAlgebra a = integers();
  a.add_generator("x", 1);
  a.relations.push_back({a.parse("x*x"), Polynomial()});
  return a;
}

bool d_squared_zero(const ChainComplexWindow &c) {
  for (int n = c.lo() + 2; n <= c.hi(); ++n)
    if (!(c.boundary(n - 1) * c.boundary(n)).is_zero())
      return false;
  return true;
}

} // namespace

TEST_CASE("bar of Z is Z in degree 0") {
  const PresentedDgAlgebra a = integers();
  const BarWindow b = bar(algebra_window(a, complete(a), 3), 4);
  CHECK(b.window.rank(0) == 1);
  for (int n = 1; n <= 4; ++n)
    CHECK(b.window.rank(n) == 0);
}

TEST_CASE("bar of the exterior algebra") {
  const PresentedDgAlgebra a = exterior();
  const BarWindow b = bar(algebra_window(a, complete(a), 5), 6);
  for (int n = 0; n <= 6; ++n)
    CHECK(b.window.rank(n) == (n % 2 == 0 ? 1u : 0u));
  CHECK(check_coalgebra(b.window).ok());
  CHECK(d_squared_zero(b.window.complex));
  CHECK(b.window.labels[2][0] == "[x]");
  CHECK(b.window.labels[4][0] == "[x|x]");
}

TEST_CASE("bar of the idempotent monoid algebra") {
  const FiniteMonoid m = idempotent_monoid();
  const PresentedDgAlgebra a = monoid_algebra(m);
  const AlgebraWindow w = algebra_window(a, complete(a), 3);
  const AlgebraWindow t = monoid_algebra_window(m, 3);
  CHECK(w.rank(0) == 1);
  CHECK(t.rank(0) == 1);
  // (b-1)(b-1) = -(b-1)
  CHECK(w.multiply(0, 0, 0, 0) == SparseVec{{0, -1}});
  CHECK(t.multiply(0, 0, 0, 0) == SparseVec{{0, -1}});
  const BarWindow b = bar(t, 4);
  for (int n = 0; n <= 4; ++n)
    CHECK(b.window.rank(n) == 1);
  // d[a|a] = -[a a] = [a]
  CHECK(b.window.d(2, 0) == SparseVec{{0, 1}});
  CHECK(b.window.d(3, 0).empty());
  CHECK(check_coalgebra(b.window).ok());
  const AlgebraWindow weighted = algebra_window(a, complete(a), 3, 10000, {1});
  const BarWindow bw = bar(weighted, 4);
  CHECK(check_admissible(bw.window, weight_filtration(bw, weighted)).ok());
  // unweighted letters put everything in level 0
  CHECK_FALSE(check_admissible(b.window, weight_filtration(b, t)).ok());
  CHECK_THROWS_AS(t.multiply(2, 0, 2, 0), WindowTooSmall);
}

TEST_CASE("nerve and bar agree bit for bit") {
  for (const auto &[name, m] : bundled_monoids()) {
    INFO(name);
    const IsoCertificate c = nerve_bar_iso_check(m, 4);
    CHECK_FALSE(c.checks.empty());
    for (std::size_t n = 1; n < c.nerve_boundary.size(); ++n)
      CHECK(c.bijection[n - 1] * c.nerve_boundary[n] == c.bar_boundary[n] * c.bijection[n]);
  }
  for (const auto &m : random_monoids(3, 10))
    CHECK_NOTHROW(nerve_bar_iso_check(m, 3));
}

TEST_CASE("cobar of minimal spheres") {
  const PresentedDgAlgebra s1 = cobar(chains(*minimal_sphere(1), 2), 2);
  REQUIRE(s1.gens.size() == 1);
  CHECK(s1.gens[0].degree == 0);
  CHECK(s1.diff[0].is_zero());
  CHECK(s1.relations.empty());

  const PresentedDgAlgebra s2 = cobar(chains(*minimal_sphere(2), 6), 6);
  REQUIRE(s2.gens.size() == 1);
  CHECK(s2.gens[0].degree == 1);
  CHECK(s2.diff[0].is_zero());
  const AlgebraComplex cx = algebra_complex(s2, complete(s2), 5);
  for (int n = 0; n <= 5; ++n)
    CHECK(cx.complex.rank(n) == 1);
}

TEST_CASE("cobar of the collapsed tetrahedron boundary") {
  const PresentedDgAlgebra om = cobar(chains(*collapsed_boundary_d3(), 3), 3);
  int deg0 = 0, deg1 = 0;
  for (const auto &g : om.gens)
    (g.degree == 0 ? deg0 : deg1)++;
  CHECK(deg0 == 3);
  CHECK(deg1 == 4);
  const int t = om.find_or_throw("123");
  // AW gives 12 (x) 23 as the only reduced term; s^-1 12 has degree 0
  CHECK(om.diff[static_cast<std::size_t>(t)] == om.parse("-(`23` - `13` + `12`) - `12`*`23`"));
  CHECK(om.diff[static_cast<std::size_t>(om.find_or_throw("012"))] == om.parse("-`12`"));

  const PresentedDgAlgebra h0 = h0_ring(om);
  const RewriteSystem r = complete(h0);
  REQUIRE(r.complete());
  const auto basis = basis_in_degree(h0, r, 0);
  CHECK(basis.basis == std::vector<Word>{Word{}});
}

TEST_CASE("cobar needs a conilpotent coalgebra") {
  CHECK_THROWS_AS(cobar(chains(*simplex_boundary(2), 2), 2), NotConilpotent);
}

TEST_CASE("bar and cobar constructions square to zero") {
  for (const auto &name : {"sphere2", "sphere3", "collapsed-d3", "rp2", "nerve:z2"}) {
    INFO(name);
    const PresentedDgAlgebra om = cobar(chains(*builtin_simplicial_set(name), 4), 4);
    for (std::size_t g = 0; g < om.gens.size(); ++g)
      CHECK(om.differential(om.diff[g]).is_zero());
  }
  for (const auto &[name, m] : bundled_monoids()) {
    const BarWindow b = bar(monoid_algebra_window(m, 4), 5);
    CHECK(d_squared_zero(b.window.complex));
    CHECK(check_coalgebra(b.window).ok());
  }
}

TEST_CASE("counit windows") {
  PresentedDgAlgebra free1 = integers();
  free1.add_generator("x", 1);
  for (const auto &a : {integers(), exterior(), free1}) {
    const WindowVerdict v = counit_check(a, 4);
    CHECK(v.passed);
    CHECK(v.checked_through == 3);
  }
  CHECK_THROWS_AS(counit_check(monoid_algebra(idempotent_monoid()), 3), NotConnected);
}

TEST_CASE("unit windows") {
  CHECK(unit_check(chains(*point(), 3), 3).passed);
  const WindowVerdict s2 = unit_check(chains(*minimal_sphere(2), 4), 4);
  CHECK(s2.passed);
  CHECK(s2.checked_through == 3);
  CHECK(unit_check(chains(*minimal_sphere(3), 5), 5).passed);
  CHECK_THROWS_AS(unit_check(chains(*minimal_sphere(1), 3), 3), NotSimplyConnected);
}

TEST_CASE("algebra windows need an augmentation") {
  PresentedDgAlgebra a;
  a.add_generator("b", 0);
  a.augmentation.reset();
  CHECK_THROWS_AS(algebra_window(a, complete(a), 2), InvalidInput);

  PresentedDgAlgebra free0 = integers();
  free0.add_generator("t", 0);
  (*free0.augmentation)[0] = 0;
  CHECK_THROWS_AS(algebra_window(free0, complete(free0), 1, 50), InfiniteRank);
}
