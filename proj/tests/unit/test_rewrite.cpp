#include <monoloc/rewrite.hpp>
#include <monoloc/error.hpp>

#include <doctest.h>

using namespace monoloc;

namespace {

PresentedDgAlgebra idempotent_ring() {
  PresentedDgAlgebra a;
  a.augmentation = std::vector<Integer>{};
  a.add_generator("b", 0);
  (*a.augmentation)[0] = 1;
  a.relations.push_back({a.parse("b*b"), a.parse("b")});
  return a;
}

} // namespace

TEST_CASE("polynomial arithmetic and parsing") {
  PresentedDgAlgebra a;
  a.add_generator("x", 0);
  a.add_generator("y", 0);
  const Polynomial p = a.parse("(1 + x)^2 - 2*x");
  CHECK(p == a.parse("1 + x*x"));
  CHECK(a.parse("x*y") != a.parse("y*x"));
  CHECK((a.parse("3*x") * Integer(2)).reduce_mod(4) == a.parse("2*x"));
  CHECK(a.parse("x - x").is_zero());
  CHECK_THROWS_AS(a.parse("x + z"), InvalidInput);
}

TEST_CASE("Koszul signs in the differential") {
  PresentedDgAlgebra a;
  a.add_generator("x", 1);
  a.add_generator("y", 2);
  a.diff[1] = a.parse("x*x");
  // d(xy) = dx y - x dy
  CHECK(a.differential(a.parse("x*y")) == -a.parse("x*x*x"));
  CHECK(a.differential(a.parse("y*x")) == a.parse("x*x*x"));
}

TEST_CASE("completion of b*b = b") {
  const PresentedDgAlgebra a = idempotent_ring();
  const RewriteSystem r = complete(a);
  REQUIRE(r.complete());
  REQUIRE(r.rules().size() == 1);
  CHECK(r.rules()[0].lhs == Word{0, 0});
  CHECK(normal_form(a.parse("b*b*b"), r) == a.parse("b"));
  CHECK(normal_form(Polynomial(), r).is_zero());
}

TEST_CASE("localization at b collapses to Z") {
  const PresentedDgAlgebra a = adjoin_inverses(idempotent_ring(), {idempotent_ring().parse("b")}, {"v"});
  const RewriteSystem r = complete(a);
  REQUIRE(r.complete());
  CHECK(normal_form(a.parse("b"), r) == Polynomial::constant(1));
  CHECK(normal_form(a.parse("b*v"), r) == Polynomial::constant(1));
  const auto basis = basis_in_degree(a, r, 0, 5);
  REQUIRE(basis.status == BasisResult::Status::Ok);
  CHECK(basis.basis == std::vector<Word>{Word{}});
}

TEST_CASE("inverting 1 + t gives a Laurent ring") {
  PresentedDgAlgebra a;
  a.augmentation = std::vector<Integer>{};
  a.add_generator("t", 0);
  (*a.augmentation)[0] = 0;
  const PresentedDgAlgebra l = adjoin_inverses(a, {a.parse("1 + t")}, {"v"});
  const RewriteSystem r = complete(l);
  REQUIRE(r.complete());
  // v(1+t) = 1, so v*t reduces and the words v^k and t^k stay irreducible
  CHECK(normal_form(l.parse("v*(1 + t)"), r) == Polynomial::constant(1));
  CHECK(normal_form(l.parse("(1 + t)*v"), r) == Polynomial::constant(1));
  CHECK_FALSE(r.reducible(Word{1, 1, 1}));
  CHECK_FALSE(r.reducible(Word{0, 0, 0}));
}

TEST_CASE("basis enumeration respects the cap") {
  PresentedDgAlgebra free;
  free.augmentation = std::vector<Integer>{};
  free.add_generator("t", 0);
  (*free.augmentation)[0] = 0;
  const RewriteSystem r = complete(free);
  CHECK(basis_in_degree(free, r, 0, 5).status == BasisResult::Status::CapExceeded);

  PresentedDgAlgebra tensor;
  tensor.add_generator("x", 1);
  const RewriteSystem rt = complete(tensor);
  const auto b3 = basis_in_degree(tensor, rt, 3);
  CHECK(b3.basis == std::vector<Word>{Word{0, 0, 0}});
}

TEST_CASE("non-homogeneous relations are unorientable") {
  PresentedDgAlgebra a;
  a.add_generator("x", 1);
  a.relations.push_back({a.parse("x"), Polynomial::constant(1)});
  CHECK_THROWS_AS(complete(a), Unorientable);
}

TEST_CASE("completion reports exhaustion honestly") {
  PresentedDgAlgebra a;
  a.add_generator("x", 0);
  a.add_generator("y", 0);
  a.relations.push_back({a.parse("x*y*x"), a.parse("y*x*y")});
  const RewriteSystem r = complete(a, 3);
  CHECK_FALSE(r.complete());
}

TEST_CASE("ring certificates") {
  const PresentedDgAlgebra a = idempotent_ring();
  RingMap id{{a.parse("b")}};
  CHECK(ring_iso_certify(a, a, id, id).passed());

  PresentedDgAlgebra z;
  z.augmentation = std::vector<Integer>{};
  // b -> 1 is a homomorphism Z[b]/(b^2 = b) -> Z but not invertible
  const auto c = ring_iso_certify(a, z, RingMap{{Polynomial::constant(1)}}, RingMap{});
  CHECK(c.outcome == RingCertificate::Outcome::NotInverse);
  // b -> 2 is not a homomorphism
  const auto bad = ring_iso_certify(a, z, RingMap{{Polynomial::constant(2)}}, RingMap{});
  CHECK(bad.outcome == RingCertificate::Outcome::NotAHomomorphism);
}

TEST_CASE("inverting 1 gives an isomorphic ring") {
  const PresentedDgAlgebra a = idempotent_ring();
  const PresentedDgAlgebra l = adjoin_inverses(a, {Polynomial::constant(1)}, {"v"});
  RingMap f{{l.parse("b")}};
  RingMap g{{a.parse("b"), Polynomial::constant(1)}};
  CHECK(ring_iso_certify(a, l, f, g).passed());
}
