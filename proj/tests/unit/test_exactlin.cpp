#include <monoloc/catalog.hpp>
#include <monoloc/dgcoalg.hpp>
#include <monoloc/error.hpp>

#include <doctest.h>

#include <random>

using namespace monoloc;

namespace {

IntMatrix diag(const std::vector<Integer> &d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

void check_snf(const IntMatrix &m) {
  const SnfResult s = smith_normal_form(m);
  CHECK(s.u * m * s.v == diag(s.d, m.rows(), m.cols()));
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  for (std::size_t i = 0; i + 1 < s.d.size(); ++i) {
    CHECK(s.d[i] >= 0);
    if (s.d[i] != 0)
      CHECK(s.d[i + 1] % s.d[i] == 0);
    else
      CHECK(s.d[i + 1] == 0);
  }
  CHECK(smith_divisors(m) == s.d);
}

} // namespace

TEST_CASE("smith normal form of small matrices") {
  const SnfResult z = smith_normal_form(IntMatrix(2, 2));
  CHECK(z.d == std::vector<Integer>{0, 0});
  CHECK(z.u == IntMatrix::identity(2));
  CHECK(z.v == IntMatrix::identity(2));

  CHECK(smith_normal_form(IntMatrix::identity(3)).d == std::vector<Integer>{1, 1, 1});

  const IntMatrix m{{2, 4}, {4, 6}};
  CHECK(smith_normal_form(m).d == std::vector<Integer>{2, 2});
  check_snf(m);
}

TEST_CASE("smith normal form of rectangular and large-entry matrices") {
  check_snf(IntMatrix{{6, 0, 0}, {0, 10, 0}});
  CHECK(smith_divisors(IntMatrix{{6, 0}, {0, 10}}) == std::vector<Integer>{2, 30});
  IntMatrix big(2, 2);
  big(0, 0) = Integer("123456789012345678901234567890");
  big(1, 1) = Integer("987654321098765432109876543210");
  check_snf(big);
}

TEST_CASE("smith normal form on seeded random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = entry(rng);
    check_snf(m);
    CHECK(matrix_rank(m) <= std::min(m.rows(), m.cols()));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 4}, {4, 6}}) == -4);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("chain complex windows reject d*d != 0 and bad shapes") {
  CHECK_THROWS_AS(ChainComplexWindow(0, 2, {1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}}),
                  NotAComplex);
  CHECK_THROWS_AS(ChainComplexWindow(0, 1, {1, 2}, {IntMatrix{{1}}}), NotAComplex);
  CHECK_THROWS_AS(ChainComplexWindow(2, 2, {1}, {}), WindowTooSmall);
}

TEST_CASE("homology of standard examples") {
  const HomologyTable s2 = homology_window(chains(*minimal_sphere(2), 4).complex);
  CHECK(s2.at(0).isomorphic({1, {}, true}));
  CHECK(s2.at(1).is_zero());
  CHECK(s2.at(2).isomorphic({1, {}, true}));
  CHECK(s2.at(3).is_zero());
  CHECK_FALSE(s2.at(4).exact);

  const HomologyTable z2 = homology_window(chains(*nerve(cyclic_group(2)), 5).complex);
  // Z[Z/2]-resolution oracle: H_n = Z/2 for odd n, 0 for even n > 0
  for (int n = 1; n <= 4; ++n) {
    if (n % 2 == 1)
      CHECK(z2.at(n).isomorphic({0, {2}, true}));
    else
      CHECK(z2.at(n).is_zero());
  }

  const HomologyTable b = homology_window(chains(*nerve(idempotent_monoid()), 5).complex);
  CHECK(b.at(0).isomorphic({1, {}, true}));
  for (int n = 1; n <= 4; ++n)
    CHECK(b.at(n).is_zero());
}

TEST_CASE("homology edges are flagged inexact unless bounded below") {
  const ChainComplexWindow c(1, 3, {1, 1, 1}, {IntMatrix{{2}}, IntMatrix{{0}}}, false);
  const HomologyTable h = homology_window(c);
  CHECK_FALSE(h.at(1).exact);
  CHECK(h.at(2).exact);
  CHECK(h.at(2).is_zero());
  CHECK_FALSE(h.at(3).exact);
  CHECK(h.exact_degrees() == std::vector<int>{2});
}

TEST_CASE("mapping cone detects isomorphisms") {
  const auto c = chains(*minimal_sphere(2), 4).complex;
  std::vector<IntMatrix> id;
  for (int n = 0; n <= 4; ++n)
    id.push_back(IntMatrix::identity(c.rank(n)));
  CHECK(is_chain_map(c, c, id));
  CHECK_FALSE(first_cone_obstruction(c, c, id).has_value());

  std::vector<IntMatrix> twice = id;
  twice[2] = IntMatrix{{2}};
  CHECK(first_cone_obstruction(c, c, twice) == 2);
}
