#pragma once
// Built-in inputs and seeded random monoids.

#include "monoloc/simplicial.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace monoloc {

/// "trivial", "idempotent", "z<N>" (cyclic of order N >= 1).
FiniteMonoid builtin_monoid(const std::string &name);

/// "point", "sphere<N>", "rp2", "collapsed-d3", "simplex<N>", "boundary<N>"
/// and "nerve:<monoid>". Throws InvalidInput for unknown names.
SimplicialSetPtr builtin_simplicial_set(const std::string &name);

/// Boundary of the 3-simplex with the edges 01, 02, 03 collapsed: one vertex,
/// three edges and four triangles.
SimplicialSetPtr collapsed_boundary_d3();

std::vector<std::pair<std::string, FiniteMonoid>> bundled_monoids();
/// The reduced complexes used by the loop group and Hurewicz checks.
std::vector<std::pair<std::string, SimplicialSetPtr>> bundled_reduced_complexes();

/// Every monoid structure on {0..order-1} with identity 0, by exhaustive
/// search over tables (orders 1..4).
const std::vector<FiniteMonoid> &all_monoids(int order);

/// count monoids of order 1..max_order drawn uniformly from all_monoids with
/// a generator seeded by seed.
std::vector<FiniteMonoid> random_monoids(std::uint64_t seed, std::size_t count, int max_order = 4);

} // namespace monoloc
