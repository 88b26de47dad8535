#include "monoloc/catalog.hpp"

#include "monoloc/error.hpp"

#include <map>
#include <mutex>
#include <random>

namespace monoloc {

namespace {

std::optional<int> numeric_suffix(const std::string &s, const std::string &prefix) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  const std::string rest = s.substr(prefix.size());
  if (rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 3)
    return std::nullopt;
  return std::stoi(rest);
}

bool associative(const std::vector<std::vector<int>> &t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[static_cast<std::size_t>(t[a][b])][c] != t[a][static_cast<std::size_t>(t[b][c])])
          return false;
  return true;
}

} // namespace

FiniteMonoid builtin_monoid(const std::string &name) {
  if (name == "trivial")
    return trivial_monoid();
  if (name == "idempotent")
    return idempotent_monoid();
  if (auto n = numeric_suffix(name, "z"); n && *n >= 1)
    return cyclic_group(*n);
  throw InvalidInput("unknown monoid '" + name + "'");
}

SimplicialSetPtr collapsed_boundary_d3() {
  auto b = simplex_boundary(3);
  std::vector<SimplexKey> sub;
  for (const char *l : {"0", "1", "2", "3", "01", "02", "03"})
    sub.push_back(*b->find(l));
  return quotient_by_subcomplex(b, sub);
}

SimplicialSetPtr builtin_simplicial_set(const std::string &name) {
  if (name == "point")
    return point();
  if (name == "rp2")
    return rp2_model();
  if (name == "collapsed-d3")
    return collapsed_boundary_d3();
  if (name.rfind("nerve:", 0) == 0)
    return nerve(builtin_monoid(name.substr(6)));
  if (auto n = numeric_suffix(name, "sphere"); n && *n >= 1)
    return minimal_sphere(*n);
  if (auto n = numeric_suffix(name, "simplex"))
    return standard_simplex(*n);
  if (auto n = numeric_suffix(name, "boundary"); n && *n >= 1)
    return simplex_boundary(*n);
  throw InvalidInput("unknown simplicial set '" + name + "'");
}

std::vector<std::pair<std::string, FiniteMonoid>> bundled_monoids() {
  return {{"trivial", trivial_monoid()},
          {"idempotent", idempotent_monoid()},
          {"z2", cyclic_group(2)},
          {"z3", cyclic_group(3)}};
}

std::vector<std::pair<std::string, SimplicialSetPtr>> bundled_reduced_complexes() {
  return {{"point", point()},
          {"sphere1", minimal_sphere(1)},
          {"sphere2", minimal_sphere(2)},
          {"sphere3", minimal_sphere(3)},
          {"collapsed-d3", collapsed_boundary_d3()},
          {"rp2", rp2_model()},
          {"nerve:idempotent", nerve(idempotent_monoid())},
          {"nerve:z2", nerve(cyclic_group(2))},
          {"nerve:z3", nerve(cyclic_group(3))}};
}

const std::vector<FiniteMonoid> &all_monoids(int order) {
  static std::mutex mu;
  static std::map<int, std::vector<FiniteMonoid>> cache;
  std::lock_guard lock(mu);
  if (order < 1 || order > 4)
    throw InvalidInput("monoid enumeration supports orders 1..4");
  auto it = cache.find(order);
  if (it != cache.end())
    return it->second;

  const auto n = static_cast<std::size_t>(order);
  std::vector<FiniteMonoid> out;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    t[0][i] = t[i][0] = static_cast<int>(i);
  // odometer over the (n-1) x (n-1) block
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      cells.push_back({a, b});
  for (;;) {
    if (associative(t)) {
      FiniteMonoid m;
      for (std::size_t i = 0; i < n; ++i)
        m.elements.push_back(i == 0 ? "1" : "m" + std::to_string(i));
      m.table = t;
      out.push_back(std::move(m));
    }
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      auto &x = t[cells[k].first][cells[k].second];
      if (++x < order)
        break;
      x = 0;
    }
    if (k == cells.size())
      break;
  }
  return cache.emplace(order, std::move(out)).first->second;
}

std::vector<FiniteMonoid> random_monoids(std::uint64_t seed, std::size_t count, int max_order) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, max_order);
  std::vector<FiniteMonoid> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto &pool = all_monoids(order(rng));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    out.push_back(pool[pick(rng)]);
  }
  return out;
}

} // namespace monoloc
