#pragma once
// Resolution of command-line inputs: a JSON file or a built-in name.

#include <monoloc/json_io.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace monoloc::cli {

struct Input {
  std::string name;
  std::string bytes; ///< file contents, or the name itself for built-ins
  std::optional<Json> json;

  std::uint64_t hash() const;
  std::string kind() const; ///< the JSON "kind" field, or "builtin"
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string &bytes);
std::string hex(std::uint64_t h);

Input load_input(const std::string &arg);

/// A simplicial set from a JSON file (simplicial-set or monoid) or a
/// built-in name; monoids are replaced by their nerves.
SimplicialSetPtr simplicial_input(const Input &in);
FiniteMonoid monoid_input(const Input &in);
/// "X->trivial", "identity:X" or a monoid-map JSON file.
MonoidMap monoid_map_input(const Input &in);
/// A dg-algebra JSON file, or a monoid (file or built-in) as its algebra.
PresentedDgAlgebra algebra_input(const Input &in);

/// "lo..hi" with 0 <= lo < hi.
std::pair<int, int> parse_window(const std::string &s);

} // namespace monoloc::cli
