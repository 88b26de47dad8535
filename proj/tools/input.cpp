#include "input.hpp"

#include <monoloc/catalog.hpp>
#include <monoloc/error.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace monoloc::cli {

std::uint64_t fnv1a(const std::string &bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::uint64_t Input::hash() const { return fnv1a(bytes); }

std::string Input::kind() const {
  if (!json)
    return "builtin";
  return json->value("kind", std::string("unknown"));
}

Input load_input(const std::string &arg) {
  Input in;
  in.name = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    in.bytes = os.str();
    try {
      in.json = Json::parse(in.bytes);
    } catch (const Json::parse_error &e) {
      throw InvalidInput(arg + ": " + e.what());
    }
  } else {
    in.bytes = arg;
  }
  return in;
}

SimplicialSetPtr simplicial_input(const Input &in) {
  SimplicialSetPtr k;
  if (!in.json) {
    try {
      k = builtin_simplicial_set(in.name);
    } catch (const InvalidInput &) {
      try {
        k = nerve(builtin_monoid(in.name));
      } catch (const InvalidInput &) {
        throw InvalidInput("'" + in.name + "' is neither a file nor a built-in simplicial set or monoid");
      }
    }
    return k;
  }
  if (in.kind() == "monoid")
    return nerve(monoid_from_json(*in.json));
  auto f = simplicial_set_from_json(*in.json);
  const int top = f->top_dimension().value_or(0);
  const auto report = validate_simplicial(*f, top);
  if (!report.ok())
    throw InvalidInput(in.name + " is not a simplicial set: " + report.to_string());
  return f;
}

FiniteMonoid monoid_input(const Input &in) {
  FiniteMonoid m = in.json ? monoid_from_json(*in.json) : builtin_monoid(in.name);
  require_valid(m);
  return m;
}

MonoidMap monoid_map_input(const Input &in) {
  if (in.json) {
    MonoidMap f = monoid_map_from_json(*in.json);
    require_valid(f.source);
    require_valid(f.target);
    return f;
  }
  const std::string &s = in.name;
  if (s.rfind("identity:", 0) == 0)
    return identity_map(builtin_monoid(s.substr(9)));
  const auto arrow = s.find("->");
  if (arrow != std::string::npos && s.substr(arrow + 2) == "trivial") {
    const FiniteMonoid src = builtin_monoid(s.substr(0, arrow));
    return MonoidMap{src, trivial_monoid(), std::vector<int>(src.size(), 0)};
  }
  throw InvalidInput("unknown map '" + s + "'; use X->trivial, identity:X or a JSON file");
}

PresentedDgAlgebra algebra_input(const Input &in) {
  if (in.json && in.kind() == "dg-algebra")
    return dg_algebra_from_json(*in.json);
  return monoid_algebra(monoid_input(in));
}

std::pair<int, int> parse_window(const std::string &s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos)
    throw InvalidInput("window must look like lo..hi, got '" + s + "'");
  try {
    const int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
    if (lo < 0 || hi <= lo)
      throw InvalidInput("window needs 0 <= lo < hi, got '" + s + "'");
    return {lo, hi};
  } catch (const std::logic_error &) {
    throw InvalidInput("window must look like lo..hi, got '" + s + "'");
  }
}

} // namespace monoloc::cli
