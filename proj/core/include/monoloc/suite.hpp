#pragma once
// Reproduction cases run by `monoloc paper-suite`.

#include "monoloc/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace monoloc {

struct SuiteOptions {
  std::size_t budget = 100000;
  std::size_t cap = 10000;
  std::uint64_t seed = 1;
};

struct CaseResult {
  std::string name;
  bool passed = true;
  std::string detail; ///< first failing check
  std::vector<std::string> checks;
  Json payload = Json::object();
  double seconds = 0;
};

/// lemma31, ex43, ex46, prop34, loop-s2, weq.
const std::vector<std::string> &suite_cases();

/// Runs one case. Throws InvalidInput for unknown names.
CaseResult run_case(const std::string &name, const SuiteOptions &opt = {});

} // namespace monoloc
