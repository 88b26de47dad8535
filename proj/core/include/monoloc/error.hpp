#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace monoloc {

/// Base class for every error raised by the library. Outcomes that are
/// legitimate answers (budget exhaustion, failed certificates, verdicts) are
/// returned as values instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define MONOLOC_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}      \
  }

MONOLOC_DEFINE_ERROR(InvalidInput);
MONOLOC_DEFINE_ERROR(WindowTooSmall);
MONOLOC_DEFINE_ERROR(NotAComplex);
MONOLOC_DEFINE_ERROR(MalformedTable);
MONOLOC_DEFINE_ERROR(NotASubcomplex);
MONOLOC_DEFINE_ERROR(UnboundedDegree);
MONOLOC_DEFINE_ERROR(NotCoaugmented);
MONOLOC_DEFINE_ERROR(FiltrationNotRespected);
MONOLOC_DEFINE_ERROR(InfiniteRank);
MONOLOC_DEFINE_ERROR(NotConilpotent);
MONOLOC_DEFINE_ERROR(NotConnected);
MONOLOC_DEFINE_ERROR(NotSimplyConnected);
MONOLOC_DEFINE_ERROR(Unorientable);
MONOLOC_DEFINE_ERROR(NotACycle);
MONOLOC_DEFINE_ERROR(NotReduced);
MONOLOC_DEFINE_ERROR(NotAHomomorphism);

#undef MONOLOC_DEFINE_ERROR

/// A comparison that should hold bit-exactly failed at a basis element.
class MismatchAt : public Error {
public:
  MismatchAt(int degree, std::string element, const std::string &what)
      : Error("MismatchAt: degree " + std::to_string(degree) + ", " + element + ": " + what),
        degree_(degree), element_(std::move(element)) {}
  int degree() const { return degree_; }
  const std::string &element() const { return element_; }

private:
  int degree_;
  std::string element_;
};

} // namespace monoloc
