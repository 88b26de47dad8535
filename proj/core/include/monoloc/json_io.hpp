#pragma once
// JSON encodings of inputs, windows and certificates. Integers are written as
// decimal strings; readers also accept plain JSON numbers.

#include "monoloc/barcobar.hpp"
#include "monoloc/loopgroup.hpp"
#include "monoloc/weqcheck.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <string>

namespace monoloc {

using Json = nlohmann::json;

Json to_json(const Integer &x);
Integer integer_from_json(const Json &j);

Json to_json(const IntMatrix &m);
IntMatrix matrix_from_json(const Json &j);

Json to_json(const ChainComplexWindow &c);
ChainComplexWindow complex_from_json(const Json &j);

Json to_json(const HomologyGroup &g);
Json to_json(const HomologyTable &t);
HomologyTable homology_from_json(const Json &j);
/// degree,free_rank,torsion,exact with torsion divisors joined by ';'.
std::string homology_csv(const HomologyTable &t);

/// {"kind":"monoid","elements":[...],"identity":i,"table":[[...]]}
Json to_json(const FiniteMonoid &m);
FiniteMonoid monoid_from_json(const Json &j);

Json to_json(const MonoidMap &f);
MonoidMap monoid_map_from_json(const Json &j);

/// Words are arrays of labels, "x^-1" marking an inverse letter; readers
/// also accept a single string such as "a b^-1".
Json to_json(const MonoidPresentation &p);
MonoidPresentation presentation_from_json(const Json &j);

/// Polynomials are written in the expression syntax of PresentedDgAlgebra.
Json to_json(const PresentedDgAlgebra &a);
PresentedDgAlgebra dg_algebra_from_json(const Json &j);

/// Nondegenerate simplices through degree up_to, faces given by base label
/// and degeneracy word.
Json to_json(const SimplicialSet &k, int up_to);
std::shared_ptr<const FiniteSimplicialSet> simplicial_set_from_json(const Json &j);

Json to_json(const DgCoalgebraWindow &c);
DgCoalgebraWindow coalgebra_from_json(const Json &j);

Json to_json(const CompletionResult &r);
Json to_json(const RingCertificate &c);
Json to_json(const QuasiIsoVerdict &v);
Json to_json(const WindowVerdict &v);
Json to_json(const IsoCertificate &c);
Json to_json(const MonoidInvariantBundle &b);
Json to_json(const WeqVerdict &v);
Json to_json(const std::vector<LoopGroupLevel> &levels);
Json to_json(const H0Comparison &h);

} // namespace monoloc
