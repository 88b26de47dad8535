#include "monoloc/localization.hpp"

#include "monoloc/error.hpp"

namespace monoloc {

EdgeCycles edge_cycles(const SimplicialSet &k, int hi) {
  if (!k.reduced() || k.simplices_or_throw(0).size() != 1)
    throw NotReduced(k.name() + " has more than one vertex");
  if (hi < 2)
    throw WindowTooSmall("the edge relations need degree 2");
  const DgCoalgebraWindow c = chains(k, hi);
  EdgeCycles out{cobar(c, hi), {}, {}};
  const auto gens = cobar_generators(c, hi);
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gens[g].first == 1) {
      out.cycles.push_back(Polynomial::constant(1) + Polynomial::generator(static_cast<int>(g)));
      out.edge_labels.push_back(c.labels[1][gens[g].second]);
    }
  return out;
}

PresentedDgAlgebra extended_cobar(const SimplicialSet &k, int hi) {
  EdgeCycles e = edge_cycles(k, hi);
  std::vector<std::string> labels;
  for (const auto &l : e.edge_labels)
    labels.push_back("v_" + l);
  return adjoin_inverses(e.cobar, e.cycles, labels);
}

} // namespace monoloc
