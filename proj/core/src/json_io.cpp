#include "monoloc/json_io.hpp"

#include "monoloc/error.hpp"

#include <sstream>

namespace monoloc {

namespace {

const Json &field(const Json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    throw InvalidInput(std::string("missing field '") + name + "'");
  return j.at(name);
}

void expect_kind(const Json &j, const char *kind) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != kind)
    throw InvalidInput("expected kind '" + std::string(kind) + "', found " + j.at("kind").dump());
}

Json polynomial_json(const PresentedDgAlgebra &a, const Polynomial &p) { return a.to_string(p); }

Polynomial polynomial_from_json(const PresentedDgAlgebra &a, const Json &j) {
  if (j.is_string())
    return a.parse(j.get<std::string>());
  if (j.is_number_integer())
    return Polynomial::constant(integer_from_json(j));
  if (!j.is_array())
    throw InvalidInput("a polynomial is an expression string or a list of terms");
  // [{"c": "2", "w": ["a", "b"]}, ...]
  Polynomial p;
  for (const auto &t : j) {
    Word w;
    for (const auto &l : field(t, "w"))
      w.push_back(a.find_or_throw(l.get<std::string>()));
    p.add_term(w, integer_from_json(field(t, "c")));
  }
  return p;
}

Json letters_json(const MonoidPresentation &p, const GroupWord &w) {
  Json out = Json::array();
  for (const auto &l : w)
    out.push_back(p.gens[static_cast<std::size_t>(l.gen)] + (l.inverse ? "^-1" : ""));
  return out;
}

GroupWord letters_from_json(const MonoidPresentation &p, const Json &j) {
  if (j.is_string())
    return p.parse_word(j.get<std::string>());
  GroupWord w;
  for (const auto &x : j) {
    const std::string s = x.get<std::string>();
    if (auto g = p.find(s)) {
      w.push_back({*g, false});
      continue;
    }
    const std::string suffix = "^-1";
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
      if (auto g = p.find(s.substr(0, s.size() - suffix.size()))) {
        if (!p.group)
          throw InvalidInput("inverse letter '" + s + "' in a monoid presentation");
        w.push_back({*g, true});
        continue;
      }
    throw InvalidInput("unknown letter '" + s + "'");
  }
  return w;
}

Json formal_json(const SimplicialSet &k, const FormalSimplex &f) {
  return Json{{"base", k.label(f.base)}, {"degens", f.degens}};
}

} // namespace

Json to_json(const Integer &x) { return x.get_str(); }

Integer integer_from_json(const Json &j) {
  if (j.is_number_integer())
    return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw InvalidInput("not an integer: " + j.dump());
    return x;
  }
  throw InvalidInput("not an integer: " + j.dump());
}

Json to_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json &j) {
  const auto rows = field(j, "rows").get<std::size_t>();
  const auto cols = field(j, "cols").get<std::size_t>();
  const Json &e = field(j, "entries");
  if (e.size() != rows)
    throw InvalidInput("matrix has " + std::to_string(e.size()) + " rows, expected " +
                       std::to_string(rows));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (e[i].size() != cols)
      throw InvalidInput("matrix row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = integer_from_json(e[i][c]);
  }
  return m;
}

Json to_json(const ChainComplexWindow &c) {
  Json ranks = Json::array(), ds = Json::array();
  for (int n = c.lo(); n <= c.hi(); ++n)
    ranks.push_back(c.rank(n));
  for (int n = c.lo() + 1; n <= c.hi(); ++n)
    ds.push_back(to_json(c.boundary(n)));
  return Json{{"kind", "chain-complex"}, {"lo", c.lo()},         {"hi", c.hi()},
              {"bounded_below", c.bounded_below()}, {"ranks", ranks}, {"boundaries", ds}};
}

ChainComplexWindow complex_from_json(const Json &j) {
  expect_kind(j, "chain-complex");
  std::vector<IntMatrix> ds;
  for (const auto &d : field(j, "boundaries"))
    ds.push_back(matrix_from_json(d));
  return ChainComplexWindow(field(j, "lo").get<int>(), field(j, "hi").get<int>(),
                            field(j, "ranks").get<std::vector<std::size_t>>(), std::move(ds),
                            j.value("bounded_below", true));
}

Json to_json(const HomologyGroup &g) {
  Json t = Json::array();
  for (const auto &d : g.torsion)
    t.push_back(to_json(d));
  return Json{{"free_rank", g.free_rank}, {"torsion", t}, {"exact", g.exact},
              {"group", g.to_string()}};
}

Json to_json(const HomologyTable &t) {
  Json rows = Json::array();
  for (const auto &[n, g] : t.entries) {
    Json r = to_json(g);
    r["degree"] = n;
    rows.push_back(std::move(r));
  }
  return Json{{"kind", "homology"}, {"degrees", rows}};
}

HomologyTable homology_from_json(const Json &j) {
  expect_kind(j, "homology");
  HomologyTable t;
  for (const auto &r : field(j, "degrees")) {
    HomologyGroup g;
    g.free_rank = field(r, "free_rank").get<std::size_t>();
    for (const auto &d : field(r, "torsion"))
      g.torsion.push_back(integer_from_json(d));
    g.exact = field(r, "exact").get<bool>();
    t.entries[field(r, "degree").get<int>()] = std::move(g);
  }
  return t;
}

std::string homology_csv(const HomologyTable &t) {
  std::ostringstream os;
  os << "degree,free_rank,torsion,exact\n";
  for (const auto &[n, g] : t.entries) {
    os << n << ',' << g.free_rank << ',';
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
      os << (i ? ";" : "") << g.torsion[i].get_str();
    os << ',' << (g.exact ? "true" : "false") << '\n';
  }
  return os.str();
}

Json to_json(const FiniteMonoid &m) {
  return Json{{"kind", "monoid"}, {"elements", m.elements}, {"identity", m.identity},
              {"table", m.table}};
}

FiniteMonoid monoid_from_json(const Json &j) {
  expect_kind(j, "monoid");
  FiniteMonoid m;
  m.elements = field(j, "elements").get<std::vector<std::string>>();
  const Json &id = field(j, "identity");
  if (id.is_string()) {
    auto i = m.index_of(id.get<std::string>());
    if (!i)
      throw InvalidInput("identity " + id.dump() + " is not an element");
    m.identity = *i;
  } else {
    m.identity = id.get<int>();
  }
  for (const auto &row : field(j, "table")) {
    std::vector<int> r;
    for (const auto &x : row) {
      if (x.is_string()) {
        auto i = m.index_of(x.get<std::string>());
        if (!i)
          throw MalformedTable("unknown element " + x.dump());
        r.push_back(*i);
      } else {
        r.push_back(x.get<int>());
      }
    }
    m.table.push_back(std::move(r));
  }
  return m;
}

Json to_json(const MonoidMap &f) {
  return Json{{"kind", "monoid-map"},
              {"source", to_json(f.source)},
              {"target", to_json(f.target)},
              {"images", f.images}};
}

MonoidMap monoid_map_from_json(const Json &j) {
  expect_kind(j, "monoid-map");
  MonoidMap f{monoid_from_json(field(j, "source")), monoid_from_json(field(j, "target")), {}};
  for (const auto &x : field(j, "images")) {
    if (x.is_string()) {
      auto i = f.target.index_of(x.get<std::string>());
      if (!i)
        throw InvalidInput("unknown target element " + x.dump());
      f.images.push_back(*i);
    } else {
      f.images.push_back(x.get<int>());
    }
  }
  return f;
}

Json to_json(const MonoidPresentation &p) {
  Json rels = Json::array();
  for (const auto &[u, v] : p.rels)
    rels.push_back(Json::array({letters_json(p, u), letters_json(p, v)}));
  return Json{{"kind", "presentation"}, {"gens", p.gens}, {"rels", rels}, {"group", p.group}};
}

MonoidPresentation presentation_from_json(const Json &j) {
  expect_kind(j, "presentation");
  MonoidPresentation p;
  p.gens = field(j, "gens").get<std::vector<std::string>>();
  p.group = j.value("group", false);
  for (const auto &r : field(j, "rels")) {
    if (!r.is_array() || r.size() != 2)
      throw InvalidInput("a relation is a pair [lhs, rhs]");
    p.rels.push_back({letters_from_json(p, r[0]), letters_from_json(p, r[1])});
  }
  return p;
}

Json to_json(const PresentedDgAlgebra &a) {
  Json gens = Json::array(), rels = Json::array(), diff = Json::object();
  for (std::size_t g = 0; g < a.gens.size(); ++g) {
    gens.push_back(Json{{"label", a.gens[g].label}, {"deg", a.gens[g].degree}});
    if (!a.diff[g].is_zero())
      diff[a.gens[g].label] = polynomial_json(a, a.diff[g]);
  }
  for (const auto &r : a.relations)
    rels.push_back(Json::array({polynomial_json(a, r.lhs), polynomial_json(a, r.rhs)}));
  Json j{{"kind", "dg-algebra"}, {"gens", gens}, {"rels", rels}, {"diff", diff},
         {"modulus", to_json(a.modulus)}};
  if (a.augmentation) {
    Json aug = Json::array();
    for (const auto &x : *a.augmentation)
      aug.push_back(to_json(x));
    j["augmentation"] = aug;
  } else {
    j["augmentation"] = nullptr;
  }
  if (!a.precedence.empty())
    j["precedence"] = a.precedence;
  if (!a.notes.empty())
    j["notes"] = a.notes;
  return j;
}

PresentedDgAlgebra dg_algebra_from_json(const Json &j) {
  expect_kind(j, "dg-algebra");
  PresentedDgAlgebra a;
  if (j.contains("modulus"))
    a.modulus = integer_from_json(j.at("modulus"));
  const bool has_aug = j.contains("augmentation") && !j.at("augmentation").is_null();
  if (has_aug || !j.contains("augmentation"))
    a.augmentation = std::vector<Integer>{};
  for (const auto &g : field(j, "gens"))
    a.add_generator(field(g, "label").get<std::string>(), g.value("deg", 0));
  if (has_aug) {
    const Json &aug = j.at("augmentation");
    if (aug.size() != a.gens.size())
      throw InvalidInput("one augmentation value per generator is required");
    for (std::size_t g = 0; g < a.gens.size(); ++g)
      (*a.augmentation)[g] = integer_from_json(aug[g]);
  } else if (a.augmentation) {
    // default: degree-0 generators go to 1
    for (std::size_t g = 0; g < a.gens.size(); ++g)
      (*a.augmentation)[g] = a.gens[g].degree == 0 ? 1 : 0;
  }
  if (j.contains("precedence"))
    a.precedence = j.at("precedence").get<std::vector<int>>();
  if (j.contains("notes"))
    a.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("diff"))
    for (const auto &[label, p] : j.at("diff").items())
      a.diff[static_cast<std::size_t>(a.find_or_throw(label))] = polynomial_from_json(a, p);
  if (j.contains("rels"))
    for (const auto &r : j.at("rels")) {
      if (r.is_string()) {
        // "lhs = rhs"
        const std::string s = r.get<std::string>();
        const auto eq = s.find('=');
        if (eq == std::string::npos)
          throw InvalidInput("relation '" + s + "' has no '='");
        a.relations.push_back({a.parse(s.substr(0, eq)), a.parse(s.substr(eq + 1))});
      } else if (r.is_array() && r.size() == 2) {
        a.relations.push_back({polynomial_from_json(a, r[0]), polynomial_from_json(a, r[1])});
      } else {
        throw InvalidInput("a relation is a pair [lhs, rhs] or a string 'lhs = rhs'");
      }
    }
  return a;
}

Json to_json(const SimplicialSet &k, int up_to) {
  Json simplices = Json::array();
  for (int d = 0; d <= up_to; ++d)
    for (const auto &x : k.simplices_or_throw(d)) {
      Json faces = Json::array();
      for (int i = 0; d > 0 && i <= d; ++i)
        faces.push_back(formal_json(k, k.face(x, i)));
      simplices.push_back(Json{{"label", k.label(x)}, {"dim", d}, {"faces", faces}});
    }
  return Json{{"kind", "simplicial-set"},
              {"name", k.name()},
              {"reduced", k.reduced()},
              {"simplices", simplices}};
}

std::shared_ptr<const FiniteSimplicialSet> simplicial_set_from_json(const Json &j) {
  expect_kind(j, "simplicial-set");
  auto k = std::make_shared<FiniteSimplicialSet>(j.value("name", std::string("K")));
  for (const auto &s : field(j, "simplices")) {
    std::vector<FormalSimplex> faces;
    if (s.contains("faces"))
      for (const auto &f : s.at("faces")) {
        const std::string base = f.is_string() ? f.get<std::string>() : field(f, "base").get<std::string>();
        auto key = k->find(base);
        if (!key)
          throw InvalidInput("face refers to unknown simplex '" + base + "'");
        std::vector<int> degens;
        if (f.is_object() && f.contains("degens"))
          degens = f.at("degens").get<std::vector<int>>();
        faces.push_back({*key, degens});
      }
    k->add(field(s, "label").get<std::string>(), field(s, "dim").get<int>(), std::move(faces));
  }
  const auto vertices = k->simplices_or_throw(0).size();
  k->set_reduced_flag(j.value("reduced", vertices == 1));
  return k;
}

Json to_json(const DgCoalgebraWindow &c) {
  Json j = to_json(c.complex);
  j["kind"] = "dg-coalgebra";
  j["labels"] = c.labels;
  Json cop = Json::array();
  for (const auto &level : c.coproduct) {
    Json l = Json::array();
    for (const auto &t : level) {
      Json terms = Json::array();
      for (const auto &[key, coef] : t) {
        const auto &[p, a, b] = key;
        terms.push_back(Json::array({p, a, b, to_json(coef)}));
      }
      l.push_back(std::move(terms));
    }
    cop.push_back(std::move(l));
  }
  j["coproduct"] = cop;
  Json counit = Json::array();
  for (const auto &x : c.counit)
    counit.push_back(to_json(x));
  j["counit"] = counit;
  j["coaugmentation"] = c.coaugmentation ? Json(*c.coaugmentation) : Json(nullptr);
  return j;
}

DgCoalgebraWindow coalgebra_from_json(const Json &j) {
  expect_kind(j, "dg-coalgebra");
  Json cj = j;
  cj["kind"] = "chain-complex";
  DgCoalgebraWindow c;
  c.complex = complex_from_json(cj);
  c.labels = field(j, "labels").get<std::vector<std::vector<std::string>>>();
  for (const auto &level : field(j, "coproduct")) {
    std::vector<TensorVec> l;
    for (const auto &terms : level) {
      TensorVec t;
      for (const auto &x : terms)
        add_to(t, {x.at(0).get<int>(), x.at(1).get<std::size_t>(), x.at(2).get<std::size_t>()},
               integer_from_json(x.at(3)));
      l.push_back(std::move(t));
    }
    c.coproduct.push_back(std::move(l));
  }
  for (const auto &x : field(j, "counit"))
    c.counit.push_back(integer_from_json(x));
  if (j.contains("coaugmentation") && !j.at("coaugmentation").is_null())
    c.coaugmentation = j.at("coaugmentation").get<std::size_t>();
  return c;
}

Json to_json(const CompletionResult &r) {
  if (const auto *e = std::get_if<Exhausted>(&r))
    return Json{{"status", "exhausted"}, {"reason", e->reason},
                {"presentation", to_json(e->presentation)}};
  const auto &g = std::get<GroupCompletion>(r);
  Json images = Json::array();
  for (const auto &w : g.generator_images)
    images.push_back(letters_json(g.presentation, w));
  Json j{{"status", "ok"},
         {"kind", g.kind == GroupCompletion::Kind::Free ? "free" : "finite"},
         {"description", g.describe()},
         {"presentation", to_json(g.presentation)},
         {"generator_images", images},
         {"tietze_log", g.tietze_log}};
  if (g.kind == GroupCompletion::Kind::Free)
    j["free_rank"] = g.free_rank;
  if (g.table)
    j["order"] = g.table->order();
  return j;
}

Json to_json(const RingCertificate &c) {
  Json traces = Json::array();
  for (const auto &t : c.traces) {
    Json steps = Json::array();
    for (const auto &s : t)
      steps.push_back(Json{{"rule", s.rule}, {"at", s.at}});
    traces.push_back(std::move(steps));
  }
  return Json{{"kind", "ring-certificate"},
              {"outcome", to_string(c.outcome)},
              {"detail", c.detail},
              {"checks", c.checks},
              {"traces", traces}};
}

Json to_json(const QuasiIsoVerdict &v) {
  return Json{{"kind", "filtered-quasi-iso"},
              {"verdict", v.passed() ? "QuasiIso" : "Fails"},
              {"level", v.level},
              {"cone_degree", v.cone_degree},
              {"checked_through", v.checked_through},
              {"detail", v.detail}};
}

Json to_json(const WindowVerdict &v) {
  return Json{{"kind", "window-verdict"},
              {"verdict", v.passed ? "QuasiIso" : "Fails"},
              {"checked_through", v.checked_through},
              {"detail", v.detail},
              {"checks", v.checks},
              {"source", to_json(v.source)},
              {"target", to_json(v.target)}};
}

Json to_json(const IsoCertificate &c) {
  Json bij = Json::array(), nb = Json::array(), bb = Json::array();
  for (const auto &m : c.bijection)
    bij.push_back(to_json(m));
  for (const auto &m : c.nerve_boundary)
    nb.push_back(to_json(m));
  for (const auto &m : c.bar_boundary)
    bb.push_back(to_json(m));
  return Json{{"kind", "nerve-bar-certificate"},
              {"outcome", "pass"},
              {"checks", c.checks},
              {"bijection", bij},
              {"nerve_boundary", nb},
              {"bar_boundary", bb}};
}

Json to_json(const MonoidInvariantBundle &b) {
  return Json{{"nerve_homology", to_json(b.nerve_homology)},
              {"completion", to_json(b.completion)},
              {"grouplike", b.grouplike}};
}

Json to_json(const WeqVerdict &v) {
  return Json{{"kind", "weq-verdict"},
              {"verdict", to_string(v.kind)},
              {"witness", v.witness},
              {"checks", v.checks},
              {"hi", v.hi},
              {"source", to_json(v.source)},
              {"target", to_json(v.target)}};
}

Json to_json(const std::vector<LoopGroupLevel> &levels) {
  Json out = Json::array();
  for (const auto &lv : levels) {
    // words refer to generator labels of the neighbouring levels
    auto words = [&](const std::vector<std::vector<GroupWord>> &ws, int level) {
      Json a = Json::array();
      for (const auto &row : ws) {
        Json r = Json::array();
        for (const auto &w : row) {
          Json letters = Json::array();
          for (const auto &l : w)
            letters.push_back(levels.at(static_cast<std::size_t>(level))
                                  .labels.at(static_cast<std::size_t>(l.gen)) +
                              (l.inverse ? "^-1" : ""));
          r.push_back(std::move(letters));
        }
        a.push_back(std::move(r));
      }
      return a;
    };
    Json j{{"n", lv.n}, {"generators", lv.labels}};
    if (lv.n > 0)
      j["faces"] = words(lv.faces, lv.n - 1);
    if (static_cast<std::size_t>(lv.n + 1) < levels.size())
      j["degeneracies"] = words(lv.degeneracies, lv.n + 1);
    out.push_back(std::move(j));
  }
  return Json{{"kind", "loop-group"}, {"levels", out}};
}

Json to_json(const H0Comparison &h) {
  return Json{{"kind", "h0-comparison"},
              {"pi1", to_json(h.pi1)},
              {"group_ring", to_json(h.group_ring)},
              {"extended_cobar_h0", to_json(h.extended_h0)},
              {"certificate", to_json(h.certificate)}};
}

} // namespace monoloc
