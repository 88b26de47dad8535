#include "monoloc/suite.hpp"

#include "monoloc/catalog.hpp"
#include "monoloc/error.hpp"

#include <chrono>
#include <functional>

namespace monoloc {

namespace {

class Recorder {
public:
  explicit Recorder(CaseResult &r) : r_(r) {}
  void check(bool ok, const std::string &what) {
    r_.checks.push_back((ok ? "ok   " : "FAIL ") + what);
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = what;
    }
  }

private:
  CaseResult &r_;
};

HomologyGroup z(std::size_t rank = 1) { return HomologyGroup{rank, {}, true}; }

bool homology_is(const HomologyTable &t, int n, const HomologyGroup &g) {
  return t.entries.count(n) && t.at(n).isomorphic(g);
}

void lemma31(CaseResult &out, const SuiteOptions &opt) {
  Recorder rec(out);
  auto monoids = bundled_monoids();
  std::size_t i = 0;
  for (auto &m : random_monoids(opt.seed, 20))
    monoids.push_back({"random" + std::to_string(i++) + "(order " + std::to_string(m.size()) + ")", m});
  for (const auto &[name, m] : monoids) {
    try {
      const auto cert = nerve_bar_iso_check(m, 4);
      rec.check(true, "C N(" + name + ") = B C(" + name + ") through degree 4");
      if (name == "idempotent" || name == "z2")
        out.payload[name] = to_json(cert);
    } catch (const MismatchAt &e) {
      rec.check(false, name + ": " + e.what());
    }
  }
}

void ex43(CaseResult &out, const SuiteOptions &opt) {
  Recorder rec(out);
  const auto s1 = minimal_sphere(1);
  const PresentedDgAlgebra om = cobar(chains(*s1, 2), 2);
  rec.check(om.gens.size() == 1 && om.gens[0].degree == 0 && om.diff[0].is_zero(),
            "cobar of the minimal circle is free on one degree-0 generator with d = 0");
  const PresentedDgAlgebra ext = extended_cobar(*s1, 2);
  const PresentedDgAlgebra h0 = h0_ring(ext);
  PresentedDgAlgebra laurent;
  laurent.augmentation = std::vector<Integer>{};
  const int u = laurent.add_generator("u", 0), w = laurent.add_generator("u^-1", 0);
  (*laurent.augmentation)[0] = 1;
  (*laurent.augmentation)[1] = 1;
  const Polynomial pu = Polynomial::generator(u), pw = Polynomial::generator(w);
  laurent.relations = {{pu * pw, Polynomial::constant(1)}, {pw * pu, Polynomial::constant(1)}};
  const int t = h0.find_or_throw("t"), v = h0.find_or_throw("v_t");
  RingMap f{{Polynomial::constant(1) + Polynomial::generator(t), Polynomial::generator(v)}};
  RingMap g;
  g.images.resize(h0.gens.size());
  g.images[static_cast<std::size_t>(t)] = pu - Polynomial::constant(1);
  g.images[static_cast<std::size_t>(v)] = pw;
  const auto cert = ring_iso_certify(laurent, h0, f, g, opt.budget);
  rec.check(cert.passed(), "H_0 of the extended cobar is Z[u, u^-1] (" +
                               std::string(to_string(cert.outcome)) + ")");
  out.payload["extended_cobar"] = to_json(ext);
  out.payload["certificate"] = to_json(cert);
}

void ex46(CaseResult &out, const SuiteOptions &opt) {
  Recorder rec(out);
  const FiniteMonoid m = idempotent_monoid();
  const PresentedDgAlgebra a = monoid_algebra(m);

  // at b: the ring Z
  const PresentedDgAlgebra at_b = adjoin_inverses(a, {a.parse("b")}, {"v"});
  PresentedDgAlgebra zring;
  zring.augmentation = std::vector<Integer>{};
  RingMap to_z{{Polynomial::constant(1), Polynomial::constant(1)}};
  const auto c1 = ring_iso_certify(at_b, zring, to_z, RingMap{}, opt.budget);
  rec.check(c1.passed(), "Z[M][b^-1] = Z (" + std::string(to_string(c1.outcome)) + ")");
  out.payload["at_b"] = to_json(c1);

  // at 2 - b: Z[1/2] x Z, presented by p = (1,0) and q = (1/2,0)
  const PresentedDgAlgebra at_2b = adjoin_inverses(a, {a.parse("2 - b")}, {"v"});
  PresentedDgAlgebra prod;
  prod.add_generator("p", 0);
  prod.add_generator("q", 0);
  prod.relations = {{prod.parse("p*p"), prod.parse("p")},
                    {prod.parse("p*q"), prod.parse("q")},
                    {prod.parse("q*p"), prod.parse("q")},
                    {prod.parse("2*q"), prod.parse("p")}};
  RingMap f{{prod.parse("1 - p"), prod.parse("q + 1 - p")}};
  RingMap g{{at_2b.parse("1 - b"), at_2b.parse("v - b")}};
  const auto c2 = ring_iso_certify(at_2b, prod, f, g, opt.budget);
  rec.check(c2.passed(), "Z[M][(2-b)^-1] = Z[1/2] x Z (" + std::string(to_string(c2.outcome)) + ")");
  out.payload["at_2_minus_b"] = to_json(c2);

  PresentedDgAlgebra mod2 = at_2b;
  mod2.modulus = 2;
  const RewriteSystem r2 = complete(mod2, opt.budget);
  const auto basis = basis_in_degree(mod2, r2, 0, opt.cap);
  rec.check(r2.complete() && basis.status == BasisResult::Status::Ok && basis.basis.size() == 1 &&
                basis.basis[0].empty(),
            "mod 2 the localization at 2 - b has normal-form basis {1}");

  // localizing at all of M and taking bar homology
  const RewriteSystem rb = complete(at_b, opt.budget);
  const BarWindow bw = bar(algebra_window(at_b, rb, 4, opt.cap), 5);
  const HomologyTable hb = homology_window(bw.window.complex);
  const HomologyTable hn = homology_window(chains(*nerve(m), 5).complex);
  bool ok = true;
  for (int n = 0; n <= 4; ++n)
    ok = ok && homology_is(hb, n, n == 0 ? z() : HomologyGroup{}) &&
         homology_is(hn, n, n == 0 ? z() : HomologyGroup{});
  rec.check(ok, "H(B L_M C(M)) = H(C N M) = (Z,0,0,0,0) on 0..4");
  out.payload["bar_homology"] = to_json(hb);
  out.payload["nerve_homology"] = to_json(hn);
}

void prop34(CaseResult &out, const SuiteOptions &opt) {
  Recorder rec(out);
  PresentedDgAlgebra zring;
  zring.augmentation = std::vector<Integer>{};
  PresentedDgAlgebra free1 = zring;
  free1.add_generator("x", 1);
  PresentedDgAlgebra ext = free1;
  ext.relations.push_back({ext.parse("x*x"), Polynomial()});
  for (const auto &[name, a] : {std::pair{std::string("Z"), zring}, std::pair{std::string("Z<x>/(x^2)"), ext},
                                std::pair{std::string("Z<x>"), free1}}) {
    const auto v = counit_check(a, 4, opt.budget, opt.cap);
    rec.check(v.passed, "counit Omega B A -> A for A = " + name + ": " + v.detail);
    out.payload["counit " + name] = to_json(v);
  }
  for (int n : {2, 3}) {
    const int hi = n == 2 ? 4 : 5;
    const auto v = unit_check(chains(*minimal_sphere(n), hi), hi, opt.cap);
    rec.check(v.passed, "unit C -> B Omega C for the minimal " + std::to_string(n) +
                            "-sphere on 0.." + std::to_string(hi) + ": " + v.detail);
    out.payload["unit sphere" + std::to_string(n)] = to_json(v);
  }
}

void loop_s2(CaseResult &out, const SuiteOptions &opt) {
  Recorder rec(out);
  for (int n : {2, 3}) {
    const PresentedDgAlgebra om = cobar(chains(*minimal_sphere(n), 7), 7);
    const auto cx = algebra_complex(om, complete(om, opt.budget), 6, opt.cap);
    const HomologyTable h = homology_window(cx.complex);
    bool ok = true;
    for (int d = 0; d <= 5; ++d)
      ok = ok && homology_is(h, d, d % (n - 1) == 0 ? z() : HomologyGroup{});
    rec.check(ok, "H_*(Omega C(S^" + std::to_string(n) + ")) on 0..5");
    out.payload["loop homology sphere" + std::to_string(n)] = to_json(h);
  }
  const auto lg = kan_loop_group(*minimal_sphere(2), 2);
  rec.check(lg[0].generators.empty() && lg[1].generators.size() == 1,
            "G(S^2): level 0 trivial, level 1 free on one generator");
  out.payload["loop group sphere2"] = to_json(lg);
  for (const auto &[name, k] : bundled_reduced_complexes()) {
    if (name.rfind("nerve:", 0) == 0)
      continue;
    const auto h = h0_compare(*k, opt.budget);
    rec.check(h.certificate.passed(), "Z[pi_1] = H_0 of the extended cobar for " + name + " (" +
                                          to_string(h.certificate.outcome) + ")");
  }
  for (const auto &[name, k] : bundled_reduced_complexes()) {
    const auto ab = abelianization(pi1_presentation(*k));
    const auto h1 = homology_window(chains(*k, 3).complex).at(1);
    rec.check(ab.isomorphic(h1), "pi_1(" + name + ")^ab = " + ab.to_string() + " = H_1");
  }
}

void weq(CaseResult &out, const SuiteOptions &opt) {
  Recorder rec(out);
  const FiniteMonoid one = trivial_monoid();
  const FiniteMonoid b = idempotent_monoid();
  const FiniteMonoid z2 = cyclic_group(2);
  const auto v1 = weq_verdict({b, one, {0, 0}}, 5, opt.budget);
  rec.check(v1.kind == WeqVerdict::Kind::CertifiedEquivalent,
            std::string("{1,b} -> {1}: ") + to_string(v1.kind));
  const auto v2 = weq_verdict({z2, one, {0, 0}}, 5, opt.budget);
  rec.check(v2.kind == WeqVerdict::Kind::Distinguished && v2.witness.rfind("H_1", 0) == 0,
            std::string("Z/2 -> {1}: ") + to_string(v2.kind) + " (" + v2.witness + ")");
  out.payload["idempotent to trivial"] = to_json(v1);
  out.payload["z2 to trivial"] = to_json(v2);
  for (const auto &[name, m] : bundled_monoids()) {
    const auto v = weq_verdict(identity_map(m), 5, opt.budget);
    rec.check(v.kind == WeqVerdict::Kind::CertifiedEquivalent,
              "identity of " + name + ": " + to_string(v.kind));
  }
}

} // namespace

const std::vector<std::string> &suite_cases() {
  static const std::vector<std::string> names{"lemma31", "ex43", "ex46", "prop34", "loop-s2", "weq"};
  return names;
}

CaseResult run_case(const std::string &name, const SuiteOptions &opt) {
  static const std::map<std::string, std::function<void(CaseResult &, const SuiteOptions &)>> cases{
      {"lemma31", lemma31}, {"ex43", ex43},       {"ex46", ex46},
      {"prop34", prop34},   {"loop-s2", loop_s2}, {"weq", weq}};
  auto it = cases.find(name);
  if (it == cases.end())
    throw InvalidInput("unknown case '" + name + "'");
  CaseResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(r, opt);
  } catch (const Error &e) {
    r.passed = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace monoloc
