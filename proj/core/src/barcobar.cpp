#include "monoloc/barcobar.hpp"

#include "monoloc/error.hpp"

#include <algorithm>
#include <set>

namespace monoloc {

namespace {

Integer sign(int e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

const SparseVec kZero;

std::size_t at(int n) { return static_cast<std::size_t>(n); }

/// Coordinates of a normalised element of A+ over the word basis of degree n.
SparseVec coordinates(const Polynomial &nf, const std::map<Word, std::size_t> &index,
                      const std::string &what) {
  SparseVec v;
  for (const auto &[w, c] : nf.terms()) {
    if (w.empty())
      continue;
    auto it = index.find(w);
    if (it == index.end())
      throw InvalidInput(what + ": normal form leaves the window basis");
    add_to(v, it->second, c);
  }
  return v;
}

std::vector<BasisResult> bases_through(const PresentedDgAlgebra &a, const RewriteSystem &r, int hi,
                                       std::size_t cap) {
  if (a.modulus != 0)
    throw InvalidInput("windows are built over the integers only");
  if (!r.complete() || r.has_nonunit_leads())
    throw InvalidInput("a complete system with unit leading coefficients is required");
  std::vector<BasisResult> out;
  for (int n = 0; n <= hi; ++n) {
    auto b = basis_in_degree(a, r, n, cap);
    if (b.status == BasisResult::Status::CapExceeded)
      throw InfiniteRank("degree " + std::to_string(n) + " has more than " + std::to_string(cap) +
                         " basis words");
    out.push_back(std::move(b));
  }
  return out;
}

std::string join_word(const std::vector<std::string> &parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? "|" : "") + parts[i];
  return s + "]";
}

} // namespace

const SparseVec &AlgebraWindow::multiply(int p, std::size_t i, int q, std::size_t j) const {
  auto it = products.find({p, i, q, j});
  if (it != products.end())
    return it->second;
  if (p + q > hi)
    throw WindowTooSmall("product lands in degree " + std::to_string(p + q));
  return kZero;
}

AlgebraWindow algebra_window(const PresentedDgAlgebra &a, const RewriteSystem &r, int hi,
                             std::size_t cap, const std::vector<int> &generator_weights) {
  if (!a.augmentation)
    throw InvalidInput("the algebra has no augmentation");
  if (!generator_weights.empty() && generator_weights.size() != a.gens.size())
    throw InvalidInput("one weight per generator is required");
  const auto bases = bases_through(a, r, hi, cap);

  AlgebraWindow w;
  w.hi = hi;
  std::vector<std::map<Word, std::size_t>> index(at(hi) + 1);
  std::vector<std::vector<Polynomial>> element(at(hi) + 1);
  for (int n = 0; n <= hi; ++n) {
    std::vector<std::string> labels;
    std::vector<Word> words;
    std::vector<int> weights;
    for (const Word &word : bases[at(n)].basis) {
      if (word.empty())
        continue;
      index[at(n)][word] = words.size();
      Polynomial e = Polynomial::monomial(word);
      if (n == 0)
        e -= Polynomial::constant(*a.augment(e));
      element[at(n)].push_back(std::move(e));
      labels.push_back(a.word_string(word));
      int weight = 0;
      if (!generator_weights.empty())
        for (int g : word)
          weight += generator_weights[static_cast<std::size_t>(g)];
      weights.push_back(weight);
      words.push_back(word);
    }
    w.labels.push_back(std::move(labels));
    w.words.push_back(std::move(words));
    w.weights.push_back(std::move(weights));
  }

  for (int n = 0; n <= hi; ++n) {
    std::vector<SparseVec> ds;
    for (const auto &e : element[at(n)]) {
      if (n == 0) {
        ds.emplace_back();
        continue;
      }
      ds.push_back(coordinates(normal_form(a.differential(e), r), index[at(n - 1)], "differential"));
    }
    w.differential.push_back(std::move(ds));
  }
  for (int p = 0; p <= hi; ++p)
    for (int q = 0; p + q <= hi; ++q)
      for (std::size_t i = 0; i < element[at(p)].size(); ++i)
        for (std::size_t j = 0; j < element[at(q)].size(); ++j) {
          Polynomial prod = normal_form(element[at(p)][i] * element[at(q)][j], r);
          SparseVec v = coordinates(prod, index[at(p + q)], "product");
          if (!v.empty())
            w.products[{p, i, q, j}] = std::move(v);
        }
  return w;
}

AlgebraWindow monoid_algebra_window(const FiniteMonoid &m, int hi) {
  require_valid(m);
  AlgebraWindow w;
  w.hi = hi;
  const auto letters = m.nonidentity();
  std::vector<long> pos(m.size(), -1);
  for (std::size_t i = 0; i < letters.size(); ++i)
    pos[static_cast<std::size_t>(letters[i])] = static_cast<long>(i);
  for (int n = 0; n <= hi; ++n) {
    w.labels.emplace_back();
    w.words.emplace_back();
    w.weights.emplace_back();
    w.differential.emplace_back();
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    w.labels[0].push_back(m.elements[static_cast<std::size_t>(letters[i])]);
    w.words[0].push_back(Word{static_cast<int>(i)});
    w.weights[0].push_back(0);
    w.differential[0].emplace_back();
  }
  auto add_element = [&](SparseVec &v, int e, const Integer &c) {
    if (e != m.identity)
      add_to(v, static_cast<std::size_t>(pos[static_cast<std::size_t>(e)]), c);
  };
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = 0; j < letters.size(); ++j) {
      SparseVec v;
      add_element(v, m.mul(letters[i], letters[j]), 1);
      add_element(v, letters[i], -1);
      add_element(v, letters[j], -1);
      if (!v.empty())
        w.products[{0, i, 0, j}] = std::move(v);
    }
  return w;
}

BarWindow bar(const AlgebraWindow &a, int hi) {
  if (hi < 1)
    throw WindowTooSmall("bar windows need hi >= 1");
  if (a.hi < hi - 1)
    throw WindowTooSmall("the algebra window must reach degree " + std::to_string(hi - 1));

  BarWindow b;
  std::vector<std::map<std::vector<BarLetter>, std::size_t>> index(at(hi) + 1);
  b.words.assign(at(hi) + 1, {});
  b.words[0].push_back({});
  index[0][{}] = 0;
  for (int n = 1; n <= hi; ++n) {
    auto &out = b.words[at(n)];
    for (int d = 0; d + 1 <= n; ++d)
      for (std::size_t i = 0; i < a.rank(d); ++i)
        for (const auto &rest : b.words[at(n - d - 1)]) {
          std::vector<BarLetter> w{{d, i}};
          w.insert(w.end(), rest.begin(), rest.end());
          out.push_back(std::move(w));
        }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i)
      index[at(n)][out[i]] = i;
  }

  DgCoalgebraWindow &c = b.window;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= hi; ++n) {
    ranks.push_back(b.words[at(n)].size());
    std::vector<std::string> labels;
    for (const auto &w : b.words[at(n)]) {
      std::vector<std::string> parts;
      for (const auto &[d, i] : w)
        parts.push_back(a.labels[at(d)][i]);
      labels.push_back(join_word(parts));
    }
    c.labels.push_back(std::move(labels));
  }

  auto word_degree = [](const std::vector<BarLetter> &w) {
    int deg = 0;
    for (const auto &l : w)
      deg += l.first + 1;
    return deg;
  };

  std::vector<IntMatrix> ds;
  for (int n = 1; n <= hi; ++n) {
    IntMatrix d(ranks[at(n - 1)], ranks[at(n)]);
    const auto &words = b.words[at(n)];
    for (std::size_t j = 0; j < words.size(); ++j) {
      const auto &w = words[j];
      int e = 0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        const auto [dk, ik] = w[k];
        if (dk >= 1)
          for (const auto &[r, coef] : a.differential[at(dk)][ik]) {
            auto v = w;
            v[k] = {dk - 1, r};
            d(index[at(n - 1)].at(v), j) -= sign(e) * coef;
          }
        if (k + 1 < w.size()) {
          const auto [dl, il] = w[k + 1];
          for (const auto &[r, coef] : a.multiply(dk, ik, dl, il)) {
            std::vector<BarLetter> v(w.begin(), w.begin() + static_cast<long>(k));
            v.push_back({dk + dl, r});
            v.insert(v.end(), w.begin() + static_cast<long>(k) + 2, w.end());
            d(index[at(n - 1)].at(v), j) += sign(e + dk + 1) * coef;
          }
        }
        e += dk + 1;
      }
    }
    ds.push_back(std::move(d));
  }
  c.complex = ChainComplexWindow(0, hi, ranks, std::move(ds), true);

  for (int n = 0; n <= hi; ++n) {
    std::vector<TensorVec> level;
    for (const auto &w : b.words[at(n)]) {
      TensorVec t;
      for (std::size_t k = 0; k <= w.size(); ++k) {
        std::vector<BarLetter> left(w.begin(), w.begin() + static_cast<long>(k));
        std::vector<BarLetter> right(w.begin() + static_cast<long>(k), w.end());
        const int p = word_degree(left);
        add_to(t, {p, index[at(p)].at(left), index[at(n - p)].at(right)}, 1);
      }
      level.push_back(std::move(t));
    }
    c.coproduct.push_back(std::move(level));
  }
  c.counit = {Integer(1)};
  c.coaugmentation = 0;
  return b;
}

AdmissibleFiltration weight_filtration(const BarWindow &b, const AlgebraWindow &a) {
  AdmissibleFiltration f;
  for (const auto &words : b.words) {
    std::vector<int> level;
    for (const auto &w : words) {
      int sum = 0;
      for (const auto &[d, i] : w)
        sum += a.weights[at(d)][i];
      level.push_back(sum);
    }
    f.level.push_back(std::move(level));
  }
  return f;
}

std::vector<BarLetter> cobar_generators(const DgCoalgebraWindow &c, int hi) {
  if (c.rank(0) != 1 || !c.coaugmentation)
    throw NotConilpotent("degree 0 must be spanned by the coaugmentation, found rank " +
                         std::to_string(c.rank(0)));
  std::vector<BarLetter> out;
  for (int n = 1; n <= std::min(hi, c.hi()); ++n)
    for (std::size_t i = 0; i < c.rank(n); ++i)
      out.push_back({n, i});
  return out;
}

PresentedDgAlgebra cobar(const DgCoalgebraWindow &c, int hi) {
  const auto gens = cobar_generators(c, hi);
  PresentedDgAlgebra a;
  a.augmentation = std::vector<Integer>{};
  std::map<BarLetter, int> gen_of;
  std::set<std::string> used;
  for (const auto &[n, i] : gens) {
    std::string label = c.labels[at(n)][i];
    if (used.count(label))
      label += "@" + std::to_string(n);
    used.insert(label);
    gen_of[{n, i}] = a.add_generator(label, n - 1);
  }
  for (const auto &[n, i] : gens) {
    Polynomial d;
    for (const auto &[r, coef] : c.d(n, i))
      if (n - 1 >= 1)
        d -= Polynomial::generator(gen_of.at({n - 1, r}), coef);
    for (const auto &[key, coef] : c.coproduct[at(n)][i]) {
      const auto &[p, l, r] = key;
      if (p == 0 || p == n)
        continue;
      d += Polynomial::monomial(Word{gen_of.at({p, l}), gen_of.at({n - p, r})}, sign(p) * coef);
    }
    a.diff[static_cast<std::size_t>(gen_of.at({n, i}))] = std::move(d);
  }
  return a;
}

AlgebraComplex algebra_complex(const PresentedDgAlgebra &a, const RewriteSystem &r, int hi,
                               std::size_t cap) {
  if (hi < 1)
    throw WindowTooSmall("algebra complexes need hi >= 1");
  const auto bases = bases_through(a, r, hi, cap);
  AlgebraComplex out;
  std::vector<std::size_t> ranks;
  std::vector<std::map<Word, std::size_t>> index(at(hi) + 1);
  for (int n = 0; n <= hi; ++n) {
    out.basis.push_back(bases[at(n)].basis);
    ranks.push_back(out.basis.back().size());
    for (std::size_t i = 0; i < out.basis.back().size(); ++i)
      index[at(n)][out.basis.back()[i]] = i;
  }
  std::vector<IntMatrix> ds;
  for (int n = 1; n <= hi; ++n) {
    IntMatrix d(ranks[at(n - 1)], ranks[at(n)]);
    for (std::size_t j = 0; j < ranks[at(n)]; ++j) {
      Polynomial img = normal_form(a.differential(Polynomial::monomial(out.basis[at(n)][j])), r);
      for (const auto &[w, c] : img.terms()) {
        auto it = index[at(n - 1)].find(w);
        if (it == index[at(n - 1)].end())
          throw InvalidInput("differential leaves the degree " + std::to_string(n - 1) + " basis");
        d(it->second, j) += c;
      }
    }
    ds.push_back(std::move(d));
  }
  out.complex = ChainComplexWindow(0, hi, std::move(ranks), std::move(ds), true);
  return out;
}

// ------------------------------------------------------------ comparisons

IsoCertificate nerve_bar_iso_check(const FiniteMonoid &m, int hi) {
  require_valid(m);
  const auto n_m = nerve(m);
  const DgCoalgebraWindow cn = chains(*n_m, hi);
  const PresentedDgAlgebra alg = monoid_algebra(m);
  const RewriteSystem r = complete(alg);
  const AlgebraWindow aw = algebra_window(alg, r, hi - 1);
  const BarWindow bw = bar(aw, hi);
  const DgCoalgebraWindow &cb = bw.window;

  std::map<std::string, std::size_t> letter;
  for (std::size_t i = 0; i < aw.rank(0); ++i)
    letter[aw.labels[0][i]] = i;
  if (aw.rank(0) != m.size() - 1)
    throw MismatchAt(0, "A+", "degree-0 augmentation ideal has rank " + std::to_string(aw.rank(0)));

  IsoCertificate cert;
  std::vector<std::vector<std::size_t>> to_bar(at(hi) + 1);
  for (int n = 0; n <= hi; ++n) {
    std::map<std::vector<BarLetter>, std::size_t> bar_index;
    for (std::size_t i = 0; i < cb.rank(n); ++i)
      bar_index[bw.words[at(n)][i]] = i;
    if (cb.rank(n) != cn.rank(n))
      throw MismatchAt(n, "rank", "nerve rank " + std::to_string(cn.rank(n)) + ", bar rank " +
                                      std::to_string(cb.rank(n)));
    IntMatrix p(cb.rank(n), cn.rank(n));
    std::set<std::size_t> hit;
    for (std::size_t j = 0; j < cn.rank(n); ++j) {
      std::vector<BarLetter> w;
      for (auto e : cn.simplices[at(n)][j].data)
        w.push_back({0, letter.at(m.elements[static_cast<std::size_t>(e)])});
      const std::size_t b = bar_index.at(w);
      p(b, j) = 1;
      hit.insert(b);
      to_bar[at(n)].push_back(b);
    }
    if (hit.size() != cb.rank(n))
      throw MismatchAt(n, "bijection", "the dictionary is not a bijection");
    cert.bijection.push_back(std::move(p));
    cert.nerve_boundary.push_back(cn.complex.boundary(n));
    cert.bar_boundary.push_back(cb.complex.boundary(n));
    cert.checks.push_back("degree " + std::to_string(n) + ": bijection on " +
                          std::to_string(cn.rank(n)) + " basis elements");
  }

  for (int n = 1; n <= hi; ++n) {
    const IntMatrix lhs = cb.complex.boundary(n) * cert.bijection[at(n)];
    const IntMatrix rhs = cert.bijection[at(n - 1)] * cn.complex.boundary(n);
    if (lhs != rhs)
      for (std::size_t j = 0; j < lhs.cols(); ++j)
        for (std::size_t i = 0; i < lhs.rows(); ++i)
          if (lhs(i, j) != rhs(i, j))
            throw MismatchAt(n, cn.labels[at(n)][j], "the differentials disagree");
    cert.checks.push_back("degree " + std::to_string(n) + ": d_B P = P d_N");
  }

  for (int n = 0; n <= hi; ++n) {
    for (std::size_t j = 0; j < cn.rank(n); ++j) {
      TensorVec mapped;
      for (const auto &[key, c] : cn.coproduct[at(n)][j]) {
        const auto &[p, l, rr] = key;
        add_to(mapped, {p, to_bar[at(p)][l], to_bar[at(n - p)][rr]}, c);
      }
      if (mapped != cb.coproduct[at(n)][to_bar[at(n)][j]])
        throw MismatchAt(n, cn.labels[at(n)][j], "the coproducts disagree");
    }
    cert.checks.push_back("degree " + std::to_string(n) + ": (P x P) Delta_N = Delta_B P");
  }
  if (cn.counit != cb.counit)
    throw MismatchAt(0, cn.labels[0].at(0), "the counits disagree");
  cert.checks.push_back("counits agree");
  return cert;
}

WindowVerdict counit_check(const PresentedDgAlgebra &input, int hi, std::size_t budget,
                           std::size_t cap) {
  for (const auto &g : input.gens)
    if (g.degree == 0)
      throw NotConnected("generator '" + g.label + "' has degree 0");
  if (hi < 1)
    throw WindowTooSmall("counit checks need hi >= 1");
  PresentedDgAlgebra a = input;
  a.augmentation = std::vector<Integer>(a.gens.size(), Integer(0));

  WindowVerdict v;
  const RewriteSystem r = complete(a, budget);
  if (!r.complete()) {
    v.detail = "completion did not finish within the budget";
    return v;
  }
  const AlgebraWindow aw = algebra_window(a, r, hi, cap);
  const BarWindow bw = bar(aw, hi + 1);
  const PresentedDgAlgebra omega = cobar(bw.window, hi + 1);
  const RewriteSystem ro = complete(omega, budget);
  const AlgebraComplex x = algebra_complex(omega, ro, hi, cap);
  const AlgebraComplex y = algebra_complex(a, r, hi, cap);
  v.checks.push_back("Omega B A has " + std::to_string(omega.gens.size()) +
                     " generators through degree " + std::to_string(hi));

  const auto gens = cobar_generators(bw.window, hi + 1);
  std::vector<std::optional<Word>> image;
  for (const auto &[n, i] : gens) {
    const auto &w = bw.words[at(n)][i];
    if (w.size() == 1)
      image.push_back(aw.words[at(w[0].first)][w[0].second]);
    else
      image.emplace_back();
  }
  std::vector<IntMatrix> f;
  for (int n = 0; n <= hi; ++n) {
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < y.basis[at(n)].size(); ++i)
      index[y.basis[at(n)][i]] = i;
    IntMatrix m(y.complex.rank(n), x.complex.rank(n));
    for (std::size_t j = 0; j < x.basis[at(n)].size(); ++j) {
      Word prod;
      bool zero = false;
      for (int g : x.basis[at(n)][j]) {
        const auto &img = image[static_cast<std::size_t>(g)];
        if (!img) {
          zero = true;
          break;
        }
        prod.insert(prod.end(), img->begin(), img->end());
      }
      if (zero)
        continue;
      const Polynomial nf = normal_form(Polynomial::monomial(prod), r);
      for (const auto &[w, c] : nf.terms())
        m(index.at(w), j) += c;
    }
    f.push_back(std::move(m));
  }
  if (!is_chain_map(x.complex, y.complex, f)) {
    v.detail = "the counit is not a chain map";
    return v;
  }
  v.checks.push_back("counit commutes with d in degrees 0.." + std::to_string(hi));
  v.source = homology_window(x.complex);
  v.target = homology_window(y.complex);
  v.checked_through = hi - 1;
  if (auto bad = first_cone_obstruction(x.complex, y.complex, f)) {
    v.detail = "the cone of the counit has homology in degree " + std::to_string(*bad);
    return v;
  }
  v.passed = true;
  v.detail = "cone acyclic in degrees 0.." + std::to_string(hi - 1);
  return v;
}

WindowVerdict unit_check(const DgCoalgebraWindow &input, int hi, std::size_t cap) {
  if (input.rank(0) != 1 || !input.coaugmentation || input.rank(1) != 0)
    throw NotSimplyConnected("needs one vertex and no 1-simplices, found ranks " +
                             std::to_string(input.rank(0)) + ", " + std::to_string(input.rank(1)));
  if (input.hi() < hi)
    throw WindowTooSmall("the coalgebra must reach degree " + std::to_string(hi));
  if (hi < 1)
    throw WindowTooSmall("unit checks need hi >= 1");
  const DgCoalgebraWindow c = input.truncated(hi);

  const PresentedDgAlgebra omega = cobar(c, hi);
  const RewriteSystem r = complete(omega);
  std::vector<int> weights;
  for (const auto &g : omega.gens)
    weights.push_back(g.degree + 1);
  const AlgebraWindow aw = algebra_window(omega, r, hi - 1, cap, weights);
  const BarWindow bw = bar(aw, hi);
  const DgCoalgebraWindow &b = bw.window;

  const auto gens = cobar_generators(c, hi);
  std::map<BarLetter, BarLetter> letter_of; // coalgebra basis -> bar letter
  {
    std::vector<std::map<Word, std::size_t>> index(at(hi));
    for (int n = 0; n < hi; ++n)
      for (std::size_t i = 0; i < aw.rank(n); ++i)
        index[at(n)][aw.words[at(n)][i]] = i;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int d = gens[g].first - 1;
      letter_of[gens[g]] = {d, index[at(d)].at(Word{static_cast<int>(g)})};
    }
  }

  CoalgebraMap f;
  for (int n = 0; n <= hi; ++n) {
    std::map<std::vector<BarLetter>, std::size_t> index;
    for (std::size_t i = 0; i < b.rank(n); ++i)
      index[bw.words[at(n)][i]] = i;
    IntMatrix m(b.rank(n), c.rank(n));
    for (std::size_t j = 0; j < c.rank(n); ++j) {
      if (n == 0) {
        m(0, j) = 1;
        continue;
      }
      std::map<std::vector<BarLetter>, Integer> terms{{{{n, j}}, Integer(1)}};
      while (!terms.empty()) {
        std::map<std::vector<BarLetter>, Integer> next;
        for (const auto &[w, coef] : terms) {
          std::vector<BarLetter> word;
          for (const auto &x : w)
            word.push_back(letter_of.at(x));
          m(index.at(word), j) += coef;
          const auto [dl, il] = w.back();
          for (const auto &[key, c2] : c.coproduct[at(dl)][il]) {
            const auto &[p, l, rr] = key;
            if (p == 0 || p == dl)
              continue;
            auto v = w;
            v.back() = {p, l};
            v.push_back({dl - p, rr});
            next[v] += coef * c2;
          }
        }
        std::erase_if(next, [](const auto &kv) { return kv.second == 0; });
        terms = std::move(next);
      }
    }
    f.components.push_back(std::move(m));
  }

  WindowVerdict v;
  const auto map_report = check_coalgebra_map(c, b, f);
  if (!map_report.ok()) {
    v.detail = "the unit is not a coalgebra map: " + map_report.to_string();
    return v;
  }
  v.checks.push_back("unit is a dg coalgebra map in degrees 0.." + std::to_string(hi));
  const AdmissibleFiltration fc = skeletal_filtration(c);
  const AdmissibleFiltration fb = weight_filtration(bw, aw);
  const auto adm = check_admissible(b, fb);
  if (!adm.ok())
    throw FiltrationNotRespected("weight filtration on B Omega C: " + adm.to_string());
  v.checks.push_back("weight filtration on B Omega C is admissible");
  v.source = homology_window(c.complex);
  v.target = homology_window(b.complex);
  const QuasiIsoVerdict q = filtered_quasi_iso_window(c, b, f, fc, fb, hi - 1);
  v.checked_through = hi - 1;
  v.passed = q.passed();
  v.detail = q.to_string();
  return v;
}

} // namespace monoloc
