#include "monoloc/simplicial.hpp"

#include "monoloc/error.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace monoloc {

namespace {

using Surjection = std::vector<int>; // eta : [n] -> [m], monotone onto

Surjection to_surjection(const FormalSimplex &x) {
  const int n = x.dim();
  std::set<int> d(x.degens.begin(), x.degens.end());
  Surjection eta(static_cast<std::size_t>(n + 1));
  eta[0] = 0;
  for (int j = 0; j < n; ++j)
    eta[static_cast<std::size_t>(j + 1)] = eta[static_cast<std::size_t>(j)] + (d.count(j) ? 0 : 1);
  return eta;
}

std::vector<int> degens_of(const Surjection &eta) {
  std::vector<int> out;
  for (std::size_t j = eta.size(); j-- > 1;)
    if (eta[j] == eta[j - 1])
      out.push_back(static_cast<int>(j - 1));
  return out;
}

/// Tuple with some entries equal to the unit, as a degenerate simplex on the
/// tuple with those entries removed.
template <class T, class IsUnit>
std::pair<std::vector<T>, std::vector<int>> strip_units(const std::vector<T> &tuple, IsUnit is_unit) {
  std::vector<T> kept;
  std::vector<int> degens;
  for (std::size_t p = 0; p < tuple.size(); ++p) {
    if (is_unit(tuple[p]))
      degens.push_back(static_cast<int>(p));
    else
      kept.push_back(tuple[p]);
  }
  std::reverse(degens.begin(), degens.end());
  return {std::move(kept), std::move(degens)};
}

constexpr std::int64_t kIntegerMarker = std::numeric_limits<std::int64_t>::min();

} // namespace

FormalSimplex nondegenerate(SimplexKey k) { return FormalSimplex{std::move(k), {}}; }

FormalSimplex degenerate_vertex(const SimplexKey &v, int n) {
  FormalSimplex x{v, {}};
  for (int j = n - 1; j >= 0; --j)
    x.degens.push_back(j);
  return x;
}

std::vector<SimplexKey> SimplicialSet::simplices_or_throw(int n) const {
  auto s = simplices(n);
  if (!s)
    throw UnboundedDegree(name() + " has unboundedly many nondegenerate " + std::to_string(n) +
                          "-simplices");
  return *s;
}

FormalSimplex face(const SimplicialSet &k, const FormalSimplex &x, int i) {
  const int n = x.dim();
  if (i < 0 || i > n || n == 0)
    throw InvalidInput("face index " + std::to_string(i) + " out of range for a " +
                       std::to_string(n) + "-simplex");
  if (x.degens.empty())
    return k.face(x.base, i);
  const Surjection eta = to_surjection(x);
  const int m = x.base.dim;
  Surjection comp;
  for (int j = 0; j <= n; ++j)
    if (j != i)
      comp.push_back(eta[static_cast<std::size_t>(j)]);
  std::vector<bool> hit(static_cast<std::size_t>(m + 1), false);
  for (int v : comp)
    hit[static_cast<std::size_t>(v)] = true;
  const auto miss = std::find(hit.begin(), hit.end(), false);
  if (miss == hit.end())
    return FormalSimplex{x.base, degens_of(comp)};
  // eta . delta_i = delta_k . eta'' with k the missed vertex
  const int kk = static_cast<int>(miss - hit.begin());
  for (int &v : comp)
    if (v > kk)
      --v;
  const FormalSimplex y = k.face(x.base, kk);
  const Surjection ey = to_surjection(y);
  Surjection total;
  for (int v : comp)
    total.push_back(ey[static_cast<std::size_t>(v)]);
  return FormalSimplex{y.base, degens_of(total)};
}

FormalSimplex degeneracy(const FormalSimplex &x, int j) {
  const int n = x.dim();
  if (j < 0 || j > n)
    throw InvalidInput("degeneracy index out of range");
  const Surjection eta = to_surjection(x);
  Surjection comp;
  for (int t = 0; t <= n + 1; ++t)
    comp.push_back(eta[static_cast<std::size_t>(t <= j ? t : t - 1)]);
  return FormalSimplex{x.base, degens_of(comp)};
}

std::string formal_label(const SimplicialSet &k, const FormalSimplex &x) {
  std::string out;
  for (int j : x.degens)
    out += "s" + std::to_string(j) + " ";
  return out + k.label(x.base);
}

// ------------------------------------------------------------------ finite

SimplexKey FiniteSimplicialSet::add(std::string label, int dim, std::vector<FormalSimplex> faces) {
  if (dim < 0)
    throw InvalidInput("negative simplex dimension");
  if (dim == 0 ? !faces.empty() : faces.size() != static_cast<std::size_t>(dim + 1))
    throw InvalidInput("simplex '" + label + "' of dimension " + std::to_string(dim) + " has " +
                       std::to_string(faces.size()) + " faces");
  for (const auto &f : faces)
    if (!contains(f.base))
      throw InvalidInput("face of '" + label + "' refers to an unknown simplex");
  if (find(label))
    throw InvalidInput("duplicate simplex label '" + label + "'");
  if (levels_.size() <= static_cast<std::size_t>(dim))
    levels_.resize(static_cast<std::size_t>(dim + 1));
  auto &level = levels_[static_cast<std::size_t>(dim)];
  level.push_back({std::move(label), std::move(faces)});
  return SimplexKey{dim, {static_cast<std::int64_t>(level.size() - 1)}};
}

void FiniteSimplicialSet::corrupt_face(const SimplexKey &k, int i, FormalSimplex f) {
  levels_.at(static_cast<std::size_t>(k.dim)).at(static_cast<std::size_t>(k.data.at(0))).faces.at(
      static_cast<std::size_t>(i)) = std::move(f);
}

std::optional<SimplexKey> FiniteSimplicialSet::find(const std::string &label) const {
  for (std::size_t d = 0; d < levels_.size(); ++d)
    for (std::size_t i = 0; i < levels_[d].size(); ++i)
      if (levels_[d][i].label == label)
        return SimplexKey{static_cast<int>(d), {static_cast<std::int64_t>(i)}};
  return std::nullopt;
}

std::optional<std::vector<SimplexKey>> FiniteSimplicialSet::simplices(int n) const {
  std::vector<SimplexKey> out;
  if (n >= 0 && static_cast<std::size_t>(n) < levels_.size())
    for (std::size_t i = 0; i < levels_[static_cast<std::size_t>(n)].size(); ++i)
      out.push_back(SimplexKey{n, {static_cast<std::int64_t>(i)}});
  return out;
}

bool FiniteSimplicialSet::contains(const SimplexKey &k) const {
  return k.dim >= 0 && static_cast<std::size_t>(k.dim) < levels_.size() && k.data.size() == 1 &&
         k.data[0] >= 0 &&
         static_cast<std::size_t>(k.data[0]) < levels_[static_cast<std::size_t>(k.dim)].size();
}

FormalSimplex FiniteSimplicialSet::face(const SimplexKey &k, int i) const {
  if (!contains(k))
    throw InvalidInput("unknown simplex");
  const auto &faces = levels_[static_cast<std::size_t>(k.dim)][static_cast<std::size_t>(k.data[0])].faces;
  if (i < 0 || static_cast<std::size_t>(i) >= faces.size())
    throw InvalidInput("face index out of range");
  return faces[static_cast<std::size_t>(i)];
}

std::string FiniteSimplicialSet::label(const SimplexKey &k) const {
  if (!contains(k))
    return "?";
  return levels_[static_cast<std::size_t>(k.dim)][static_cast<std::size_t>(k.data[0])].label;
}

std::optional<int> FiniteSimplicialSet::top_dimension() const {
  for (std::size_t d = levels_.size(); d-- > 0;)
    if (!levels_[d].empty())
      return static_cast<int>(d);
  return std::nullopt;
}

// -------------------------------------------------------------- validation

ValidationReport validate_simplicial(const SimplicialSet &k, int up_to) {
  ValidationReport rep;
  auto issue = [&](ValidationIssue::Kind kind, std::string msg) {
    rep.issues.push_back({kind, std::move(msg)});
  };
  const auto *loc = dynamic_cast<const LocalizedNerve *>(&k);
  auto level = [&](int n) -> std::optional<std::vector<SimplexKey>> {
    if (loc && n >= 1)
      return loc->truncated_simplices(n, 3);
    return k.simplices(n);
  };
  if (k.reduced()) {
    auto v = level(0);
    if (v && v->size() != 1)
      issue(ValidationIssue::Kind::Other,
            "reduced flag set but there are " + std::to_string(v->size()) + " vertices");
  }
  for (int n = 1; n <= up_to; ++n) {
    auto xs = level(n);
    if (!xs) {
      issue(ValidationIssue::Kind::Other, "degree " + std::to_string(n) + " is unbounded; skipped");
      continue;
    }
    for (const auto &x : *xs) {
      const std::string name = k.label(x);
      bool shapes_ok = true;
      for (int i = 0; i <= n; ++i) {
        const FormalSimplex f = k.face(x, i);
        const bool decreasing = std::adjacent_find(f.degens.begin(), f.degens.end(),
                                                   std::less_equal<int>()) == f.degens.end();
        const bool in_range = f.degens.empty() || f.degens.front() < f.dim();
        if (f.dim() != n - 1 || !k.contains(f.base) || !decreasing || !in_range) {
          issue(ValidationIssue::Kind::MalformedTable,
                "d" + std::to_string(i) + "(" + name + ") is not a valid " +
                    std::to_string(n - 1) + "-simplex");
          shapes_ok = false;
        }
      }
      if (!shapes_ok)
        continue;
      const FormalSimplex fx = nondegenerate(x);
      for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i) {
          const FormalSimplex l = face(k, face(k, fx, j), i);
          const FormalSimplex r = face(k, face(k, fx, i), j - 1);
          if (l != r)
            issue(ValidationIssue::Kind::SimplicialIdentity,
                  "d" + std::to_string(i) + " d" + std::to_string(j) + " != d" +
                      std::to_string(j - 1) + " d" + std::to_string(i) + " on " + name + ": " +
                      formal_label(k, l) + " vs " + formal_label(k, r));
        }
      for (int j = 0; j <= n; ++j) {
        const FormalSimplex sx = degeneracy(fx, j);
        for (int i = 0; i <= n + 1; ++i) {
          const FormalSimplex got = face(k, sx, i);
          FormalSimplex want;
          if (i < j)
            want = degeneracy(face(k, fx, i), j - 1);
          else if (i == j || i == j + 1)
            want = fx;
          else
            want = degeneracy(face(k, fx, i - 1), j);
          if (got != want)
            issue(ValidationIssue::Kind::SimplicialIdentity,
                  "d" + std::to_string(i) + " s" + std::to_string(j) + " law fails on " + name);
        }
      }
    }
  }
  return rep;
}

// ------------------------------------------------------------------- nerve

MonoidNerve::MonoidNerve(FiniteMonoid m) : m_(std::move(m)) { require_valid(m_); }

std::string MonoidNerve::name() const {
  std::string out = "N{";
  for (std::size_t i = 0; i < m_.size(); ++i)
    out += (i ? "," : "") + m_.elements[i];
  return out + "}";
}

SimplexKey MonoidNerve::key(const std::vector<int> &elements) const {
  SimplexKey k{static_cast<int>(elements.size()), {}};
  for (int e : elements)
    k.data.push_back(e);
  return k;
}

std::optional<std::vector<SimplexKey>> MonoidNerve::simplices(int n) const {
  std::vector<SimplexKey> out;
  if (n < 0)
    return out;
  const auto letters = m_.nonidentity();
  if (n > 0 && letters.empty())
    return out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    SimplexKey k{n, {}};
    for (std::size_t p : idx)
      k.data.push_back(letters[p]);
    out.push_back(std::move(k));
    std::size_t pos = idx.size();
    while (pos > 0 && ++idx[pos - 1] == letters.size())
      idx[--pos] = 0;
    if (pos == 0)
      break;
  }
  return out;
}

bool MonoidNerve::contains(const SimplexKey &k) const {
  if (k.dim < 0 || k.data.size() != static_cast<std::size_t>(k.dim))
    return false;
  return std::all_of(k.data.begin(), k.data.end(), [&](std::int64_t e) {
    return e >= 0 && static_cast<std::size_t>(e) < m_.size() && e != m_.identity;
  });
}

FormalSimplex MonoidNerve::face(const SimplexKey &k, int i) const {
  const int n = k.dim;
  if (!contains(k) || n == 0 || i < 0 || i > n)
    throw InvalidInput("bad face request on the nerve");
  std::vector<int> t;
  for (auto e : k.data)
    t.push_back(static_cast<int>(e));
  if (i == 0)
    t.erase(t.begin());
  else if (i == n)
    t.pop_back();
  else {
    t[static_cast<std::size_t>(i - 1)] = m_.mul(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
    t.erase(t.begin() + i);
  }
  auto [kept, degens] = strip_units(t, [&](int e) { return e == m_.identity; });
  return FormalSimplex{key(kept), std::move(degens)};
}

std::string MonoidNerve::label(const SimplexKey &k) const {
  if (k.dim == 0)
    return "()";
  std::string out = "(";
  for (std::size_t p = 0; p < k.data.size(); ++p)
    out += (p ? "," : "") + m_.elements[static_cast<std::size_t>(k.data[p])];
  return out + ")";
}

std::shared_ptr<const MonoidNerve> nerve(const FiniteMonoid &m) {
  return std::make_shared<const MonoidNerve>(m);
}

// ---------------------------------------------------------------- builders

std::shared_ptr<const FiniteSimplicialSet> minimal_sphere(int n) {
  if (n < 1)
    throw InvalidInput("sphere dimension must be at least 1");
  auto k = std::make_shared<FiniteSimplicialSet>("S" + std::to_string(n));
  const SimplexKey v = k->add("*", 0, {});
  k->add(n == 1 ? "t" : "x", n,
         std::vector<FormalSimplex>(static_cast<std::size_t>(n + 1), degenerate_vertex(v, n - 1)));
  k->set_reduced_flag(true);
  return k;
}

std::shared_ptr<const FiniteSimplicialSet> point() {
  auto k = std::make_shared<FiniteSimplicialSet>("pt");
  k->add("*", 0, {});
  k->set_reduced_flag(true);
  return k;
}

std::shared_ptr<const FiniteSimplicialSet> ordered_complex(int vertex_count,
                                                           const std::vector<std::vector<int>> &facets,
                                                           std::string name) {
  std::set<std::vector<int>> all;
  for (const auto &f : facets) {
    if (f.empty() || !std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end() || f.front() < 0 ||
        f.back() >= vertex_count)
      throw InvalidInput("facets must be strictly increasing vertex lists");
    const std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> s;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b))
          s.push_back(f[b]);
      all.insert(s);
    }
  }
  for (int v = 0; v < vertex_count; ++v)
    all.insert({v});
  std::vector<std::vector<int>> ordered(all.begin(), all.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto &a, const auto &b) { return a.size() < b.size(); });
  auto label = [&](const std::vector<int> &s) {
    std::string out;
    for (std::size_t p = 0; p < s.size(); ++p)
      out += (vertex_count > 10 && p ? "," : "") + std::to_string(s[p]);
    return out;
  };
  auto k = std::make_shared<FiniteSimplicialSet>(std::move(name));
  std::map<std::vector<int>, SimplexKey> keys;
  for (const auto &s : ordered) {
    std::vector<FormalSimplex> faces;
    if (s.size() > 1)
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        faces.push_back(nondegenerate(keys.at(t)));
      }
    keys[s] = k->add(label(s), static_cast<int>(s.size()) - 1, std::move(faces));
  }
  k->set_reduced_flag(vertex_count == 1);
  return k;
}

std::shared_ptr<const FiniteSimplicialSet> standard_simplex(int n) {
  std::vector<int> all(static_cast<std::size_t>(n + 1));
  for (int v = 0; v <= n; ++v)
    all[static_cast<std::size_t>(v)] = v;
  return ordered_complex(n + 1, {all}, "D" + std::to_string(n));
}

std::shared_ptr<const FiniteSimplicialSet> simplex_boundary(int n) {
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip)
        f.push_back(v);
    facets.push_back(f);
  }
  return ordered_complex(n + 1, facets, "dD" + std::to_string(n));
}

std::shared_ptr<const FiniteSimplicialSet> rp2_model() {
  auto k = std::make_shared<FiniteSimplicialSet>("RP2");
  const SimplexKey v = k->add("*", 0, {});
  const SimplexKey e = k->add("e", 1, {nondegenerate(v), nondegenerate(v)});
  k->add("f", 2, {nondegenerate(e), degenerate_vertex(v, 1), nondegenerate(e)});
  k->set_reduced_flag(true);
  return k;
}

// ---------------------------------------------------------------- quotient

namespace {

class QuotientSet : public SimplicialSet {
public:
  QuotientSet(SimplicialSetPtr k, std::set<SimplexKey> sub, SimplexKey basepoint)
      : k_(std::move(k)), sub_(std::move(sub)), base_(std::move(basepoint)) {}

  std::string name() const override { return k_->name() + "/A"; }
  bool reduced() const override {
    auto v = simplices(0);
    return v && v->size() == 1;
  }
  std::optional<std::vector<SimplexKey>> simplices(int n) const override {
    auto s = k_->simplices(n);
    if (!s)
      return s;
    std::vector<SimplexKey> out;
    for (auto &x : *s)
      if (!sub_.count(x) || x == base_)
        out.push_back(std::move(x));
    return out;
  }
  bool contains(const SimplexKey &x) const override {
    return k_->contains(x) && (!sub_.count(x) || x == base_);
  }
  FormalSimplex face(const SimplexKey &x, int i) const override {
    FormalSimplex f = k_->face(x, i);
    if (sub_.count(f.base))
      return degenerate_vertex(base_, x.dim - 1);
    return f;
  }
  std::string label(const SimplexKey &x) const override { return k_->label(x); }
  std::optional<int> top_dimension() const override { return k_->top_dimension(); }

private:
  SimplicialSetPtr k_;
  std::set<SimplexKey> sub_;
  SimplexKey base_;
};

} // namespace

SimplicialSetPtr quotient_by_subcomplex(SimplicialSetPtr k, const std::vector<SimplexKey> &sub) {
  if (sub.empty())
    return k;
  std::set<SimplexKey> s(sub.begin(), sub.end());
  for (const auto &x : s) {
    if (!k->contains(x))
      throw NotASubcomplex(k->label(x) + " is not a simplex of " + k->name());
    for (int i = 0; x.dim > 0 && i <= x.dim; ++i)
      if (!s.count(k->face(x, i).base))
        throw NotASubcomplex("face d" + std::to_string(i) + " of " + k->label(x) +
                             " is missing from the subcomplex");
  }
  const SimplexKey basepoint = *s.begin(); // keys order by dimension first
  return std::make_shared<const QuotientSet>(std::move(k), std::move(s), basepoint);
}

std::shared_ptr<const FiniteSimplicialSet> materialize(const SimplicialSet &k, int n) {
  auto out = std::make_shared<FiniteSimplicialSet>(k.name());
  std::map<SimplexKey, SimplexKey> renum;
  for (int d = 0; d <= n; ++d)
    for (const auto &x : k.simplices_or_throw(d)) {
      std::vector<FormalSimplex> faces;
      for (int i = 0; d > 0 && i <= d; ++i) {
        FormalSimplex f = k.face(x, i);
        f.base = renum.at(f.base);
        faces.push_back(std::move(f));
      }
      renum[x] = out->add(k.label(x), d, std::move(faces));
    }
  out->set_reduced_flag(k.reduced());
  return out;
}

// ------------------------------------------------------------ localization

LocalizedNerve::LocalizedNerve(SimplicialSetPtr base, std::vector<SimplexKey> edges)
    : base_(std::move(base)), edges_(std::move(edges)) {
  basepoint_ = base_->simplices_or_throw(0).at(0);
}

std::string LocalizedNerve::name() const {
  std::string out = base_->name() + "[";
  for (std::size_t e = 0; e < edges_.size(); ++e)
    out += (e ? "," : "") + base_->label(edges_[e]);
  return out + "^-1]";
}

FormalSimplex LocalizedNerve::integer_simplex(std::size_t edge,
                                              const std::vector<std::int64_t> &tuple) const {
  auto [kept, degens] = strip_units(tuple, [](std::int64_t x) { return x == 0; });
  if (kept.empty())
    return FormalSimplex{basepoint_, std::move(degens)};
  if (kept.size() == 1 && kept[0] == 1)
    return FormalSimplex{edges_.at(edge), std::move(degens)};
  SimplexKey k{static_cast<int>(kept.size()), {kIntegerMarker, static_cast<std::int64_t>(edge)}};
  k.data.insert(k.data.end(), kept.begin(), kept.end());
  return FormalSimplex{std::move(k), std::move(degens)};
}

std::vector<SimplexKey> LocalizedNerve::truncated_simplices(int n, std::int64_t radius) const {
  std::vector<SimplexKey> out;
  if (n >= 1) {
    std::vector<std::int64_t> values;
    for (std::int64_t v = -radius; v <= radius; ++v)
      if (v != 0)
        values.push_back(v);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      std::vector<std::int64_t> t;
      std::function<void()> rec = [&] {
        if (static_cast<int>(t.size()) == n) {
          const FormalSimplex x = integer_simplex(e, t);
          if (!x.degenerate() && x.base.data.size() > 0 && x.base.data[0] == kIntegerMarker)
            out.push_back(x.base);
          return;
        }
        for (std::int64_t v : values) {
          t.push_back(v);
          std::int64_t sum = 0;
          bool ok = true;
          for (std::size_t p = t.size(); p-- > 0 && ok;) {
            sum += t[p];
            ok = sum >= -radius && sum <= radius;
          }
          if (ok)
            rec();
          t.pop_back();
        }
      };
      rec();
    }
  }
  for (auto &x : base_->simplices_or_throw(n))
    out.push_back(std::move(x));
  return out;
}

std::optional<std::vector<SimplexKey>> LocalizedNerve::simplices(int n) const {
  if (n >= 1)
    return std::nullopt;
  return base_->simplices(n);
}

bool LocalizedNerve::contains(const SimplexKey &k) const {
  if (k.data.empty() || k.data[0] != kIntegerMarker)
    return base_->contains(k);
  if (k.dim < 1 || k.data.size() != static_cast<std::size_t>(k.dim) + 2 || k.data[1] < 0 ||
      static_cast<std::size_t>(k.data[1]) >= edges_.size())
    return false;
  if (std::any_of(k.data.begin() + 2, k.data.end(), [](std::int64_t x) { return x == 0; }))
    return false;
  return !(k.dim == 1 && k.data[2] == 1);
}

FormalSimplex LocalizedNerve::face(const SimplexKey &k, int i) const {
  if (k.data.empty() || k.data[0] != kIntegerMarker)
    return base_->face(k, i);
  if (!contains(k) || i < 0 || i > k.dim)
    throw InvalidInput("bad face request on the localized nerve");
  std::vector<std::int64_t> t(k.data.begin() + 2, k.data.end());
  const int n = k.dim;
  if (i == 0)
    t.erase(t.begin());
  else if (i == n)
    t.pop_back();
  else {
    t[static_cast<std::size_t>(i - 1)] += t[static_cast<std::size_t>(i)];
    t.erase(t.begin() + i);
  }
  return integer_simplex(static_cast<std::size_t>(k.data[1]), t);
}

std::string LocalizedNerve::label(const SimplexKey &k) const {
  if (k.data.empty() || k.data[0] != kIntegerMarker)
    return base_->label(k);
  std::string out = base_->label(edges_.at(static_cast<std::size_t>(k.data[1]))) + "[";
  for (std::size_t p = 2; p < k.data.size(); ++p)
    out += (p > 2 ? "," : "") + std::to_string(k.data[p]);
  return out + "]";
}

SimplicialSetPtr localized_nerve(SimplicialSetPtr k, const std::vector<SimplexKey> &w) {
  if (w.empty())
    return k;
  if (!k->reduced())
    throw InvalidInput("localized_nerve needs a reduced simplicial set");
  std::set<SimplexKey> seen;
  for (const auto &e : w) {
    if (e.dim != 1 || !k->contains(e))
      throw InvalidInput("localization set must consist of nondegenerate 1-simplices");
    if (!seen.insert(e).second)
      throw InvalidInput("edge " + k->label(e) + " listed twice");
  }
  return std::make_shared<const LocalizedNerve>(std::move(k), w);
}

// ----------------------------------------------------- fundamental monoid

MonoidPresentation fundamental_monoid(const SimplicialSet &k) {
  if (!k.reduced())
    throw NotReduced(k.name() + " has more than one vertex");
  if (const auto *loc = dynamic_cast<const LocalizedNerve *>(&k)) {
    MonoidPresentation p = fundamental_monoid(loc->base());
    const auto edges = loc->base().simplices_or_throw(1);
    for (std::size_t e = 0; e < loc->localized_edges().size(); ++e) {
      const auto &edge = loc->localized_edges()[e];
      const int g = static_cast<int>(std::find(edges.begin(), edges.end(), edge) - edges.begin());
      const int inv = static_cast<int>(p.gens.size());
      p.gens.push_back(loc->label(loc->integer_simplex(e, {-1}).base));
      p.rels.push_back({GroupWord{{g, false}, {inv, false}}, GroupWord{}});
      p.rels.push_back({GroupWord{{inv, false}, {g, false}}, GroupWord{}});
    }
    return p;
  }
  MonoidPresentation p;
  const auto edges = k.simplices_or_throw(1);
  std::map<SimplexKey, int> gen;
  for (const auto &e : edges) {
    gen[e] = static_cast<int>(p.gens.size());
    p.gens.push_back(k.label(e));
  }
  auto word = [&](const FormalSimplex &f) {
    GroupWord w;
    if (!f.degenerate())
      w.push_back({gen.at(f.base), false});
    return w;
  };
  for (const auto &s : k.simplices_or_throw(2)) {
    GroupWord rhs = word(k.face(s, 2));
    const GroupWord tail = word(k.face(s, 0));
    rhs.insert(rhs.end(), tail.begin(), tail.end());
    p.rels.push_back({word(k.face(s, 1)), rhs});
  }
  return p;
}

const char *to_string(Grouplike g) {
  switch (g) {
  case Grouplike::Yes:
    return "grouplike";
  case Grouplike::No:
    return "not grouplike";
  case Grouplike::Unknown:
    return "unknown";
  }
  return "?";
}

GrouplikeReport grouplike_test(const SimplicialSet &k, std::size_t budget) {
  GrouplikeReport rep;
  rep.fundamental_monoid = fundamental_monoid(k);
  const auto &p = rep.fundamental_monoid;
  const std::size_t gens = p.gens.size();
  if (gens == 0) {
    rep.verdict = Grouplike::Yes;
    rep.reason = "no nondegenerate edges: the fundamental monoid is trivial";
    return rep;
  }
  const bool unit_relation = std::any_of(p.rels.begin(), p.rels.end(), [](const auto &r) {
    return r.first.empty() != r.second.empty();
  });
  if (!unit_relation) {
    rep.verdict = Grouplike::No;
    rep.reason = "no relation equates a nonempty word with 1, so no edge has an inverse";
    return rep;
  }
  const PresentedDgAlgebra a = monoid_ring(p);
  const RewriteSystem r = complete(a, budget);
  auto nf_word = [&](const Word &w) -> std::optional<Word> {
    const Polynomial q = r.normal_form(Polynomial::monomial(w));
    if (q.terms().size() != 1 || q.terms().begin()->second != 1)
      return std::nullopt;
    return q.terms().begin()->first;
  };
  if (r.complete() && !r.has_nonunit_leads()) {
    const BasisResult b = basis_in_degree(a, r, 0, std::min<std::size_t>(budget, 10000));
    if (b.status == BasisResult::Status::Ok) {
      for (std::size_t g = 0; g < gens; ++g) {
        bool found = false;
        for (const auto &u : b.basis) {
          Word gu{static_cast<int>(g)}, ug = u;
          gu.insert(gu.end(), u.begin(), u.end());
          ug.push_back(static_cast<int>(g));
          if (nf_word(gu) == Word{} && nf_word(ug) == Word{}) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.verdict = Grouplike::No;
          rep.reason = "the fundamental monoid is finite of order " +
                       std::to_string(b.basis.size()) + " and " + p.gens[g] +
                       " has no two-sided inverse";
          return rep;
        }
      }
      rep.verdict = Grouplike::Yes;
      rep.reason = "the fundamental monoid is a finite group of order " +
                   std::to_string(b.basis.size());
      return rep;
    }
  }
  // Bounded search for explicit inverses; sound whether or not r is complete.
  const std::size_t max_len = 4;
  for (std::size_t g = 0; g < gens; ++g) {
    bool found = false;
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len <= max_len && !found; ++len) {
      std::vector<Word> next;
      for (const auto &w : frontier)
        for (std::size_t x = 0; x < gens && !found; ++x) {
          Word u = w;
          u.push_back(static_cast<int>(x));
          Word gu{static_cast<int>(g)}, ug = u;
          gu.insert(gu.end(), u.begin(), u.end());
          ug.push_back(static_cast<int>(g));
          found = nf_word(gu) == Word{} && nf_word(ug) == Word{};
          next.push_back(std::move(u));
        }
      frontier = std::move(next);
    }
    if (!found) {
      rep.verdict = Grouplike::Unknown;
      rep.reason = "no inverse of " + p.gens[g] + " among words of length <= " +
                   std::to_string(max_len);
      return rep;
    }
  }
  rep.verdict = Grouplike::Yes;
  rep.reason = "explicit two-sided inverses found for every edge";
  return rep;
}

// -------------------------------------------------------------------- maps

SimplicialMap nerve_map(const MonoidMap &f) {
  if (!is_homomorphism(f))
    throw NotAHomomorphism("monoid map does not respect the tables");
  auto src = nerve(f.source);
  auto dst = nerve(f.target);
  auto images = f.images;
  const int unit = f.target.identity;
  SimplicialMap out{src, dst, {}};
  out.apply = [dst, images, unit](const SimplexKey &k) {
    std::vector<int> t;
    for (auto e : k.data)
      t.push_back(images[static_cast<std::size_t>(e)]);
    auto [kept, degens] = strip_units(t, [unit](int e) { return e == unit; });
    return FormalSimplex{dst->key(kept), std::move(degens)};
  };
  return out;
}

SimplicialMap collapse_map(SimplicialSetPtr k) {
  auto pt = point();
  const SimplexKey v = pt->simplices_or_throw(0).at(0);
  return SimplicialMap{std::move(k), pt, [v](const SimplexKey &x) { return degenerate_vertex(v, x.dim); }};
}

SimplicialMap identity_map(SimplicialSetPtr k) {
  return SimplicialMap{k, k, [](const SimplexKey &x) { return nondegenerate(x); }};
}

} // namespace monoloc
