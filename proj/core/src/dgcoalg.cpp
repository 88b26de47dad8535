#include "monoloc/dgcoalg.hpp"

#include "monoloc/error.hpp"

#include <algorithm>
#include <sstream>

namespace monoloc {

void add_to(SparseVec &v, std::size_t i, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = v.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      v.erase(it);
  }
}

void add_to(TensorVec &v, const std::tuple<int, std::size_t, std::size_t> &k, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = v.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      v.erase(it);
  }
}

namespace {

template <class K>
void add_any(std::map<K, Integer> &v, const K &k, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = v.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      v.erase(it);
  }
}

Integer sign(int e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

} // namespace

SparseVec DgCoalgebraWindow::d(int n, std::size_t i) const {
  SparseVec out;
  if (n <= 0 || n > hi())
    return out;
  const IntMatrix b = complex.boundary(n);
  for (std::size_t r = 0; r < b.rows(); ++r)
    add_to(out, r, b(r, i));
  return out;
}

std::optional<std::size_t> DgCoalgebraWindow::index_of(int n, const std::string &label) const {
  if (n < 0 || static_cast<std::size_t>(n) >= labels.size())
    return std::nullopt;
  const auto &l = labels[static_cast<std::size_t>(n)];
  auto it = std::find(l.begin(), l.end(), label);
  if (it == l.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - l.begin());
}

std::optional<std::size_t> DgCoalgebraWindow::index_of(const SimplexKey &k) const {
  if (k.dim < 0 || static_cast<std::size_t>(k.dim) >= simplices.size())
    return std::nullopt;
  const auto &l = simplices[static_cast<std::size_t>(k.dim)];
  auto it = std::find(l.begin(), l.end(), k);
  if (it == l.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - l.begin());
}

DgCoalgebraWindow DgCoalgebraWindow::truncated(int top) const {
  if (top > hi())
    throw WindowTooSmall("cannot extend a window from " + std::to_string(hi()) + " to " +
                         std::to_string(top));
  DgCoalgebraWindow out = *this;
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> ds;
  for (int n = 0; n <= top; ++n)
    ranks.push_back(rank(n));
  for (int n = 1; n <= top; ++n)
    ds.push_back(complex.boundary(n));
  out.complex = ChainComplexWindow(0, top, std::move(ranks), std::move(ds), true);
  const auto keep = static_cast<std::size_t>(top + 1);
  out.labels.resize(std::min(out.labels.size(), keep));
  out.coproduct.resize(std::min(out.coproduct.size(), keep));
  if (!out.simplices.empty())
    out.simplices.resize(std::min(out.simplices.size(), keep));
  return out;
}

IntMatrix DgCoalgebraWindow::coproduct_matrix(int n) const {
  std::vector<std::tuple<int, std::size_t, std::size_t>> rows;
  for (int p = 0; p <= n; ++p)
    for (std::size_t i = 0; i < rank(p); ++i)
      for (std::size_t j = 0; j < rank(n - p); ++j)
        rows.emplace_back(p, i, j);
  IntMatrix m(rows.size(), rank(n));
  for (std::size_t c = 0; c < rank(n); ++c)
    for (const auto &[key, coeff] : coproduct[static_cast<std::size_t>(n)][c]) {
      const auto r = std::lower_bound(rows.begin(), rows.end(), key) - rows.begin();
      m(static_cast<std::size_t>(r), c) = coeff;
    }
  return m;
}

// ------------------------------------------------------------------ chains

DgCoalgebraWindow chains(const SimplicialSet &k, int hi) {
  DgCoalgebraWindow c;
  std::vector<std::map<SimplexKey, std::size_t>> index;
  for (int n = 0; n <= hi; ++n) {
    auto xs = k.simplices_or_throw(n);
    std::map<SimplexKey, std::size_t> idx;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      idx[xs[i]] = i;
      labels.push_back(k.label(xs[i]));
    }
    index.push_back(std::move(idx));
    c.labels.push_back(std::move(labels));
    c.simplices.push_back(std::move(xs));
  }
  auto lookup = [&](const FormalSimplex &f) -> std::optional<std::size_t> {
    if (f.degenerate())
      return std::nullopt;
    return index.at(static_cast<std::size_t>(f.base.dim)).at(f.base);
  };

  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> ds;
  for (int n = 0; n <= hi; ++n)
    ranks.push_back(c.simplices[static_cast<std::size_t>(n)].size());
  for (int n = 1; n <= hi; ++n) {
    IntMatrix d(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
    const auto &xs = c.simplices[static_cast<std::size_t>(n)];
    for (std::size_t j = 0; j < xs.size(); ++j)
      for (int i = 0; i <= n; ++i)
        if (auto r = lookup(k.face(xs[j], i)))
          d(*r, j) += sign(i);
    ds.push_back(std::move(d));
  }
  c.complex = ChainComplexWindow(0, hi, std::move(ranks), std::move(ds), true);

  for (int n = 0; n <= hi; ++n) {
    std::vector<TensorVec> level;
    for (const auto &x : c.simplices[static_cast<std::size_t>(n)]) {
      TensorVec t;
      const FormalSimplex fx = nondegenerate(x);
      for (int p = 0; p <= n; ++p) {
        FormalSimplex front = fx;
        for (int i = n; i > p; --i)
          front = face(k, front, i);
        FormalSimplex back = fx;
        for (int i = 0; i < p; ++i)
          back = face(k, back, 0);
        auto a = lookup(front), b = lookup(back);
        if (a && b)
          add_to(t, {p, *a, *b}, 1);
      }
      level.push_back(std::move(t));
    }
    c.coproduct.push_back(std::move(level));
  }
  c.counit.assign(c.rank(0), Integer(1));
  if (c.rank(0) > 0)
    c.coaugmentation = 0;
  return c;
}

// -------------------------------------------------------------- law checks

namespace {

using Triple = std::tuple<int, std::size_t, int, std::size_t, std::size_t>;
using TensorWord = std::vector<std::pair<int, std::size_t>>;

std::string basis_name(const DgCoalgebraWindow &c, int n, std::size_t i) {
  if (static_cast<std::size_t>(n) < c.labels.size() && i < c.labels[static_cast<std::size_t>(n)].size())
    return c.labels[static_cast<std::size_t>(n)][i];
  return "e" + std::to_string(n) + "_" + std::to_string(i);
}

} // namespace

ValidationReport check_coalgebra(const DgCoalgebraWindow &c) {
  ValidationReport rep;
  auto issue = [&](std::string m) { rep.issues.push_back({ValidationIssue::Kind::Other, std::move(m)}); };
  const int hi = c.hi();
  if (c.coproduct.size() != static_cast<std::size_t>(hi + 1) || c.counit.size() != c.rank(0)) {
    rep.issues.push_back({ValidationIssue::Kind::MalformedTable, "coproduct or counit has the wrong shape"});
    return rep;
  }
  for (int n = 0; n <= hi; ++n) {
    for (std::size_t x = 0; x < c.rank(n); ++x) {
      const TensorVec &dx = c.coproduct[static_cast<std::size_t>(n)][x];
      const std::string name = basis_name(c, n, x);
      // coassociativity
      std::map<Triple, Integer> l, r;
      for (const auto &[key, a] : dx) {
        const auto [p, i, j] = key;
        for (const auto &[k2, b] : c.coproduct[static_cast<std::size_t>(p)][i]) {
          const auto [q, u, v] = k2;
          add_any(l, Triple{q, u, p - q, v, j}, a * b);
        }
        for (const auto &[k2, b] : c.coproduct[static_cast<std::size_t>(n - p)][j]) {
          const auto [q, u, v] = k2;
          add_any(r, Triple{p, i, q, u, v}, a * b);
        }
      }
      if (l != r)
        issue("coassociativity fails on " + name);
      // counit laws
      SparseVec left, right;
      for (const auto &[key, a] : dx) {
        const auto [p, i, j] = key;
        if (p == 0)
          add_to(left, j, a * c.counit[i]);
        if (p == n)
          add_to(right, i, a * c.counit[j]);
      }
      const SparseVec self{{x, Integer(1)}};
      if (left != self || right != self)
        issue("counit law fails on " + name);
      // coderivation
      if (n >= 1) {
        TensorVec lhs, rhs;
        for (const auto &[k, a] : c.d(n, x))
          for (const auto &[key, b] : c.coproduct[static_cast<std::size_t>(n - 1)][k])
            add_to(lhs, key, a * b);
        for (const auto &[key, a] : dx) {
          const auto [p, i, j] = key;
          for (const auto &[k, b] : c.d(p, i))
            add_to(rhs, {p - 1, k, j}, a * b);
          for (const auto &[k, b] : c.d(n - p, j))
            add_to(rhs, {p, i, k}, sign(p) * a * b);
        }
        if (lhs != rhs)
          issue("d is not a coderivation on " + name);
      }
    }
  }
  // conilpotence
  if (c.coaugmentation && c.rank(0) == 1) {
    const std::size_t eta = *c.coaugmentation;
    auto reduced = [&](int n, std::size_t x) {
      std::vector<std::pair<TensorWord, Integer>> out;
      for (const auto &[key, a] : c.coproduct[static_cast<std::size_t>(n)][x]) {
        const auto [p, i, j] = key;
        if ((p == n && j == eta) || (p == 0 && i == eta))
          continue;
        out.push_back({TensorWord{{p, i}, {n - p, j}}, a});
      }
      return out;
    };
    for (int n = 1; n <= hi; ++n)
      for (std::size_t x = 0; x < c.rank(n); ++x) {
        std::map<TensorWord, Integer> cur{{TensorWord{{n, x}}, Integer(1)}};
        for (int step = 0; step < n && !cur.empty(); ++step) {
          std::map<TensorWord, Integer> next;
          for (const auto &[w, a] : cur) {
            const auto [deg, last] = w.back();
            for (auto &[tail, b] : reduced(deg, last)) {
              TensorWord nw(w.begin(), w.end() - 1);
              nw.insert(nw.end(), tail.begin(), tail.end());
              add_any(next, nw, a * b);
            }
          }
          cur = std::move(next);
        }
        if (!cur.empty())
          issue("the " + std::to_string(n) + "-fold reduced coproduct does not vanish on " +
                basis_name(c, n, x));
      }
  }
  return rep;
}

ValidationReport check_coalgebra_map(const DgCoalgebraWindow &c, const DgCoalgebraWindow &d,
                                     const CoalgebraMap &f) {
  ValidationReport rep;
  auto issue = [&](std::string m) { rep.issues.push_back({ValidationIssue::Kind::Other, std::move(m)}); };
  const int hi = std::min(c.hi(), d.hi());
  if (f.components.size() < static_cast<std::size_t>(hi + 1)) {
    issue("map has too few components");
    return rep;
  }
  auto col = [&](int n, std::size_t j) {
    SparseVec v;
    const IntMatrix &m = f.components[static_cast<std::size_t>(n)];
    for (std::size_t r = 0; r < m.rows(); ++r)
      add_to(v, r, m(r, j));
    return v;
  };
  for (int n = 0; n <= hi; ++n) {
    const IntMatrix &m = f.components[static_cast<std::size_t>(n)];
    if (m.rows() != d.rank(n) || m.cols() != c.rank(n)) {
      issue("component " + std::to_string(n) + " has the wrong shape");
      return rep;
    }
  }
  for (int n = 1; n <= hi; ++n)
    if (!(d.complex.boundary(n) * f.components[static_cast<std::size_t>(n)] ==
          f.components[static_cast<std::size_t>(n - 1)] * c.complex.boundary(n)))
      issue("f does not commute with d in degree " + std::to_string(n));
  for (std::size_t j = 0; j < c.rank(0); ++j) {
    Integer e = 0;
    for (const auto &[r, a] : col(0, j))
      e += a * d.counit[r];
    if (e != c.counit[j])
      issue("f does not preserve the counit on " + basis_name(c, 0, j));
  }
  for (int n = 0; n <= hi; ++n)
    for (std::size_t x = 0; x < c.rank(n); ++x) {
      TensorVec lhs, rhs;
      for (const auto &[r, a] : col(n, x))
        for (const auto &[key, b] : d.coproduct[static_cast<std::size_t>(n)][r])
          add_to(lhs, key, a * b);
      for (const auto &[key, a] : c.coproduct[static_cast<std::size_t>(n)][x]) {
        const auto [p, i, j] = key;
        for (const auto &[u, b] : col(p, i))
          for (const auto &[v, e] : col(n - p, j))
            add_to(rhs, {p, u, v}, a * b * e);
      }
      if (lhs != rhs)
        issue("f does not commute with the coproduct on " + basis_name(c, n, x));
    }
  return rep;
}

CoalgebraMap chains_map(const SimplicialMap &f, const DgCoalgebraWindow &c,
                        const DgCoalgebraWindow &d) {
  const int hi = std::min(c.hi(), d.hi());
  CoalgebraMap out;
  for (int n = 0; n <= hi; ++n) {
    IntMatrix m(d.rank(n), c.rank(n));
    for (std::size_t j = 0; j < c.rank(n); ++j) {
      const FormalSimplex y = f.apply(c.simplices.at(static_cast<std::size_t>(n)).at(j));
      if (y.degenerate())
        continue;
      const auto r = d.index_of(y.base);
      if (!r)
        throw InvalidInput("image simplex " + f.target->label(y.base) + " is not in the target window");
      m(*r, j) = 1;
    }
    out.components.push_back(std::move(m));
  }
  return out;
}

// -------------------------------------------------------------- filtrations

int AdmissibleFiltration::max_level() const {
  int m = 0;
  for (const auto &l : level)
    for (int x : l)
      m = std::max(m, x);
  return m;
}

ValidationReport check_admissible(const DgCoalgebraWindow &c, const AdmissibleFiltration &f) {
  ValidationReport rep;
  auto issue = [&](std::string m) { rep.issues.push_back({ValidationIssue::Kind::Other, std::move(m)}); };
  const int hi = c.hi();
  if (f.level.size() < static_cast<std::size_t>(hi + 1)) {
    issue("filtration does not cover the window");
    return rep;
  }
  auto lv = [&](int n, std::size_t i) { return f.level[static_cast<std::size_t>(n)].at(i); };
  for (int n = 0; n <= hi; ++n) {
    if (f.level[static_cast<std::size_t>(n)].size() != c.rank(n)) {
      issue("filtration has the wrong size in degree " + std::to_string(n));
      return rep;
    }
    for (std::size_t i = 0; i < c.rank(n); ++i) {
      const bool coaug = n == 0 && c.coaugmentation == i;
      if (lv(n, i) < 0)
        issue("negative level on " + basis_name(c, n, i));
      if ((lv(n, i) == 0) != coaug)
        issue("level 0 must be the coaugmentation image, " + basis_name(c, n, i) + " has level " +
              std::to_string(lv(n, i)));
    }
  }
  for (int n = 0; n <= hi; ++n)
    for (std::size_t x = 0; x < c.rank(n); ++x) {
      for (const auto &[r, a] : c.d(n, x))
        if (lv(n - 1, r) > lv(n, x))
          issue("d raises the level of " + basis_name(c, n, x));
      for (const auto &[key, a] : c.coproduct[static_cast<std::size_t>(n)][x]) {
        const auto [p, i, j] = key;
        if (lv(p, i) + lv(n - p, j) > lv(n, x))
          issue("coproduct term " + basis_name(c, p, i) + " (x) " + basis_name(c, n - p, j) +
                " of " + basis_name(c, n, x) + " exceeds its level");
      }
    }
  return rep;
}

AdmissibleFiltration skeletal_filtration(const DgCoalgebraWindow &c) {
  if (!c.coaugmentation)
    throw NotCoaugmented("the coalgebra has no coaugmentation");
  AdmissibleFiltration f;
  for (int n = 0; n <= c.hi(); ++n) {
    std::vector<int> l(c.rank(n), n);
    if (n == 0)
      l.at(*c.coaugmentation) = 0;
    f.level.push_back(std::move(l));
  }
  const auto rep = check_admissible(c, f);
  if (!rep.ok())
    throw FiltrationNotRespected(rep.to_string());
  return f;
}

std::string QuasiIsoVerdict::to_string() const {
  if (passed())
    return "QuasiIso (homology compared through degree " + std::to_string(checked_through) + ")";
  std::ostringstream os;
  os << "Fails(level " << level << ", cone degree " << cone_degree << ")";
  if (!detail.empty())
    os << ": " << detail;
  return os.str();
}

QuasiIsoVerdict filtered_quasi_iso_window(const DgCoalgebraWindow &c, const DgCoalgebraWindow &d,
                                          const CoalgebraMap &f, const AdmissibleFiltration &fc,
                                          const AdmissibleFiltration &fd, int hi) {
  const int top = hi + 1;
  if (c.hi() < top || d.hi() < top)
    throw WindowTooSmall("both coalgebras must reach degree " + std::to_string(top));
  if (f.components.size() < static_cast<std::size_t>(top + 1))
    throw WindowTooSmall("the map must reach degree " + std::to_string(top));
  for (int n = 0; n <= top; ++n) {
    const IntMatrix &m = f.components[static_cast<std::size_t>(n)];
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(r, j) != 0 && fd.level[static_cast<std::size_t>(n)].at(r) >
                                fc.level[static_cast<std::size_t>(n)].at(j))
          throw FiltrationNotRespected("f raises the level of " + basis_name(c, n, j));
  }
  const int levels = std::max(fc.max_level(), fd.max_level());
  QuasiIsoVerdict v;
  v.checked_through = hi;
  for (int p = 0; p <= levels; ++p) {
    // basis of Gr_p in each degree
    std::vector<std::vector<std::size_t>> bc, bd;
    for (int n = 0; n <= top; ++n) {
      std::vector<std::size_t> x, y;
      for (std::size_t i = 0; i < c.rank(n); ++i)
        if (fc.level[static_cast<std::size_t>(n)][i] == p)
          x.push_back(i);
      for (std::size_t i = 0; i < d.rank(n); ++i)
        if (fd.level[static_cast<std::size_t>(n)][i] == p)
          y.push_back(i);
      bc.push_back(std::move(x));
      bd.push_back(std::move(y));
    }
    auto restrict = [&](const IntMatrix &m, const std::vector<std::size_t> &rows,
                        const std::vector<std::size_t> &cols) {
      IntMatrix out(rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
          out(r, j) = m(rows[r], cols[j]);
      return out;
    };
    auto gr = [&](const DgCoalgebraWindow &w, const std::vector<std::vector<std::size_t>> &b) {
      std::vector<std::size_t> ranks;
      std::vector<IntMatrix> ds;
      for (int n = 0; n <= top; ++n)
        ranks.push_back(b[static_cast<std::size_t>(n)].size());
      for (int n = 1; n <= top; ++n)
        ds.push_back(restrict(w.complex.boundary(n), b[static_cast<std::size_t>(n - 1)],
                              b[static_cast<std::size_t>(n)]));
      return ChainComplexWindow(0, top, std::move(ranks), std::move(ds), true);
    };
    const ChainComplexWindow x = gr(c, bc), y = gr(d, bd);
    std::vector<IntMatrix> fp;
    for (int n = 0; n <= top; ++n)
      fp.push_back(restrict(f.components[static_cast<std::size_t>(n)], bd[static_cast<std::size_t>(n)],
                            bc[static_cast<std::size_t>(n)]));
    if (!is_chain_map(x, y, fp))
      throw FiltrationNotRespected("Gr_" + std::to_string(p) + " f is not a chain map");
    if (auto bad = first_cone_obstruction(x, y, fp)) {
      v.kind = QuasiIsoVerdict::Kind::Fails;
      v.level = p;
      v.cone_degree = *bad;
      v.detail = "H_" + std::to_string(*bad) + " of the cone of Gr_" + std::to_string(p) +
                 " f is " + homology_window(mapping_cone(x, y, fp)).at(*bad).to_string();
      return v;
    }
  }
  return v;
}

} // namespace monoloc
