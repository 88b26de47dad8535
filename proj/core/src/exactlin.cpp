#include "monoloc/exactlin.hpp"

#include "monoloc/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace monoloc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw InvalidInput("ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_entries(std::size_t rows, std::size_t cols,
                                  std::vector<Integer> entries) {
  if (entries.size() != rows * cols)
    throw InvalidInput("matrix entry count " + std::to_string(entries.size()) +
                       " != " + std::to_string(rows) + "x" + std::to_string(cols));
  IntMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(entries);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer &x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0)
        return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols_ != b.rows_)
    throw InvalidInput("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0)
          c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidInput("matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i)
    c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix &a) {
  IntMatrix c = a;
  for (auto &x : c.data_)
    x = -x;
  return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &k) {
  if (k == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0)
      (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &k) {
  if (k == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0)
      (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix &m) {
  if (m.rows() != m.cols())
    throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Shared elimination loop; transforms are only updated when requested.
class SnfEngine {
public:
  SnfEngine(const IntMatrix &m, bool track)
      : a_(m), track_(track), rows_(m.rows()), cols_(m.cols()) {
    if (track_) {
      u_ = IntMatrix::identity(rows_);
      v_ = IntMatrix::identity(cols_);
    }
  }

  void run() {
    const std::size_t diag = std::min(rows_, cols_);
    for (std::size_t t = 0; t < diag; ++t) {
      if (!settle_pivot(t))
        break;
    }
  }

  std::vector<Integer> divisors() const {
    std::vector<Integer> d;
    const std::size_t diag = std::min(rows_, cols_);
    d.reserve(diag);
    for (std::size_t i = 0; i < diag; ++i)
      d.push_back(a_(i, i));
    return d;
  }

  IntMatrix &u() { return u_; }
  IntMatrix &v() { return v_; }

private:
  void row_swap(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    if (track_)
      u_.swap_rows(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    if (track_)
      v_.swap_cols(i, j);
  }
  void row_add(std::size_t dst, std::size_t src, const Integer &k) {
    a_.add_row_multiple(dst, src, k);
    if (track_)
      u_.add_row_multiple(dst, src, k);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer &k) {
    a_.add_col_multiple(dst, src, k);
    if (track_)
      v_.add_col_multiple(dst, src, k);
  }

  // Moves the least nonzero |entry| of the block (t.., t..) to (t, t).
  bool bring_min_to(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        const Integer &x = a_(i, j);
        if (x == 0)
          continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = x;
          bi = i;
          bj = j;
          found = true;
          if (abs(best) == 1)
            goto done;
        }
      }
  done:
    if (!found)
      return false;
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  bool settle_pivot(std::size_t t) {
    if (!bring_min_to(t))
      return false;
    for (;;) {
      bool clean = true;
      const Integer p = a_(t, t);
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_(i, t) == 0)
          continue;
        Integer q = a_(i, t) / p;
        row_add(i, t, -q);
        if (a_(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_(t, j) == 0)
          continue;
        Integer q = a_(t, j) / p;
        col_add(j, t, -q);
        if (a_(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; re-pivot on it.
        bring_min_to(t);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows_ && divisible; ++i)
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (a_(i, j) % p != 0) {
            row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible)
        break;
    }
    if (a_(t, t) < 0) {
      a_.negate_row(t);
      if (track_)
        u_.negate_row(t);
    }
    return true;
  }

  IntMatrix a_;
  IntMatrix u_, v_;
  bool track_;
  std::size_t rows_, cols_;
};

} // namespace

SnfResult smith_normal_form(const IntMatrix &m) {
  SnfEngine e(m, true);
  e.run();
  return SnfResult{e.divisors(), std::move(e.u()), std::move(e.v())};
}

std::vector<Integer> smith_divisors(const IntMatrix &m) {
  SnfEngine e(m, false);
  e.run();
  return e.divisors();
}

std::size_t matrix_rank(const IntMatrix &m) {
  auto d = smith_divisors(m);
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [](const Integer &x) { return x != 0; }));
}

ChainComplexWindow::ChainComplexWindow(int lo, int hi, std::vector<std::size_t> ranks,
                                       std::vector<IntMatrix> boundaries,
                                       bool bounded_below)
    : lo_(lo), hi_(hi), bounded_below_(bounded_below), ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)) {
  if (hi_ <= lo_)
    throw WindowTooSmall("window " + std::to_string(lo_) + ".." + std::to_string(hi_));
  const auto width = static_cast<std::size_t>(hi_ - lo_);
  if (ranks_.size() != width + 1)
    throw NotAComplex("expected " + std::to_string(width + 1) + " ranks");
  if (boundaries_.size() != width)
    throw NotAComplex("expected " + std::to_string(width) + " boundary matrices");
  for (int n = lo_ + 1; n <= hi_; ++n) {
    const IntMatrix &d = boundaries_[static_cast<std::size_t>(n - lo_ - 1)];
    if (d.rows() != rank(n - 1) || d.cols() != rank(n))
      throw NotAComplex("d_" + std::to_string(n) + " has shape " +
                        std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
  }
  for (int n = lo_ + 2; n <= hi_; ++n)
    if (!(boundary(n - 1) * boundary(n)).is_zero())
      throw NotAComplex("d_" + std::to_string(n - 1) + " * d_" + std::to_string(n) +
                        " != 0");
}

std::size_t ChainComplexWindow::rank(int n) const {
  if (n < lo_ || n > hi_)
    return 0;
  return ranks_[static_cast<std::size_t>(n - lo_)];
}

IntMatrix ChainComplexWindow::boundary(int n) const {
  if (has_boundary(n))
    return boundaries_[static_cast<std::size_t>(n - lo_ - 1)];
  return IntMatrix(rank(n - 1), rank(n));
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1)
      os << "^" << free_rank;
    first = false;
  }
  for (const auto &t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

std::vector<int> HomologyTable::exact_degrees() const {
  std::vector<int> out;
  for (const auto &[n, g] : entries)
    if (g.exact)
      out.push_back(n);
  return out;
}

std::string HomologyTable::to_string() const {
  std::ostringstream os;
  for (const auto &[n, g] : entries)
    os << "H_" << n << " = " << g.to_string() << (g.exact ? "" : " (partial)") << '\n';
  return os.str();
}

HomologyTable homology_window(const ChainComplexWindow &c) {
  HomologyTable table;
  // Ranks and divisors of each available boundary, computed once.
  std::map<int, std::vector<Integer>> divs;
  for (int n = c.lo() + 1; n <= c.hi(); ++n)
    divs[n] = smith_divisors(c.boundary(n));
  auto rank_of = [&](int n) -> std::size_t {
    auto it = divs.find(n);
    if (it == divs.end())
      return 0;
    return static_cast<std::size_t>(std::count_if(
        it->second.begin(), it->second.end(), [](const Integer &x) { return x != 0; }));
  };
  for (int n = c.lo(); n <= c.hi(); ++n) {
    HomologyGroup g;
    g.free_rank = c.rank(n) - rank_of(n) - rank_of(n + 1);
    if (auto it = divs.find(n + 1); it != divs.end())
      for (const auto &d : it->second)
        if (d > 1)
          g.torsion.push_back(d);
    std::sort(g.torsion.begin(), g.torsion.end());
    g.exact = (n < c.hi()) && (n > c.lo() || c.bounded_below());
    table.entries[n] = std::move(g);
  }
  return table;
}

namespace {

void check_map_shapes(const ChainComplexWindow &x, const ChainComplexWindow &y,
                      const std::vector<IntMatrix> &f) {
  if (x.lo() != y.lo() || x.hi() != y.hi())
    throw InvalidInput("chain map between windows of different extent");
  if (f.size() != static_cast<std::size_t>(x.hi() - x.lo() + 1))
    throw InvalidInput("chain map has wrong number of components");
  for (int n = x.lo(); n <= x.hi(); ++n) {
    const IntMatrix &fn = f[static_cast<std::size_t>(n - x.lo())];
    if (fn.rows() != y.rank(n) || fn.cols() != x.rank(n))
      throw InvalidInput("chain map component " + std::to_string(n) + " has wrong shape");
  }
}

} // namespace

bool is_chain_map(const ChainComplexWindow &x, const ChainComplexWindow &y,
                  const std::vector<IntMatrix> &f) {
  check_map_shapes(x, y, f);
  for (int n = x.lo() + 1; n <= x.hi(); ++n) {
    const IntMatrix &fn = f[static_cast<std::size_t>(n - x.lo())];
    const IntMatrix &fm = f[static_cast<std::size_t>(n - 1 - x.lo())];
    if (!(y.boundary(n) * fn == fm * x.boundary(n)))
      return false;
  }
  return true;
}

ChainComplexWindow mapping_cone(const ChainComplexWindow &x, const ChainComplexWindow &y,
                                const std::vector<IntMatrix> &f) {
  check_map_shapes(x, y, f);
  const int lo = x.lo(), hi = x.hi();
  auto fx = [&](int n) { return f[static_cast<std::size_t>(n - lo)]; };
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n)
    ranks.push_back(x.rank(n - 1) + y.rank(n));
  std::vector<IntMatrix> ds;
  for (int n = lo + 1; n <= hi; ++n) {
    // source X_{n-1} + Y_n, target X_{n-2} + Y_{n-1}
    const std::size_t sx = x.rank(n - 1), sy = y.rank(n);
    const std::size_t tx = x.rank(n - 2), ty = y.rank(n - 1);
    IntMatrix d(tx + ty, sx + sy);
    if (n - 1 > lo && n - 1 <= hi) {
      IntMatrix dx = x.boundary(n - 1);
      for (std::size_t i = 0; i < tx; ++i)
        for (std::size_t j = 0; j < sx; ++j)
          d(i, j) = -dx(i, j);
    }
    IntMatrix fn = fx(n - 1);
    for (std::size_t i = 0; i < ty; ++i)
      for (std::size_t j = 0; j < sx; ++j)
        d(tx + i, j) = fn(i, j);
    IntMatrix dy = y.boundary(n);
    for (std::size_t i = 0; i < ty; ++i)
      for (std::size_t j = 0; j < sy; ++j)
        d(tx + i, sx + j) = dy(i, j);
    ds.push_back(std::move(d));
  }
  return ChainComplexWindow(lo, hi, std::move(ranks), std::move(ds),
                            x.bounded_below() && y.bounded_below());
}

std::optional<int> first_cone_obstruction(const ChainComplexWindow &x,
                                          const ChainComplexWindow &y,
                                          const std::vector<IntMatrix> &f) {
  const auto cone = mapping_cone(x, y, f);
  const auto h = homology_window(cone);
  for (const auto &[n, g] : h.entries)
    if (g.exact && !g.is_zero())
      return n;
  return std::nullopt;
}

} // namespace monoloc
