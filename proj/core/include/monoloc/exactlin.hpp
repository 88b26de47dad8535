#pragma once
// Exact integer linear algebra: dense matrices over Z, Smith normal form and
// homology of bounded windows of chain complexes.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monoloc {

using Integer = mpz_class;

/// Dense row-major matrix with arbitrary-precision entries.
///
/// Boundary maps follow the column convention: column j is the image of the
/// j-th source basis element, so d_n has shape rank(n-1) x rank(n).
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_entries(std::size_t rows, std::size_t cols,
                                std::vector<Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Integer> &entries() const { return data_; }

  Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_diagonal() const;
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
  friend IntMatrix operator-(const IntMatrix &a);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &k);
  void negate_row(std::size_t r);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix &m);

struct SnfResult {
  std::vector<Integer> d; ///< min(rows, cols) nonnegative divisors, d[i] | d[i+1]
  IntMatrix u;            ///< unimodular, rows x rows
  IntMatrix v;            ///< unimodular, cols x cols
};

/// Smith normal form with recorded transforms: u * m * v == diag(d).
///
/// Pivots are chosen as the nonzero entry of least absolute value in the
/// remaining block. Zero divisors trail the nonzero ones.
SnfResult smith_normal_form(const IntMatrix &m);

/// Same divisors as smith_normal_form without tracking transforms.
std::vector<Integer> smith_divisors(const IntMatrix &m);

std::size_t matrix_rank(const IntMatrix &m);

/// A finite window [lo, hi] of a chain complex of free Z-modules.
///
/// d_n is stored for lo < n <= hi. When bounded_below is set the complex is
/// known to vanish below lo, so degree lo is computed exactly.
class ChainComplexWindow {
public:
  ChainComplexWindow() = default;
  /// boundaries[k] is d_{lo+k+1}. Throws WindowTooSmall when hi <= lo and
  /// NotAComplex on shape mismatch or d*d != 0.
  ChainComplexWindow(int lo, int hi, std::vector<std::size_t> ranks,
                     std::vector<IntMatrix> boundaries, bool bounded_below = true);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool bounded_below() const { return bounded_below_; }
  std::size_t rank(int n) const;
  /// d_n : C_n -> C_{n-1}; a zero matrix of the right shape when unknown.
  IntMatrix boundary(int n) const;
  bool has_boundary(int n) const { return n > lo_ && n <= hi_; }

  friend bool operator==(const ChainComplexWindow &, const ChainComplexWindow &) = default;

private:
  int lo_ = 0;
  int hi_ = 0;
  bool bounded_below_ = true;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion; ///< divisors >= 2, each dividing the next
  bool exact = true;            ///< false at window edges: a truncation artifact is possible

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// Isomorphism type comparison, ignoring the exactness flag.
  bool isomorphic(const HomologyGroup &o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string to_string() const;
  friend bool operator==(const HomologyGroup &, const HomologyGroup &) = default;
};

struct HomologyTable {
  std::map<int, HomologyGroup> entries;

  const HomologyGroup &at(int n) const { return entries.at(n); }
  std::vector<int> exact_degrees() const;
  std::string to_string() const;
  friend bool operator==(const HomologyTable &, const HomologyTable &) = default;
};

HomologyTable homology_window(const ChainComplexWindow &c);

/// Mapping cone of f : X -> Y over the common window, cone_n = X_{n-1} + Y_n
/// with d(x, y) = (-dx, f x + dy). f[k] is the component in degree lo+k.
ChainComplexWindow mapping_cone(const ChainComplexWindow &x,
                                const ChainComplexWindow &y,
                                const std::vector<IntMatrix> &f);

/// True when f commutes with the differentials on the whole window.
bool is_chain_map(const ChainComplexWindow &x, const ChainComplexWindow &y,
                  const std::vector<IntMatrix> &f);

/// First exact degree where the mapping cone has nonzero homology, or
/// nullopt when the cone is acyclic on every exact degree (f induces an
/// isomorphism on homology up to two degrees below the window top).
std::optional<int> first_cone_obstruction(const ChainComplexWindow &x,
                                          const ChainComplexWindow &y,
                                          const std::vector<IntMatrix> &f);

} // namespace monoloc
