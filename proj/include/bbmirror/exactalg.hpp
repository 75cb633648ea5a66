#pragma once

// Exact integer / rational linear algebra on GMP numbers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bbm {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec make_vec(std::initializer_list<long> xs);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& s);
bool is_zero(const IntVec& a);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(IntVec a);
/// Clears denominators and divides by the content, keeping the direction.
IntVec primitive_direction(const RatVec& a);
RatVec to_rat(const IntVec& a);
std::optional<IntVec> to_int(const RatVec& a);
std::string to_string(const IntVec& a);
std::string to_string(const RatVec& a);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix from_cols(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  std::vector<IntVec> row_list() const;
  IntMatrix transpose() const;
  IntVec apply(const IntVec& x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVec data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Bareiss fraction-free determinant.
Int determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank(const std::vector<IntVec>& rows, std::size_t cols);

struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: H = W * A, W unimodular, H upper echelon with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped from H.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion_orders[j],
/// presented as a quotient of Z^n by `projection`.
struct AbelianPresentation {
  std::size_t free_rank = 0;
  IntVec torsion_orders;  // d_1 | d_2 | ... each > 1
  /// (free_rank + #torsion) x n. Torsion rows are read modulo their order.
  IntMatrix projection;

  /// Image of an element of Z^n, torsion coordinates reduced into [0, d_j).
  IntVec project(const IntVec& x) const;
  friend bool operator==(const AbelianPresentation&, const AbelianPresentation&) = default;
};

/// Presentation of Z^rows / im(A).
AbelianPresentation cokernel(const IntMatrix& a);

/// Integer x with A x = b, if any.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

/// Basis (as columns of the returned matrix) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis of the rational kernel of A in reduced form, scaled to primitive integer vectors.
std::vector<IntVec> rational_kernel(const IntMatrix& a);

/// Rational solution of A x = b (any one), or nullopt.
std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);

/// Reduced row echelon form over Q. Returns the nonzero rows and fills `pivots`.
std::vector<RatVec> rref(std::vector<RatVec> rows, std::size_t cols, std::vector<std::size_t>* pivots);

}  // namespace bbm
