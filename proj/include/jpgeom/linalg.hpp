#pragma once
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpgeom/scalar.hpp"

namespace jpgeom {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec vec_zero(const FieldSpec& f, std::size_t n);
std::string vec_str(const Vec& a);

// Dense matrix over one field; row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  std::string str() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Reduced row echelon form and its rank. Pivot choice is the first nonzero
// entry scanning down each column, so the result is deterministic.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

// Some x with a*x = b when consistent; free variables are set to zero, so the
// witness is the pivot-variable particular solution.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Vec> solve_vec(const Matrix& a, const Vec& b);

// Rows span the right kernel {x : a*x = 0}, ordered by free column.
Matrix kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

// A subspace in canonical form: basis rows are the RREF of any spanning set,
// so structural equality is subspace equality.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);
  static Subspace span(const Matrix& rows);
  static Subspace span_vecs(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& vs);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;  // Zassenhaus
  bool contains_vector(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool is_complement(const Subspace& o) const;

  // Coordinates of v in the basis rows; nullopt when v is outside.
  std::optional<Vec> coordinates_of(const Vec& v) const;
  Vec from_coordinates(const Vec& c) const;

  // Canonical coordinates on the quotient ambient/this: reduce v by the RREF
  // basis (zeroing its pivot coordinates), then read off non-pivot entries.
  Vec reduce_mod(const Vec& v) const;
  Vec quotient_coords(const Vec& v) const;
  std::size_t quotient_dim() const { return ambient_ - dim(); }

  std::string str() const { return basis_.str(); }

 private:
  Subspace() = default;
  FieldSpec field_;
  std::size_t ambient_ = 0;
  Matrix basis_;                   // RREF rows, no zero rows
  std::vector<std::size_t> pivots_;
  void check_ambient(const Subspace& o) const;
};

// Every vector of F_p^n in odometer order (last coordinate fastest). Guarded
// against blowup; use only for small exhaustive sweeps.
std::vector<Vec> all_vectors(const FieldSpec& f, std::size_t n);

}  // namespace jpgeom
