#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trilinear/modular.hpp"
#include "trilinear/scalar.hpp"

namespace trilinear {

using Vector = std::vector<Scalar>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, Field f);

  static DenseMatrix identity(std::size_t n, Field f);
  /// Rows must all have the same length and field.
  static DenseMatrix from_rows(Field f, const std::vector<Vector>& rows);
  static DenseMatrix from_ints(Field f, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  DenseMatrix transpose() const;
  bool is_zero() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const Scalar& s, const DenseMatrix& m);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

Vector zero_vector(Field f, std::size_t n);
Vector apply(const DenseMatrix& m, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// Reduces every entry into F_p. Throws NotInvertible if p divides a
/// denominator.
modp::Matrix reduce(const DenseMatrix& m, std::uint32_t p);

/// Reduced row echelon form, computed exactly. `pivots` receives the pivot
/// columns when non-null.
DenseMatrix rref(const DenseMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Rank over the matrix's own field. Over Q a modular rank is tried first and
/// certified by an exactly verified kernel; exact elimination is the fallback.
std::size_t rank(const DenseMatrix& m);
std::size_t nullity(const DenseMatrix& m);

/// Canonical basis of the right null space: rows of the reduced echelon form
/// of the kernel, so equal subspaces give equal bases.
std::vector<Vector> matrix_kernel(const DenseMatrix& m);

/// Canonical (reduced echelon) basis of the span of `vectors`, each of
/// length `dim`.
std::vector<Vector> canonical_basis(Field f, std::size_t dim, const std::vector<Vector>& vectors);

/// Dimension of the span.
std::size_t span_dimension(Field f, std::size_t dim, const std::vector<Vector>& vectors);

Scalar determinant(const DenseMatrix& m);
DenseMatrix inverse(const DenseMatrix& m);
DenseMatrix adjugate(const DenseMatrix& m);

/// det(x·I − m) as coefficients c_0..c_n (lowest degree first).
std::vector<Scalar> characteristic_polynomial(const DenseMatrix& m);

/// Fraction-free (Bareiss) rank over Q; exposed for cross-checking the
/// modular path in tests.
std::size_t bareiss_rank(const DenseMatrix& m);

}  // namespace trilinear
