#pragma once

#include "nilsys/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nilsys {

/// Dense row-major matrix over Q. Vectors are rows throughout the library.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  std::vector<Vector> row_list() const;
  void set_row(std::size_t i, const Vector &v);
  void append_row(const Vector &v);

  Matrix transpose() const;
  bool is_identity() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix &a, const Matrix &b);
/// Row vector times matrix.
Vector operator*(const Vector &v, const Matrix &m);

struct Echelon {
  Matrix reduced;                   // nonzero rows only, reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const Matrix &m);
std::size_t rank(const Matrix &m);
Rational determinant(const Matrix &m);
std::optional<Matrix> inverse(const Matrix &m);

/// Basis (as rows) of {x : m x^T = 0}, i.e. vectors orthogonal to every row of m.
Matrix null_space(const Matrix &m);

/// Coefficients c with c * m == v, if v lies in the row space of m.
std::optional<Vector> solve_left(const Matrix &m, const Vector &v);

// ---------------------------------------------------------------------------
// Integer lattices

using IntMatrix = std::vector<std::vector<Integer>>;

/// Row-style Hermite normal form: nonzero rows, strictly increasing pivot
/// columns, positive pivots, entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix rows;
  std::vector<std::size_t> pivots;
};

HermiteForm hermite_normal_form(IntMatrix rows, std::size_t cols);

} // namespace nilsys
