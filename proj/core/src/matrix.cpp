#include "nilsys/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace nilsys {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out.push_back(row(i));
  return out;
}

void Matrix::set_row(std::size_t i, const Vector &v) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(i, j) = v[j];
}

void Matrix::append_row(const Vector &v) {
  if (v.size() != cols_)
    throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0)
          c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Vector operator*(const Vector &v, const Matrix &m) {
  Vector out(m.cols(), Rational(0));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (sgn(v[k]) == 0)
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(k, j)) != 0)
        out[j] += v[k] * m(k, j);
  }
  return out;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns. Rows past the rank end up zero.
std::vector<std::size_t> eliminate(Matrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0)
        continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0)
          m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

Echelon rref(const Matrix &m) {
  Matrix work = m;
  auto pivots = eliminate(work);
  Matrix reduced(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      reduced(i, j) = work(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix &m) {
  Matrix work = m;
  return eliminate(work).size();
}

Rational determinant(const Matrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0)
        continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j)
        a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix &m) {
  const std::size_t n = m.rows();
  if (n != m.cols())
    return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = eliminate(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix null_space(const Matrix &m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  Matrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    Vector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.reduced(i, f);
    basis.append_row(v);
  }
  return basis;
}

std::optional<Vector> solve_left(const Matrix &m, const Vector &v) {
  // c m = v  <=>  m^T c^T = v^T; solve via elimination on [m^T | v].
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  Matrix aug(n, k + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i)
      aug(j, i) = m(i, j);
    aug(j, k) = v[j];
  }
  auto pivots = eliminate(aug);
  if (!pivots.empty() && pivots.back() == k)
    return std::nullopt;
  Vector c(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    c[pivots[r]] = aug(r, k);
  return c;
}

HermiteForm hermite_normal_form(IntMatrix rows, std::size_t cols) {
  HermiteForm out;
  std::size_t r = 0;
  const std::size_t m = rows.size();
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    bool found = false;
    for (;;) {
      // Smallest nonzero |entry| in column c among rows r..m-1 becomes the pivot.
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (sgn(rows[i][c]) != 0 && (best == m || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == m)
        break;
      found = true;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(rows[i][c]) == 0)
          continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j)
          if (sgn(rows[r][j]) != 0)
            rows[i][j] -= q * rows[r][j];
        if (sgn(rows[i][c]) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (!found)
      continue;
    if (sgn(rows[r][c]) < 0)
      for (std::size_t j = c; j < cols; ++j)
        rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (sgn(q) == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] -= q * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

} // namespace nilsys
