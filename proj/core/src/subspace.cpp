#include "nilsys/subspace.hpp"

#include <stdexcept>

namespace nilsys {

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  s.basis_ = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<Vector> &vectors) {
  Subspace s(n);
  if (vectors.empty())
    return s;
  Echelon e = rref(Matrix::from_rows(vectors, n));
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::coordinate_suffix(std::size_t n, std::size_t first) {
  std::vector<Vector> rows;
  for (std::size_t i = first; i < n; ++i)
    rows.push_back(unit_vector(n, i));
  return span(n, rows);
}

Vector Subspace::reduce(const Vector &v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("vector length does not match subspace");
  Vector out = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Rational f = out[pivots_[r]];
    if (sgn(f) == 0)
      continue;
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (sgn(basis_(r, j)) != 0)
        out[j] -= f * basis_(r, j);
  }
  return out;
}

bool Subspace::contains(const Vector &v) const { return nilsys::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const {
  if (other.dim() > dim())
    return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r)))
      return false;
  return true;
}

Subspace Subspace::operator+(const Subspace &other) const {
  auto rows = vectors();
  for (auto &v : other.vectors())
    rows.push_back(std::move(v));
  return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace &other) const {
  if (is_zero() || other.is_zero())
    return Subspace(ambient_);
  if (other.is_full())
    return *this;
  if (is_full())
    return other;
  // x = a U lies in W iff x is orthogonal to W's annihilator N, i.e. a (U N^T) = 0.
  Matrix annihilator = null_space(other.basis_);
  Matrix m = basis_ * annihilator.transpose();
  Matrix coeffs = null_space(m.transpose());
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < coeffs.rows(); ++r)
    rows.push_back(coeffs.row(r) * basis_);
  return span(ambient_, rows);
}

bool Subspace::is_coordinate_suffix() const {
  std::size_t first = ambient_ - dim();
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_(r, j) != (j == first + r ? 1 : 0))
        return false;
  return true;
}

} // namespace nilsys
