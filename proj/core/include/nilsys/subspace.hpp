#pragma once

#include "nilsys/matrix.hpp"

#include <cstddef>
#include <vector>

namespace nilsys {

/// Linear subspace of Q^n held in reduced row echelon form, so two
/// subspaces are equal exactly when their bases are.
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0);

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vector> &vectors);
  /// span(e_first, ..., e_{n-1})
  static Subspace coordinate_suffix(std::size_t n, std::size_t first);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == ambient_; }

  const Matrix &basis() const { return basis_; }
  std::vector<Vector> vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  bool contains(const Vector &v) const;
  bool contains(const Subspace &other) const;

  /// Canonical representative of v modulo this subspace (zero at pivot columns).
  Vector reduce(const Vector &v) const;

  Subspace operator+(const Subspace &other) const;
  Subspace intersect(const Subspace &other) const;

  /// True when the subspace is span(e_p, ..., e_{n-1}) for some p.
  bool is_coordinate_suffix() const;

  friend bool operator==(const Subspace &a, const Subspace &b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

} // namespace nilsys
