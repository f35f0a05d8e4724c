#pragma once

#include "nilsys/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nilsys {

/// Discrete additive subgroup of Q^n. Stored as (1/scale)·H with H an integer
/// matrix in Hermite normal form, which makes equality syntactic.
class AdditiveLattice {
public:
  explicit AdditiveLattice(std::size_t ambient = 0) : ambient_(ambient), scale_(1) {}

  /// Z-span of the given rows (dependent rows allowed).
  static AdditiveLattice span(std::size_t n, const std::vector<Vector> &rows);
  static AdditiveLattice standard(std::size_t n);
  static AdditiveLattice diagonal(const Vector &entries);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return hnf_.size(); }
  bool full_rank() const { return rank() == ambient_; }

  const IntMatrix &hnf() const { return hnf_; }
  const Integer &scale() const { return scale_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  std::vector<Vector> basis() const;

  bool contains(const Vector &v) const;
  bool contains(const AdditiveLattice &other) const;

  AdditiveLattice operator+(const AdditiveLattice &other) const;
  AdditiveLattice scaled(const Rational &t) const;
  /// Applies x -> x·m to every vector.
  AdditiveLattice transformed(const Matrix &m) const;

  friend bool operator==(const AdditiveLattice &a, const AdditiveLattice &b) {
    return a.ambient_ == b.ambient_ && a.scale_ == b.scale_ && a.hnf_ == b.hnf_;
  }

private:
  std::size_t ambient_;
  IntMatrix hnf_;
  Integer scale_;
  std::vector<std::size_t> pivots_;
};

/// q^{1/w}; ordering and equality compare q1^{w2} with q2^{w1}.
struct GLength {
  Rational q = 0;
  int w = 1;

  std::string str() const;
};

int compare(const GLength &a, const GLength &b);
inline bool operator<(const GLength &a, const GLength &b) { return compare(a, b) < 0; }
inline bool operator>(const GLength &a, const GLength &b) { return compare(a, b) > 0; }
inline bool operator<=(const GLength &a, const GLength &b) { return compare(a, b) <= 0; }
inline bool operator>=(const GLength &a, const GLength &b) { return compare(a, b) >= 0; }
inline bool operator==(const GLength &a, const GLength &b) { return compare(a, b) == 0; }

/// max_i |v_i|^{1/w_i}, v in frame coordinates.
GLength guivarch_length(const std::vector<int> &weights, const Vector &v);

struct SystoleResult {
  GLength length;
  Vector witness;
  std::size_t nodes = 0;
};

/// Exact minimum Guivarch length over nonzero lattice vectors (frame
/// coordinates). Honours NILSYS_MAX_ENUM as a node cap.
SystoleResult systole(const AdditiveLattice &l, const std::vector<int> &weights);

/// |det| of a basis; throws RankDeficient.
Rational covolume(const AdditiveLattice &l);

/// Covolume of each block quotient for the coordinate flag with the given
/// block sizes (top block first).
std::vector<Rational> flag_covolumes(const AdditiveLattice &l,
                                     const std::vector<std::size_t> &blocks);

struct SubringWitness {
  std::size_t i, j;   // basis rows
  Vector bracket;
};

/// nullopt when every bracket of basis vectors lies in the lattice.
std::optional<SubringWitness> is_subring(const AdditiveLattice &l, const LieAlgebra &a);

/// Generator of the group spanned by phi(b_a, b_b); 0 when all vanish.
Rational symplectic_value_group(const AdditiveLattice &l, const Matrix &phi);

/// Standard pairing with phi(x_i, y_i) = 1 on pairs (0,1), (2,3), ...
Matrix standard_symplectic(std::size_t n);

/// systole >= 1 implies covolume >= 1.
bool minkowski_check(const AdditiveLattice &l, const std::vector<int> &weights);

/// u(r): multiplies frame coordinate i by r^{w_i}.
AdditiveLattice dilate(const AdditiveLattice &l, const std::vector<int> &weights,
                       const Rational &r);

} // namespace nilsys
