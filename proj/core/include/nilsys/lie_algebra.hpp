#pragma once

#include "nilsys/subspace.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nilsys {

/// Raw structure constants: (i, j) with i < j, 0-based, mapped to [e_i, e_j].
using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, Vector>;

/// Finite-dimensional nilpotent Lie algebra over Q. Instances only come out of
/// validate(), so every LieAlgebra satisfies Jacobi and is nilpotent.
class LieAlgebra {
public:
  static LieAlgebra validate(std::size_t dim, const StructureConstants &constants,
                             std::string name = {});

  std::size_t dim() const { return dim_; }
  const std::string &name() const { return name_; }

  /// [e_i, e_j] for any ordered pair.
  const Vector &bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector bracket(const Vector &x, const Vector &y) const;
  Subspace bracket(const Subspace &a, const Subspace &b) const;

  /// Nonzero brackets with i < j.
  StructureConstants constants() const;
  bool is_integral() const;
  bool is_abelian() const;
  bool is_ideal(const Subspace &s) const;

private:
  LieAlgebra(std::size_t dim, std::vector<Vector> table, std::string name)
      : dim_(dim), name_(std::move(name)), table_(std::move(table)) {}

  std::size_t dim_;
  std::string name_;
  std::vector<Vector> table_;
};

/// g^1 = g, g^{i+1} = [g, g^i], ending with the zero subspace.
std::vector<Subspace> lower_central_series(const LieAlgebra &a);
/// Z_1 ⊂ Z_2 ⊂ ... ⊂ g, ascending, the zero term omitted.
std::vector<Subspace> upper_central_series(const LieAlgebra &a);
/// {x : [x, s] ∈ m for all s ∈ s}; throws MNotIdeal unless m is an ideal.
Subspace centralizer(const LieAlgebra &a, const Subspace &s, const Subspace &m);

/// c, the number of nonzero lower central terms.
std::size_t nilpotency_class(const LieAlgebra &a);
/// D = Σ dim g^i.
std::size_t homogeneous_dimension(const LieAlgebra &a);
/// Σ_{i=1}^{⌈c/2⌉-1} (c/2 - i) dim(g^i / g^{i+1}).
Rational k_c(const LieAlgebra &a);

} // namespace nilsys
