#pragma once

#include "nilsys/lattice.hpp"
#include "nilsys/lie_algebra.hpp"

#include <random>
#include <vector>

namespace testing_support {

using Rng = std::mt19937_64;

long uniform(Rng &rng, long lo, long hi);

/// A nilpotent algebra of the given dimension (>= 1) built as an iterated
/// central extension: each new basis vector is the value of a random integral
/// 2-cocycle on the algebra built so far. Starts from an abelian algebra of
/// random dimension 1..3.
nilsys::LieAlgebra random_nilpotent_algebra(Rng &rng, std::size_t dim);

/// Full-rank integer rows with entries in [-range, range].
std::vector<std::vector<long>> random_integer_basis(Rng &rng, std::size_t n, long range);

/// Nondecreasing weights starting at 1 with steps of 0 or 1, capped at max_weight.
std::vector<int> random_weights(Rng &rng, std::size_t n, int max_weight);

nilsys::Vector to_vector(const std::vector<long> &row);
nilsys::AdditiveLattice to_lattice(const std::vector<std::vector<long>> &rows);
nilsys::Vector random_rational_vector(Rng &rng, std::size_t n, long range, long den);

} // namespace testing_support
