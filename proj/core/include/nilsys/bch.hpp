#pragma once

#include "nilsys/lattice.hpp"
#include "nilsys/lie_algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace nilsys {

constexpr int kMaxBchDegree = 7;

/// Right-normed Lie word [w_1,[w_2,...,[w_{n-1},w_n]]] in letters 0 = x, 1 = y.
struct DynkinTerm {
  std::vector<std::uint8_t> word;
  Rational coef;
};

/// Degree-n part B_n(x, y) of the BCH series in Dynkin's form, identical
/// words merged and vanishing brackets dropped. Throws UnsupportedDegree.
const std::vector<DynkinTerm> &dynkin_terms(int degree);

/// Evaluates a right-normed word on x, y in the algebra.
Vector evaluate_word(const LieAlgebra &a, const std::vector<std::uint8_t> &word,
                     const Vector &x, const Vector &y);

/// x·y = Σ_{n ≤ c} B_n(x, y) with c the nilpotency class.
Vector bch_product(const LieAlgebra &a, const Vector &x, const Vector &y);
/// Same series truncated after degree c (c must be at least the class).
Vector bch_product(const LieAlgebra &a, const Vector &x, const Vector &y, int c);

/// m_n: least positive integer with m_n·B_n in the free Lie ring, n = 1..c.
std::vector<Integer> bch_denominators(int c);

/// Smallest additive group containing the generators and stable under
/// (x_1, ..., x_n) -> m_n^{-1}[x_1,[x_2,...,x_n]] for n >= 2.
AdditiveLattice strong_subring(const LieAlgebra &a, const std::vector<Vector> &generators);
bool is_strong_subring(const LieAlgebra &a, const AdditiveLattice &l);

struct IndexPair {
  Integer additive;
  std::optional<Integer> group;  // empty when the coset search hit its cap
};

/// [Λ' : Λ] as additive groups and as groups under the BCH product.
/// Throws NotContained, NotSubring, RankDeficient.
IndexPair group_additive_index(const LieAlgebra &a, const AdditiveLattice &sub,
                               const AdditiveLattice &super, std::size_t cap = 1000000);

} // namespace nilsys
