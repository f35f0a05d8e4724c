#pragma once

#include "nilsys/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nilsys {

/// Ordered basis adapted to a flag refining the lower central series.
/// Row i of change_of_basis is the i-th frame vector in input coordinates;
/// the frame vectors of weight >= w span g^w.
struct CompatibleFrame {
  std::vector<std::size_t> order;   // input index each frame vector is pivoted on
  std::vector<int> weights;         // nondecreasing
  Matrix change_of_basis;
  Matrix inverse;                   // input coordinates -> frame coordinates
  std::vector<std::size_t> blocks;  // flag quotient dimensions, top block first
  bool is_identity = false;

  std::size_t dim() const { return weights.size(); }
  Vector to_frame(const Vector &input) const;
  Vector to_input(const Vector &frame) const;
  /// First frame coordinate of each block.
  std::vector<std::size_t> block_starts() const;
};

/// Builds a frame from a descending flag g = W_1 > ... > W_k = 0 (the lower
/// central series when none is given). Throws FlagNotRefining if a lower
/// central term is missing from the flag.
CompatibleFrame compatible_frame(const LieAlgebra &a,
                                 const std::optional<std::vector<Subspace>> &flag = std::nullopt);

/// The algebra rewritten in frame coordinates.
LieAlgebra frame_algebra(const LieAlgebra &a, const CompatibleFrame &frame);

struct GradedEntry {
  std::size_t i, j, k; // i < j, frame coordinates
  Rational coef;
  int m;               // w_k - w_i - w_j
};

/// [x, y]_r = u(r)^{-1}[u(r)x, u(r)y] expressed as coef · r^{-m} per entry.
struct GradedBracket {
  std::size_t dim = 0;
  std::vector<int> weights;
  std::vector<GradedEntry> entries;

  bool has_positive_exponent() const;
};

GradedBracket dilated_bracket(const LieAlgebra &a, const CompatibleFrame &frame);
/// Only the m = 0 part; validated.
LieAlgebra carnot_graded(const LieAlgebra &a, const CompatibleFrame &frame);
/// (g, [.,.]_r) at a fixed rational r > 0, in frame coordinates.
LieAlgebra algebra_at_scale(const GradedBracket &b, const Rational &r);

} // namespace nilsys
