#pragma once

#include "nilsys/frame.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace nilsys {

enum class ConstraintClass { A, B, Aux, C, Cprime, D };

std::string to_string(ConstraintClass k);
/// Accepts "A", "B", "C", "Cprime", "D" (case-sensitive).
ConstraintClass parse_constraint_class(const std::string &name);

/// One A_q per flag block, then one T_k per coordinate reached by a verified pair.
struct ExponentVars {
  std::size_t blocks = 0;
  std::vector<std::size_t> t_coords;

  std::size_t size() const { return blocks + t_coords.size(); }
  std::size_t a(std::size_t q) const { return q; }
  std::size_t t(std::size_t coord) const;  // throws if coord has no T variable
  bool has_t(std::size_t coord) const;
  std::string name(std::size_t var) const;
};

/// (i, j) -> k in frame coordinates: i and j are one-dimensional blocks,
/// [f_i, f_j] has leading coordinate k, and every cross term
/// [S(i+1), S(j)] + [S(i), S(j+1)] lies in S(k+1), S(p) = span(f_p, ...).
struct VerifiedPair {
  std::size_t i, j, k;
  int m;
  Rational coef;
};

struct Provenance {
  ConstraintClass kind;
  std::size_t i = 0, j = 0, k = 0;  // pair data (B, Aux)
  int m = 0;                        // graded exponent (B, Aux, D)
  std::size_t start = 0;            // A: block; C, Cprime, D: first coordinate of V
  std::size_t end = 0;              // D: first coordinate of V'
  std::size_t center = 0;           // D: central coordinate z

  std::string str() const;
};

struct Constraint {
  Vector lhs;  // over ExponentVars
  Rational rhs;
  Provenance provenance;
};

/// Everything lives in the coordinates of a frame built from a certified flag,
/// so each flag term is a coordinate suffix.
struct ConstraintSystem {
  ExponentVars vars;
  std::vector<std::size_t> blocks;
  std::vector<int> weights;
  std::vector<VerifiedPair> pairs;
  std::vector<Constraint> constraints;

  /// Σ A_q.
  Vector objective() const;
  Matrix matrix() const;
  Vector rhs() const;
};

/// fa must be written in frame coordinates with the given weights and blocks.
ConstraintSystem generate_constraints(const LieAlgebra &fa, const std::vector<int> &weights,
                                      const std::vector<std::size_t> &blocks,
                                      const std::set<ConstraintClass> &disabled = {});

/// Re-derives each constraint's justification with subspace arithmetic.
/// Returns the index of the first constraint that fails, or -1.
std::ptrdiff_t replay(const LieAlgebra &fa, const ConstraintSystem &system);

} // namespace nilsys
