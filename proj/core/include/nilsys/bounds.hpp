#pragma once

#include "nilsys/constraints.hpp"
#include "nilsys/lattice.hpp"
#include "nilsys/simplex.hpp"
#include "nilsys/solid.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nilsys {

enum class FlagMode { Auto, LcsOnly };

struct BoundOptions {
  FlagMode flag = FlagMode::Auto;
  std::set<ConstraintClass> disabled;
};

/// The certified flag, the frame it induces and the algebra in that frame.
struct Setup {
  SolidFlag flag;
  CompatibleFrame frame;
  LieAlgebra frame_algebra;
  GradedBracket graded;
};

Setup prepare(const LieAlgebra &a, FlagMode mode = FlagMode::Auto);
Setup prepare(const LieAlgebra &a, SolidFlag flag);

struct LowerBound {
  Rational h;
  ConstraintSystem system;
  LPCertificate certificate;
};

/// Minimises Σ A_q over the generated system. The constraint replay and the
/// dual certificate are both checked before returning.
LowerBound lower_bound_exponent(const Setup &s, const std::set<ConstraintClass> &disabled = {});

struct UpperBound {
  Rational h;
  Vector theta;  // per frame coordinate
  LPCertificate certificate;
};

/// min Σθ subject to θ >= 0 and θ_i + θ_j - θ_k >= m for each graded entry.
UpperBound upper_bound_exponent(const Setup &s);

struct DiagonalLattice {
  Integer r;
  AdditiveLattice lattice;  // frame coordinates: r^{w_i + θ_i} f_i
  bool subring = false;
  GLength systole;
  Vector systole_witness;
  Rational covolume;
  Rational expected_covolume;  // r^{D + Σθ}
  bool leading_integral = false;

  bool ok() const;
};

/// r must make every r^{θ_i} an integer (NonIntegralScale otherwise) and the
/// frame constants must be integral. Throws ClosureFailure with the
/// offending pair when the lattice is not a subring.
DiagonalLattice build_diagonal_lattice(const Setup &s, const Vector &theta, const Integer &r);

/// n^q for n in {2, 3, 5} (or the given bases), q the lcm of θ denominators.
std::vector<Integer> r_samples(const Vector &theta, const std::vector<long> &bases = {2, 3, 5});

/// ⊕ n^{max(c/2, w_i)} Z f_i; n must be a square when c is odd.
AdditiveLattice kc_lattice(const Setup &s, const Integer &n);

struct Baselines {
  Rational residual_girth;  // c · d
  Rational kc_bound;        // D + k_c
};

Baselines baseline_exponents(const LieAlgebra &a);

struct BoundReport {
  std::string name;
  std::size_t dim = 0;
  std::size_t nilpotency_class = 0;
  std::size_t D = 0;
  Rational k_c;
  Baselines baselines;
  Setup setup;
  LowerBound lower;
  UpperBound upper;
  std::vector<DiagonalLattice> witnesses;
  std::string carnot_verdict;

  bool consistent() const;      // 0 <= h_lower <= h_upper <= k_c
  bool witnesses_ok() const;    // vacuous when no witness could be built
};

BoundReport bound_report(const LieAlgebra &a, const BoundOptions &options = {},
                         const std::vector<long> &r_bases = {2, 3, 5});

} // namespace nilsys
