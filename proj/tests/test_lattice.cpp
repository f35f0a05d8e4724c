#include "oracles.hpp"
#include "random.hpp"

#include "nilsys/bounds.hpp"
#include "nilsys/catalog.hpp"
#include "nilsys/error.hpp"
#include "nilsys/frame.hpp"
#include "nilsys/lattice.hpp"

#include <gtest/gtest.h>

using namespace nilsys;
using testing_support::Rng;
using testing_support::uniform;

namespace {

// Ξ'_r = (e1, r e2, e3, e4, e5) for L5,5.
AdditiveLattice l55_xi(long r) { return AdditiveLattice::diagonal({1, r, 1, 1, 1}); }

} // namespace

TEST(Lattice, CanonicalFormIsBasisIndependent) {
  auto a = AdditiveLattice::span(2, {{2, 0}, {0, 3}});
  auto b = AdditiveLattice::span(2, {{2, 3}, {4, 3}, {0, 6}});
  EXPECT_EQ(a, b);
  auto half = AdditiveLattice::span(2, {{Rational(1, 2), 0}, {0, 1}});
  EXPECT_EQ(half.scale(), 2);
  EXPECT_TRUE(half.contains(Vector{Rational(3, 2), 7}));
  EXPECT_FALSE(half.contains(Vector{Rational(1, 3), 0}));
  EXPECT_TRUE(half.contains(AdditiveLattice::standard(2)));
  EXPECT_FALSE(AdditiveLattice::standard(2).contains(half));
}

TEST(Lattice, Covolume) {
  EXPECT_EQ(covolume(AdditiveLattice::standard(4)), 1);
  EXPECT_EQ(covolume(l55_xi(16)), 16);
  EXPECT_THROW(covolume(AdditiveLattice::span(3, {{1, 0, 0}, {0, 1, 0}})), RankDeficient);
}

TEST(Lattice, GuivarchLength) {
  std::vector<int> w{1, 1, 2, 3, 4};
  EXPECT_EQ(guivarch_length(w, unit_vector(5, 4)), (GLength{1, 1}));
  EXPECT_EQ(guivarch_length(w, Rational(16) * unit_vector(5, 4)), (GLength{2, 1}));
  Vector v = unit_vector(5, 0);
  v[4] = 8;
  GLength g = guivarch_length(w, v);
  EXPECT_EQ(g, (GLength{8, 4}));
  EXPECT_GT(g, (GLength{1, 1}));
  EXPECT_LT(g, (GLength{2, 1}));
  EXPECT_EQ((GLength{4, 2}), (GLength{2, 1}));
  EXPECT_EQ((GLength{0, 3}), (GLength{0, 1}));
}

TEST(Lattice, SystoleExamples) {
  EXPECT_EQ(systole(AdditiveLattice::standard(5), std::vector<int>(5, 1)).length,
            (GLength{1, 1}));
  // u(16)·Ξ'_16 in L5,5
  std::vector<int> w{1, 1, 1, 2, 3};
  AdditiveLattice l = dilate(l55_xi(16), w, 16);
  SystoleResult s = systole(l, w);
  EXPECT_EQ(s.length, (GLength{16, 1}));
  EXPECT_TRUE(l.contains(s.witness));
  EXPECT_EQ(guivarch_length(w, s.witness), s.length);
  EXPECT_EQ(covolume(l), pow(Rational(16), 9));
}

TEST(Lattice, SubringChecks) {
  LieAlgebra a = catalog::build("l55");
  CompatibleFrame f = compatible_frame(a);
  LieAlgebra at9 = algebra_at_scale(dilated_bracket(a, f), 9);
  EXPECT_FALSE(is_subring(l55_xi(9), at9).has_value());
  auto bad = is_subring(AdditiveLattice::standard(5), at9);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->i, 1u);
  EXPECT_EQ(bad->j, 2u);
  EXPECT_EQ(bad->bracket, Rational(1, 9) * unit_vector(5, 4));
}

TEST(Lattice, KcLatticesAreSubrings) {
  for (const auto &inst : catalog::reproduction_set()) {
    LieAlgebra a = catalog::build(inst.name, inst.params);
    nilsys::Setup s = prepare(a);
    for (long n : {4, 9, 16}) {
      AdditiveLattice l = kc_lattice(s, n);
      EXPECT_FALSE(is_subring(l, s.frame_algebra).has_value())
          << catalog::label(inst.name, inst.params) << " n=" << n;
    }
  }
}

TEST(Lattice, FlagCovolumes) {
  auto xi = flag_covolumes(l55_xi(7), {1, 1, 1, 1, 1});
  EXPECT_EQ(xi, (std::vector<Rational>{1, 7, 1, 1, 1}));
  auto id = flag_covolumes(AdditiveLattice::standard(4), {2, 1, 1});
  EXPECT_EQ(id, (std::vector<Rational>{1, 1, 1}));
  // upper triangular basis: block covolumes are the diagonal entries
  auto tri = AdditiveLattice::span(3, {{2, 5, 1}, {0, 3, 7}, {0, 0, Rational(1, 2)}});
  EXPECT_EQ(flag_covolumes(tri, {1, 1, 1}), (std::vector<Rational>{2, 3, Rational(1, 2)}));
  EXPECT_EQ(flag_covolumes(tri, {1, 2}), (std::vector<Rational>{2, Rational(3, 2)}));
}

TEST(Lattice, SymplecticValueGroup) {
  Matrix phi = standard_symplectic(2);
  EXPECT_EQ(symplectic_value_group(AdditiveLattice::standard(4), phi), 1);
  EXPECT_EQ(symplectic_value_group(AdditiveLattice::standard(4).scaled(3), phi), 9);
  EXPECT_EQ(symplectic_value_group(AdditiveLattice::standard(4).scaled(Rational(1, 2)), phi),
            Rational(1, 4));
  EXPECT_THROW(symplectic_value_group(AdditiveLattice::standard(3), Matrix::identity(3)),
               OddDimension);
  EXPECT_THROW(symplectic_value_group(AdditiveLattice::standard(2), Matrix::identity(2)),
               NotUnimodularForm);

  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto rows = testing_support::random_integer_basis(rng, 2 * n, 4);
    Matrix p = standard_symplectic(n);
    EXPECT_EQ(symplectic_value_group(testing_support::to_lattice(rows), p),
              Rational(oracle::pairwise_gcd(rows, p)));
  }
}

TEST(Lattice, MinkowskiExamples) {
  EXPECT_TRUE(minkowski_check(AdditiveLattice::standard(3), {1, 1, 1}));
  auto l = AdditiveLattice::span(2, {{Rational(1, 2), 0}, {0, 2}});
  EXPECT_LT(systole(l, {1, 1}).length, (GLength{1, 1}));
  EXPECT_TRUE(minkowski_check(l, {1, 1}));
}

TEST(Lattice, DilationEquivariance) {
  Rng rng(42);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    auto w = testing_support::random_weights(rng, n, 3);
    auto l = testing_support::to_lattice(testing_support::random_integer_basis(rng, n, 3));
    Rational r(uniform(rng, 2, 5), uniform(rng, 1, 2));
    r.canonicalize();
    if (r < 1)
      r = 1 / r;
    AdditiveLattice d = dilate(l, w, r);
    GLength s0 = systole(l, w).length, s1 = systole(d, w).length;
    // s1 = r · s0  <=>  s1^{w0 w1 ...}: compare via q-values at a common weight
    Rational lhs = pow(s1.q, s0.w), rhs = pow(r, s0.w * s1.w) * pow(s0.q, s1.w);
    EXPECT_EQ(lhs, rhs);
    long D = 0;
    for (int x : w)
      D += x;
    EXPECT_EQ(covolume(d), pow(r, D) * covolume(l));
  }
}

TEST(Lattice, EnumerationCapIsHonoured) {
  setenv("NILSYS_MAX_ENUM", "3", 1);
  auto l = AdditiveLattice::span(3, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  EXPECT_THROW(systole(l.scaled(1000), {1, 2, 3}), EnumerationLimit);
  unsetenv("NILSYS_MAX_ENUM");
  EXPECT_NO_THROW(systole(l, {1, 2, 3}));
}
