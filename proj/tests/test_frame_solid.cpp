#include "random.hpp"

#include "nilsys/catalog.hpp"
#include "nilsys/error.hpp"
#include "nilsys/frame.hpp"
#include "nilsys/solid.hpp"

#include <gtest/gtest.h>

using namespace nilsys;

namespace {

int exponent_of(const GradedBracket &g, std::size_t i, std::size_t j, std::size_t k) {
  for (const auto &e : g.entries)
    if (e.i == i && e.j == j && e.k == k)
      return e.m;
  return -1;
}

void expect_frame_invariants(const LieAlgebra &a, const CompatibleFrame &f) {
  auto lcs = lower_central_series(a);
  for (std::size_t w = 1; w < lcs.size(); ++w) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < f.dim(); ++i)
      if (f.weights[i] >= static_cast<int>(w))
        rows.push_back(f.change_of_basis.row(i));
    EXPECT_EQ(Subspace::span(a.dim(), rows), lcs[w - 1]) << "weight " << w;
  }
  EXPECT_TRUE((f.change_of_basis * f.inverse).is_identity());
  for (std::size_t i = 0; i + 1 < f.dim(); ++i)
    EXPECT_LE(f.weights[i], f.weights[i + 1]);
}

} // namespace

TEST(Frame, CatalogBasesAreAlreadyCompatible) {
  LieAlgebra l55 = catalog::build("l55");
  CompatibleFrame f = compatible_frame(l55);
  EXPECT_TRUE(f.is_identity);
  EXPECT_EQ(f.weights, (std::vector<int>{1, 1, 1, 2, 3}));

  CompatibleFrame w = compatible_frame(catalog::build("witt", {{"n", 7}}));
  EXPECT_TRUE(w.is_identity);
  EXPECT_EQ(w.weights, (std::vector<int>{1, 1, 2, 3, 4, 5, 6}));

  CompatibleFrame ab = compatible_frame(LieAlgebra::validate(3, {}));
  EXPECT_EQ(ab.weights, (std::vector<int>{1, 1, 1}));
}

TEST(Frame, ReorderedInputGetsCompleted) {
  // L5,5 relabelled as (e5, e1, e2, e3, e4)
  StructureConstants sc{{{1, 2}, unit_vector(5, 4)},
                        {{1, 4}, unit_vector(5, 0)},
                        {{2, 3}, unit_vector(5, 0)}};
  LieAlgebra a = LieAlgebra::validate(5, sc);
  CompatibleFrame f = compatible_frame(a);
  EXPECT_FALSE(f.is_identity);
  EXPECT_EQ(f.weights, (std::vector<int>{1, 1, 1, 2, 3}));
  expect_frame_invariants(a, f);
  LieAlgebra fa = frame_algebra(a, f);
  EXPECT_EQ(homogeneous_dimension(fa), 8u);
  EXPECT_TRUE(compatible_frame(fa).is_identity);
}

TEST(Frame, RandomAlgebrasSatisfyInvariants) {
  testing_support::Rng rng(31);
  for (int t = 0; t < 80; ++t) {
    std::size_t d = static_cast<std::size_t>(testing_support::uniform(rng, 2, 7));
    LieAlgebra a = testing_support::random_nilpotent_algebra(rng, d);
    CompatibleFrame f = compatible_frame(a);
    expect_frame_invariants(a, f);
    GradedBracket g = dilated_bracket(a, f);
    for (const auto &e : g.entries) {
      EXPECT_GE(e.m, 0);
      EXPECT_NE(e.coef, 0);
      EXPECT_EQ(e.m, f.weights[e.k] - f.weights[e.i] - f.weights[e.j]);
    }
    LieAlgebra carnot = carnot_graded(a, f);  // validates Jacobi on the m = 0 part
    auto l1 = lower_central_series(a), l2 = lower_central_series(carnot);
    ASSERT_EQ(l1.size(), l2.size());
    for (std::size_t i = 0; i < l1.size(); ++i)
      EXPECT_EQ(l1[i].dim(), l2[i].dim());
    EXPECT_EQ(algebra_at_scale(g, 1).constants(), frame_algebra(a, f).constants());
  }
}

TEST(Frame, FlagMustRefineLowerCentralSeries) {
  LieAlgebra a = catalog::build("l55");
  std::vector<Subspace> flag{Subspace::full(5), Subspace::coordinate_suffix(5, 4),
                             Subspace::zero(5)};
  EXPECT_THROW(compatible_frame(a, flag), FlagNotRefining);
}

TEST(Graded, KnownExponents) {
  LieAlgebra l55 = catalog::build("l55");
  GradedBracket g = dilated_bracket(l55, compatible_frame(l55));
  EXPECT_EQ(exponent_of(g, 1, 2, 4), 1);
  EXPECT_EQ(exponent_of(g, 0, 1, 3), 0);
  EXPECT_EQ(exponent_of(g, 0, 3, 4), 0);
  EXPECT_TRUE(g.has_positive_exponent());

  LieAlgebra f7 = catalog::build("filiform7");
  GradedBracket gf = dilated_bracket(f7, compatible_frame(f7));
  for (const auto &e : gf.entries) {
    bool slow = (e.i == 1 && e.j == 2) || (e.i == 1 && e.j == 3) || (e.i == 2 && e.j == 3);
    EXPECT_EQ(e.m, slow ? 1 : 0) << e.i + 1 << e.j + 1;
  }

  LieAlgebra h = catalog::build("heisenberg", {{"n", 2}});
  EXPECT_FALSE(dilated_bracket(h, compatible_frame(h)).has_positive_exponent());
}

TEST(Graded, CarnotLimits) {
  LieAlgebra l55 = catalog::build("l55");
  StructureConstants want{{{0, 1}, unit_vector(5, 3)}, {{0, 3}, unit_vector(5, 4)}};
  EXPECT_EQ(carnot_graded(l55, compatible_frame(l55)).constants(), want);

  LieAlgebra w = catalog::build("witt", {{"n", 6}});
  StructureConstants wc;
  for (std::size_t i = 2; i <= 5; ++i)
    wc[{0, i - 1}] = Rational(1 - static_cast<long>(i)) * unit_vector(6, i);
  EXPECT_EQ(carnot_graded(w, compatible_frame(w)).constants(), wc);

  LieAlgebra h = catalog::build("heisenberg", {{"n", 1}});
  EXPECT_EQ(carnot_graded(h, compatible_frame(h)).constants(), h.constants());
}

TEST(Solid, CompleteFlagsOnFiliformTypes) {
  for (auto name : {"l55", "l56", "filiform7"}) {
    LieAlgebra a = catalog::build(name);
    SolidFlag f = solid_flag(a);
    EXPECT_EQ(f.blocks, std::vector<std::size_t>(a.dim(), 1)) << name;
    for (std::size_t p = 0; p < f.chain.size(); ++p)
      EXPECT_EQ(f.chain[p], Subspace::coordinate_suffix(a.dim(), p)) << name;
  }
  for (long n = 4; n <= 9; ++n) {
    LieAlgebra w = catalog::build("witt", {{"n", n}});
    EXPECT_EQ(solid_flag(w).blocks, std::vector<std::size_t>(static_cast<std::size_t>(n), 1));
  }
}

TEST(Solid, AbelianHasOnlyTrivialIdeals) {
  LieAlgebra a = LieAlgebra::validate(2, {});
  SolidClosure c = solid_closure(a);
  EXPECT_EQ(c.ideals.size(), 2u);
  SolidFlag f = solid_flag(a);
  EXPECT_EQ(f.blocks, (std::vector<std::size_t>{2}));
}

TEST(Solid, CentralProductChain) {
  // U, X, Y, V, W, Z: 0 < Z < WZ < VWZ < XYVWZ < g
  LieAlgebra a = catalog::build("central_product", {{"k", 4}, {"n", 1}});
  SolidFlag f = solid_flag(a);
  EXPECT_EQ(f.blocks, (std::vector<std::size_t>{1, 2, 1, 1, 1}));
  std::vector<std::size_t> starts{0, 1, 3, 4, 5, 6};
  ASSERT_EQ(f.chain.size(), starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i)
    EXPECT_EQ(f.chain[i], Subspace::coordinate_suffix(6, starts[i]));
}

TEST(Solid, TracesReplay) {
  testing_support::Rng rng(32);
  std::vector<LieAlgebra> algebras;
  for (const auto &inst : catalog::reproduction_set())
    algebras.push_back(catalog::build(inst.name, inst.params));
  for (int t = 0; t < 40; ++t)
    algebras.push_back(testing_support::random_nilpotent_algebra(
        rng, static_cast<std::size_t>(testing_support::uniform(rng, 2, 7))));
  for (const auto &a : algebras) {
    SolidClosure c = solid_closure(a);
    EXPECT_FALSE(c.capped);
    EXPECT_TRUE(replay(a, c)) << a.name();
    for (const auto &s : c.ideals)
      EXPECT_TRUE(a.is_ideal(s.space));
    SolidFlag f = solid_flag(a);
    auto lcs = lower_central_series(a);
    for (const auto &term : lcs)
      EXPECT_NE(std::find(f.chain.begin(), f.chain.end(), term), f.chain.end());
    for (std::size_t i = 0; i + 1 < f.chain.size(); ++i)
      EXPECT_TRUE(f.chain[i].contains(f.chain[i + 1]));
  }
}

TEST(Solid, LcsFlagBlocksAreLayerDimensions) {
  SolidFlag f = lcs_flag(catalog::build("central_product", {{"k", 4}, {"n", 2}}));
  EXPECT_EQ(f.blocks, (std::vector<std::size_t>{6, 1, 1}));
}
