#include <gtest/gtest.h>

#include "hh1/models.hpp"
#include "oracles.hpp"

using namespace hh1;

namespace {

std::vector<Mat> gl2_basis(const Field& F) {
  return {matrix_unit(F, 2, 0, 0), matrix_unit(F, 2, 0, 1), matrix_unit(F, 2, 1, 0), matrix_unit(F, 2, 1, 1)};
}

Mat combine_mats(const Field& F, const std::vector<Mat>& basis, const Vec& c) {
  Mat m(F, basis[0].rows(), basis[0].cols());
  for (std::size_t i = 0; i < c.size(); ++i) m = m + basis[i].scaled(c[i]);
  return m;
}

}  // namespace

// In a matrix Lie algebra x^[p] is the matrix p-th power, so the Jacobson
// formula can be checked against direct multiplication.
TEST(RestrictedLie, JacobsonMatchesMatrixPower) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field F(p);
    const auto basis = gl2_basis(F);
    const RestrictedLie L = gl2(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 50; ++t) {
      const Vec x = random_vector(F, 4, rng);
      EXPECT_EQ(combine_mats(F, basis, L.p_power(x)).data(), combine_mats(F, basis, x).pow(p).data());
    }
  }
}

TEST(RestrictedLie, BracketIsCommutatorForMatrices) {
  const Field F(5);
  const auto basis = gl2_basis(F);
  const RestrictedLie L = gl2(5);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const Vec x = random_vector(F, 4, rng), y = random_vector(F, 4, rng);
    const Mat X = combine_mats(F, basis, x), Y = combine_mats(F, basis, y);
    EXPECT_EQ(combine_mats(F, basis, L.bracket(x, y)).data(), (X * Y - Y * X).data());
  }
}

TEST(RestrictedLie, ValidationRejectsBrokenStructure) {
  const Field F(3);
  std::vector<std::vector<Vec>> br(2, std::vector<Vec>(2, Vec(2, 0)));
  br[0][1] = {0, 1};  // [a, b] = b but [b, a] = 0
  EXPECT_THROW(make_restricted_lie(F, {"a", "b"}, br, {Vec{1, 0}, Vec{0, 0}}), LieError);
  br[1][0] = {0, 2};
  EXPECT_NO_THROW(make_restricted_lie(F, {"a", "b"}, br, {Vec{1, 0}, Vec{0, 0}}));
  // a^[p] = 0 is incompatible with ad(a)^p = ad(a) on b.
  EXPECT_THROW(make_restricted_lie(F, {"a", "b"}, br, {Vec{0, 0}, Vec{0, 0}}), RestrictednessViolation);
}

TEST(RestrictedLie, WittAlgebras) {
  for (std::uint32_t p : {3u, 5u}) {
    const RestrictedLie W = witt(p, 1);
    EXPECT_EQ(W.dim(), p);
    EXPECT_TRUE(is_simple(W));
  }
  const RestrictedLie W2 = witt(3, 2);
  EXPECT_EQ(W2.dim(), 18u);
  EXPECT_TRUE(is_simple(W2));
}

TEST(RestrictedLie, ClassicalModels) {
  for (std::uint32_t p : {3u, 5u}) {
    EXPECT_TRUE(is_simple(sl2(p)));
    const RestrictedLie G = gl2(p);
    EXPECT_FALSE(is_simple(G));
    EXPECT_EQ(center(G).dim(), 1u);
    EXPECT_EQ(dims(derived_series(G)), (std::vector<std::size_t>{4, 3}));
    EXPECT_FALSE(is_solvable(G));
  }
}

TEST(RestrictedLie, SimplicityWitnessIsAnIdeal) {
  const RestrictedLie G = gl2(3);
  const auto s = simplicity(G);
  ASSERT_FALSE(s.simple);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_TRUE(is_ideal(G, *s.witness));
  EXPECT_GT(s.witness->dim(), 0u);
  EXPECT_LT(s.witness->dim(), 4u);
}

// Toral elements and the nullcone counted directly from 2x2 matrices.
TEST(Tori, EnumerationMatchesMatrixCount) {
  for (std::uint32_t p : {3u, 5u}) {
    const Field F(p);
    const auto basis = gl2_basis(F);
    std::size_t toral = 0, nil = 0;
    oracle::for_each_vector(F, 4, [&](const Vec& c) {
      const Mat X = combine_mats(F, basis, c);
      const Mat Xp = X.pow(p);
      toral += (Xp.data() == X.data() && !X.is_zero()) ? 1 : 0;
      nil += Xp.is_zero() ? 1 : 0;
    });
    const auto e = enumerate_elements(gl2(p));
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(e->toral.size(), toral);
    EXPECT_EQ(e->nullcone, nil);
    EXPECT_EQ(e->candidates, static_cast<std::size_t>(p) * p * p * p);
  }
}

TEST(Tori, MaximalToralRanks) {
  for (std::uint32_t p : {3u, 5u}) {
    const TorusReport ts = greedy_maximal_torus(sl2(p));
    EXPECT_EQ(ts.dim(), 1u);
    EXPECT_EQ(ts.status, Maximality::exhaustively_certified);
    const TorusReport tg = greedy_maximal_torus(gl2(p));
    EXPECT_EQ(tg.dim(), 2u);
    EXPECT_EQ(tg.exhaustive_dim, 2u);
    for (const auto& c : tg.certificates) {
      EXPECT_EQ(c.p_power, c.element);
      EXPECT_TRUE(c.commutes_with_all);
    }
  }
  const TorusReport tw = greedy_maximal_torus(witt(3, 2));
  EXPECT_EQ(tw.dim(), 2u);
  EXPECT_EQ(tw.status, Maximality::greedy_maximal);
}

TEST(Tori, ElementAnalysisSplitsJordanParts) {
  const Field F(5);
  const RestrictedLie G = gl2(5);
  const Vec x{1, 1, 0, 1};  // identity + E12, a single Jordan block
  const auto e = element_analysis(G, x);
  EXPECT_EQ(add(F, e.semisimple_part, e.nilpotent_part), x);
  EXPECT_TRUE(is_p_nilpotent(G, e.nilpotent_part));
  EXPECT_EQ(G.bracket(e.semisimple_part, e.nilpotent_part), G.zero());
  EXPECT_FALSE(e.is_toral);
  EXPECT_EQ(e.semisimple_part, (Vec{1, 0, 0, 1}));
  EXPECT_EQ(e.nilpotent_part, (Vec{0, 1, 0, 0}));
  EXPECT_TRUE(element_analysis(G, Vec{1, 1, 0, 2}).is_toral);  // distinct eigenvalues in GF(5)
  EXPECT_TRUE(element_analysis(G, Vec{1, 0, 0, 0}).is_toral);
  EXPECT_TRUE(element_analysis(G, Vec{0, 1, 0, 0}).is_p_nilpotent);
}

TEST(Series, SolvableAndTrigonalizable) {
  const RestrictedLie L = from_hh1(first_cohomology_smash(smash_product(3, 2, 1)));
  EXPECT_EQ(dims(derived_series(L)), (std::vector<std::size_t>{3, 2, 0}));
  EXPECT_TRUE(is_solvable(L));
  EXPECT_FALSE(is_nilpotent(L));
  EXPECT_TRUE(is_trigonalizable(L));
  EXPECT_FALSE(is_trigonalizable(sl2(3)));
  EXPECT_FALSE(is_trigonalizable(gl2(5)));
}

TEST(Series, SubalgebraAndQuotient) {
  const NilIdealWitness w = nil_ideal_witness(3, {2});
  ASSERT_TRUE(w.quotient.has_value());
  EXPECT_EQ(w.lie.dim(), 9u);
  EXPECT_EQ(w.n_ideal.dim(), 6u);
  EXPECT_EQ(w.quotient->lie.dim(), 3u);
  EXPECT_TRUE(w.is_p_nilpotent);
  const SubLie n = subalgebra(w.lie, w.n_ideal);
  EXPECT_TRUE(is_nilpotent(n.lie));
  EXPECT_EQ(greedy_maximal_torus(n.lie).dim(), 0u);
}

TEST(Fingerprints, CoincidenceOnlyAtThree) {
  EXPECT_TRUE(fingerprint(witt(3, 1)) == fingerprint(sl2(3)));
  EXPECT_FALSE(fingerprint(witt(5, 1)) == fingerprint(sl2(5)));
  const RestrictedLie K = from_hh1(first_cohomology(kronecker_algebra(5)));
  EXPECT_TRUE(fingerprint(K) == fingerprint(sl2(5)));
}
