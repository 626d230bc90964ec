#include <gtest/gtest.h>

#include "hh1/hochschild.hpp"
#include "oracles.hpp"

using namespace hh1;

namespace {

bool leibniz_by_table(const Algebra& a, const Mat& f) {
  const Derivation d{f};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec x = a.basis(i), y = a.basis(j);
      const Vec rhs = add(a.field(), a.multiply(d(x), y), a.multiply(x, d(y)));
      if (d(a.multiply(x, y)) != rhs) return false;
    }
  return true;
}

// Every linear map on a tiny algebra, counted by the Leibniz rule.
std::size_t der_dim_by_enumeration(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::size_t c = oracle::count(a.field(), n * n, [&](const Vec& v) {
    Mat m(a.field(), n, n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = v[i];
    return leibniz_by_table(a, m);
  });
  return oracle::log_p(a.p(), c);
}

}  // namespace

TEST(Derivations, DimensionMatchesEnumerationOnTinyAlgebras) {
  for (const Algebra& a : {truncated_polynomial(3, {1}), split_semisimple(3, 2), split_semisimple(3, 3)}) {
    const std::size_t expected = der_dim_by_enumeration(a);
    EXPECT_EQ(derivation_space_dense(a).dim(), expected) << a.name();
  }
}

TEST(Derivations, GeneratorSolveMatchesDenseSolve) {
  for (const Algebra& a : {smash_product(3, 1, 1).algebra, smash_product(3, 2, 1).algebra, smash_product(3, 1, 2).algebra,
                           truncated_polynomial(3, {2}), truncated_polynomial(3, {1, 1}), kronecker_algebra(5),
                           quiver_algebra(3, trivial_extension_kronecker_quiver(3)), u0_borel(3, 1)}) {
    if (!a.presentation()) continue;
    const Subspace dense = derivation_space_dense(a);
    EXPECT_TRUE(dense == derivation_space_generators(a)) << a.name();
    for (const auto& d : derivations_of(a, dense)) EXPECT_TRUE(leibniz_by_table(a, d.map)) << a.name();
  }
}

TEST(Derivations, InnerMatchesRegularRepresentations) {
  const Algebra a = quiver_algebra(3, trivial_extension_kronecker_quiver(3));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Vec x = random_vector(a.field(), a.dim(), rng);
    const Derivation d = inner(a, x);
    for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_EQ(d(a.basis(i)), a.commutator(x, a.basis(i)));
    EXPECT_TRUE(is_derivation(a, d));
  }
}

TEST(Derivations, LeibnizDefectReportsWitness) {
  const Algebra a = truncated_polynomial(3, {1});
  Mat m = Mat::identity(a.field(), 3);
  const Derivation d{m};
  EXPECT_FALSE(is_derivation(a, d));
  EXPECT_TRUE(leibniz_defect(a, d).has_value());
}

TEST(HH1, KnownDimensions) {
  struct Case {
    Algebra a;
    std::size_t der, ider, hh;
  };
  const std::vector<Case> cases{
      {truncated_polynomial(3, {1}), 3, 0, 3},
      {truncated_polynomial(3, {2}), 9, 0, 9},
      {truncated_polynomial(3, {1, 1}), 18, 0, 18},
      {kronecker_algebra(3), 6, 3, 3},
      {quiver_algebra(3, trivial_extension_kronecker_quiver(3)), 9, 5, 4},
      {quiver_algebra(5, trivial_extension_kronecker_quiver(5)), 9, 5, 4},
      {smash_product(3, 2, 1).algebra, 27, 24, 3},
      {smash_product(3, 1, 2).algebra, 27, 26, 1},
      {smash_product(5, 1, 1).algebra, 25, 24, 1},
  };
  for (const auto& c : cases) {
    const HH1Presentation h = first_cohomology(c.a);
    EXPECT_EQ(h.der.dim(), c.der) << c.a.name();
    EXPECT_EQ(h.ider.dim(), c.ider) << c.a.name();
    EXPECT_EQ(h.dim(), c.hh) << c.a.name();
    EXPECT_EQ(h.ider.dim(), c.a.dim() - center(c.a).dim()) << c.a.name();
  }
}

TEST(HH1, ProjectionAndRepresentativesRoundTrip) {
  const HH1Presentation h = first_cohomology(quiver_algebra(3, trivial_extension_kronecker_quiver(3)));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Vec c = random_vector(h.field, h.dim(), rng);
    EXPECT_EQ(h.project(h.representative(c)), c);
  }
  EXPECT_TRUE(h.is_inner(inner(quiver_algebra(3, trivial_extension_kronecker_quiver(3)), Vec{0, 1, 1, 0, 0, 0, 0, 0})));
}

TEST(HH1, SmashComplementIsNamedOuterDerivations) {
  const SmashAlgebra s = smash_product(3, 2, 1);
  const HH1Presentation h = first_cohomology_smash(s);
  ASSERT_EQ(h.dim(), 3u);
  EXPECT_EQ(h.labels, (std::vector<std::string>{"g_{0,0}", "g_{0,1}", "g_{0,2}"}));
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(h.complement[j] == named_outer(s, 0, j));
  EXPECT_TRUE(verify_complement(s).ok());
}

TEST(HH1, NamedOuterRejectsOutOfRangeIndex) {
  const SmashAlgebra s = smash_product(3, 1, 1);
  EXPECT_TRUE(outer_index_valid(s.descriptor, 0));
  EXPECT_FALSE(outer_index_valid(s.descriptor, 1));
  EXPECT_THROW(named_outer(s, 0, 1), std::out_of_range);
  EXPECT_THROW(named_inner(s, 0, 3), std::out_of_range);
}

TEST(HH1, NamedInnerIsAdOfMonomial) {
  const SmashAlgebra s = smash_product(3, 1, 2);
  const auto& d = s.descriptor;
  for (std::int64_t l = 0; l < 9; ++l)
    for (std::size_t j = 0; j < 3; ++j) {
      Vec m(d.dim(), 0);
      m[d.index(l, j)] = 1;
      EXPECT_TRUE(named_inner(s, l, j) == inner(s.algebra, m));
    }
}
