#include <gtest/gtest.h>

#include "hh1/constructions.hpp"
#include "hh1/structure.hpp"
#include "oracles.hpp"

using namespace hh1;

namespace {

// Associativity on all basis triples, straight from the table.
bool associative_by_table(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.multiply(a.multiply(a.basis(i), a.basis(j)), a.basis(k)) !=
            a.multiply(a.basis(i), a.multiply(a.basis(j), a.basis(k))))
          return false;
  return true;
}

std::size_t center_dim_by_enumeration(const Algebra& a) {
  const std::size_t c = oracle::count(a.field(), a.dim(), [&](const Vec& v) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!is_zero(a.commutator(v, a.basis(i)))) return false;
    return true;
  });
  return oracle::log_p(a.p(), c);
}

}  // namespace

TEST(Constructions, Dimensions) {
  EXPECT_EQ(smash_product(3, 2, 1).algebra.dim(), 27u);
  EXPECT_EQ(smash_product(3, 1, 2).algebra.dim(), 27u);
  EXPECT_EQ(smash_product(5, 1, 1).algebra.dim(), 25u);
  EXPECT_EQ(truncated_polynomial(3, {2}).dim(), 9u);
  EXPECT_EQ(truncated_polynomial(3, {1, 2}).dim(), 27u);
  EXPECT_EQ(kronecker_algebra(3).dim(), 4u);
  EXPECT_EQ(quiver_algebra(3, trivial_extension_kronecker_quiver(3)).dim(), 8u);
  EXPECT_EQ(trivial_extension(kronecker_algebra(5)).dim(), 8u);
  EXPECT_EQ(u0_borel(3, 1).dim(), 9u);
  EXPECT_EQ(split_semisimple(3, 3).dim(), 3u);
}

TEST(Constructions, TablesAreAssociativeWithUnit) {
  for (const Algebra& a : {smash_product(3, 1, 1).algebra, smash_product(3, 1, 2).algebra, truncated_polynomial(3, {1, 1}),
                           kronecker_algebra(3), quiver_algebra(5, trivial_extension_kronecker_quiver(5)),
                           trivial_extension(kronecker_algebra(3)), u0_borel(3, 1)}) {
    EXPECT_TRUE(associative_by_table(a)) << a.name();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      EXPECT_EQ(a.multiply(a.unit(), a.basis(i)), a.basis(i)) << a.name();
      EXPECT_EQ(a.multiply(a.basis(i), a.unit()), a.basis(i)) << a.name();
    }
  }
}

TEST(Constructions, SmashProductRule) {
  // (u_l x^i)(u_m x^j) = [l = m + i] u_l x^{i+j}, read off the labels.
  const SmashAlgebra s = smash_product(3, 1, 2);
  const auto& d = s.descriptor;
  for (std::size_t l = 0; l < d.characters; ++l)
    for (std::size_t i = 0; i < d.nilpotency; ++i)
      for (std::size_t m = 0; m < d.characters; ++m)
        for (std::size_t j = 0; j < d.nilpotency; ++j) {
          Vec expected(d.dim(), 0);
          if ((m + i) % d.characters == l && i + j < d.nilpotency) expected[d.index(l, i + j)] = 1;
          EXPECT_EQ(s.algebra.multiply(s.algebra.basis(d.index(l, i)), s.algebra.basis(d.index(m, j))), expected);
        }
}

TEST(Constructions, RejectsNonAssociativeTable) {
  const Field F(3);
  // e0 = 1, e1 e1 = e2, e2 e1 = e1, e1 e2 = 0.
  std::vector<StructureConstant> m{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 2, 2, 1},
                                   {2, 0, 2, 1}, {1, 1, 2, 1}, {2, 1, 1, 1}};
  EXPECT_THROW(make_algebra(F, {"1", "a", "b"}, m, Vec{1, 0, 0}), AssociativityViolation);
  EXPECT_THROW(make_algebra(F, {"1", "a"}, {{0, 0, 0, 1}}, Vec{1, 0}), UnitViolation);
}

TEST(Constructions, QuiverRejectsBadArrows) {
  QuiverPresentation q;
  q.vertices = 1;
  q.arrows = {{0, 3, "a"}};
  EXPECT_THROW(quiver_algebra(3, q), QuiverError);
}

TEST(Structure, CenterAgreesWithEnumeration) {
  for (const Algebra& a : {smash_product(3, 1, 1).algebra, quiver_algebra(3, trivial_extension_kronecker_quiver(3)),
                           trivial_extension(kronecker_algebra(3)), kronecker_algebra(3), u0_borel(3, 1),
                           truncated_polynomial(3, {2})})
    EXPECT_EQ(center(a).dim(), center_dim_by_enumeration(a)) << a.name();
}

TEST(Structure, TrivialExtensionOfKroneckerHasThreeDimensionalCenter) {
  // Spanned by 1, e1* and e2*.
  const Algebra te = trivial_extension(kronecker_algebra(3));
  const Subspace z = center(te);
  EXPECT_EQ(z.dim(), 3u);
  EXPECT_TRUE(z.contains(te.basis(4)));
  EXPECT_TRUE(z.contains(te.basis(5)));
  EXPECT_TRUE(z.contains(te.unit()));
}

TEST(Structure, RadicalOfTruncatedPolynomialRing) {
  const Algebra a = truncated_polynomial(3, {1, 1});
  const auto r = radical_checks(a);
  EXPECT_EQ(r.J.dim(), 8u);
  EXPECT_EQ(r.J_squared.dim(), 6u);  // monomials of total degree >= 2
  EXPECT_EQ(r.commutator.dim(), 0u);
  EXPECT_TRUE(r.commutator_in_J2);
  EXPECT_EQ(r.nilpotency_index, 5u);
}

TEST(Structure, SymmetricFormIsAssociativeOnBasis) {
  for (const Algebra& a : {truncated_polynomial(3, {2}), truncated_polynomial(5, {1, 1}),
                           quiver_algebra(3, trivial_extension_kronecker_quiver(3))}) {
    const auto f = symmetric_form_search(a, 64, 1);
    ASSERT_TRUE(f.has_value()) << a.name();
    const Field& F = a.field();
    EXPECT_EQ(rank(f->gram), a.dim());
    auto g = [&](const Vec& x, const Vec& y) { return dot(F, x, f->gram.apply(y)); };
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        EXPECT_EQ(f->gram(i, j), f->gram(j, i));
        for (std::size_t k = 0; k < a.dim(); ++k)
          EXPECT_EQ(g(a.multiply(a.basis(i), a.basis(j)), a.basis(k)), g(a.basis(i), a.multiply(a.basis(j), a.basis(k))));
      }
  }
}

TEST(Structure, KroneckerAlgebraHasNoSymmetricForm) {
  EXPECT_FALSE(symmetric_form_search(kronecker_algebra(3), 64, 1).has_value());
}

TEST(Structure, BlockDecompositions) {
  const auto ss = block_decomposition(split_semisimple(3, 3));
  ASSERT_EQ(ss.size(), 3u);
  for (const auto& b : ss) EXPECT_EQ(b.algebra.dim(), 1u);
  const auto ub = block_decomposition(u0_borel(3, 1));
  ASSERT_EQ(ub.size(), 1u);
  EXPECT_EQ(ub[0].algebra.dim(), 9u);
  EXPECT_EQ(block_decomposition(smash_product(3, 1, 1).algebra).size(), 1u);
}

TEST(Structure, Isomorphisms) {
  const Algebra a = smash_product(3, 1, 1).algebra;
  EXPECT_TRUE(is_algebra_isomorphism(a, a, Mat::identity(a.field(), a.dim())));
  Mat swap = Mat::identity(a.field(), a.dim());
  swap(0, 0) = 0;
  swap(1, 1) = 0;
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_FALSE(is_algebra_isomorphism(a, a, swap));
}
