#include <gtest/gtest.h>

#include <random>

#include "hh1/linalg.hpp"
#include "hh1/meataxe.hpp"
#include "oracles.hpp"

using namespace hh1;

namespace {

Mat random_mat(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng, unsigned sparsity = 0) {
  Mat m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!sparsity || rng() % sparsity == 0) m(i, j) = F.random(rng);
  return m;
}

}  // namespace

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(Field(4), FieldError);
  EXPECT_THROW(Field(1), FieldError);
  EXPECT_THROW(Field(2), FieldError);
  EXPECT_NO_THROW(Field(3));
  EXPECT_TRUE(is_prime(5));
  EXPECT_FALSE(is_prime(9));
}

TEST(Field, ArithmeticMatchesIntegerModulo) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field F(p);
    for (Elem a = 0; a < p; ++a)
      for (Elem b = 0; b < p; ++b) {
        EXPECT_EQ(F.add(a, b), (a + b) % p);
        EXPECT_EQ(F.sub(a, b), (a + p - b) % p);
        EXPECT_EQ(F.mul(a, b), (a * b) % p);
        if (b) {
          EXPECT_EQ(F.mul(F.div(a, b), b), a);
        }
      }
    EXPECT_THROW(F.inv(0), FieldError);
    EXPECT_EQ(F.reduce(-1), p - 1);
  }
}

// Rank, kernel and span sizes against enumeration of GF(3)^n.
TEST(Linalg, RankAndKernelAgreeWithEnumeration) {
  const Field F(3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const Mat m = random_mat(F, r, c, rng, t % 3 ? 0 : 2);
    const std::size_t zeros = oracle::count(F, c, [&](const Vec& v) { return is_zero(m.apply(v)); });
    const Subspace k = kernel(m);
    EXPECT_EQ(oracle::log_p(3, zeros), k.dim());
    EXPECT_EQ(rank(m) + k.dim(), c);
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m.apply(v)));
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(m.row_vec(i));
    EXPECT_EQ(oracle::log_p(3, oracle::all_combinations(F, c, rows).size()), rank(m));
  }
}

TEST(Linalg, SubspaceSumAndIntersectionAgreeWithEnumeration) {
  const Field F(3);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<Vec> a, b;
    for (std::size_t i = 0, k = rng() % 3; i < k; ++i) a.push_back(random_vector(F, n, rng));
    for (std::size_t i = 0, k = 1 + rng() % 2; i < k; ++i) b.push_back(random_vector(F, n, rng));
    const Subspace A = Subspace::span(F, n, a), B = Subspace::span(F, n, b);
    const auto ea = oracle::all_combinations(F, n, a), eb = oracle::all_combinations(F, n, b);
    std::vector<Vec> both;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(both));
    EXPECT_EQ(oracle::log_p(3, both.size()), A.intersection(B).dim());
    std::vector<Vec> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(oracle::log_p(3, oracle::all_combinations(F, n, ab).size()), A.sum(B).dim());
    for (const auto& v : ea) EXPECT_TRUE(A.contains(v));
    EXPECT_EQ(A.quotient_basis(A.intersection(B)).size(), A.dim() - A.intersection(B).dim());
  }
}

TEST(Linalg, CoordinatesReconstructVectors) {
  const Field F(5);
  std::mt19937_64 rng(13);
  std::vector<Vec> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_vector(F, 6, rng));
  const Subspace S = Subspace::span(F, 6, gens);
  Coordinatizer C(F, 6, S.basis());
  for (int t = 0; t < 50; ++t) {
    const Vec c = random_vector(F, S.dim(), rng);
    Vec v(6, 0);
    for (std::size_t i = 0; i < S.dim(); ++i) v = add(F, v, scale(F, c[i], S.basis()[i]));
    EXPECT_EQ(C(v), c);
    EXPECT_EQ(S.coordinates(v), c);
  }
  Vec outside(6, 0);
  while (S.contains(outside)) outside = random_vector(F, 6, rng);
  EXPECT_FALSE(C(outside).has_value());
  EXPECT_THROW(Coordinatizer(F, 6, {gens[0], gens[0]}), DimensionError);
}

TEST(Linalg, SparseKernelMatchesDenseKernel) {
  const Field F(3);
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    const Mat m = random_mat(F, r, c, rng, 3);
    SparseKernel sk(F, c);
    for (std::size_t i = 0; i < r; ++i) {
      SparseRow row;
      for (std::size_t j = 0; j < c; ++j)
        if (m(i, j)) row.emplace_back(j, m(i, j));
      sk.add_equation(row);
    }
    EXPECT_TRUE(sk.solution() == kernel(m));
  }
}

TEST(Linalg, MatrixPowerMatchesRepeatedProduct) {
  const Field F(5);
  std::mt19937_64 rng(15);
  const Mat m = random_mat(F, 4, 4, rng);
  Mat acc = Mat::identity(F, 4);
  for (int e = 0; e < 9; ++e) {
    EXPECT_EQ(m.pow(e).data(), acc.data());
    acc = acc * m;
  }
}

TEST(Linalg, DimensionMismatchThrows) {
  const Field F(3);
  EXPECT_THROW(Mat(F, 2, 3) * Mat(F, 2, 3), DimensionError);
  EXPECT_THROW(Subspace::span(F, 3, {Vec{1, 0}}), DimensionError);
}

TEST(Polynomials, CharacteristicPolynomialMatchesCofactorDeterminant) {
  const Field F(5);
  std::mt19937_64 rng(16);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Mat m = random_mat(F, n, n, rng, t % 2 ? 0 : 2);
    const auto chi = characteristic_polynomial(m);
    ASSERT_EQ(poly::degree(chi), static_cast<long>(n));
    for (Elem s = 0; s < 5; ++s) {
      std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = F.sub(i == j ? s : 0, m(i, j));
      EXPECT_EQ(poly::evaluate(F, chi, s), oracle::det(F, rows));
    }
    EXPECT_TRUE(poly::evaluate(chi, m).is_zero());
  }
}

TEST(Polynomials, IrreducibleFactorsMultiplyToTheRadical) {
  const Field F(3);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    poly::Poly f;
    for (int i = 0, d = 1 + static_cast<int>(rng() % 8); i < d; ++i) f.push_back(F.random(rng));
    f.push_back(1);
    const auto factors = poly::irreducible_factors(F, f);
    poly::Poly prod{1};
    for (const auto& g : factors) {
      prod = poly::mul(F, prod, g);
      EXPECT_TRUE(poly::mod(F, f, g).empty());
      // No root-free factor of degree <= 3 splits further: check by brute force over roots.
      if (poly::degree(g) <= 3 && poly::degree(g) > 1) {
        for (Elem s = 0; s < 3; ++s) EXPECT_NE(poly::evaluate(F, g, s), 0);
      }
    }
    EXPECT_EQ(prod, poly::radical(F, f));
  }
}

TEST(Meataxe, NaturalModuleOfSl2IsIrreducible) {
  const Field F(3);
  Mat e(F, 2, 2), f(F, 2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  const auto r = meataxe(F, 2, {e, f});
  EXPECT_TRUE(r.irreducible);
}

TEST(Meataxe, UpperTriangularActionHasInvariantLine) {
  const Field F(5);
  std::mt19937_64 rng(18);
  std::vector<Mat> gens;
  for (int i = 0; i < 3; ++i) {
    Mat m = random_mat(F, 4, 4, rng);
    for (std::size_t r = 2; r < 4; ++r)
      for (std::size_t c = 0; c < 2; ++c) m(r, c) = 0;
    gens.push_back(m);
  }
  const auto res = meataxe(F, 4, gens, 3);
  ASSERT_FALSE(res.irreducible);
  ASSERT_TRUE(res.invariant.has_value());
  const Subspace& W = *res.invariant;
  EXPECT_GT(W.dim(), 0u);
  EXPECT_LT(W.dim(), 4u);
  for (const auto& g : gens)
    for (const auto& v : W.basis()) EXPECT_TRUE(W.contains(g.apply(v)));
}
