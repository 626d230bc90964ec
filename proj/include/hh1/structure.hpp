#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace hh1 {

// Z(A): solutions of z e_i = e_i z for every basis element.
inline Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  SparseKernel ker(a.field(), n);
  const Field& F = a.field();
  // coefficient of e_k in z e_i - e_i z = sum_m z_m (c_{m i}^k - c_{i m}^k)
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseRow> eq(n);
    for (std::size_t m = 0; m < n; ++m) {
      for (const auto& t : a.product(m, i)) eq[t.index].emplace_back(m, t.coef);
      for (const auto& t : a.product(i, m)) eq[t.index].emplace_back(m, F.neg(t.coef));
    }
    for (const auto& row : eq)
      if (!row.empty()) ker.add_equation(row);
  }
  return ker.solution();
}

inline Subspace span_of_products(const Algebra& a, const std::vector<Vec>& left, const std::vector<Vec>& right) {
  std::vector<Vec> gens;
  for (const auto& x : left)
    for (const auto& y : right) {
      Vec z = a.multiply(x, y);
      if (!is_zero(z)) gens.push_back(std::move(z));
    }
  return Subspace::span(a.field(), a.dim(), gens);
}

inline std::vector<Vec> basis_vectors(const Algebra& a) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < a.dim(); ++i) b.push_back(a.basis(i));
  return b;
}

// Two-sided ideal generated by `gens`.
inline Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens) {
  Subspace I = Subspace::span(a.field(), a.dim(), gens);
  const auto B = basis_vectors(a);
  for (;;) {
    Subspace next = I.sum(span_of_products(a, B, I.basis())).sum(span_of_products(a, I.basis(), B));
    if (next.dim() == I.dim()) return I;
    I = std::move(next);
  }
}

// [A, A] as the span of e_i e_j - e_j e_i.
inline Subspace commutator_subspace(const Algebra& a) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vec c = a.commutator(a.basis(i), a.basis(j));
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  return Subspace::span(a.field(), a.dim(), gens);
}

class RadicalUnavailable : public AlgebraError {
 public:
  RadicalUnavailable() : AlgebraError("algebra carries neither a counit nor radical generators") {}
};

class RadicalInvalid : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Primitive idempotents of a commutative algebra in which y^p = y modulo
// `modulo` for all y in span(generators). Each basis element of the span
// refines the current idempotents by Lagrange interpolation at its eigenvalues.
inline std::vector<Vec> split_idempotents(const Algebra& a, const std::vector<Vec>& generators,
                                          const Subspace& modulo) {
  const Field& F = a.field();
  std::vector<Vec> idem{a.unit()};
  for (const auto& y : generators) {
    std::vector<Vec> refined;
    for (const auto& e : idem) {
      const Vec ey = a.multiply(e, y);
      for (Elem c = 0; c < F.p(); ++c) {
        Vec part = e;
        for (Elem c2 = 0; c2 < F.p(); ++c2) {
          if (c2 == c) continue;
          // (y - c2) / (c - c2) restricted to e
          Vec factor = sub(F, ey, scale(F, c2, e));
          part = scale(F, F.inv(F.sub(c, c2)), a.multiply(part, factor));
        }
        if (!modulo.contains(part)) refined.push_back(std::move(part));
      }
    }
    idem = std::move(refined);
  }
  return idem;
}

struct RadicalReport {
  Subspace commutator;
  Subspace J;
  Subspace J_squared;
  bool commutator_in_J2 = false;  // [A,A] inside J^2
  std::size_t nilpotency_index = 0;
  std::vector<Vec> quotient_idempotents;
};

// J(A) from the counit (local case) or the supplied radical generators; J is
// verified nilpotent and A/J verified to be a product of copies of GF(p).
inline RadicalReport radical_checks(const Algebra& a) {
  const Field& F = a.field();
  const std::size_t n = a.dim();
  RadicalReport rep;
  if (a.counit()) {
    rep.J = kernel(Mat::from_rows(F, n, {*a.counit()}));
  } else if (a.radical_gens()) {
    rep.J = two_sided_ideal(a, *a.radical_gens());
  } else {
    throw RadicalUnavailable();
  }

  Subspace power = rep.J;
  std::size_t k = 1;
  while (power.dim() > 0) {
    if (k > n + 1) throw RadicalInvalid("supplied radical is not nilpotent");
    power = span_of_products(a, power.basis(), rep.J.basis());
    ++k;
  }
  rep.nilpotency_index = k;
  rep.J_squared = span_of_products(a, rep.J.basis(), rep.J.basis());

  // A/J must be commutative with Frobenius the identity, i.e. GF(p)^m.
  const auto B = basis_vectors(a);
  std::vector<Vec> complement = Subspace::full(F, n).quotient_basis(rep.J);
  for (const auto& x : complement)
    for (const auto& y : complement)
      if (!rep.J.contains(a.commutator(x, y))) throw RadicalInvalid("A/J is not commutative");
  for (const auto& x : complement)
    if (!rep.J.contains(sub(F, a.power(x, F.p()), x)))
      throw RadicalInvalid("A/J is not split semisimple over the prime field");
  rep.quotient_idempotents = split_idempotents(a, complement, rep.J);
  if (rep.quotient_idempotents.size() != complement.size())
    throw RadicalInvalid("A/J does not split into one-dimensional blocks");

  rep.commutator = commutator_subspace(a);
  rep.commutator_in_J2 = rep.J_squared.contains(rep.commutator);
  return rep;
}

class NonSplitCenter : public AlgebraError {
 public:
  NonSplitCenter() : AlgebraError("semisimple quotient of the center does not split over GF(p)") {}
};

struct Block {
  Vec idempotent;
  Algebra algebra;
  Mat embedding;  // columns: block basis inside A
};

// Corner algebra eAe with basis the echelon basis of span{e b e}.
inline Block corner_algebra(const Algebra& a, const Vec& e, const std::string& name) {
  const Field& F = a.field();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.multiply(a.multiply(e, a.basis(i)), e));
  const auto basis = Subspace::span(F, a.dim(), gens).basis();
  Coordinatizer coords(F, a.dim(), basis);
  const std::size_t m = basis.size();
  std::vector<StructureConstant> mult;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec c = *coords(a.multiply(basis[i], basis[j]));
      for (std::size_t k = 0; k < m; ++k)
        if (c[k]) mult.push_back({i, j, k, c[k]});
    }
  std::vector<std::string> labels;
  for (const auto& v : basis) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i]) continue;
      if (!s.empty()) s += "+";
      if (v[i] != 1) s += std::to_string(v[i]);
      s += a.labels()[i];
    }
    labels.push_back(s);
  }
  std::optional<std::vector<Vec>> radical;
  if (a.radical_gens() || a.counit()) {
    const Subspace J = a.counit() ? kernel(Mat::from_rows(F, a.dim(), {*a.counit()}))
                                  : two_sided_ideal(a, *a.radical_gens());
    radical.emplace();
    for (const auto& v : J.basis()) {
      Vec c = a.multiply(a.multiply(e, v), e);
      if (!is_zero(c)) radical->push_back(*coords(c));
    }
  }
  std::optional<Vec> counit;
  if (a.counit() && e == a.unit()) {
    counit.emplace(m, 0);
    for (std::size_t i = 0; i < m; ++i) (*counit)[i] = dot(F, *a.counit(), basis[i]);
  }
  Algebra block = make_algebra(F, labels, mult, *coords(e), radical, counit, std::nullopt, name);
  return {e, std::move(block), Mat::from_columns(F, a.dim(), basis)};
}

// Primitive central idempotents: J(Z) is the kernel of z -> z^{p^e} on Z,
// idempotents of Z/J(Z) come from eigenvalue splitting and are lifted with
// e <- 3e^2 - 2e^3.
inline std::vector<Block> block_decomposition(const Algebra& a) {
  const Field& F = a.field();
  const Subspace Z = center(a);
  std::uint64_t q = F.p();
  while (q < Z.dim()) q *= F.p();

  // On the commutative algebra Z, Frobenius is GF(p)-linear.
  std::vector<Vec> frob;
  for (const auto& z : Z.basis()) frob.push_back(a.power(z, q));
  Mat fm(F, Z.dim(), Z.dim());
  for (std::size_t j = 0; j < Z.dim(); ++j) fm.set_column(j, *Z.coordinates(frob[j]));
  std::vector<Vec> jz;
  const Subspace jker = kernel(fm);
  for (const auto& c : jker.basis()) {
    Vec z(a.dim(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) axpy(F, c[i], Z.basis()[i], z);
    jz.push_back(std::move(z));
  }
  const Subspace JZ = Subspace::span(F, a.dim(), jz);

  const auto reps = Z.quotient_basis(JZ);
  for (const auto& z : reps)
    if (!JZ.contains(sub(F, a.power(z, F.p()), z))) throw NonSplitCenter();

  std::vector<Block> blocks;
  const auto approx = split_idempotents(a, reps, JZ);
  for (std::size_t b = 0; b < approx.size(); ++b) {
    Vec e = approx[b];
    for (;;) {
      const Vec e2 = a.multiply(e, e);
      const Vec next = sub(F, scale(F, 3, e2), scale(F, 2, a.multiply(e2, e)));
      if (next == e) break;
      e = next;
    }
    blocks.push_back(corner_algebra(a, e, a.name() + "[block " + std::to_string(b) + "]"));
  }
  return blocks;
}

// Bilinear form stored as its Gram matrix.
struct SymmetricForm {
  Mat gram;
};

inline bool is_symmetric_associative(const Algebra& a, const Mat& g) {
  const std::size_t n = a.dim();
  if (!(g == g.transpose())) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ij = a.multiply(a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        // B(e_i e_j, e_k) == B(e_i, e_j e_k)
        Elem lhs = 0, rhs = 0;
        for (std::size_t m = 0; m < n; ++m)
          if (ij[m]) lhs = a.field().add(lhs, a.field().mul(ij[m], g(m, k)));
        for (const auto& t : a.product(j, k)) rhs = a.field().add(rhs, a.field().mul(t.coef, g(i, t.index)));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

// Space of symmetric associative forms B(ab,c) = B(a,bc), B(a,b) = B(b,a),
// then seeded sampling for a nondegenerate member. A miss is inconclusive.
inline std::optional<SymmetricForm> symmetric_form_search(const Algebra& a, std::size_t trials, std::uint64_t seed) {
  const Field& F = a.field();
  const std::size_t n = a.dim();
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
  SparseKernel ker(F, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ker.add_equation({{var(i, j), 1}, {var(j, i), F.neg(1)}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        SparseRow row;
        for (const auto& t : a.product(i, j)) row.emplace_back(var(t.index, k), t.coef);
        for (const auto& t : a.product(j, k)) row.emplace_back(var(i, t.index), F.neg(t.coef));
        if (!row.empty()) ker.add_equation(row);
      }
  const Subspace forms = ker.solution();
  if (forms.dim() == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Vec coeffs = random_vector(F, forms.dim(), rng);
    Vec flat(n * n, 0);
    for (std::size_t b = 0; b < forms.dim(); ++b) axpy(F, coeffs[b], forms.basis()[b], flat);
    Mat g(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = flat[var(i, j)];
    if (rank(g) == n) return SymmetricForm{std::move(g)};
  }
  return std::nullopt;
}

}  // namespace hh1
