#pragma once

#include <optional>
#include <string>
#include <vector>

#include "restricted_lie.hpp"

namespace hh1 {

// Isomorphism-invariant summary used to recognise the standard models.
struct Fingerprint {
  std::uint32_t p = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> derived_series;
  std::vector<std::size_t> lower_central_series;
  std::size_t center_dim = 0;
  bool is_simple = false;
  std::size_t mu_greedy = 0;
  std::optional<std::size_t> mu_exhaustive;
  std::optional<std::size_t> nullcone;  // |{x : x^[p] = 0}| when enumerable

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const RestrictedLie& L, std::uint64_t seed = 1) {
  Fingerprint f;
  f.p = L.p();
  f.dim = L.dim();
  f.derived_series = dims(derived_series(L));
  f.lower_central_series = dims(lower_central_series(L));
  f.center_dim = center(L).dim();
  f.is_simple = is_simple(L, seed);
  const auto e = enumerate_elements(L);
  const auto t = greedy_maximal_torus(L, seed, true, e ? &*e : nullptr);
  f.mu_greedy = t.greedy_dim;
  f.mu_exhaustive = t.exhaustive_dim;
  if (e) f.nullcone = e->nullcone;
  return f;
}

inline bool same_fingerprint(const RestrictedLie& a, const RestrictedLie& b) { return fingerprint(a) == fingerprint(b); }

// Jacobson-Witt algebra W_n = Der of the truncated polynomial ring B_n.
inline RestrictedLie witt(std::uint32_t p, unsigned n) {
  return from_hh1(first_cohomology(truncated_polynomial(p, std::vector<unsigned>(n, 1))));
}

inline Mat matrix_unit(const Field& F, std::size_t n, std::size_t i, std::size_t j) {
  Mat m(F, n, n);
  m(i, j) = 1;
  return m;
}

inline RestrictedLie sl2(std::uint32_t p) {
  const Field F(p);
  Mat h = matrix_unit(F, 2, 0, 0) - matrix_unit(F, 2, 1, 1);
  return matrix_lie(F, {matrix_unit(F, 2, 0, 1), h, matrix_unit(F, 2, 1, 0)}, {"e", "h", "f"}, "sl2");
}

inline RestrictedLie gl2(std::uint32_t p) {
  const Field F(p);
  return matrix_lie(F,
                    {matrix_unit(F, 2, 0, 0), matrix_unit(F, 2, 0, 1), matrix_unit(F, 2, 1, 0), matrix_unit(F, 2, 1, 1)},
                    {"E11", "E12", "E21", "E22"}, "gl2");
}

// Special derivation x^alpha d_k of truncated_polynomial(p, exponents).
inline Derivation monomial_derivation(const Algebra& trunc, const std::vector<unsigned>& exponents,
                                      const std::vector<std::size_t>& alpha, std::size_t k) {
  const std::size_t nv = exponents.size();
  const std::uint32_t p = trunc.p();
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = nv; i-- > 0;) {
    const std::size_t bound = ipow(p, exponents[i]);
    if (alpha[i] >= bound) throw std::out_of_range("monomial exponent exceeds truncation");
    idx += alpha[i] * stride;
    stride *= bound;
  }
  std::vector<Vec> values(nv, Vec(trunc.dim(), 0));
  values.at(k) = trunc.basis(idx);
  return derivation_from_generator_values(trunc, values);
}

struct NilIdealWitness {
  HH1Presentation hh1;
  RestrictedLie lie;
  Subspace n_ideal;
  bool is_ideal = false;
  bool is_p_nilpotent = false;
  std::optional<QuotientLie> quotient;
};

// The span of x^alpha d_k with some alpha_i >= p inside HH^1 of a
// truncated polynomial ring, together with the quotient by it.
inline NilIdealWitness nil_ideal_witness(std::uint32_t p, const std::vector<unsigned>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("nil_ideal_witness needs at least one variable");
  const Algebra a = truncated_polynomial(p, exponents);
  HH1Presentation h = first_cohomology(a);
  RestrictedLie L = from_hh1(h);
  const std::size_t nv = exponents.size();
  std::vector<std::size_t> bound(nv);
  for (std::size_t i = 0; i < nv; ++i) bound[i] = ipow(p, exponents[i]);

  std::vector<Vec> gens;
  std::vector<std::size_t> alpha(nv, 0);
  while (true) {
    bool big = false;
    for (std::size_t i = 0; i < nv; ++i) big = big || alpha[i] >= p;
    if (big)
      for (std::size_t k = 0; k < nv; ++k) gens.push_back(*h.project(monomial_derivation(a, exponents, alpha, k)));
    std::size_t i = 0;
    while (i < nv && ++alpha[i] == bound[i]) alpha[i++] = 0;
    if (i == nv) break;
  }
  Subspace N = Subspace::span(a.field(), L.dim(), gens);
  NilIdealWitness w{std::move(h), L, N, is_ideal(L, N), false, std::nullopt};
  bool nil = w.is_ideal && is_p_closed(L, N);
  if (nil) {
    const SubLie sub = subalgebra(L, N);
    nil = is_nilpotent(sub.lie);
    for (const auto& v : N.basis()) nil = nil && is_p_nilpotent(L, v);
  }
  w.is_p_nilpotent = nil;
  if (w.is_ideal && is_p_closed(L, N)) w.quotient = quotient(L, N);
  return w;
}

}  // namespace hh1
