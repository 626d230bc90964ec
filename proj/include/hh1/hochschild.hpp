#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "structure.hpp"

namespace hh1 {

// Linear endomorphism of an algebra; column i holds f(e_i).
struct Derivation {
  Mat map;

  std::size_t dim() const { return map.rows(); }
  Vec operator()(const Vec& a) const { return map.apply(a); }
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

class DerivationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WellDefinednessFailure : public DerivationError {
 public:
  using DerivationError::DerivationError;
};

// Flattened coordinates: index i * dim + k is the e_k-coefficient of f(e_i).
inline Vec flatten(const Derivation& d) { return d.map.transpose().data(); }

inline Derivation unflatten(const Field& F, std::size_t n, const Vec& v) {
  Mat m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(k, i) = v[i * n + k];
  return {std::move(m)};
}

// First basis pair (i, j) where f(e_i e_j) != f(e_i) e_j + e_i f(e_j).
inline std::optional<std::pair<std::size_t, std::size_t>> leibniz_defect(const Algebra& a, const Derivation& f) {
  const Field& F = a.field();
  const std::size_t n = a.dim();
  if (f.dim() != n) throw DimensionError("derivation and algebra dimensions differ");
  std::vector<Vec> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = f.map.column(i);
  Vec acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (const auto& t : a.product(i, j)) axpy(F, t.coef, cols[t.index], acc);
      for (std::size_t m = 0; m < n; ++m) {
        if (const Elem c = cols[i][m])
          for (const auto& t : a.product(m, j)) acc[t.index] = F.sub(acc[t.index], F.mul(c, t.coef));
        if (const Elem c = cols[j][m])
          for (const auto& t : a.product(i, m)) acc[t.index] = F.sub(acc[t.index], F.mul(c, t.coef));
      }
      if (!is_zero(acc)) return std::make_pair(i, j);
    }
  return std::nullopt;
}

inline bool is_derivation(const Algebra& a, const Derivation& f) { return !leibniz_defect(a, f); }

// ad a : b -> ab - ba
inline Derivation inner(const Algebra& a, const Vec& x) {
  Mat m(a.field(), a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Vec c = sub(a.field(), a.right_basis_multiply(x, j), a.left_basis_multiply(j, x));
    m.set_column(j, c);
  }
  return {std::move(m)};
}

inline void require_compatible(const Derivation& f, const Derivation& g) {
  require_same_field(f.map.field(), g.map.field());
  if (f.dim() != g.dim()) throw DerivationError("derivations act on different algebras");
}

// [f, g] = f o g - g o f
inline Derivation bracket(const Derivation& f, const Derivation& g) {
  require_compatible(f, g);
  return {f.map * g.map - g.map * f.map};
}

inline Derivation p_power(const Derivation& f) { return {f.map.pow(f.map.field().p())}; }

inline Derivation combine(const Field& F, const std::vector<Derivation>& ds, const Vec& coeffs) {
  if (ds.empty()) throw DerivationError("empty combination");
  Mat m(F, ds.front().dim(), ds.front().dim());
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (coeffs[i]) m = m + ds[i].map.scaled(coeffs[i]);
  return {std::move(m)};
}

namespace detail {

struct ExpansionEntry {
  std::size_t unknown;  // generator * dim + m : coefficient m of f(generator)
  std::size_t target;
  Elem coef;
};

// D(w) for a word w, as a linear function of the generator values:
// D(s_1...s_L) = sum_i (s_1..s_{i-1}) D(s_i) (s_{i+1}..s_L).
inline std::vector<ExpansionEntry> expand_word(const Algebra& a, const Presentation& P,
                                               const Presentation::Word& w) {
  const Field& F = a.field();
  const std::size_t n = a.dim(), L = w.size();
  std::vector<Vec> prefix(L + 1), suffix(L + 1);
  prefix[0] = a.unit();
  for (std::size_t i = 0; i < L; ++i) prefix[i + 1] = a.multiply(prefix[i], P.generators[w[i]]);
  suffix[L] = a.unit();
  for (std::size_t i = L; i-- > 0;) suffix[i] = a.multiply(P.generators[w[i]], suffix[i + 1]);

  std::vector<ExpansionEntry> out;
  std::vector<std::pair<std::size_t, Elem>> nz_pre, nz_suf;
  for (std::size_t i = 0; i < L; ++i) {
    nz_pre.clear();
    nz_suf.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (prefix[i][k]) nz_pre.emplace_back(k, prefix[i][k]);
      if (suffix[i + 1][k]) nz_suf.emplace_back(k, suffix[i + 1][k]);
    }
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t unknown = w[i] * n + m;
      for (auto [a_idx, a_c] : nz_pre)
        for (const auto& t : a.product(a_idx, m))
          for (auto [b_idx, b_c] : nz_suf)
            for (const auto& u : a.product(t.index, b_idx))
              out.push_back({unknown, u.index, F.mul(F.mul(a_c, t.coef), F.mul(b_c, u.coef))});
    }
  }
  return out;
}

// Derivation matrix from generator values packed as generator * dim + m.
inline Derivation extend_from_generators(const Algebra& a, const std::vector<std::vector<ExpansionEntry>>& words,
                                         const Vec& values) {
  const Field& F = a.field();
  Mat m(F, a.dim(), a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (const auto& e : words[k])
      if (values[e.unknown]) m(e.target, k) = F.add(m(e.target, k), F.mul(e.coef, values[e.unknown]));
  return {std::move(m)};
}

inline std::vector<std::vector<ExpansionEntry>> basis_expansions(const Algebra& a) {
  const auto& P = *a.presentation();
  std::vector<std::vector<ExpansionEntry>> out;
  for (const auto& w : P.basis_words) out.push_back(expand_word(a, P, w));
  return out;
}

inline Subspace flat_span(const Algebra& a, const std::vector<Derivation>& ds) {
  std::vector<Vec> flat;
  for (const auto& d : ds) flat.push_back(flatten(d));
  return Subspace::span(a.field(), a.dim() * a.dim(), flat);
}

}  // namespace detail

// Der(A) by solving the Leibniz system on every basis pair (dim^2 unknowns).
inline Subspace derivation_space_dense(const Algebra& a) {
  const Field& F = a.field();
  const std::size_t n = a.dim();
  SparseKernel ker(F, n * n);
  auto var = [n](std::size_t i, std::size_t k) { return i * n + k; };
  std::vector<SparseRow> rows(n);
  // Pairs with i or j the unit-heavy indices first tend to cut the kernel fastest.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (auto& r : rows) r.clear();
      for (const auto& t : a.product(i, j))
        for (std::size_t k = 0; k < n; ++k) rows[k].emplace_back(var(t.index, k), t.coef);
      for (std::size_t m = 0; m < n; ++m) {
        for (const auto& t : a.product(m, j)) rows[t.index].emplace_back(var(i, m), F.neg(t.coef));
        for (const auto& t : a.product(i, m)) rows[t.index].emplace_back(var(j, m), F.neg(t.coef));
      }
      for (const auto& r : rows)
        if (!r.empty()) ker.add_equation(r);
    }
  return ker.solution();
}

// Der(A) through a generator presentation: unknowns are the values on the
// generators, constraints are that the induced derivation of the free
// algebra kills every relation. Each solution is checked against Leibniz on
// all basis pairs.
inline Subspace derivation_space_generators(const Algebra& a) {
  if (!a.presentation()) throw DerivationError("algebra has no generator presentation");
  const auto& P = *a.presentation();
  const Field& F = a.field();
  const std::size_t n = a.dim(), G = P.generators.size();
  SparseKernel ker(F, G * n);
  for (const auto& rel : P.relations) {
    std::vector<SparseRow> rows(n);
    for (const auto& [c, w] : rel.terms)
      for (const auto& e : detail::expand_word(a, P, w)) rows[e.target].emplace_back(e.unknown, F.mul(c, e.coef));
    for (const auto& r : rows)
      if (!r.empty()) ker.add_equation(r);
  }
  const Subspace sol = ker.solution();
  const auto words = detail::basis_expansions(a);
  std::vector<Derivation> ds;
  for (const auto& v : sol.basis()) {
    Derivation d = detail::extend_from_generators(a, words, v);
    if (auto bad = leibniz_defect(a, d))
      throw WellDefinednessFailure("generator solution violates Leibniz at (" + std::to_string(bad->first) + ", " +
                                   std::to_string(bad->second) + ")");
    ds.push_back(std::move(d));
  }
  return detail::flat_span(a, ds);
}

inline std::vector<Derivation> derivations_of(const Algebra& a, const Subspace& flat) {
  std::vector<Derivation> out;
  for (const auto& v : flat.basis()) out.push_back(unflatten(a.field(), a.dim(), v));
  return out;
}

// Canonical (echelon) basis of Der(A).
inline std::vector<Derivation> derivation_space(const Algebra& a) {
  return derivations_of(a, a.presentation() ? derivation_space_generators(a) : derivation_space_dense(a));
}

// Derivation with prescribed values on the presentation generators, extended
// to the basis words by the Leibniz rule and then validated.
inline Derivation derivation_from_generator_values(const Algebra& a, const std::vector<Vec>& values) {
  if (!a.presentation()) throw DerivationError("algebra has no generator presentation");
  const std::size_t n = a.dim();
  if (values.size() != a.presentation()->generators.size()) throw DerivationError("one value per generator expected");
  Vec packed;
  for (const auto& v : values) {
    if (v.size() != n) throw DimensionError("generator value has wrong length");
    packed.insert(packed.end(), v.begin(), v.end());
  }
  Derivation d = detail::extend_from_generators(a, detail::basis_expansions(a), packed);
  if (auto bad = leibniz_defect(a, d))
    throw WellDefinednessFailure("prescribed generator values do not extend to a derivation (pair " +
                                 std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")");
  return d;
}

inline Subspace inner_derivation_space(const Algebra& a) {
  std::vector<Derivation> ads;
  for (std::size_t i = 0; i < a.dim(); ++i) ads.push_back(inner(a, a.basis(i)));
  return detail::flat_span(a, ads);
}

// Echelon basis of IDer(A) = span{ad e_i}.
inline std::vector<Derivation> inner_derivations(const Algebra& a) {
  return derivations_of(a, inner_derivation_space(a));
}

// HH^1(A,A) = Der(A)/IDer(A) with a fixed complement of IDer in Der, and the
// bracket and p-map tables in complement coordinates.
class HH1Presentation {
 public:
  std::string algebra;
  std::size_t algebra_dim = 0;
  Field field;
  Subspace der, ider;  // flattened
  std::vector<Derivation> complement;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> bracket_table;  // [u][v] -> coordinates
  std::vector<Vec> pmap_table;

  std::size_t dim() const { return complement.size(); }

  // Class coordinates of a derivation; nullopt if it is not in Der.
  std::optional<Vec> project(const Derivation& d) const {
    const Vec flat = flatten(d);
    if (!der.contains(flat)) return std::nullopt;
    return (*coords_)(ider.reduce(flat));
  }

  bool is_inner(const Derivation& d) const { return ider.contains(flatten(d)); }

  Derivation representative(const Vec& coords) const {
    if (complement.empty()) return {Mat(field, algebra_dim, algebra_dim)};
    return combine(field, complement, coords);
  }

  void set_coordinatizer() {
    std::vector<Vec> residues;
    for (const auto& d : complement) residues.push_back(ider.reduce(flatten(d)));
    coords_.emplace(field, algebra_dim * algebra_dim, residues);
  }

 private:
  std::optional<Coordinatizer> coords_;
};

namespace detail {

inline void fill_tables(HH1Presentation& h, const std::vector<Derivation>& reps, std::vector<std::vector<Vec>>& br,
                        std::vector<Vec>& pm) {
  const std::size_t d = reps.size();
  br.assign(d, std::vector<Vec>(d));
  pm.assign(d, {});
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      auto c = h.project(bracket(reps[u], reps[v]));
      if (!c) throw DerivationError("bracket of derivations left Der(A)");
      br[u][v] = std::move(*c);
    }
    auto c = h.project(p_power(reps[u]));
    if (!c) throw DerivationError("p-th power of a derivation left Der(A)");
    pm[u] = std::move(*c);
  }
}

}  // namespace detail

// Build HH^1 with the given complement representatives. Tables are computed
// twice, the second time from representatives perturbed by seeded random
// inner derivations, and must agree.
inline HH1Presentation hh1_with_complement(const Algebra& a, const Subspace& der, std::vector<Derivation> reps,
                                           std::vector<std::string> labels, std::uint64_t seed = 0) {
  const Field& F = a.field();
  HH1Presentation h;
  h.algebra = a.name();
  h.algebra_dim = a.dim();
  h.field = F;
  h.der = der;
  h.ider = inner_derivation_space(a);
  if (!der.contains(h.ider)) throw DerivationError("inner derivations not contained in Der(A)");
  if (reps.size() + h.ider.dim() != der.dim())
    throw DerivationError("complement has dimension " + std::to_string(reps.size()) + ", expected " +
                          std::to_string(der.dim() - h.ider.dim()));
  for (const auto& r : reps)
    if (!der.contains(flatten(r))) throw DerivationError("complement representative is not a derivation");
  h.complement = std::move(reps);
  h.labels = std::move(labels);
  h.set_coordinatizer();  // throws if the residues are dependent, i.e. span meets IDer
  detail::fill_tables(h, h.complement, h.bracket_table, h.pmap_table);

  std::mt19937_64 rng(seed);
  std::vector<Derivation> perturbed;
  for (const auto& r : h.complement)
    perturbed.push_back({r.map + inner(a, random_vector(F, a.dim(), rng)).map});
  std::vector<std::vector<Vec>> br;
  std::vector<Vec> pm;
  detail::fill_tables(h, perturbed, br, pm);
  if (br != h.bracket_table || pm != h.pmap_table)
    throw DerivationError("HH^1 tables depend on the choice of representatives");
  return h;
}

// Complement chosen canonically: echelon basis of Der reduced modulo IDer.
inline HH1Presentation first_cohomology(const Algebra& a, std::uint64_t seed = 0) {
  const Subspace der = a.presentation() ? derivation_space_generators(a) : derivation_space_dense(a);
  const Subspace ider = inner_derivation_space(a);
  std::vector<Derivation> reps;
  std::vector<std::string> labels;
  for (const auto& v : der.quotient_basis(ider)) {
    labels.push_back("h" + std::to_string(reps.size()));
    reps.push_back(unflatten(a.field(), a.dim(), v));
  }
  return hh1_with_complement(a, der, std::move(reps), std::move(labels), seed);
}

// ad(u_lambda x^j)
inline Derivation named_inner(const SmashAlgebra& s, std::int64_t lambda, std::size_t j) {
  const auto& d = s.descriptor;
  if (j >= d.nilpotency) throw std::out_of_range("named_inner: j must be < p^n");
  return inner(s.algebra, s.algebra.basis(d.index(lambda, j)));
}

inline bool outer_index_valid(const SmashDescriptor& d, std::size_t j) { return j * d.characters + 1 <= d.nilpotency - 1; }

// g(u_mu) = 0 for all mu, g(x) = u_lambda x^{j p^r + 1}.
inline Derivation named_outer(const SmashAlgebra& s, std::int64_t lambda, std::size_t j) {
  const auto& d = s.descriptor;
  if (!outer_index_valid(d, j)) throw std::out_of_range("named_outer: need j p^r + 1 <= p^n - 1");
  const std::size_t n = s.algebra.dim();
  std::vector<Vec> values(d.characters + 1, Vec(n, 0));
  values[d.x_generator] = s.algebra.basis(d.index(lambda, j * d.characters + 1));
  return derivation_from_generator_values(s.algebra, values);
}

inline std::string outer_label(std::size_t j) { return "g_{0," + std::to_string(j) + "}"; }

// HH^1 of a smash algebra using H = {g_{0,j}} as the complement, cross-checked
// against the canonical pivot complement.
inline HH1Presentation first_cohomology_smash(const SmashAlgebra& s, std::uint64_t seed = 0) {
  const Algebra& a = s.algebra;
  const Subspace der = derivation_space_generators(a);
  std::vector<Derivation> reps;
  std::vector<std::string> labels;
  for (std::size_t j = 0; outer_index_valid(s.descriptor, j); ++j) {
    reps.push_back(named_outer(s, 0, j));
    labels.push_back(outer_label(j));
  }
  HH1Presentation h = hh1_with_complement(a, der, std::move(reps), std::move(labels), seed);
  if (der.quotient_basis(h.ider).size() != h.dim())
    throw DerivationError("outer complement and pivot complement have different dimensions");
  return h;
}

struct ComplementReport {
  std::size_t h_count = 0;
  std::size_t dim_der = 0;
  std::size_t dim_ider = 0;
  bool independent = false;
  bool meets_ider_trivially = false;
  bool spans_with_ider = false;
  bool sum_zero_combinations_inner = false;

  bool ok() const { return independent && meets_ider_trivially && spans_with_ider && sum_zero_combinations_inner; }
};

inline ComplementReport verify_complement(const SmashAlgebra& s) {
  const Algebra& a = s.algebra;
  const auto& d = s.descriptor;
  const Field& F = a.field();
  ComplementReport rep;
  const Subspace der = derivation_space_generators(a);
  const Subspace ider = inner_derivation_space(a);
  rep.dim_der = der.dim();
  rep.dim_ider = ider.dim();
  std::vector<Derivation> H;
  for (std::size_t j = 0; outer_index_valid(d, j); ++j) H.push_back(named_outer(s, 0, j));
  rep.h_count = H.size();
  const Subspace spanH = detail::flat_span(a, H);
  rep.independent = spanH.dim() == H.size();
  rep.meets_ider_trivially = spanH.intersection(ider).dim() == 0;
  rep.spans_with_ider = spanH.sum(ider) == der;
  rep.sum_zero_combinations_inner = true;
  for (std::size_t j = 0; outer_index_valid(d, j); ++j) {
    const Vec g0 = flatten(H[j]);
    for (std::size_t l = 1; l < d.characters; ++l) {
      const Vec gl = flatten(named_outer(s, static_cast<std::int64_t>(l * d.alpha), j));
      if (!ider.contains(sub(F, g0, gl))) rep.sum_zero_combinations_inner = false;
    }
  }
  return rep;
}

}  // namespace hh1
