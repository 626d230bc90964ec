#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hochschild.hpp"
#include "meataxe.hpp"

namespace hh1 {

class LieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class JacobiViolation : public LieError {
 public:
  using LieError::LieError;
};

class RestrictednessViolation : public LieError {
 public:
  using LieError::LieError;
};

// Finite-dimensional restricted Lie algebra over GF(p) given by structure
// constants and the p-th powers of the basis.
class RestrictedLie {
 public:
  RestrictedLie(Field F, std::vector<std::string> labels, std::vector<std::vector<Vec>> bracket, std::vector<Vec> pmap,
                std::string name = {})
      : F_(F), labels_(std::move(labels)), br_(std::move(bracket)), pmap_(std::move(pmap)), name_(std::move(name)) {
    const std::size_t n = labels_.size();
    if (br_.size() != n || pmap_.size() != n) throw DimensionError("Lie table sizes do not match labels");
    for (const auto& row : br_) {
      if (row.size() != n) throw DimensionError("bracket table is not square");
      for (const auto& v : row)
        if (v.size() != n) throw DimensionError("bracket value has wrong length");
    }
    for (const auto& v : pmap_)
      if (v.size() != n) throw DimensionError("p-map value has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      Mat m(F_, n, n);
      for (std::size_t j = 0; j < n; ++j) m.set_column(j, br_[i][j]);
      ad_.push_back(std::move(m));
    }
  }

  const Field& field() const { return F_; }
  std::uint32_t p() const { return F_.p(); }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return br_[i][j]; }
  const Vec& pmap_basis(std::size_t i) const { return pmap_[i]; }
  const Mat& ad_basis(std::size_t i) const { return ad_[i]; }
  Vec basis(std::size_t i) const { return unit_vector(dim(), i); }
  Vec zero() const { return Vec(dim(), 0); }

  Mat ad(const Vec& x) const {
    Mat m(F_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i]) m = m + ad_[i].scaled(x[i]);
    return m;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec r(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (y[j]) axpy(F_, F_.mul(x[i], y[j]), br_[i][j], r);
    }
    return r;
  }

  // Sum of the Jacobson terms s_i(x, y), given ad x and ad y: i s_i(x,y) is
  // the coefficient of t^{i-1} in ad(tx + y)^{p-1}(x).
  Vec jacobson_correction(const Vec& x, const Mat& adx, const Mat& ady) const {
    const std::uint32_t p = F_.p();
    std::vector<Vec> v{x};
    for (std::uint32_t step = 0; step + 1 < p; ++step) {
      std::vector<Vec> next(v.size() + 1, zero());
      for (std::size_t d = 0; d < v.size(); ++d) {
        if (is_zero(v[d])) continue;
        axpy(F_, 1, adx.apply(v[d]), next[d + 1]);
        axpy(F_, 1, ady.apply(v[d]), next[d]);
      }
      v = std::move(next);
    }
    Vec s = zero();
    for (std::uint32_t i = 1; i < p && i - 1 < v.size(); ++i) axpy(F_, F_.inv(i), v[i - 1], s);
    return s;
  }

  // x^{[p]} via the Jacobson formula over the basis expansion of x.
  Vec p_power(const Vec& x) const {
    if (x.size() != dim()) throw DimensionError("vector length differs from Lie algebra dimension");
    Vec acc = zero(), res = zero();
    Mat adacc(F_, dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
      const Elem c = x[k];
      if (!c) continue;
      // (c b_k)^{[p]} = c^p b_k^{[p]} and c^p = c in GF(p).
      axpy(F_, c, pmap_[k], res);
      const Mat ady = ad_[k].scaled(c);
      if (!is_zero(acc)) axpy(F_, 1, jacobson_correction(acc, adacc, ady), res);
      acc[k] = c;
      adacc = adacc + ady;
    }
    return res;
  }

  std::vector<StructureConstant> structure_constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k)
          if (br_[i][j][k]) out.push_back({i, j, k, br_[i][j][k]});
    return out;
  }

  // Antisymmetry, Jacobi (as ad being a homomorphism) and ad(b^{[p]}) = ad(b)^p.
  void validate() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_zero(br_[i][i])) throw JacobiViolation("[b, b] != 0 for basis element " + labels_[i]);
      for (std::size_t j = i + 1; j < n; ++j)
        if (add(F_, br_[i][j], br_[j][i]) != zero())
          throw JacobiViolation("bracket not antisymmetric on " + labels_[i] + ", " + labels_[j]);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (ad_[i] * ad_[j] - ad_[j] * ad_[i] != ad(br_[i][j]))
          throw JacobiViolation("Jacobi identity fails for " + labels_[i] + ", " + labels_[j]);
    for (std::size_t i = 0; i < n; ++i)
      if (ad(pmap_[i]) != ad_[i].pow(F_.p()))
        throw RestrictednessViolation("ad(b^[p]) != ad(b)^p for " + labels_[i]);
  }

 private:
  Field F_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> br_;
  std::vector<Vec> pmap_;
  std::string name_;
  std::vector<Mat> ad_;
};

inline RestrictedLie make_restricted_lie(Field F, std::vector<std::string> labels, std::vector<std::vector<Vec>> bracket,
                                         std::vector<Vec> pmap, std::string name = {}) {
  RestrictedLie L(F, std::move(labels), std::move(bracket), std::move(pmap), std::move(name));
  L.validate();
  return L;
}

inline RestrictedLie from_hh1(const HH1Presentation& h) {
  return make_restricted_lie(h.field, h.labels, h.bracket_table, h.pmap_table, "HH1(" + h.algebra + ")");
}

// Lie algebra spanned by matrices (closed under commutator and p-th power).
inline RestrictedLie matrix_lie(const Field& F, const std::vector<Mat>& basis, std::vector<std::string> labels,
                                std::string name) {
  std::vector<Vec> flat;
  for (const auto& m : basis) flat.push_back(m.data());
  const std::size_t amb = flat.empty() ? 0 : flat.front().size();
  Coordinatizer coords(F, amb, flat);
  auto coordinates = [&](const Mat& m) {
    auto c = coords(m.data());
    if (!c) throw LieError("matrix span is not closed");
    return *c;
  };
  const std::size_t n = basis.size();
  std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n));
  std::vector<Vec> pm(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) br[i][j] = coordinates(basis[i] * basis[j] - basis[j] * basis[i]);
    pm[i] = coordinates(basis[i].pow(F.p()));
  }
  return make_restricted_lie(F, std::move(labels), std::move(br), std::move(pm), std::move(name));
}

// ---- subspaces of a Lie algebra ----

inline Subspace whole(const RestrictedLie& L) { return Subspace::full(L.field(), L.dim()); }

inline Subspace bracket_span(const RestrictedLie& L, const Subspace& a, const Subspace& b) {
  std::vector<Vec> gens;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) gens.push_back(L.bracket(x, y));
  return Subspace::span(L.field(), L.dim(), gens);
}

// L = L^(0) ⊇ L^(1) ⊇ ... until stable (the stable term is listed once).
inline std::vector<Subspace> derived_series(const RestrictedLie& L) {
  std::vector<Subspace> s{whole(L)};
  while (true) {
    Subspace next = bracket_span(L, s.back(), s.back());
    if (next.dim() == s.back().dim()) return s;
    s.push_back(std::move(next));
  }
}

inline std::vector<Subspace> lower_central_series(const RestrictedLie& L) {
  std::vector<Subspace> s{whole(L)};
  while (true) {
    Subspace next = bracket_span(L, whole(L), s.back());
    if (next.dim() == s.back().dim()) return s;
    s.push_back(std::move(next));
  }
}

inline std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> d;
  for (const auto& s : series) d.push_back(s.dim());
  return d;
}

// Elements of L commuting with every element of S.
inline Subspace centralizer(const RestrictedLie& L, const Subspace& S) {
  std::vector<Vec> rows;
  for (const auto& s : S.basis()) {
    const Mat m = L.ad(s);
    for (std::size_t k = 0; k < L.dim(); ++k) rows.push_back(m.row_vec(k));
  }
  if (rows.empty()) return whole(L);
  return kernel(Mat::from_rows(L.field(), L.dim(), rows));
}

inline Subspace center(const RestrictedLie& L) { return centralizer(L, whole(L)); }

inline bool is_abelian(const RestrictedLie& L) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (!L.ad_basis(i).is_zero()) return false;
  return true;
}

inline bool is_solvable(const RestrictedLie& L) { return derived_series(L).back().dim() == 0; }
inline bool is_nilpotent(const RestrictedLie& L) { return lower_central_series(L).back().dim() == 0; }

inline bool is_subalgebra(const RestrictedLie& L, const Subspace& S) {
  for (const auto& x : S.basis())
    for (const auto& y : S.basis())
      if (!S.contains(L.bracket(x, y))) return false;
  return true;
}

inline bool is_ideal(const RestrictedLie& L, const Subspace& S) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& s : S.basis())
      if (!S.contains(L.ad_basis(i).apply(s))) return false;
  return true;
}

// A subalgebra is closed under the p-map once its basis is, since the
// Jacobson terms are Lie words in the summands.
inline bool is_p_closed(const RestrictedLie& L, const Subspace& S) {
  if (!is_subalgebra(L, S)) return false;
  for (const auto& s : S.basis())
    if (!S.contains(L.p_power(s))) return false;
  return true;
}

inline bool is_p_nilpotent(const RestrictedLie& L, Vec x) {
  for (std::size_t k = 0; k <= L.dim() + 1; ++k) {
    if (is_zero(x)) return true;
    x = L.p_power(x);
  }
  return false;
}

// Restricted Lie algebra structure on a p-closed subalgebra, in the
// coordinates of the given basis.
struct SubLie {
  RestrictedLie lie;
  std::vector<Vec> basis;  // in coordinates of the parent
};

inline SubLie subalgebra(const RestrictedLie& L, const Subspace& S, std::vector<std::string> labels = {}) {
  if (!is_p_closed(L, S)) throw LieError("subspace is not a restricted subalgebra");
  const auto& B = S.basis();
  Coordinatizer coords(L.field(), L.dim(), B);
  const std::size_t d = B.size();
  if (labels.empty())
    for (std::size_t i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<std::vector<Vec>> br(d, std::vector<Vec>(d));
  std::vector<Vec> pm(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) br[i][j] = *coords(L.bracket(B[i], B[j]));
    pm[i] = *coords(L.p_power(B[i]));
  }
  return {make_restricted_lie(L.field(), std::move(labels), std::move(br), std::move(pm), "sub(" + L.name() + ")"), B};
}

struct QuotientLie {
  RestrictedLie lie;
  std::vector<Vec> lifts;  // representatives in the parent
};

// L/I for a p-ideal I; basis = echelon complement of I.
inline QuotientLie quotient(const RestrictedLie& L, const Subspace& I) {
  if (!is_ideal(L, I)) throw LieError("quotient by a subspace that is not an ideal");
  if (!is_p_closed(L, I)) throw LieError("quotient by an ideal that is not closed under the p-map");
  const Field& F = L.field();
  const auto lifts = whole(L).quotient_basis(I);
  Coordinatizer coords(F, L.dim(), lifts);
  auto project = [&](const Vec& v) { return *coords(I.reduce(v)); };
  const std::size_t d = lifts.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("q" + std::to_string(i));
  std::vector<std::vector<Vec>> br(d, std::vector<Vec>(d));
  std::vector<Vec> pm(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) br[i][j] = project(L.bracket(lifts[i], lifts[j]));
    pm[i] = project(L.p_power(lifts[i]));
  }
  return {make_restricted_lie(F, std::move(labels), std::move(br), std::move(pm), "quot(" + L.name() + ")"), lifts};
}

inline Subspace ideal_generated(const RestrictedLie& L, const std::vector<Vec>& gens) {
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < L.dim(); ++i) ads.push_back(L.ad_basis(i));
  return spin(ads, gens, L.dim(), L.field());
}

// ---- simplicity ----

struct SimplicityReport {
  bool simple = false;
  std::optional<Subspace> witness;  // proper nonzero ideal when not simple
  std::string reason;
};

inline SimplicityReport simplicity(const RestrictedLie& L, std::uint64_t seed = 1) {
  SimplicityReport r;
  const std::size_t n = L.dim();
  if (n == 0) {
    r.reason = "zero algebra";
    return r;
  }
  if (is_abelian(L)) {
    r.reason = "abelian";
    if (n > 1) r.witness = Subspace::span(L.field(), n, {L.basis(0)});
    return r;
  }
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
  auto mt = meataxe(L.field(), n, ads, seed);
  if (mt.irreducible) {
    r.simple = true;
    r.reason = "adjoint module irreducible";
    return r;
  }
  r.witness = std::move(mt.invariant);
  if (!is_ideal(L, *r.witness)) throw LieError("meataxe witness is not an ideal");
  r.reason = "proper ideal of dimension " + std::to_string(r.witness->dim());
  return r;
}

inline bool is_simple(const RestrictedLie& L, std::uint64_t seed = 1) { return simplicity(L, seed).simple; }

// ---- elements ----

struct ElementAnalysis {
  bool is_toral = false;
  bool is_p_nilpotent = false;
  Vec semisimple_part;
  Vec nilpotent_part;
  std::vector<Vec> envelope;     // x, x^[p], x^[p^2], ... (independent)
  std::vector<Vec> toral_basis;  // toral elements spanning the fixed points of the p-map on the envelope
};

// On the p-envelope E = span{x, x^[p], ...} (abelian, p-closed) the p-map is
// GF(p)-linear; the Fitting decomposition of that operator splits x into
// semisimple and p-nilpotent parts.
inline ElementAnalysis element_analysis(const RestrictedLie& L, const Vec& x) {
  const Field& F = L.field();
  const std::size_t n = L.dim();
  ElementAnalysis a;
  a.semisimple_part = L.zero();
  a.nilpotent_part = L.zero();
  const Vec xp = L.p_power(x);
  a.is_toral = xp == x;
  if (is_zero(x)) {
    a.is_p_nilpotent = true;
    return a;
  }
  Subspace span(F, n);
  Vec cur = x;
  std::vector<Vec> E;
  while (!span.contains(cur)) {
    E.push_back(cur);
    span = Subspace::span(F, n, E);
    cur = L.p_power(cur);
  }
  a.envelope = E;
  const std::size_t m = E.size();
  Coordinatizer coords(F, n, E);
  // Phi(w_i) = w_{i+1}; Phi(w_{m-1}) = cur.
  Mat phi(F, m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) phi(i + 1, i) = 1;
  phi.set_column(m - 1, *coords(cur));
  const Mat pm = phi.pow(m);
  a.is_p_nilpotent = pm.is_zero();

  std::vector<Vec> e0 = kernel(pm).basis();
  std::vector<Vec> e1 = Subspace::span(F, m, [&] {
                          std::vector<Vec> cols;
                          for (std::size_t j = 0; j < m; ++j) cols.push_back(pm.column(j));
                          return cols;
                        }()).basis();
  std::vector<Vec> both = e1;
  both.insert(both.end(), e0.begin(), e0.end());
  Coordinatizer split(F, m, both);
  const Vec c = *split(unit_vector(m, 0));
  auto to_l = [&](const Vec& coords_in_e) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (coords_in_e[i]) axpy(F, coords_in_e[i], E[i], v);
    return v;
  };
  Vec s(m, 0), nil(m, 0);
  for (std::size_t i = 0; i < both.size(); ++i) axpy(F, c[i], both[i], i < e1.size() ? s : nil);
  a.semisimple_part = to_l(s);
  a.nilpotent_part = to_l(nil);

  Mat fix = phi - Mat::identity(F, m);
  const Subspace fixed = kernel(fix);
  for (const auto& v : fixed.basis()) a.toral_basis.push_back(to_l(v));
  return a;
}

inline bool is_toral(const RestrictedLie& L, const Vec& x) { return L.p_power(x) == x; }

// ---- tori ----

struct TorusCertificate {
  Vec element;
  Vec p_power;
  bool commutes_with_all = false;
};

enum class Maximality { greedy_maximal, exhaustively_certified };

inline std::string to_string(Maximality m) {
  return m == Maximality::greedy_maximal ? "greedy-maximal" : "exhaustively-certified";
}

struct TorusReport {
  std::vector<Vec> basis;
  std::size_t greedy_dim = 0;
  std::optional<std::size_t> exhaustive_dim;
  std::size_t candidates = 0;    // elements enumerated in the exhaustive pass
  std::size_t toral_count = 0;   // nonzero toral elements found there
  std::vector<TorusCertificate> certificates;
  Maximality status = Maximality::greedy_maximal;

  std::size_t dim() const { return basis.size(); }
};

struct Enumeration {
  std::vector<Vec> toral;  // nonzero toral elements
  std::size_t nullcone = 0;  // number of x with x^[p] = 0 (including 0)
  std::size_t candidates = 0;
};

inline constexpr std::size_t exhaustive_limit = 1000000;

inline std::optional<std::size_t> element_count(const RestrictedLie& L) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (c > exhaustive_limit / L.p()) return std::nullopt;
    c *= L.p();
  }
  return c;
}

// Walk all of L in odometer order. ad(x) is updated incrementally and
// ad(x)^p is compared with ad(x) and 0 on two fixed test vectors before the
// exact Jacobson p-th power is computed.
inline std::optional<Enumeration> enumerate_elements(const RestrictedLie& L, std::uint64_t seed = 7) {
  const auto total = element_count(L);
  if (!total) return std::nullopt;
  const Field& F = L.field();
  const std::size_t n = L.dim();
  Enumeration out;
  out.candidates = *total;
  std::mt19937_64 rng(seed);
  const std::vector<Vec> probes{random_vector(F, n, rng), random_vector(F, n, rng)};
  Vec x(n, 0);
  Mat adx(F, n, n);
  for (std::size_t step = 0; step < *total; ++step) {
    if (step > 0) {
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = F.add(x[k], 1);
        adx = adx + L.ad_basis(k);
        if (x[k] != 0) break;
      }
    }
    bool maybe_toral = true, maybe_nil = true;
    for (const auto& v : probes) {
      Vec w = v;
      for (std::uint32_t i = 0; i < F.p(); ++i) w = adx.apply(w);
      if (w != adx.apply(v)) maybe_toral = false;
      if (!is_zero(w)) maybe_nil = false;
    }
    if (!maybe_toral && !maybe_nil) continue;
    const Vec xp = L.p_power(x);
    if (is_zero(xp)) ++out.nullcone;
    else if (xp == x) out.toral.push_back(x);
  }
  return out;
}

namespace detail {

inline std::string key(const Subspace& s) {
  std::string k;
  for (const auto& v : s.basis())
    for (Elem e : v) k += std::to_string(e) + ",";
  return k;
}

// Largest set of independent pairwise commuting toral elements.
inline std::vector<Vec> max_torus_search(const RestrictedLie& L, const std::vector<Vec>& toral) {
  const Field& F = L.field();
  std::vector<Vec> best;
  std::set<std::string> seen;
  std::vector<Vec> chosen;
  std::function<void(const Subspace&, const std::vector<std::size_t>&)> rec = [&](const Subspace& S,
                                                                                const std::vector<std::size_t>& cand) {
    if (!seen.insert(key(S)).second) return;
    if (chosen.size() > best.size()) best = chosen;
    std::vector<Vec> cv;
    for (auto i : cand) cv.push_back(toral[i]);
    if (S.dim() + Subspace::span(F, L.dim(), cv).dim() <= best.size()) return;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const Vec& t = toral[cand[a]];
      if (S.contains(t)) continue;
      std::vector<Vec> gens = S.basis();
      gens.push_back(t);
      const Subspace S2 = Subspace::span(F, L.dim(), gens);
      std::vector<std::size_t> next;
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (!S2.contains(toral[cand[b]]) && is_zero(L.bracket(t, toral[cand[b]]))) next.push_back(cand[b]);
      chosen.push_back(t);
      rec(S2, next);
      chosen.pop_back();
    }
  };
  std::vector<std::size_t> all(toral.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  rec(Subspace(F, L.dim()), all);
  return best;
}

inline std::vector<TorusCertificate> certify(const RestrictedLie& L, const std::vector<Vec>& basis) {
  std::vector<TorusCertificate> out;
  for (const auto& t : basis) {
    TorusCertificate c{t, L.p_power(t), true};
    for (const auto& u : basis)
      if (!is_zero(L.bracket(t, u))) c.commutes_with_all = false;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

// Greedy torus growth inside successive centralizers. When L is small
// enough, every element is enumerated and the largest torus is certified.
inline TorusReport greedy_maximal_torus(const RestrictedLie& L, std::uint64_t seed = 1, bool exhaustive = true,
                                        const Enumeration* enumerated = nullptr, std::size_t random_trials = 200) {
  const Field& F = L.field();
  const std::size_t n = L.dim();
  std::mt19937_64 rng(seed);
  std::vector<Vec> T;
  while (true) {
    const Subspace span = Subspace::span(F, n, T);
    const Subspace C = centralizer(L, span);
    std::optional<Vec> found;
    auto try_element = [&](const Vec& c) {
      if (is_zero(c)) return;
      for (const auto& t : element_analysis(L, c).toral_basis)
        if (!span.contains(t)) {
          found = t;
          return;
        }
    };
    for (const auto& c : C.basis()) {
      try_element(c);
      if (found) break;
    }
    for (std::size_t k = 0; !found && k < random_trials && C.dim() > 0; ++k) {
      Vec c(n, 0);
      for (const auto& b : C.basis()) axpy(F, F.random(rng), b, c);
      try_element(c);
    }
    if (!found) break;
    T.push_back(*found);
  }
  TorusReport r;
  r.greedy_dim = T.size();
  r.basis = T;
  if (exhaustive) {
    std::optional<Enumeration> own;
    if (!enumerated && (own = enumerate_elements(L))) enumerated = &*own;
    if (const Enumeration* e = enumerated) {
      r.candidates = e->candidates;
      r.toral_count = e->toral.size();
      auto best = detail::max_torus_search(L, e->toral);
      r.exhaustive_dim = best.size();
      if (best.size() > T.size()) r.basis = best;
      r.status = Maximality::exhaustively_certified;
    }
  }
  r.certificates = detail::certify(L, r.basis);
  return r;
}

// Solvable with [L, L] nilpotent and spanned by p-nilpotent elements.
inline bool is_trigonalizable(const RestrictedLie& L) {
  const auto ds = derived_series(L);
  if (ds.back().dim() != 0) return false;
  if (ds.size() < 2) return true;
  const Subspace& D = ds[1];
  Subspace term = D;
  while (term.dim() > 0) {
    Subspace next = bracket_span(L, D, term);
    if (next.dim() == term.dim()) return false;
    term = std::move(next);
  }
  for (const auto& v : D.basis())
    if (!is_p_nilpotent(L, v)) return false;
  return true;
}

}  // namespace hh1
