#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"

namespace hh1 {

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skipped";
  }
}

struct CheckResult {
  std::string check_id;
  Status status = Status::skipped;
  json details;
  std::int64_t elapsed_ms = 0;
};

struct SuiteOptions {
  std::uint32_t p = 3;
  std::uint64_t seed = 1;
  bool inject_fault = false;  // corrupt one smash structure constant (negative control)
};

// Raised inside a check; the payload is reported as the counterexample.
class CheckFailure : public std::runtime_error {
 public:
  CheckFailure(const std::string& what, json payload) : std::runtime_error(what), payload(std::move(payload)) {}
  json payload;
};

namespace suite {

inline void expect(bool ok, const std::string& what, json payload = json::object()) {
  if (!ok) throw CheckFailure(what, std::move(payload));
}

struct SmashParams {
  std::uint32_t p;
  unsigned n, r;
};

inline json params_json(const SmashParams& s) { return {{"p", s.p}, {"n", s.n}, {"r", s.r}}; }

// Parameter sets for the smash-product checks at a given characteristic.
inline std::vector<SmashParams> smash_params(std::uint32_t p) {
  if (p == 3) return {{3, 1, 1}, {3, 2, 1}, {3, 1, 2}};
  return {{p, 1, 1}, {p, 2, 1}};
}

inline std::size_t expected_outer_count(const SmashParams& s) {
  return s.n >= s.r ? static_cast<std::size_t>(ipow(s.p, s.n - s.r)) : 1;
}

inline std::vector<std::vector<unsigned>> local_exponents(std::uint32_t p) {
  if (p == 3) return {{1}, {2}, {1, 1}, {1, 2}};
  return {{1}, {2}, {1, 1}};
}

inline std::string exps_label(std::uint32_t p, const std::vector<unsigned>& e) {
  std::string s = "trunc(" + std::to_string(p) + ";";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

inline Vec element_u(const SmashDescriptor& d, std::int64_t lambda) { return unit_vector(d.dim(), d.index(lambda, 0)); }

// x = sum over lambda of u_lambda x.
inline Vec element_x(const SmashDescriptor& d) {
  Vec v(d.dim(), 0);
  if (d.nilpotency > 1)
    for (std::size_t l = 0; l < d.characters; ++l) v[d.index(static_cast<std::int64_t>(l), 1)] = 1;
  return v;
}

// u_lambda x^j as a vector (zero once j reaches p^n).
inline Vec monomial(const SmashDescriptor& d, std::int64_t lambda, std::size_t j) {
  Vec v(d.dim(), 0);
  if (j < d.nilpotency) v[d.index(lambda, j)] = 1;
  return v;
}

inline Algebra with_flipped_constant(const SmashAlgebra& s) {
  const auto& d = s.descriptor;
  auto sc = s.algebra.structure_constants();
  const std::size_t i = d.index(0, 0), j = d.index(0, 1);
  for (auto& c : sc)
    if (c.i == i && c.j == j) c.c = s.algebra.field().add(c.c, 1);
  return make_algebra_unchecked(s.algebra.field(), s.algebra.labels(), sc, s.algebra.unit(), std::nullopt,
                                std::nullopt, std::nullopt, s.algebra.name() + "[faulty]");
}

// ad a as a matrix computed from the left and right regular representations.
inline Mat ad_oracle(const Algebra& a, const Vec& x) {
  Mat m(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& t : a.product(i, j)) m(t.index, j) = a.field().add(m(t.index, j), a.field().mul(x[i], t.coef));
      for (const auto& t : a.product(j, i)) m(t.index, j) = a.field().sub(m(t.index, j), a.field().mul(x[i], t.coef));
    }
  }
  return m;
}

inline std::size_t mu_of(const TorusReport& t) { return t.exhaustive_dim ? *t.exhaustive_dim : t.greedy_dim; }

// ---- checks ----

inline json check_smash_multiplication(const SuiteOptions& o) {
  json cases = json::array();
  bool first = true;
  for (unsigned r = 1; r <= 2; ++r)
    for (unsigned n = 1; n <= 2; ++n) {
      const SmashAlgebra s = smash_product(o.p, n, r);
      const Algebra a = (o.inject_fault && first) ? with_flipped_constant(s) : s.algebra;
      first = false;
      const auto& d = s.descriptor;
      const Vec x = element_x(d);
      const auto Q = static_cast<std::int64_t>(d.characters);
      const auto al = static_cast<std::int64_t>(d.alpha);
      std::size_t checked = 0;
      for (std::int64_t l = 0; l < Q; ++l) {
        const Vec ul = element_u(d, l);
        const Vec ulx = a.multiply(ul, x);
        const Vec xul = a.multiply(x, element_u(d, l - al));
        expect(ulx == xul, "u_lambda x != x u_{lambda-alpha}",
               {{"params", params_json({o.p, n, r})}, {"lambda", l}, {"lhs", ulx}, {"rhs", xul}});
        for (std::int64_t m = 0; m < Q; ++m) {
          const Vec um = element_u(d, m);
          const Vec lhs = a.multiply(ulx, um);
          const Vec xum = a.multiply(x, um);
          const Vec rhs = d.character(l) == d.character(m + al) ? xum : Vec(d.dim(), 0);
          expect(lhs == rhs, "u_lambda x u_mu != delta x u_mu",
                 {{"params", params_json({o.p, n, r})}, {"lambda", l}, {"mu", m}, {"lhs", lhs}, {"rhs", rhs}});
          ++checked;
        }
      }
      cases.push_back({{"params", params_json({o.p, n, r})}, {"pairs_checked", checked}});
    }
  return {{"cases", cases}};
}

inline json check_inner_formulas(const SuiteOptions& o) {
  std::vector<std::pair<unsigned, unsigned>> nr;
  if (o.p == 3) nr = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  else nr = {{1, 1}, {2, 1}};
  json cases = json::array();
  for (auto [n, r] : nr) {
    const SmashAlgebra s = smash_product(o.p, n, r);
    const auto& d = s.descriptor;
    const Algebra& a = s.algebra;
    const Field& F = a.field();
    const Vec x = element_x(d);
    const auto Q = static_cast<std::int64_t>(d.characters);
    std::size_t count = 0;
    for (std::int64_t l = 0; l < Q; ++l)
      for (std::size_t j = 0; j < d.nilpotency; ++j) {
        const json where = {{"params", params_json({o.p, n, r})}, {"lambda", l}, {"j", j}};
        const Derivation D = named_inner(s, l, j);
        expect(D.map == ad_oracle(a, monomial(d, l, j)), "named_inner differs from ad(u_lambda x^j)", where);
        bool all_u_zero = true;
        for (std::int64_t m = 0; m < Q; ++m) {
          Vec expected(d.dim(), 0);
          const Elem coef = F.sub(d.character(m + static_cast<std::int64_t>(j)) == d.character(l) ? 1 : 0,
                                  d.character(m) == d.character(l) ? 1 : 0);
          if (coef) expected[d.index(l, j)] = coef;
          const Vec got = D(element_u(d, m));
          expect(got == expected, "d(u_mu) formula", {{"at", where}, {"mu", m}, {"got", got}, {"expected", expected}});
          all_u_zero = all_u_zero && is_zero(got);
        }
        const Vec dx = D(x);
        const Vec expected_dx = sub(F, monomial(d, l, j + 1), monomial(d, l + 1, j + 1));
        expect(dx == expected_dx, "d(x) formula", {{"at", where}, {"got", dx}, {"expected", expected_dx}});
        expect(is_zero(dx) == (j == d.nilpotency - 1), "d(x) = 0 iff j = p^n - 1", where);
        if (j % d.characters == 0) expect(all_u_zero, "d(u_mu) = 0 when p^r divides j", where);
        ++count;
      }
    cases.push_back({{"params", params_json({o.p, n, r})}, {"derivations", count}});
  }
  return {{"cases", cases}};
}

// Every derivation is, modulo an inner one, zero on the u_mu and sends x
// into the span of the u_lambda x^{j p^r + 1}.
inline json check_normalization(const SuiteOptions& o) {
  json cases = json::array();
  for (const auto& prm : smash_params(o.p)) {
    const SmashAlgebra s = smash_product(prm.p, prm.n, prm.r);
    const auto& d = s.descriptor;
    const Algebra& a = s.algebra;
    const Field& F = a.field();
    const std::size_t n = a.dim(), Q = d.characters;
    auto stacked = [&](const std::function<Vec(const Vec&)>& f) {
      Vec v;
      for (std::size_t m = 0; m < Q; ++m) {
        const Vec w = f(element_u(d, static_cast<std::int64_t>(m)));
        v.insert(v.end(), w.begin(), w.end());
      }
      return v;
    };
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec e = a.basis(i);
      cols.push_back(stacked([&](const Vec& u) { return a.commutator(e, u); }));
    }
    const auto rr = rref(Mat::from_columns(F, Q * n, cols));
    std::vector<Vec> indep;
    for (auto c : rr.pivots) indep.push_back(cols[c]);
    Coordinatizer solve(F, Q * n, indep);
    const Vec x = element_x(d);
    std::size_t normalized = 0;
    for (const auto& f : derivation_space(a)) {
      const auto c = solve(stacked([&](const Vec& u) { return f(u); }));
      expect(c.has_value(), "no inner derivation matches f on the idempotents", {{"params", params_json(prm)}});
      Vec av(n, 0);
      for (std::size_t k = 0; k < rr.pivots.size(); ++k) av[rr.pivots[k]] = (*c)[k];
      const Derivation g{f.map - inner(a, av).map};
      for (std::size_t m = 0; m < Q; ++m)
        expect(is_zero(g(element_u(d, static_cast<std::int64_t>(m)))), "normalized derivation nonzero on u_mu",
               {{"params", params_json(prm)}, {"mu", m}});
      const Vec gx = g(x);
      for (std::size_t idx = 0; idx < n; ++idx)
        if (gx[idx] && (idx % d.nilpotency) % Q != 1 % Q)
          throw CheckFailure("normalized g(x) leaves the weight-alpha span",
                             {{"params", params_json(prm)}, {"g(x)", gx}});
      ++normalized;
    }
    cases.push_back({{"params", params_json(prm)}, {"derivations_normalized", normalized}});
  }
  return {{"cases", cases}};
}

inline json check_outer_derivations(const SuiteOptions& o) {
  json cases = json::array();
  for (const auto& prm : smash_params(o.p)) {
    const SmashAlgebra s = smash_product(prm.p, prm.n, prm.r);
    const auto& d = s.descriptor;
    const Algebra& a = s.algebra;
    const Field& F = a.field();
    const Vec x = element_x(d);
    const auto Q = static_cast<std::int64_t>(d.characters);
    std::size_t count = 0;
    for (std::int64_t l = 0; l < Q; ++l)
      for (std::size_t j = 0; outer_index_valid(d, j); ++j) {
        const json where = {{"params", params_json(prm)}, {"lambda", l}, {"j", j}};
        Derivation g;
        try {
          g = named_outer(s, l, j);
        } catch (const WellDefinednessFailure& e) {
          throw CheckFailure(e.what(), where);
        }
        for (std::int64_t m = 0; m < Q; ++m) expect(is_zero(g(element_u(d, m))), "g(u_mu) != 0", where);
        const Vec gx = g(x);
        expect(gx == monomial(d, l, j * d.characters + 1), "g(x) != u_lambda x^{j p^r + 1}", where);
        // g(x^{p^n}) expanded by Leibniz telescopes to zero.
        Vec tele(a.dim(), 0);
        for (std::size_t i = 0; i < d.nilpotency; ++i)
          tele = add(F, tele, a.multiply(a.multiply(a.power(x, i), gx), a.power(x, d.nilpotency - 1 - i)));
        expect(is_zero(tele), "g(x^{p^n}) != 0", where);
        ++count;
      }
    cases.push_back({{"params", params_json(prm)}, {"outer_derivations_validated", count}});
  }
  return {{"cases", cases}};
}

inline json check_complement(const SuiteOptions& o) {
  json cases = json::array();
  for (const auto& prm : smash_params(o.p)) {
    const SmashAlgebra s = smash_product(prm.p, prm.n, prm.r);
    const ComplementReport rep = verify_complement(s);
    const std::size_t expected_h = expected_outer_count(prm);
    const std::size_t zdim = center(s.algebra).dim();
    const json info = {{"params", params_json(prm)},
                       {"h_count", rep.h_count},
                       {"expected_h", expected_h},
                       {"dim_der", rep.dim_der},
                       {"dim_ider", rep.dim_ider},
                       {"center_dim", zdim},
                       {"independent", rep.independent},
                       {"meets_ider_trivially", rep.meets_ider_trivially},
                       {"spans_with_ider", rep.spans_with_ider},
                       {"sum_zero_combinations_inner", rep.sum_zero_combinations_inner}};
    expect(rep.ok(), "complement conditions fail", info);
    expect(rep.h_count == expected_h, "|H| differs from p^{n-r} (or 1)", info);
    expect(rep.dim_der == rep.dim_ider + rep.h_count, "dim Der != dim IDer + |H|", info);
    expect(zdim == expected_h && rep.dim_ider == s.algebra.dim() - zdim, "center dimension mismatch", info);
    expect(first_cohomology(s.algebra).dim() == expected_h, "pivot complement has different dimension", info);
    cases.push_back(info);
  }
  return {{"cases", cases}};
}

inline std::vector<SmashParams> table_params(std::uint32_t p) {
  if (p == 3) return {{3, 2, 1}, {3, 1, 1}, {3, 3, 1}, {3, 1, 2}};
  return {{p, 2, 1}, {p, 1, 1}};
}

inline json check_bracket_table(const SuiteOptions& o) {
  json cases = json::array();
  for (const auto& prm : table_params(o.p)) {
    const HH1Presentation h = first_cohomology_smash(smash_product(prm.p, prm.n, prm.r));
    const Field& F = h.field;
    const std::size_t c = h.dim();
    std::vector<std::vector<Vec>> expected(c, std::vector<Vec>(c, Vec(c, 0)));
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i + j < c) expected[i][j][i + j] = F.sub(F.reduce(j), F.reduce(i));
    json info = {{"params", params_json(prm)}, {"dim_hh1", c}, {"labels", h.labels}};
    if (h.bracket_table != expected) {
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (h.bracket_table[i][j] != expected[i][j])
            throw CheckFailure("[g_{0,i}, g_{0,j}] != (j-i) g_{0,i+j}", {{"at", info},
                                                                         {"i", i},
                                                                         {"j", j},
                                                                         {"got", h.bracket_table[i][j]},
                                                                         {"expected", expected[i][j]}});
    }
    cases.push_back(info);
  }
  return {{"cases", cases}};
}

inline json check_pmap_table(const SuiteOptions& o) {
  json cases = json::array();
  for (const auto& prm : table_params(o.p)) {
    const HH1Presentation h = first_cohomology_smash(smash_product(prm.p, prm.n, prm.r));
    const std::size_t c = h.dim();
    for (std::size_t j = 0; j < c; ++j) {
      const Vec expected = j == 0 ? unit_vector(c, 0) : Vec(c, 0);
      expect(h.pmap_table[j] == expected, j == 0 ? "g_{0,0}^[p] != g_{0,0}" : "g_{0,j}^[p] != 0",
             {{"params", params_json(prm)}, {"j", j}, {"got", h.pmap_table[j]}, {"expected", expected}});
    }
    cases.push_back({{"params", params_json(prm)}, {"pmap_table", h.pmap_table}});
  }
  return {{"cases", cases}};
}

inline json check_smash_torus(const SuiteOptions& o) {
  json cases = json::array();
  for (const auto& prm : smash_params(o.p)) {
    const RestrictedLie L = from_hh1(first_cohomology_smash(smash_product(prm.p, prm.n, prm.r)));
    const bool trig = is_trigonalizable(L);
    const TorusReport t = greedy_maximal_torus(L, o.seed);
    const Subspace torus = Subspace::span(L.field(), L.dim(), t.basis);
    const Subspace g00 = Subspace::span(L.field(), L.dim(), {L.basis(0)});
    json info = {{"params", params_json(prm)}, {"trigonalizable", trig}, {"torus", to_json(t)}};
    expect(trig, "L(A(n,r)) not trigonalizable", info);
    expect(t.dim() == 1 && t.greedy_dim == 1, "torus dimension is not 1", info);
    expect(t.status == Maximality::exhaustively_certified && t.exhaustive_dim == 1u,
           "maximal torus not exhaustively certified as 1-dimensional", info);
    expect(torus == g00, "torus is not spanned by the class of g_{0,0}", info);
    cases.push_back(info);
  }
  return {{"cases", cases}};
}

// mu of a p-nilpotent ideal: exhaustive when enumerable, otherwise the
// structural argument (nilpotent with p-nilpotent basis has no toral element).
inline json nil_ideal_mu(const RestrictedLie& L, const Subspace& N, std::uint64_t seed, std::size_t& mu) {
  const SubLie sub = subalgebra(L, N);
  const TorusReport t = greedy_maximal_torus(sub.lie, seed);
  mu = mu_of(t);
  return {{"dim", N.dim()}, {"torus", to_json(t)}};
}

inline json nil_ideal_case(std::uint32_t p, const std::vector<unsigned>& exps, std::uint64_t seed) {
  const NilIdealWitness w = nil_ideal_witness(p, exps);
  std::size_t total = 1, nv = exps.size();
  for (auto e : exps) total *= ipow(p, e);
  const std::size_t expected_n = nv * (total - ipow(p, static_cast<std::uint64_t>(nv)));
  json info = {{"algebra", exps_label(p, exps)}, {"dim_hh1", w.lie.dim()}, {"dim_n", w.n_ideal.dim()},
               {"is_ideal", w.is_ideal}, {"is_p_nilpotent", w.is_p_nilpotent}};
  expect(w.lie.dim() == nv * total, "dim HH^1 != n * dim A", info);
  expect(w.n_ideal.dim() == expected_n, "unexpected dimension of the witness ideal", info);
  expect(w.is_ideal && w.is_p_nilpotent && w.quotient.has_value(), "witness is not a p-nilpotent ideal", info);
  std::size_t mu_n = 0;
  info["n_torus"] = nil_ideal_mu(w.lie, w.n_ideal, seed, mu_n);
  expect(mu_n == 0, "witness ideal contains a torus", info);
  const Fingerprint fq = fingerprint(w.quotient->lie, seed), fw = fingerprint(witt(p, static_cast<unsigned>(nv)), seed);
  info["quotient_fingerprint"] = to_json(fq);
  info["witt_fingerprint"] = to_json(fw);
  expect(fq == fw, "fingerprint(L/n) != fingerprint(W_n)", info);
  return info;
}

inline json check_nil_ideal_quotient(const SuiteOptions& o) {
  std::vector<std::vector<unsigned>> cases_e = o.p == 3 ? std::vector<std::vector<unsigned>>{{2}, {1, 2}, {2, 1}}
                                                        : std::vector<std::vector<unsigned>>{{2}};
  json cases = json::array();
  for (const auto& e : cases_e) cases.push_back(nil_ideal_case(o.p, e, o.seed));
  return {{"cases", cases}};
}

inline json check_truncated_square(const SuiteOptions& o) {
  json info = nil_ideal_case(o.p, {2}, o.seed);
  const RestrictedLie L = from_hh1(first_cohomology(truncated_polynomial(o.p, {2})));
  const TorusReport t = greedy_maximal_torus(L, o.seed);
  info["torus"] = to_json(t);
  expect(L.dim() == static_cast<std::size_t>(o.p) * o.p, "dim HH^1(k[X]/(X^{p^2})) != p^2", info);
  expect(mu_of(t) == 1 && t.greedy_dim == 1, "mu(L) != 1", info);
  return info;
}

inline json check_witt_simplicity(const SuiteOptions& o) {
  std::vector<unsigned> ns = o.p == 3 ? std::vector<unsigned>{1, 2} : std::vector<unsigned>{1};
  json simple_cases = json::array(), mixed_cases = json::array();
  for (unsigned n : ns) {
    const RestrictedLie W = witt(o.p, n);
    const auto sr = simplicity(W, o.seed);
    const std::size_t expected = n * ipow(o.p, n);
    json info = {{"p", o.p}, {"n", n}, {"dim", W.dim()}, {"expected_dim", expected}, {"is_simple", sr.simple}};
    expect(W.dim() == expected, "dim HH^1(B_n) != n p^n", info);
    expect(sr.simple, "HH^1(B_n) not simple", info);
    simple_cases.push_back(info);
  }
  std::vector<std::vector<unsigned>> mixed = o.p == 3 ? std::vector<std::vector<unsigned>>{{2}, {1, 2}}
                                                      : std::vector<std::vector<unsigned>>{{2}};
  for (const auto& e : mixed) {
    const RestrictedLie L = from_hh1(first_cohomology(truncated_polynomial(o.p, e)));
    const auto sr = simplicity(L, o.seed);
    json info = {{"algebra", exps_label(o.p, e)}, {"dim", L.dim()}, {"is_simple", sr.simple}, {"reason", sr.reason}};
    expect(!sr.simple && sr.witness.has_value(), "mixed exponents gave a simple algebra", info);
    const Subspace& I = *sr.witness;
    info["witness_dim"] = I.dim();
    info["witness_basis"] = detail::vecs_json(I.basis());
    expect(I.dim() > 0 && I.dim() < L.dim() && is_ideal(L, I), "witness is not a proper nonzero ideal", info);
    mixed_cases.push_back(info);
  }
  return {{"simple", simple_cases}, {"mixed", mixed_cases}};
}

inline json check_commutator_in_radical_square(const SuiteOptions& o) {
  json cases = json::array();
  for (const auto& e : local_exponents(o.p)) {
    const Algebra a = truncated_polynomial(o.p, e);
    const RadicalReport rr = radical_checks(a);
    const auto form = symmetric_form_search(a, 64, o.seed);
    json info = {{"algebra", a.name()},
                 {"dim_commutator", rr.commutator.dim()},
                 {"dim_J", rr.J.dim()},
                 {"dim_J2", rr.J_squared.dim()},
                 {"commutator_in_J2", rr.commutator_in_J2},
                 {"form_found", form.has_value()}};
    expect(rr.commutator_in_J2, "[A,A] not contained in J^2", info);
    expect(form.has_value(), "no nondegenerate symmetric form found in 64 trials", info);
    expect(is_symmetric_associative(a, form->gram) && rank(form->gram) == a.dim(), "returned form invalid", info);
    cases.push_back(info);
  }
  // Reported only: u0_borel is not local.
  const RadicalReport rb = radical_checks(u0_borel(o.p, 1));
  return {{"cases", cases},
          {"u0_borel_report_only", {{"commutator_in_J2", rb.commutator_in_J2}, {"dim_commutator", rb.commutator.dim()}}}};
}

// Kronecker trivial extension to the quiver presentation:
// e1, e2, x1 -> a, y1 -> b, x2 -> b*, y2 -> a*, x1y2 -> e1*, y2x1 -> e2*.
inline Mat tkr_identification(const Algebra& te, const Algebra& quiver) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"e1", "e1"}, {"e2", "e2"}, {"a", "x1"}, {"b", "y1"}, {"b*", "x2"}, {"a*", "y2"}, {"e1*", "y1*x2"}, {"e2*", "y2*x1"}};
  auto find = [](const Algebra& a, const std::string& l) {
    const auto& ls = a.labels();
    const auto it = std::find(ls.begin(), ls.end(), l);
    if (it == ls.end()) throw std::logic_error("label " + l + " not found");
    return static_cast<std::size_t>(it - ls.begin());
  };
  Mat phi(te.field(), quiver.dim(), te.dim());
  for (const auto& [src, dst] : pairs) phi(find(quiver, dst), find(te, src)) = 1;
  // x1 y2 equals y1 x2 in the quiver algebra; the standard path is y1*x2.
  return phi;
}

inline json check_kronecker_extension(const SuiteOptions& o) {
  const Algebra q = quiver_algebra(o.p, trivial_extension_kronecker_quiver(o.p), "T(Kr)");
  const Algebra te = trivial_extension(kronecker_algebra(o.p));
  json info = {{"p", o.p}, {"dim_quiver", q.dim()}, {"dim_trivial_extension", te.dim()}};
  expect(q.dim() == 8 && te.dim() == 8, "T(Kr) does not have dimension 8", info);
  const bool iso = is_algebra_isomorphism(te, q, tkr_identification(te, q));
  info["isomorphic_to_quiver"] = iso;
  expect(iso, "trivial extension and quiver presentation are not isomorphic under the path identification", info);

  const HH1Presentation h = first_cohomology(q);
  const RestrictedLie L = from_hh1(h);
  info["hh1"] = to_json(h);
  expect(h.dim() == 4, "dim HH^1(T(Kr)) != 4", info);
  const Fingerprint f = fingerprint(L, o.seed), fg = fingerprint(gl2(o.p), o.seed);
  info["fingerprint"] = to_json(f);
  info["gl2_fingerprint"] = to_json(fg);
  expect(f.center_dim == 1, "center of HH^1(T(Kr)) is not 1-dimensional", info);
  const auto ds = derived_series(L);
  expect(ds.size() >= 2 && ds[1].dim() == 3, "derived subalgebra is not 3-dimensional", info);
  const SubLie D = subalgebra(L, ds[1]);
  expect(is_simple(D.lie, o.seed), "derived subalgebra is not simple", info);
  const TorusReport t = greedy_maximal_torus(L, o.seed);
  info["torus"] = to_json(t);
  expect(t.dim() == 2 && t.exhaustive_dim == 2u && t.candidates == ipow(o.p, 4), "mu(HH^1(T(Kr))) != 2", info);
  expect(f == fg, "fingerprint differs from gl2", info);

  // Projection d(a, f) = (0, f) on A + A*.
  Mat dm(te.field(), 8, 8);
  for (std::size_t i = 4; i < 8; ++i) dm(i, i) = 1;
  const Derivation d{dm};
  const HH1Presentation ht = first_cohomology(te);
  const RestrictedLie Lt = from_hh1(ht);
  const auto cls = ht.project(d);
  info["projection"] = {{"is_derivation", is_derivation(te, d)}, {"is_inner", ht.is_inner(d)}, {"p_power_equal", p_power(d) == d}};
  expect(is_derivation(te, d) && cls.has_value(), "projection is not a derivation", info);
  expect(!ht.is_inner(d), "projection is inner", info);
  expect(p_power(d) == d && Lt.p_power(*cls) == *cls, "d^[p] != d", info);

  const RestrictedLie K = from_hh1(first_cohomology(kronecker_algebra(o.p)));
  const Fingerprint fk = fingerprint(K, o.seed), fs = fingerprint(sl2(o.p), o.seed);
  info["kronecker_fingerprint"] = to_json(fk);
  expect(K.dim() == 3 && fk == fs, "HH^1(Kr) is not sl2 by fingerprint", info);
  return info;
}

inline json check_borel_and_nilpotent(const SuiteOptions& o) {
  const auto blocks = block_decomposition(u0_borel(o.p, 1));
  json info = {{"u0_borel_blocks", blocks.size()}};
  expect(blocks.size() == 1, "u0_borel(p,1) does not have exactly one block", info);
  const RestrictedLie Lb = from_hh1(first_cohomology(blocks[0].algebra));
  const TorusReport tb = greedy_maximal_torus(Lb, o.seed);
  info["block"] = {{"dim_hh1", Lb.dim()}, {"solvable", is_solvable(Lb)}, {"mu", mu_of(tb)}};
  expect(is_solvable(Lb) && mu_of(tb) == 1, "block of u0_borel: expected solvable with mu = 1", info);
  const RestrictedLie Ln = from_hh1(first_cohomology(truncated_polynomial(o.p, {2})));
  const TorusReport tn = greedy_maximal_torus(Ln, o.seed);
  info["nilpotent_case"] = {{"algebra", exps_label(o.p, {2})}, {"dim_hh1", Ln.dim()}, {"solvable", is_solvable(Ln)}, {"mu", mu_of(tn)}};
  expect(!is_solvable(Ln) && mu_of(tn) == 1, "k[X]/(X^{p^2}): expected non-solvable with mu = 1", info);
  return info;
}

inline json idempotent_invariants(const Algebra& a, const std::vector<Block>& blocks) {
  const Field& F = a.field();
  const Subspace Z = center(a);
  Vec sum(a.dim(), 0);
  bool central = true, orthogonal = true, primitive = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Vec& e = blocks[i].idempotent;
    sum = add(F, sum, e);
    central = central && Z.contains(e) && !is_zero(e);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const Vec ee = a.multiply(e, blocks[j].idempotent);
      orthogonal = orthogonal && ee == (i == j ? e : Vec(a.dim(), 0));
    }
    primitive = primitive && block_decomposition(blocks[i].algebra).size() == 1;
  }
  json info = {{"algebra", a.name()}, {"blocks", blocks.size()}, {"central", central}, {"orthogonal", orthogonal},
               {"sum_is_unit", sum == a.unit()}, {"primitive", primitive}};
  expect(central && orthogonal && primitive && sum == a.unit(), "block idempotent invariants fail", info);
  return info;
}

inline json check_blocks(const SuiteOptions& o) {
  json cases = json::array();
  const Algebra b = u0_borel(o.p, 1);
  const auto bb = block_decomposition(b);
  json info = idempotent_invariants(b, bb);
  expect(bb.size() == 1, "u0_borel(p,1) does not have exactly one block", info);
  const Fingerprint fb = fingerprint(from_hh1(first_cohomology(bb[0].algebra)), o.seed);
  const Fingerprint fs = fingerprint(from_hh1(first_cohomology_smash(smash_product(o.p, 1, 1))), o.seed);
  info["block_fingerprint"] = to_json(fb);
  info["smash_fingerprint"] = to_json(fs);
  expect(bb[0].algebra.dim() == smash_product(o.p, 1, 1).algebra.dim() && fb == fs,
         "u0_borel block does not match smash(p,1,1)", info);
  cases.push_back(info);

  const Algebra ss = split_semisimple(o.p, 3);
  const auto sb = block_decomposition(ss);
  json sinfo = idempotent_invariants(ss, sb);
  bool dims1 = true;
  for (const auto& blk : sb) dims1 = dims1 && blk.algebra.dim() == 1;
  expect(sb.size() == 3 && dims1, "GF(p)^3 does not split into 3 one-dimensional blocks", sinfo);
  cases.push_back(sinfo);

  for (const Algebra& a : {truncated_polynomial(o.p, {1, 1}), smash_product(o.p, 1, 1).algebra,
                           quiver_algebra(o.p, trivial_extension_kronecker_quiver(o.p), "T(Kr)")}) {
    const auto blocks = block_decomposition(a);
    json c = idempotent_invariants(a, blocks);
    expect(blocks.size() == 1, "expected a single block", c);
    cases.push_back(c);
  }
  return {{"cases", cases}};
}

struct PropertyAlgebra {
  Algebra algebra;
  HH1Presentation hh1;
};

inline std::vector<PropertyAlgebra> property_algebras(const SuiteOptions& o) {
  std::vector<PropertyAlgebra> out;
  const SmashAlgebra s = smash_product(o.p, o.p == 3 ? 2 : 1, 1);
  out.push_back({s.algebra, first_cohomology_smash(s, o.seed)});
  const Algebra q = quiver_algebra(o.p, trivial_extension_kronecker_quiver(o.p), "T(Kr)");
  out.push_back({q, first_cohomology(q, o.seed)});
  const Algebra t = truncated_polynomial(o.p, {1, 1});
  out.push_back({t, first_cohomology(t, o.seed)});
  return out;
}

inline json check_properties(const SuiteOptions& o) {
  constexpr int trials = 100;
  std::mt19937_64 rng(o.seed);
  json out = json::array();
  for (const auto& pa : property_algebras(o)) {
    const Algebra& a = pa.algebra;
    const HH1Presentation& h = pa.hh1;
    const Field& F = a.field();
    const auto ders = derivations_of(a, h.der);
    const RestrictedLie L = from_hh1(h);
    auto random_der = [&] { return combine(F, ders, random_vector(F, ders.size(), rng)); };
    const json where = {{"algebra", a.name()}};
    for (int t = 0; t < trials; ++t) {
      const Derivation f = random_der(), g = random_der();
      expect(is_derivation(a, bracket(f, g)), "[f, g] violates Leibniz", where);
      expect(is_derivation(a, p_power(f)), "f^p violates Leibniz", where);
      const Vec x = random_vector(F, a.dim(), rng);
      expect(bracket(f, inner(a, x)) == inner(a, f(x)), "[f, ad a] != ad f(a)", where);
    }
    // Representative independence with fresh inner perturbations.
    for (int t = 0; t < trials; ++t) {
      std::vector<Derivation> reps;
      for (const auto& r : h.complement) reps.push_back({r.map + inner(a, random_vector(F, a.dim(), rng)).map});
      for (std::size_t u = 0; u < reps.size(); ++u) {
        for (std::size_t v = 0; v < reps.size(); ++v)
          expect(h.project(bracket(reps[u], reps[v])) == h.bracket_table[u][v], "bracket table depends on representatives",
                 where);
        expect(h.project(p_power(reps[u])) == h.pmap_table[u], "p-map table depends on representatives", where);
      }
    }
    // Jacobson formula against composition.
    for (int t = 0; t < trials; ++t) {
      const Vec c = random_vector(F, h.dim(), rng);
      const auto via_composition = h.project(p_power(h.representative(c)));
      const Vec via_jacobson = L.p_power(c);
      expect(via_composition == via_jacobson, "Jacobson p-power differs from composition",
             {{"algebra", a.name()}, {"x", c}, {"jacobson", via_jacobson}});
    }
    if (h.ider.dim() == 0) expect(h.dim() == h.der.dim(), "commutative algebra: HH^1 != Der", where);
    out.push_back({{"algebra", a.name()}, {"dim_der", h.der.dim()}, {"dim_hh1", h.dim()}, {"trials", trials}});
  }

  // Every Lie algebra built along the way re-validates.
  std::vector<RestrictedLie> lies{witt(o.p, 1), sl2(o.p), gl2(o.p), from_hh1(first_cohomology(kronecker_algebra(o.p)))};
  for (const auto& prm : smash_params(o.p))
    lies.push_back(from_hh1(first_cohomology_smash(smash_product(prm.p, prm.n, prm.r))));
  const NilIdealWitness w = nil_ideal_witness(o.p, {2});
  lies.push_back(w.lie);
  lies.push_back(w.quotient->lie);
  for (const auto& L : lies) L.validate();

  // Torus certificates, monotonicity, and the grading of L(A(n,r)).
  const RestrictedLie G = gl2(o.p);
  const TorusReport tg = greedy_maximal_torus(G, o.seed);
  const SubLie sl = subalgebra(G, derived_series(G)[1]);
  const TorusReport ts = greedy_maximal_torus(sl.lie, o.seed);
  const TorusReport tl = greedy_maximal_torus(w.lie, o.seed);
  const TorusReport tn = greedy_maximal_torus(subalgebra(w.lie, w.n_ideal).lie, o.seed);
  for (const auto* t : {&tg, &ts, &tl, &tn})
    for (const auto& c : t->certificates)
      expect(c.p_power == c.element && c.commutes_with_all, "torus certificate does not re-verify");
  expect(ts.greedy_dim <= tg.greedy_dim && tn.greedy_dim <= tl.greedy_dim, "mu not monotone on subalgebras",
         {{"sl2_in_gl2", {ts.greedy_dim, tg.greedy_dim}}, {"n_in_L", {tn.greedy_dim, tl.greedy_dim}}});

  for (const auto& prm : smash_params(o.p)) {
    const RestrictedLie L = from_hh1(first_cohomology_smash(smash_product(prm.p, prm.n, prm.r)));
    std::vector<Vec> pos;
    for (std::size_t j = 1; j < L.dim(); ++j) pos.push_back(L.basis(j));
    expect(is_ideal(L, Subspace::span(L.field(), L.dim(), pos)), "span{g_{0,j} : j >= 1} is not an ideal",
           params_json(prm));
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        const Vec b = L.bracket_basis(i, j);
        for (std::size_t k = 0; k < L.dim(); ++k)
          expect(!b[k] || k == i + j, "grading violated", {{"params", params_json(prm)}, {"i", i}, {"j", j}});
      }
  }
  return {{"algebras", out}, {"lie_algebras_validated", lies.size()}};
}

// Expected complexities, compared with computed mu.
struct ComplexityCase {
  std::string label;
  std::size_t complexity;
  std::function<RestrictedLie()> lie;
};

inline std::vector<ComplexityCase> complexity_cases(std::uint32_t p) {
  std::vector<ComplexityCase> cs;
  for (const auto& prm : smash_params(p)) {
    const std::string label = "smash(" + std::to_string(prm.p) + "," + std::to_string(prm.n) + "," + std::to_string(prm.r) + ")";
    cs.push_back({label, 1, [prm] { return from_hh1(first_cohomology_smash(smash_product(prm.p, prm.n, prm.r))); }});
  }
  cs.push_back({exps_label(p, {1}), 1, [p] { return witt(p, 1); }});
  cs.push_back({exps_label(p, {1, 1}), 2, [p] { return witt(p, 2); }});
  cs.push_back({exps_label(p, {2}), 1, [p] { return from_hh1(first_cohomology(truncated_polynomial(p, {2}))); }});
  if (p == 3)
    cs.push_back({exps_label(p, {1, 2}), 2, [p] { return from_hh1(first_cohomology(truncated_polynomial(p, {1, 2}))); }});
  cs.push_back({"T(Kr)", 2, [p] {
                  return from_hh1(first_cohomology(quiver_algebra(p, trivial_extension_kronecker_quiver(p), "T(Kr)")));
                }});
  cs.push_back({"u0_borel(" + std::to_string(p) + ",1) block", 1,
                [p] { return from_hh1(first_cohomology(block_decomposition(u0_borel(p, 1))[0].algebra)); }});
  return cs;
}

inline json check_complexity_constants(const SuiteOptions& o) {
  json cases = json::array();
  for (const auto& c : complexity_cases(o.p)) {
    const RestrictedLie L = c.lie();
    const TorusReport t = greedy_maximal_torus(L, o.seed);
    json info = {{"case", c.label}, {"expected_complexity", c.complexity}, {"mu", mu_of(t)},
                 {"maximality_status", to_string(t.status)}};
    expect(mu_of(t) == c.complexity && t.greedy_dim == c.complexity, "computed mu differs from expected complexity",
           info);
    cases.push_back(info);
  }
  return {{"cases", cases}};
}

}  // namespace suite

struct CheckSpec {
  std::string id;
  std::function<json(const SuiteOptions&)> run;
};

inline const std::vector<CheckSpec>& registered_checks() {
  static const std::vector<CheckSpec> checks = {
      {"lemma-2.1", suite::check_commutator_in_radical_square}, {"prop-2.2", suite::check_nil_ideal_quotient},
      {"prop-2.3", suite::check_witt_simplicity},   {"lemma-3.1", suite::check_smash_multiplication},
      {"lemma-3.2", suite::check_inner_formulas}, {"lemma-3.3", suite::check_normalization},
      {"lemma-3.4", suite::check_outer_derivations}, {"lemma-3.5", suite::check_complement},
      {"lemma-3.6", suite::check_bracket_table}, {"lemma-3.7", suite::check_pmap_table},
      {"thm-3.8", suite::check_smash_torus},     {"lemma-3.9", suite::check_truncated_square},
      {"cor-3.10", suite::check_borel_and_nilpotent},   {"lemma-4.1", suite::check_kronecker_extension},
      {"blocks", suite::check_blocks},       {"properties", suite::check_properties},
      {"thm-4.2-mu", suite::check_complexity_constants},
  };
  return checks;
}

inline CheckResult run_check(const CheckSpec& c, const SuiteOptions& o) {
  CheckResult r;
  r.check_id = c.id;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.details = c.run(o);
    r.status = Status::pass;
  } catch (const CheckFailure& f) {
    r.status = Status::fail;
    r.details = {{"failure", f.what()}, {"counterexample", f.payload}};
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.details = {{"failure", std::string("exception: ") + e.what()}};
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::vector<CheckResult> run_suite(const SuiteOptions& o, const std::vector<std::string>& only = {}) {
  std::vector<CheckResult> out;
  for (const auto& c : registered_checks())
    if (only.empty() || std::find(only.begin(), only.end(), c.id) != only.end()) out.push_back(run_check(c, o));
  return out;
}

inline json to_json(const CheckResult& r) {
  return {{"check_id", r.check_id}, {"status", to_string(r.status)}, {"details", r.details}, {"elapsed_ms", r.elapsed_ms}};
}

inline json to_json(const std::vector<CheckResult>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

inline std::string markdown_table(const std::vector<CheckResult>& rs, std::uint32_t p) {
  std::ostringstream os;
  os << "| check | p | status | elapsed_ms | note |\n|---|---|---|---|---|\n";
  for (const auto& r : rs) {
    std::string note;
    if (r.status == Status::fail) note = r.details.value("failure", "");
    os << "| " << r.check_id << " | " << p << " | " << to_string(r.status) << " | " << r.elapsed_ms << " | " << note
       << " |\n";
  }
  return os.str();
}

inline bool all_passed(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.status == Status::pass; });
}

}  // namespace hh1
