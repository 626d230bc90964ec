#pragma once

#include <optional>
#include <random>
#include <vector>

#include "linalg.hpp"

namespace hh1 {

// Dense univariate polynomials over GF(p), coefficient i of t^i, no trailing zeros.
namespace poly {

using Poly = std::vector<Elem>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

inline Poly minus(const Field& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

// Returns {quotient, remainder}.
inline std::pair<Poly, Poly> divmod(const Field& F, Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const Elem inv = F.inv(b.back());
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    const Elem c = F.mul(a[k + b.size() - 1], inv);
    q[k] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = F.sub(a[k + j], F.mul(c, b[j]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

inline Poly monic(const Field& F, Poly f) {
  trim(f);
  if (f.empty()) return f;
  const Elem inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

inline Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

inline Poly derivative(const Field& F, const Poly& f) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(F.reduce(i), f[i]));
  trim(d);
  return d;
}

inline Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
  Poly r{1};
  base = mod(F, base, m);
  while (e) {
    if (e & 1) r = mod(F, mul(F, r, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

inline Elem evaluate(const Field& F, const Poly& f, Elem x) {
  Elem r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
  return r;
}

// f(M) by Horner.
inline Mat evaluate(const Poly& f, const Mat& m) {
  const Field& F = m.field();
  Mat r(F, m.rows(), m.cols());
  for (std::size_t i = f.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t k = 0; k < m.rows(); ++k) r(k, k) = F.add(r(k, k), f[i]);
  }
  return r;
}

// Product of the distinct monic irreducible factors of f.
inline Poly radical(const Field& F, const Poly& f_in) {
  Poly f = monic(F, f_in);
  if (degree(f) <= 0) return {1};
  const Poly d = derivative(F, f);
  if (d.empty()) {
    // f(t) = g(t)^p with g read off the coefficients of t^{ip}.
    Poly g;
    for (std::size_t i = 0; i < f.size(); i += F.p()) g.push_back(f[i]);
    return radical(F, g);
  }
  const Poly g = gcd(F, f, d);
  const Poly sf = monic(F, divmod(F, f, g).first);
  const Poly r = radical(F, g);
  return monic(F, divmod(F, mul(F, sf, r), gcd(F, sf, r)).first);
}

// Cantor-Zassenhaus splitting of a square-free g whose irreducible factors
// all have degree d (p odd).
inline void equal_degree_split(const Field& F, const Poly& g, long d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  std::uint64_t q = 1;
  for (long i = 0; i < d; ++i) q *= F.p();
  while (true) {
    Poly a;
    for (long i = 0; i < degree(g); ++i) a.push_back(F.random(rng));
    trim(a);
    if (degree(a) <= 0) continue;
    Poly b = minus(F, powmod(F, a, (q - 1) / 2, g), Poly{1});
    Poly h = gcd(F, g, b);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, monic(F, divmod(F, g, h).first), d, rng, out);
      return;
    }
  }
}

// Distinct monic irreducible factors of f.
inline std::vector<Poly> irreducible_factors(const Field& F, const Poly& f) {
  std::vector<Poly> out;
  std::mt19937_64 rng(0x5eed);
  Poly rest = radical(F, f);
  const Poly t{0, 1};
  Poly h = t;
  for (long i = 1; 2 * i <= degree(rest); ++i) {
    h = powmod(F, h, F.p(), rest);
    const Poly g = gcd(F, rest, minus(F, h, t));
    if (degree(g) <= 0) continue;
    equal_degree_split(F, g, i, rng, out);
    rest = monic(F, divmod(F, rest, g).first);
    h = mod(F, h, rest);
  }
  if (degree(rest) > 0) out.push_back(rest);
  return out;
}

}  // namespace poly

// Characteristic polynomial by reduction to upper Hessenberg form.
inline poly::Poly characteristic_polynomial(Mat h) {
  const Field& F = h.field();
  const std::size_t n = h.rows();
  if (h.cols() != n) throw DimensionError("characteristic polynomial of a non-square matrix");
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const Elem inv = F.inv(h(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      const Elem u = F.mul(h(i, m - 1), inv);
      if (!u) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = F.sub(h(i, j), F.mul(u, h(m, j)));
      for (std::size_t k = 0; k < n; ++k) h(k, m) = F.add(h(k, m), F.mul(u, h(k, i)));
    }
  }
  // p_k = characteristic polynomial of the leading k x k block.
  std::vector<poly::Poly> pk(n + 1);
  pk[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    poly::Poly cur = poly::mul(F, {F.neg(h(k - 1, k - 1)), 1}, pk[k - 1]);
    Elem prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = F.mul(prod, h(i + 1, i));
      if (!prod) break;
      const Elem c = F.mul(prod, h(i, k - 1));
      if (c) cur = poly::minus(F, cur, poly::mul(F, {c}, pk[i]));
    }
    pk[k] = std::move(cur);
  }
  return pk[n];
}

// Smallest subspace containing the seeds and stable under every matrix.
inline Subspace spin(const std::vector<Mat>& gens, const std::vector<Vec>& seeds, std::size_t ambient, const Field& F) {
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
  std::vector<Vec> queue;
  auto insert = [&](Vec v) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (const Elem c = v[pivots[i]]) axpy(F, F.neg(c), basis[i], v);
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return;
    const Elem inv = F.inv(v[piv]);
    v = scale(F, inv, std::move(v));
    for (auto& b : basis)
      if (const Elem c = b[piv]) axpy(F, F.neg(c), v, b);
    basis.push_back(v);
    pivots.push_back(piv);
    queue.push_back(std::move(v));
  };
  for (const auto& s : seeds) insert(s);
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      insert(g.apply(v));
      if (basis.size() == ambient) return Subspace::full(F, ambient);
    }
  }
  return Subspace::span(F, ambient, basis);
}

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<Subspace> invariant;  // proper nonzero invariant subspace when reducible
  std::size_t attempts = 0;
};

// Norton's irreducibility test for the module GF(p)^n under a set of
// matrices. Las Vegas: loops until a proof or an invariant subspace appears.
inline IrreducibilityResult meataxe(const Field& F, std::size_t n, const std::vector<Mat>& gens, std::uint64_t seed = 1,
                                    std::size_t max_attempts = 2000) {
  IrreducibilityResult res;
  if (n == 0) throw DimensionError("meataxe on the zero module");
  if (n == 1) {
    res.irreducible = true;
    return res;
  }
  std::vector<Mat> gt;
  for (const auto& g : gens) gt.push_back(g.transpose());
  std::mt19937_64 rng(seed);
  // Words in the generators accumulate so that random elements explore the
  // enveloping algebra rather than only the span of the generators.
  std::vector<Mat> pool(gens.begin(), gens.end());
  pool.push_back(Mat::identity(F, n));
  for (res.attempts = 1; res.attempts <= max_attempts; ++res.attempts) {
    if (!gens.empty()) {
      const Mat& a = pool[rng() % pool.size()];
      const Mat& b = gens[rng() % gens.size()];
      pool.push_back(a * b);
      if (pool.size() > 4 * gens.size() + 8) pool.erase(pool.begin() + static_cast<long>(gens.size()) + 1);
    }
    Mat m(F, n, n);
    for (const auto& w : pool)
      if (const Elem c = F.random(rng)) m = m + w.scaled(c);
    for (const auto& f : poly::irreducible_factors(F, characteristic_polynomial(m))) {
      const Mat fm = poly::evaluate(f, m);
      const Subspace ker = kernel(fm);
      if (static_cast<long>(ker.dim()) != poly::degree(f)) continue;
      const Vec& v = ker.basis().front();
      Subspace s = spin(gens, {v}, n, F);
      if (s.dim() < n) {
        res.invariant = std::move(s);
        return res;
      }
      const Subspace kt = kernel(fm.transpose());
      Subspace sd = spin(gt, {kt.basis().front()}, n, F);
      if (sd.dim() < n) {
        // The annihilator of a proper invariant subspace of the dual module is invariant.
        res.invariant = kernel(Mat::from_rows(F, n, sd.basis()));
        return res;
      }
      res.irreducible = true;
      return res;
    }
  }
  throw std::runtime_error("meataxe did not terminate within the attempt budget");
}

}  // namespace hh1
