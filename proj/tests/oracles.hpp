#pragma once
// Brute-force references used by the unit tests. Everything here enumerates
// GF(p)^n directly, so it only works for tiny sizes.

#include <cstdint>
#include <functional>
#include <vector>

#include "hh1/linalg.hpp"

namespace oracle {

using hh1::Elem;
using hh1::Field;
using hh1::Vec;

// Calls f on every vector of GF(p)^n.
inline void for_each_vector(const Field& F, std::size_t n, const std::function<void(const Vec&)>& f) {
  Vec v(n, 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == F.p()) v[i++] = 0;
    if (i == n) return;
  }
}

inline std::size_t count(const Field& F, std::size_t n, const std::function<bool(const Vec&)>& pred) {
  std::size_t c = 0;
  for_each_vector(F, n, [&](const Vec& v) { c += pred(v) ? 1 : 0; });
  return c;
}

// log_p of a count that is known to be a power of p.
inline std::size_t log_p(std::uint32_t p, std::size_t c) {
  std::size_t k = 0;
  while (c > 1) {
    if (c % p) return static_cast<std::size_t>(-1);
    c /= p;
    ++k;
  }
  return k;
}

// Every linear combination of gens, deduplicated by sorting.
inline std::vector<Vec> all_combinations(const Field& F, std::size_t n, const std::vector<Vec>& gens) {
  std::vector<Vec> out;
  for_each_vector(F, gens.size(), [&](const Vec& c) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t k = 0; k < n; ++k) v[k] = F.add(v[k], F.mul(c[i], gens[i][k]));
    out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Determinant by cofactor expansion.
inline Elem det(const Field& F, const std::vector<std::vector<Elem>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Elem d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Elem>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Elem> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Elem t = F.mul(m[0][c], det(F, minor));
    d = c % 2 ? F.sub(d, t) : F.add(d, t);
  }
  return d;
}

}  // namespace oracle
