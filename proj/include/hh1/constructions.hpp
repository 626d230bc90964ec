#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace hh1 {

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

namespace detail {

inline std::string power_label(const std::string& var, std::uint64_t e) {
  if (e == 0) return "";
  return e == 1 ? var : var + "^" + std::to_string(e);
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace detail

// GF(p)^m with coordinatewise product.
inline Algebra split_semisimple(std::uint32_t p, std::size_t m) {
  const Field F(p);
  detail::require(m >= 1, "split_semisimple needs m >= 1");
  std::vector<std::string> labels;
  std::vector<StructureConstant> mult;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    mult.push_back({i, i, i, 1});
  }
  std::optional<Vec> counit;
  if (m == 1) counit = Vec{1};
  return make_algebra(F, labels, mult, Vec(m, 1), std::vector<Vec>{}, counit, std::nullopt,
                      "GF(" + std::to_string(p) + ")^" + std::to_string(m));
}

// k[X_1..X_n]/(X_i^{p^{a_i}}). Basis monomials in mixed radix, last variable fastest.
inline Algebra truncated_polynomial(std::uint32_t p, const std::vector<unsigned>& exponents) {
  const Field F(p);
  detail::require(!exponents.empty(), "truncated_polynomial needs at least one variable");
  for (auto a : exponents) detail::require(a >= 1, "truncated_polynomial exponents must be >= 1");
  const std::size_t nv = exponents.size();
  std::vector<std::size_t> bound(nv), stride(nv);
  std::size_t dim = 1;
  for (std::size_t i = nv; i-- > 0;) {
    bound[i] = ipow(p, exponents[i]);
    stride[i] = dim;
    dim *= bound[i];
  }
  auto exps_of = [&](std::size_t idx) {
    std::vector<std::size_t> e(nv);
    for (std::size_t i = 0; i < nv; ++i) e[i] = idx / stride[i] % bound[i];
    return e;
  };
  auto var = [&](std::size_t i) { return nv == 1 ? std::string("x") : "x" + std::to_string(i + 1); };

  std::vector<std::string> labels(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    auto e = exps_of(idx);
    std::string s;
    for (std::size_t i = 0; i < nv; ++i) {
      auto part = detail::power_label(var(i), e[i]);
      if (part.empty()) continue;
      s += (s.empty() ? "" : "*") + part;
    }
    labels[idx] = s.empty() ? "1" : s;
  }

  std::vector<StructureConstant> mult;
  for (std::size_t a = 0; a < dim; ++a) {
    auto ea = exps_of(a);
    for (std::size_t b = 0; b < dim; ++b) {
      auto eb = exps_of(b);
      std::size_t c = 0;
      bool zero = false;
      for (std::size_t i = 0; i < nv && !zero; ++i) {
        const auto s = ea[i] + eb[i];
        if (s >= bound[i]) zero = true;
        c += s * stride[i];
      }
      if (!zero) mult.push_back({a, b, c, 1});
    }
  }

  Presentation pres;
  std::vector<Vec> radical;
  for (std::size_t i = 0; i < nv; ++i) {
    pres.generator_names.push_back(var(i));
    pres.generators.push_back(unit_vector(dim, stride[i]));
    radical.push_back(unit_vector(dim, stride[i]));
  }
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Presentation::Word w;
    auto e = exps_of(idx);
    for (std::size_t i = 0; i < nv; ++i) w.insert(w.end(), e[i], static_cast<std::uint32_t>(i));
    pres.basis_words.push_back(std::move(w));
  }
  const Elem minus1 = F.neg(1);
  for (std::uint32_t i = 0; i < nv; ++i)
    for (std::uint32_t j = i + 1; j < nv; ++j) pres.relations.push_back({{{1, {i, j}}, {minus1, {j, i}}}});
  for (std::uint32_t i = 0; i < nv; ++i)
    pres.relations.push_back({{{1, Presentation::Word(bound[i], i)}}});

  std::string name = "trunc(" + std::to_string(p) + ";";
  for (std::size_t i = 0; i < nv; ++i) name += (i ? "," : "") + std::to_string(exponents[i]);
  name += ")";
  return make_algebra(F, labels, mult, unit_vector(dim, 0), radical, unit_vector(dim, 0), std::move(pres), name);
}

// Bookkeeping for the smash product k[x]/(x^{p^n}) # k(Z/p^r): basis
// u_lambda x^j at index lambda * p^n + j, distinguished character alpha = 1.
struct SmashDescriptor {
  std::uint32_t p = 3;
  unsigned n = 1, r = 1;
  std::size_t nilpotency = 0;  // p^n
  std::size_t characters = 0;  // p^r
  std::size_t alpha = 1;
  std::uint32_t x_generator = 0;  // generator index of x in the presentation

  std::size_t dim() const { return nilpotency * characters; }
  std::size_t index(std::int64_t lambda, std::size_t j) const { return character(lambda) * nilpotency + j; }
  std::size_t character(std::int64_t lambda) const {
    const auto q = static_cast<std::int64_t>(characters);
    return static_cast<std::size_t>(((lambda % q) + q) % q);
  }
  // Largest j with j * p^r + 1 <= p^n - 1 plus one, i.e. |H|.
  std::size_t outer_count() const {
    std::size_t c = 0;
    while (c * characters + 1 <= nilpotency - 1) ++c;
    return c;
  }
};

struct SmashAlgebra {
  Algebra algebra;
  SmashDescriptor descriptor;
};

inline SmashAlgebra smash_product(std::uint32_t p, unsigned n, unsigned r) {
  const Field F(p);
  detail::require(n >= 1 && r >= 1, "smash_product needs n >= 1 and r >= 1");
  SmashDescriptor d;
  d.p = p;
  d.n = n;
  d.r = r;
  d.nilpotency = ipow(p, n);
  d.characters = ipow(p, r);
  d.x_generator = static_cast<std::uint32_t>(d.characters);
  const std::size_t P = d.nilpotency, Q = d.characters, dim = d.dim();

  std::vector<std::string> labels(dim);
  for (std::size_t l = 0; l < Q; ++l)
    for (std::size_t j = 0; j < P; ++j) {
      auto xp = detail::power_label("x", j);
      labels[d.index(l, j)] = "u" + std::to_string(l) + xp;
    }

  // (u_l x^i)(u_m x^j) = u_l u_{m+i} x^{i+j}
  std::vector<StructureConstant> mult;
  for (std::size_t l = 0; l < Q; ++l)
    for (std::size_t i = 0; i < P; ++i)
      for (std::size_t m = 0; m < Q; ++m)
        for (std::size_t j = 0; i + j < P; ++j)
          if (d.character(static_cast<std::int64_t>(m + i * d.alpha)) == l)
            mult.push_back({d.index(l, i), d.index(m, j), d.index(l, i + j), 1});

  Vec unit(dim, 0), x(dim, 0);
  for (std::size_t l = 0; l < Q; ++l) {
    unit[d.index(l, 0)] = 1;
    x[d.index(l, 1)] = 1;
  }

  Presentation pres;
  std::vector<Vec> radical;
  for (std::size_t l = 0; l < Q; ++l) {
    pres.generator_names.push_back("u" + std::to_string(l));
    pres.generators.push_back(unit_vector(dim, d.index(l, 0)));
    radical.push_back(unit_vector(dim, d.index(l, 1)));
  }
  pres.generator_names.push_back("x");
  pres.generators.push_back(x);
  const auto xg = d.x_generator;
  pres.basis_words.resize(dim);
  for (std::size_t l = 0; l < Q; ++l)
    for (std::size_t j = 0; j < P; ++j) {
      Presentation::Word w{static_cast<std::uint32_t>(l)};
      w.insert(w.end(), j, xg);
      pres.basis_words[d.index(l, j)] = std::move(w);
    }
  const Elem minus1 = F.neg(1);
  for (std::uint32_t l = 0; l < Q; ++l)
    for (std::uint32_t m = 0; m < Q; ++m) {
      Presentation::Relation rel{{{1, {l, m}}}};
      if (l == m) rel.terms.push_back({minus1, {l}});
      pres.relations.push_back(std::move(rel));
    }
  {
    Presentation::Relation rel{{{minus1, {}}}};
    for (std::uint32_t l = 0; l < Q; ++l) rel.terms.push_back({1, {l}});
    pres.relations.push_back(std::move(rel));
  }
  for (std::uint32_t l = 0; l < Q; ++l) {
    auto shifted = static_cast<std::uint32_t>(d.character(static_cast<std::int64_t>(l) - static_cast<std::int64_t>(d.alpha)));
    pres.relations.push_back({{{1, {l, xg}}, {minus1, {xg, shifted}}}});
  }
  pres.relations.push_back({{{1, Presentation::Word(P, xg)}}});

  auto name = "smash(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
  return {make_algebra(F, labels, mult, unit, radical, std::nullopt, std::move(pres), name), d};
}

// Restricted enveloping algebra of kt + (kx)_p with [t,x] = x, t^[p] = t,
// x^[p^n] = 0. Basis x^b t^a at index b * p + a.
inline Algebra u0_borel(std::uint32_t p, unsigned n) {
  const Field F(p);
  detail::require(n >= 1, "u0_borel needs n >= 1");
  const std::size_t P = ipow(p, n), dim = P * p;
  auto idx = [p](std::size_t b, std::size_t a) { return b * p + a; };

  // binom[a][k] mod p
  std::vector<std::vector<Elem>> binom(p, std::vector<Elem>(p, 0));
  for (std::size_t a = 0; a < p; ++a) {
    binom[a][0] = 1;
    for (std::size_t k = 1; k <= a; ++k) binom[a][k] = F.add(binom[a - 1][k - 1], k < a ? binom[a - 1][k] : 0);
  }
  auto reduce_t = [p](std::size_t e) {
    while (e >= p) e -= p - 1;  // t^p = t
    return e;
  };

  std::vector<std::string> labels(dim);
  for (std::size_t b = 0; b < P; ++b)
    for (std::size_t a = 0; a < p; ++a) {
      std::string s = detail::power_label("x", b);
      auto tp = detail::power_label("t", a);
      if (!tp.empty()) s += (s.empty() ? "" : "*") + tp;
      labels[idx(b, a)] = s.empty() ? "1" : s;
    }

  // (x^b t^a)(x^c t^d) = x^{b+c} (t+c)^a t^d
  std::vector<StructureConstant> mult;
  for (std::size_t b = 0; b < P; ++b)
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t c = 0; b + c < P; ++c)
        for (std::size_t dd = 0; dd < p; ++dd) {
          const Elem cc = F.reduce(static_cast<std::int64_t>(c));
          for (std::size_t k = 0; k <= a; ++k) {
            const Elem coef = F.mul(binom[a][k], F.pow(cc, a - k));
            if (coef) mult.push_back({idx(b, a), idx(c, dd), idx(b + c, reduce_t(k + dd)), coef});
          }
        }

  Presentation pres;
  pres.generator_names = {"x", "t"};
  pres.generators = {unit_vector(dim, idx(1, 0)), unit_vector(dim, idx(0, 1))};
  pres.basis_words.resize(dim);
  for (std::size_t b = 0; b < P; ++b)
    for (std::size_t a = 0; a < p; ++a) {
      Presentation::Word w(b, 0);
      w.insert(w.end(), a, 1);
      pres.basis_words[idx(b, a)] = std::move(w);
    }
  const Elem minus1 = F.neg(1);
  pres.relations.push_back({{{1, {1, 0}}, {minus1, {0, 1}}, {minus1, {0}}}});
  pres.relations.push_back({{{1, Presentation::Word(P, 0)}}});
  pres.relations.push_back({{{1, Presentation::Word(p, 1)}, {minus1, {1}}}});

  auto name = "u0_borel(" + std::to_string(p) + "," + std::to_string(n) + ")";
  return make_algebra(F, labels, mult, unit_vector(dim, 0), std::vector<Vec>{unit_vector(dim, idx(1, 0))},
                      std::nullopt, std::move(pres), name);
}

struct QuiverPresentation {
  struct Arrow {
    std::size_t source, target;
    std::string label;
  };
  // A path is a sequence of arrow indices composed left to right: a then b.
  using Path = std::vector<std::size_t>;
  struct Relation {
    std::vector<std::pair<Elem, Path>> terms;
  };
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
};

class QuiverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Path algebra modulo homogeneous admissible relations. Paths are graded by
// length; the quotient in each degree is spanned by the paths that are not
// pivots of the echelon form of the relation ideal in that degree.
inline Algebra quiver_algebra(std::uint32_t p, const QuiverPresentation& q, std::string name = "quiver") {
  const Field F(p);
  struct PathInfo {
    std::size_t source, target;
    QuiverPresentation::Path arrows;
  };
  for (const auto& a : q.arrows)
    if (a.source >= q.vertices || a.target >= q.vertices) throw QuiverError("arrow endpoint out of range");

  std::size_t max_degree = 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> rel_shape;  // degree, source, target
  for (const auto& rel : q.relations) {
    if (rel.terms.empty()) throw QuiverError("empty relation");
    const auto deg = rel.terms.front().second.size();
    std::size_t s = 0, t = 0;
    for (std::size_t i = 0; i < rel.terms.size(); ++i) {
      const auto& path = rel.terms[i].second;
      if (path.size() < 2) throw QuiverError("relation is not admissible: term of length < 2");
      if (path.size() != deg) throw QuiverError("relation is not homogeneous");
      for (auto a : path)
        if (a >= q.arrows.size()) throw QuiverError("relation uses unknown arrow");
      for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (q.arrows[path[k]].target != q.arrows[path[k + 1]].source)
          throw QuiverError("relation term is not a path");
      const auto ps = q.arrows[path.front()].source, pt = q.arrows[path.back()].target;
      if (i == 0) {
        s = ps;
        t = pt;
      } else if (ps != s || pt != t) {
        throw QuiverError("relation terms have different endpoints");
      }
    }
    max_degree = std::max(max_degree, deg);
    rel_shape.emplace_back(deg, s, t);
  }
  const std::size_t bound = 2 * q.arrows.size() * std::max<std::size_t>(1, max_degree) + 1;

  std::vector<std::vector<PathInfo>> level;
  level.push_back({});
  for (std::size_t v = 0; v < q.vertices; ++v) level[0].push_back({v, v, {}});
  std::vector<std::map<QuiverPresentation::Path, std::size_t>> lookup(1);  // degree 0 is indexed by vertex

  std::vector<Subspace> ideal;
  ideal.emplace_back(F, level[0].size());
  std::size_t top = 0;  // degrees [0, top) carry nonzero quotients
  for (std::size_t d = 0;; ++d) {
    if (d > bound) throw QuiverError("quotient is infinite-dimensional (path saturation bound exceeded)");
    if (d > 0) {
      std::vector<PathInfo> next;
      if (d == 1) {
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
          next.push_back({q.arrows[a].source, q.arrows[a].target, {a}});
      } else {
        for (const auto& path : level[d - 1])
          for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].source != path.target) continue;
            PathInfo np{path.source, q.arrows[a].target, path.arrows};
            np.arrows.push_back(a);
            next.push_back(std::move(np));
          }
      }
      level.push_back(std::move(next));
      lookup.emplace_back();
      for (std::size_t i = 0; i < level[d].size(); ++i) lookup[d][level[d][i].arrows] = i;

      std::vector<Vec> gens;
      for (std::size_t r = 0; r < q.relations.size(); ++r) {
        const auto [deg, s, t] = rel_shape[r];
        if (deg > d) continue;
        for (std::size_t l1 = 0; l1 <= d - deg; ++l1) {
          const std::size_t l2 = d - deg - l1;
          for (const auto& u : level[l1]) {
            if (u.target != s) continue;
            for (const auto& w : level[l2]) {
              if (w.source != t) continue;
              Vec v(level[d].size(), 0);
              for (const auto& [c, path] : q.relations[r].terms) {
                QuiverPresentation::Path full = u.arrows;
                full.insert(full.end(), path.begin(), path.end());
                full.insert(full.end(), w.arrows.begin(), w.arrows.end());
                auto& slot = v[lookup[d].at(full)];
                slot = F.add(slot, F.reduce(c));
              }
              gens.push_back(std::move(v));
            }
          }
        }
      }
      ideal.push_back(Subspace::span(F, level[d].size(), gens));
    }
    if (ideal[d].dim() == level[d].size()) {
      top = d;
      break;
    }
  }

  // Standard paths: non-pivot columns per degree.
  std::vector<std::vector<std::size_t>> standard(top);
  std::vector<std::vector<std::size_t>> basis_index(top);
  std::vector<std::string> labels;
  std::size_t dim = 0;
  for (std::size_t d = 0; d < top; ++d) {
    std::vector<bool> pivot(level[d].size(), false);
    for (auto c : ideal[d].pivots()) pivot[c] = true;
    basis_index[d].assign(level[d].size(), SIZE_MAX);
    for (std::size_t i = 0; i < level[d].size(); ++i) {
      if (pivot[i]) continue;
      standard[d].push_back(i);
      basis_index[d][i] = dim++;
      const auto& path = level[d][i];
      if (d == 0) {
        labels.push_back("e" + std::to_string(path.source + 1));
      } else {
        std::string s;
        for (auto a : path.arrows) s += (s.empty() ? "" : "*") + q.arrows[a].label;
        labels.push_back(s);
      }
    }
  }
  struct BasisPath {
    std::size_t degree, position;
  };
  std::vector<BasisPath> where;
  for (std::size_t d = 0; d < top; ++d)
    for (auto i : standard[d]) where.push_back({d, i});

  std::vector<StructureConstant> mult;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const auto& pa = level[where[a].degree][where[a].position];
      const auto& pb = level[where[b].degree][where[b].position];
      if (pa.target != pb.source) continue;
      const std::size_t d = where[a].degree + where[b].degree;
      if (d >= top) continue;
      std::size_t pos;
      if (d == 0) {
        pos = pa.source;
      } else {
        QuiverPresentation::Path full = pa.arrows;
        full.insert(full.end(), pb.arrows.begin(), pb.arrows.end());
        pos = lookup[d].at(full);
      }
      const Vec nf = ideal[d].reduce(unit_vector(level[d].size(), pos));
      for (std::size_t i = 0; i < nf.size(); ++i)
        if (nf[i]) mult.push_back({a, b, basis_index[d][i], nf[i]});
    }

  Vec unit(dim, 0);
  for (std::size_t v = 0; v < q.vertices; ++v) unit[basis_index[0][v]] = 1;
  std::vector<Vec> radical;
  if (top > 1)
    for (auto i : standard[1]) radical.push_back(unit_vector(dim, basis_index[1][i]));
  return make_algebra(F, labels, mult, unit, radical, std::nullopt, std::nullopt, std::move(name));
}

inline QuiverPresentation kronecker_quiver() {
  QuiverPresentation q;
  q.vertices = 2;
  q.arrows = {{0, 1, "a"}, {0, 1, "b"}};
  return q;
}

// Bound quiver presentation of the trivial extension of the Kronecker algebra:
// x1, y1 : 1 -> 2 and x2, y2 : 2 -> 1.
inline QuiverPresentation trivial_extension_kronecker_quiver(std::uint32_t p) {
  const Field F(p);
  QuiverPresentation q;
  q.vertices = 2;
  q.arrows = {{0, 1, "x1"}, {0, 1, "y1"}, {1, 0, "x2"}, {1, 0, "y2"}};
  enum { x1, y1, x2, y2 };
  const Elem m1 = F.neg(1);
  q.relations = {
      {{{1, {x1, y2}}, {m1, {y1, x2}}}},
      {{{1, {y2, x1}}, {m1, {x2, y1}}}},
      {{{1, {x2, x1}}}},
      {{{1, {x1, x2}}}},
      {{{1, {y1, y2}}}},
      {{{1, {y2, y1}}}},
  };
  return q;
}

inline Algebra kronecker_algebra(std::uint32_t p) { return quiver_algebra(p, kronecker_quiver(), "Kr"); }

// A ⊕ A* with (a,f)(b,g) = (ab, a.g + f.b), where (a.f)(b) = f(ba) and
// (f.a)(b) = f(ab). Basis: e_i then the dual basis e_i*.
inline Algebra trivial_extension(const Algebra& a) {
  const Field& F = a.field();
  const std::size_t n = a.dim();
  std::vector<std::string> labels = a.labels();
  for (const auto& l : a.labels()) labels.push_back(l + "*");
  std::vector<StructureConstant> mult;
  for (const auto& sc : a.structure_constants()) {
    mult.push_back({sc.i, sc.j, sc.k, sc.c});
    // e_j . e_k* picks up c on e_i*; e_k* . e_i picks up c on e_j*
    mult.push_back({sc.j, n + sc.k, n + sc.i, sc.c});
    mult.push_back({n + sc.k, sc.i, n + sc.j, sc.c});
  }
  Vec unit(2 * n, 0);
  std::copy(a.unit().begin(), a.unit().end(), unit.begin());

  auto embed = [n](const Vec& v) {
    Vec r(2 * n, 0);
    std::copy(v.begin(), v.end(), r.begin());
    return r;
  };
  std::optional<std::vector<Vec>> radical;
  if (a.radical_gens()) {
    radical.emplace();
    for (const auto& g : *a.radical_gens()) radical->push_back(embed(g));
    for (std::size_t i = 0; i < n; ++i) radical->push_back(unit_vector(2 * n, n + i));
  }
  std::optional<Vec> counit;
  if (a.counit()) counit = embed(*a.counit());
  auto name = "T(" + (a.name().empty() ? std::string("A") : a.name()) + ")";
  return make_algebra(F, labels, mult, unit, radical, counit, std::nullopt, name);
}

}  // namespace hh1
