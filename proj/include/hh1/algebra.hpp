#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace hh1 {

struct Term {
  std::uint32_t index;
  Elem coef;
  friend bool operator==(const Term&, const Term&) = default;
};
using SparseVec = std::vector<Term>;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AssociativityViolation : public AlgebraError {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t k)
      : AlgebraError("associativity fails on basis triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                     std::to_string(k) + ")"),
        triple{i, j, k} {}
  std::tuple<std::size_t, std::size_t, std::size_t> triple;
};

class UnitViolation : public AlgebraError {
 public:
  explicit UnitViolation(std::size_t i)
      : AlgebraError("unit is not a two-sided identity on basis element " + std::to_string(i)), index(i) {}
  std::size_t index;
};

// One structure constant: e_i * e_j has coefficient c on e_k.
struct StructureConstant {
  std::size_t i, j, k;
  Elem c;
};

// Generators and relations for an algebra whose basis consists of words in
// the generators. Used to solve the derivation equations on generators only.
struct Presentation {
  using Word = std::vector<std::uint32_t>;
  struct Relation {
    std::vector<std::pair<Elem, Word>> terms;  // sum of coef * word; empty word is 1
  };
  std::vector<std::string> generator_names;
  std::vector<Vec> generators;    // as elements of the algebra
  std::vector<Word> basis_words;  // basis element k equals the product of basis_words[k]
  std::vector<Relation> relations;
};

// Finite-dimensional associative unital algebra over GF(p), given by
// structure constants in a labelled basis. Immutable once constructed.
class Algebra {
 public:
  Algebra() = default;

  const Field& field() const { return F_; }
  std::uint32_t p() const { return F_.p(); }
  std::size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const std::optional<std::vector<Vec>>& radical_gens() const { return radical_gens_; }
  const std::optional<Vec>& counit() const { return counit_; }
  const std::optional<Presentation>& presentation() const { return presentation_; }

  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec basis(std::size_t i) const { return unit_vector(dim(), i); }

  Vec multiply(const Vec& a, const Vec& b) const {
    const std::size_t n = dim();
    std::vector<std::uint64_t> acc(n, 0);
    const std::uint64_t p = F_.p();
    std::vector<std::size_t> nb;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j]) nb.push_back(j);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (std::size_t j : nb) {
        const std::uint64_t ab = static_cast<std::uint64_t>(a[i]) * b[j] % p;
        for (const auto& t : product(i, j)) acc[t.index] += ab * t.coef;
      }
    }
    Vec r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = static_cast<Elem>(acc[k] % p);
    return r;
  }

  // e_i * v and v * e_i without materializing e_i.
  Vec left_basis_multiply(std::size_t i, const Vec& v) const {
    Vec r(dim(), 0);
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!v[j]) continue;
      for (const auto& t : product(i, j)) r[t.index] = F_.add(r[t.index], F_.mul(v[j], t.coef));
    }
    return r;
  }
  Vec right_basis_multiply(const Vec& v, std::size_t i) const {
    Vec r(dim(), 0);
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!v[j]) continue;
      for (const auto& t : product(j, i)) r[t.index] = F_.add(r[t.index], F_.mul(v[j], t.coef));
    }
    return r;
  }

  Vec power(const Vec& a, std::uint64_t e) const {
    Vec r = unit_;
    for (std::uint64_t i = 0; i < e; ++i) r = multiply(r, a);
    return r;
  }

  Vec commutator(const Vec& a, const Vec& b) const { return sub(F_, multiply(a, b), multiply(b, a)); }

  // Matrix of left multiplication by a (columns are a * e_j).
  Mat left_multiplication(const Vec& a) const {
    Mat m(F_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec col(dim(), 0);
      for (std::size_t i = 0; i < dim(); ++i) {
        if (!a[i]) continue;
        for (const auto& t : product(i, j)) col[t.index] = F_.add(col[t.index], F_.mul(a[i], t.coef));
      }
      m.set_column(j, col);
    }
    return m;
  }

  std::vector<StructureConstant> structure_constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& t : product(i, j))
          if (t.coef) out.push_back({i, j, t.index, t.coef});
    return out;
  }

  // Throws AssociativityViolation / UnitViolation on the first failure.
  void validate() const;

  Algebra with_name(std::string name) const {
    Algebra a(*this);
    a.name_ = std::move(name);
    return a;
  }

  friend Algebra make_algebra(Field, std::vector<std::string>, const std::vector<StructureConstant>&, Vec,
                              std::optional<std::vector<Vec>>, std::optional<Vec>, std::optional<Presentation>,
                              std::string);
  friend Algebra make_algebra_unchecked(Field, std::vector<std::string>, const std::vector<StructureConstant>&, Vec,
                                        std::optional<std::vector<Vec>>, std::optional<Vec>,
                                        std::optional<Presentation>, std::string);

 private:
  Field F_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  Vec unit_;
  std::optional<std::vector<Vec>> radical_gens_;
  std::optional<Vec> counit_;
  std::optional<Presentation> presentation_;
};

namespace detail {

inline void canonicalize(SparseVec& v, const Field& F) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVec out;
  for (const auto& t : v) {
    if (!out.empty() && out.back().index == t.index)
      out.back().coef = F.add(out.back().coef, t.coef);
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  v = std::move(out);
}

}  // namespace detail

inline Algebra make_algebra_unchecked(Field F, std::vector<std::string> labels,
                                      const std::vector<StructureConstant>& mult, Vec unit,
                                      std::optional<std::vector<Vec>> radical_gens = std::nullopt,
                                      std::optional<Vec> counit = std::nullopt,
                                      std::optional<Presentation> presentation = std::nullopt,
                                      std::string name = {}) {
  const std::size_t n = labels.size();
  if (unit.size() != n) throw DimensionError("unit vector has wrong length");
  Algebra a;
  a.F_ = F;
  a.name_ = std::move(name);
  a.labels_ = std::move(labels);
  a.table_.assign(n * n, {});
  for (const auto& sc : mult) {
    if (sc.i >= n || sc.j >= n || sc.k >= n) throw DimensionError("structure constant index out of range");
    a.table_[sc.i * n + sc.j].push_back({static_cast<std::uint32_t>(sc.k), F.reduce(sc.c)});
  }
  for (auto& v : a.table_) detail::canonicalize(v, F);
  for (auto& e : unit) e = F.reduce(e);
  a.unit_ = std::move(unit);
  if (radical_gens)
    for (const auto& g : *radical_gens)
      if (g.size() != n) throw DimensionError("radical generator has wrong length");
  if (counit && counit->size() != n) throw DimensionError("counit has wrong length");
  a.radical_gens_ = std::move(radical_gens);
  a.counit_ = std::move(counit);
  a.presentation_ = std::move(presentation);
  return a;
}

inline void Algebra::validate() const {
  const std::size_t n = dim();
  SparseVec left, right;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& jk = product(j, k);
        if (ij.empty() && jk.empty()) continue;
        left.clear();
        right.clear();
        for (const auto& t : ij)
          for (const auto& u : product(t.index, k)) left.push_back({u.index, F_.mul(t.coef, u.coef)});
        for (const auto& t : jk)
          for (const auto& u : product(i, t.index)) right.push_back({u.index, F_.mul(t.coef, u.coef)});
        if (left.size() > 1) detail::canonicalize(left, F_);
        else std::erase_if(left, [](const Term& t) { return t.coef == 0; });
        if (right.size() > 1) detail::canonicalize(right, F_);
        else std::erase_if(right, [](const Term& t) { return t.coef == 0; });
        if (left != right) throw AssociativityViolation(i, j, k);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = basis(i);
    if (right_basis_multiply(unit_, i) != e || left_basis_multiply(i, unit_) != e) throw UnitViolation(i);
  }
  if (counit_) {
    // The counit must be an algebra map to GF(p).
    if (dot(F_, *counit_, unit_) != 1) throw AlgebraError("counit does not send 1 to 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Elem lhs = 0;
        for (const auto& t : product(i, j)) lhs = F_.add(lhs, F_.mul(t.coef, (*counit_)[t.index]));
        if (lhs != F_.mul((*counit_)[i], (*counit_)[j]))
          throw AlgebraError("counit is not multiplicative on (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
  }
  if (presentation_) {
    const auto& P = *presentation_;
    auto eval = [&](const Presentation::Word& w) {
      Vec r = unit_;
      for (auto g : w) r = multiply(r, P.generators.at(g));
      return r;
    };
    if (P.basis_words.size() != n) throw AlgebraError("presentation does not list a word for every basis element");
    for (std::size_t k = 0; k < n; ++k)
      if (eval(P.basis_words[k]) != basis(k))
        throw AlgebraError("presentation word for basis element " + labels_[k] + " evaluates incorrectly");
    for (const auto& rel : P.relations) {
      Vec r(n, 0);
      for (const auto& [c, w] : rel.terms) axpy(F_, c, eval(w), r);
      if (!is_zero(r)) throw AlgebraError("presentation relation does not hold");
    }
  }
}

// Validated constructor: associativity on all basis triples, unit laws,
// counit multiplicativity and presentation consistency.
inline Algebra make_algebra(Field F, std::vector<std::string> labels, const std::vector<StructureConstant>& mult,
                            Vec unit, std::optional<std::vector<Vec>> radical_gens = std::nullopt,
                            std::optional<Vec> counit = std::nullopt,
                            std::optional<Presentation> presentation = std::nullopt, std::string name = {}) {
  Algebra a = make_algebra_unchecked(F, std::move(labels), mult, std::move(unit), std::move(radical_gens),
                                     std::move(counit), std::move(presentation), std::move(name));
  a.validate();
  return a;
}

// Checks that `phi` (columns = images of the basis of `a` in `b`) is a
// bijective algebra map sending 1 to 1.
inline bool is_algebra_isomorphism(const Algebra& a, const Algebra& b, const Mat& phi) {
  if (a.dim() != b.dim() || a.p() != b.p() || phi.rows() != b.dim() || phi.cols() != a.dim()) return false;
  if (rank(phi) != a.dim()) return false;
  if (phi.apply(a.unit()) != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec ab(a.dim(), 0);
      for (const auto& t : a.product(i, j)) ab[t.index] = t.coef;
      if (phi.apply(ab) != b.multiply(phi.column(i), phi.column(j))) return false;
    }
  return true;
}

}  // namespace hh1
