#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"

namespace hh1 {

using Vec = std::vector<Elem>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

inline Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

// y += c * x
inline void axpy(const Field& F, Elem c, std::span<const Elem> x, std::span<Elem> y) {
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = F.add(y[i], F.mul(c, x[i]));
}

inline Vec add(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a);
  axpy(F, 1, b, r);
  return r;
}

inline Vec sub(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a);
  axpy(F, F.neg(1), b, r);
  return r;
}

inline Vec scale(const Field& F, Elem c, Vec v) {
  for (auto& e : v) e = F.mul(c, e);
  return v;
}

inline Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b) {
  std::uint64_t acc = 0;
  const std::uint64_t p = F.p();
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
    if (acc >= (1ull << 62)) acc %= p;
  }
  return static_cast<Elem>(acc % p);
}

inline Vec random_vector(const Field& F, std::size_t n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& e : v) e = F.random(rng);
  return v;
}

// Dense row-major matrix over GF(p).
class Mat {
 public:
  Mat() = default;
  Mat(Field F, std::size_t rows, std::size_t cols) : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Mat identity(Field F, std::size_t n) {
    Mat m(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_rows(Field F, std::size_t cols, const std::vector<Vec>& rows) {
    Mat m(F, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  static Mat from_columns(Field F, std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(F, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const Field& field() const { return F_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }

  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, std::span<const Elem> v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  const std::vector<Elem>& data() const { return a_; }

  bool is_zero() const { return hh1::is_zero(a_); }

  Mat transpose() const {
    Mat t(F_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = dot(F_, row(i), v);
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    require_same_field(a.F_, b.F_);
    if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
    const std::uint64_t p = a.F_.p();
    Mat c(a.F_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k);
        if (!aik) continue;
        auto brow = b.row(k);
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
        if ((k & 0x3ff) == 0x3ff)
          for (auto& x : acc) x %= p;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Elem>(acc[j] % p);
    }
    return c;
  }

  friend Mat operator+(const Mat& a, const Mat& b) { return a.combine(b, false); }
  friend Mat operator-(const Mat& a, const Mat& b) { return a.combine(b, true); }

  Mat scaled(Elem c) const {
    Mat r(*this);
    for (auto& e : r.a_) e = F_.mul(c, e);
    return r;
  }

  Mat pow(std::uint64_t e) const {
    if (rows_ != cols_) throw DimensionError("power of non-square matrix");
    Mat r = identity(F_, rows_);
    for (std::uint64_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.F_ == b.F_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Mat combine(const Mat& b, bool minus) const {
    require_same_field(F_, b.F_);
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
    Mat r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i)
      r.a_[i] = minus ? F_.sub(a_[i], b.a_[i]) : F_.add(a_[i], b.a_[i]);
    return r;
  }

  Field F_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

struct RrefResult {
  Mat matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination in place; pivots are normalized to 1.
inline RrefResult rref(Mat m) {
  const Field F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(inv, m(r, j));
    auto prow = m.row(r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem f = F.neg(m(i, c));
      auto ri = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (prow[j]) ri[j] = F.add(ri[j], F.mul(f, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

// A subspace of GF(p)^n stored by its reduced row echelon basis, which makes
// equal subspaces compare equal representation-wise.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field F, std::size_t ambient) : F_(F), n_(ambient) {}

  static Subspace span(Field F, std::size_t ambient, const std::vector<Vec>& gens) {
    Subspace s(F, ambient);
    if (gens.empty()) return s;
    auto rr = rref(Mat::from_rows(F, ambient, gens));
    for (std::size_t i = 0; i < rr.rank; ++i) s.basis_.push_back(rr.matrix.row_vec(i));
    s.pivots_ = std::move(rr.pivots);
    return s;
  }

  static Subspace full(Field F, std::size_t n) {
    Subspace s(F, n);
    for (std::size_t i = 0; i < n; ++i) {
      s.basis_.push_back(unit_vector(n, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  const Field& field() const { return F_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Canonical representative of v modulo this subspace: zero at every pivot.
  Vec reduce(Vec v) const {
    check_ambient(v.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (c) axpy(F_, F_.neg(c), basis_[i], v);
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec& v) { return contains(v); });
  }

  // Coordinates of v in the stored echelon basis (v must lie in the subspace).
  std::optional<Vec> coordinates(const Vec& v) const {
    Vec c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    Vec r(v);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(F_, F_.neg(c[i]), basis_[i], r);
    if (!is_zero(r)) return std::nullopt;
    return c;
  }

  Subspace sum(const Subspace& other) const {
    check_compatible(other);
    std::vector<Vec> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(F_, n_, gens);
  }

  Subspace intersection(const Subspace& other) const;

  // Basis extending (this ∩ other) to this, chosen canonically: the echelon
  // basis of this reduced modulo the intersection.
  std::vector<Vec> quotient_basis(const Subspace& other) const {
    const Subspace meet = intersection(other);
    std::vector<Vec> residues;
    for (const auto& v : basis_) residues.push_back(meet.reduce(v));
    return span(F_, n_, residues).basis();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.F_ == b.F_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  void check_ambient(std::size_t n) const {
    if (n != n_) throw DimensionError("vector does not live in the ambient space");
  }
  void check_compatible(const Subspace& o) const {
    require_same_field(F_, o.F_);
    if (o.n_ != n_) throw DimensionError("ambient dimension mismatch");
  }

  Field F_;
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace kernel(const Mat& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  const Field F = m.field();
  std::vector<Vec> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = F.neg(rr.matrix(r, f));
    gens.push_back(std::move(v));
  }
  return Subspace::span(F, m.cols(), gens);
}

inline Subspace Subspace::intersection(const Subspace& other) const {
  check_compatible(other);
  if (basis_.empty() || other.basis_.empty()) return Subspace(F_, n_);
  // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
  const std::size_t k = basis_.size();
  std::vector<Vec> cols = basis_;
  for (const auto& w : other.basis_) cols.push_back(scale(F_, F_.neg(1), w));
  auto rel = kernel(Mat::from_columns(F_, n_, cols));
  std::vector<Vec> gens;
  for (const auto& r : rel.basis()) {
    Vec x(n_, 0);
    for (std::size_t i = 0; i < k; ++i) axpy(F_, r[i], basis_[i], x);
    gens.push_back(std::move(x));
  }
  return span(F_, n_, gens);
}

// Coordinates with respect to an arbitrary (independent) list of vectors.
class Coordinatizer {
 public:
  Coordinatizer(Field F, std::size_t ambient, const std::vector<Vec>& vectors)
      : F_(F), n_(ambient), m_(vectors.size()) {
    Mat aug(F, m_, n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (vectors[i].size() != n_) throw DimensionError("coordinatizer vector size");
      std::copy(vectors[i].begin(), vectors[i].end(), aug.row(i).begin());
      aug(i, n_ + i) = 1;
    }
    auto rr = rref(std::move(aug));
    for (std::size_t r = 0; r < m_; ++r) {
      if (r >= rr.pivots.size() || rr.pivots[r] >= n_)
        throw DimensionError("coordinatizer vectors are linearly dependent");
      auto row = rr.matrix.row(r);
      rows_.emplace_back(row.begin(), row.begin() + n_);
      transforms_.emplace_back(row.begin() + n_, row.end());
      pivots_.push_back(rr.pivots[r]);
    }
  }

  std::size_t size() const { return m_; }

  std::optional<Vec> operator()(Vec v) const {
    if (v.size() != n_) throw DimensionError("coordinatizer input size");
    Vec c(m_, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem f = v[pivots_[r]];
      if (!f) continue;
      axpy(F_, F_.neg(f), rows_[r], v);
      axpy(F_, f, transforms_[r], c);
    }
    if (!is_zero(v)) return std::nullopt;
    return c;
  }

 private:
  Field F_;
  std::size_t n_, m_;
  std::vector<Vec> rows_, transforms_;
  std::vector<std::size_t> pivots_;
};

using SparseRow = std::vector<std::pair<std::size_t, Elem>>;

// Solution space of a homogeneous system fed one sparse equation at a time.
// Keeps an explicit kernel basis and cuts it down by each new equation, so
// memory is O(unknowns * kernel dim) regardless of how many equations arrive.
class SparseKernel {
 public:
  SparseKernel(Field F, std::size_t unknowns) : F_(F), n_(unknowns), m_(unknowns), k_(unknowns * unknowns, 0) {
    for (std::size_t i = 0; i < n_; ++i) k_[i * m_ + i] = 1;
    stride_ = m_;
  }

  std::size_t unknowns() const { return n_; }
  std::size_t dim() const { return m_; }

  void add_equation(const SparseRow& eq) {
    if (m_ == 0) return;
    const std::uint64_t p = F_.p();
    vals_.assign(m_, 0);
    for (auto [c, a] : eq) {
      if (!a) continue;
      const Elem* row = &k_[c * stride_];
      for (std::size_t j = 0; j < m_; ++j) vals_[j] += static_cast<std::uint64_t>(a) * row[j];
    }
    std::size_t piv = m_;
    for (std::size_t j = 0; j < m_; ++j) {
      vals_[j] %= p;
      if (vals_[j] && piv == m_) piv = j;
    }
    if (piv == m_) return;
    const Elem inv = F_.inv(static_cast<Elem>(vals_[piv]));
    std::vector<Elem> f(m_);
    for (std::size_t j = 0; j < m_; ++j) f[j] = F_.neg(F_.mul(static_cast<Elem>(vals_[j]), inv));
    const std::size_t last = m_ - 1;
    for (std::size_t c = 0; c < n_; ++c) {
      Elem* row = &k_[c * stride_];
      const Elem pv = row[piv];
      if (pv)
        for (std::size_t j = 0; j < m_; ++j)
          if (f[j]) row[j] = F_.add(row[j], F_.mul(f[j], pv));
      row[piv] = row[last];
    }
    --m_;
  }

  Subspace solution() const {
    std::vector<Vec> gens(m_, Vec(n_));
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t j = 0; j < m_; ++j) gens[j][c] = k_[c * stride_ + j];
    return Subspace::span(F_, n_, gens);
  }

 private:
  Field F_;
  std::size_t n_, m_, stride_;
  std::vector<Elem> k_;
  std::vector<std::uint64_t> vals_;
};

}  // namespace hh1
