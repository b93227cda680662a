#ifndef CHEVKIT_LINALG_HPP
#define CHEVKIT_LINALG_HPP

// Dense exact matrices.  All eliminations use the same pivot rule: in the
// leftmost unfinished column, take the first nonzero entry scanning down.

#include "chevkit/field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

template <class E>
using Vec = std::vector<E>;

template <class E>
class Matrix {
 public:
  using element_type = E;
  using context_type = typename E::context_type;

  Matrix() = default;
  Matrix(const context_type& ctx, size_t rows, size_t cols)
      : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, ctx.zero()) {}

  static Matrix identity(const context_type& ctx, size_t n) {
    Matrix m(ctx, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
    return m;
  }
  static Matrix diagonal(const context_type& ctx, const Vec<E>& d) {
    Matrix m(ctx, d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_rows(const context_type& ctx, const std::vector<Vec<E>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("matrix must have positive dimensions");
    Matrix m(ctx, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix column(const context_type& ctx, const Vec<E>& v) {
    Matrix m(ctx, v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  const context_type& context() const { return *ctx_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  E& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec<E> col(size_t j) const {
    Vec<E> v(rows_, ctx_->zero());
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<E> row(size_t i) const { return Vec<E>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  bool is_identity() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? ctx_->one() : ctx_->zero())) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(*ctx_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    if (ctx_ != o.ctx_) throw std::invalid_argument("matrices over different fields");
    Matrix r(*ctx_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const E& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Vec<E> operator*(const Vec<E>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
    Vec<E> r(rows_, ctx_->zero());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }
  Matrix scaled(const E& c) const {
    Matrix r = *this;
    for (auto& e : r.data_) e *= c;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  const std::vector<E>& data() const { return data_; }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    if (ctx_ != o.ctx_) throw std::invalid_argument("matrices over different fields");
  }

  const context_type* ctx_ = nullptr;
  size_t rows_ = 0, cols_ = 0;
  std::vector<E> data_;
};

namespace detail {

// Reduced row echelon form in place; returns pivot columns.  Only the first
// `limit` columns are eligible as pivots.
template <class E>
std::vector<size_t> rref(Matrix<E>& m, size_t limit) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < limit && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const E inv = m(r, c).inverse();
    for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const E f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class E>
Matrix<E> mul(const Matrix<E>& a, const Matrix<E>& b) {
  return a * b;
}

template <class E>
size_t rank(const Matrix<E>& a) {
  Matrix<E> m = a;
  return detail::rref(m, m.cols()).size();
}

template <class E>
E det(const Matrix<E>& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<E> m = a;
  const size_t n = m.rows();
  E d = a.context().one();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return a.context().zero();
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    const E inv = m(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const E f = m(i, c) * inv;
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class E>
Matrix<E> inverse(const Matrix<E>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const size_t n = a.rows();
  Matrix<E> aug(a.context(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.context().one();
  }
  if (detail::rref(aug, n).size() != n) throw std::domain_error("matrix is singular");
  Matrix<E> inv(a.context(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// A solution y of a·y = v with free variables set to zero, if one exists.
template <class E>
std::optional<Vec<E>> solve_preimage(const Matrix<E>& a, const Vec<E>& v) {
  if (v.size() != a.rows()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix<E> aug(a.context(), a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = v[i];
  }
  const auto pivots = detail::rref(aug, a.cols());
  for (size_t i = pivots.size(); i < a.rows(); ++i)
    if (!aug(i, a.cols()).is_zero()) return std::nullopt;
  Vec<E> y(a.cols(), a.context().zero());
  for (size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = aug(r, a.cols());
  return y;
}

/// Columns of a at the pivot positions of its row echelon form.
template <class E>
std::vector<Vec<E>> column_basis(const Matrix<E>& a) {
  Matrix<E> m = a;
  std::vector<Vec<E>> out;
  for (size_t c : detail::rref(m, m.cols())) out.push_back(a.col(c));
  return out;
}

/// Conjugate transpose for matrices over GF(r^2).
inline Matrix<Fq> conj_transpose(const Matrix<Fq>& a) {
  Matrix<Fq> t(a.context(), a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t(j, i) = frobenius(a(i, j));
  return t;
}

/// Bilinear pairing uᵗ·m·v.
template <class E>
E bilinear(const Vec<E>& u, const Matrix<E>& m, const Vec<E>& v) {
  E s = m.context().zero();
  for (size_t i = 0; i < m.rows(); ++i) {
    if (u[i].is_zero()) continue;
    E t = m.context().zero();
    for (size_t j = 0; j < m.cols(); ++j) t += m(i, j) * v[j];
    s += u[i] * t;
  }
  return s;
}

/// Row/column positions for the signed index convention
/// 1..l, -1..-l (size 2l) or 0, 1..l, -1..-l (size 2l+1).
///   even: i -> i-1,  -i -> l+i-1
///   odd:  0 -> 0,    i -> i,  -i -> l+i
struct IndexMap {
  size_t l;
  bool odd;

  size_t size() const { return 2 * l + (odd ? 1 : 0); }
  size_t operator()(int idx) const {
    if (idx == 0) {
      if (!odd) throw std::out_of_range("index 0 only exists in odd dimension");
      return 0;
    }
    const size_t a = static_cast<size_t>(idx < 0 ? -idx : idx);
    if (a > l) throw std::out_of_range("index " + std::to_string(idx) + " out of range");
    const size_t base = odd ? 1 : 0;
    return idx > 0 ? base + a - 1 : base + l + a - 1;
  }
  int label(size_t pos) const {
    if (odd) {
      if (pos == 0) return 0;
      --pos;
    }
    return pos < l ? static_cast<int>(pos + 1) : -static_cast<int>(pos - l + 1);
  }
};

}  // namespace chevkit

#endif  // CHEVKIT_LINALG_HPP
