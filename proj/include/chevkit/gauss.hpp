#ifndef CHEVKIT_GAUSS_HPP
#define CHEVKIT_GAUSS_HPP

// Gaussian elimination with elementary generators.  decompose() writes a
// member g of GSp(2l), GO(2l) or GO(2l+1) as eval(left) * diagonal *
// eval(right) with the diagonal in the canonical torus shape.

#include "chevkit/generators.hpp"

#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

/// g is not an element of the requested group.
class NotMember : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class E>
struct Decomposition {
  GroupKind kind;
  Word<E> left;
  Word<E> right;
  Matrix<E> diagonal;
  E mu;
  E lambda;
  std::optional<E> alpha;  // odd orthogonal only
};

template <class E>
struct GLElimination {
  Word<E> left;
  Matrix<E> diagonal;
  Word<E> right;
};

namespace detail {

// Tracks g together with words L, R such that original = eval(L) * g * eval(R).
template <class E>
class Reducer {
 public:
  Reducer(GroupKind kind, Matrix<E> g) : kind_(kind), g_(std::move(g)) {}

  void left(const Token<E>& tok) {
    apply_left(g_, kind_, tok);
    left_.push_back(inverse_token(tok));
  }
  void right(const Token<E>& tok) {
    apply_right(g_, kind_, tok);
    right_.push_front(inverse_token(tok));
  }
  void left(const Word<E>& w) {
    apply_left(g_, w);
    const Word<E> inv = inverse_word(w);
    left_.insert(left_.end(), inv.tokens.begin(), inv.tokens.end());
  }

  Matrix<E>& g() { return g_; }
  const GroupKind& kind() const { return kind_; }
  Word<E> left_word() const { return Word<E>{kind_, left_}; }
  Word<E> right_word() const { return Word<E>{kind_, std::vector<Token<E>>(right_.begin(), right_.end())}; }

 private:
  GroupKind kind_;
  Matrix<E> g_;
  std::vector<Token<E>> left_;
  std::deque<Token<E>> right_;
};

// Diagonalizes the n x n block at rows/cols pos(1..n) using only
// row i += t row j (left x[i,j](t)) and col j += t col i (right x[i,j](t)).
// The result is diag(1,...,1,d) when the block is invertible, otherwise
// diag(1,...,1,0,...,0).
template <class E, class Pos>
void reduce_block(Reducer<E>& red, size_t n, Pos pos) {
  Matrix<E>& g = red.g();
  const auto& ctx = g.context();
  auto at = [&](size_t i, size_t j) -> const E& { return g(pos(i), pos(j)); };
  auto row_op = [&](size_t i, size_t j, const E& t) {  // row i += t row j
    red.left(Token<E>::x(int(i), int(j), t));
  };
  auto col_op = [&](size_t i, size_t j, const E& t) {  // col j += t col i
    red.right(Token<E>::x(int(i), int(j), t));
  };
  for (size_t k = 1; k <= n; ++k) {
    // Pivot: leftmost column with a nonzero entry in rows >= k, first such row.
    size_t pr = 0, pc = 0;
    for (size_t c = k; c <= n && !pc; ++c)
      for (size_t r = k; r <= n; ++r)
        if (!at(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (!pc) return;
    if (pc != k) col_op(pc, k, ctx.one());
    if (pr != k) row_op(k, pr, ctx.one());
    if (k < n && !at(k, k).is_one()) {
      if (at(k + 1, k).is_zero()) row_op(k + 1, k, ctx.one());
      row_op(k, k + 1, (ctx.one() - at(k, k)) / at(k + 1, k));
    }
    const E p = at(k, k);
    for (size_t i = k + 1; i <= n; ++i)
      if (!at(i, k).is_zero()) row_op(i, k, -(at(i, k) / p));
    for (size_t j = k + 1; j <= n; ++j)
      if (!at(k, j).is_zero()) col_op(k, j, -(at(k, j) / p));
  }
}

template <class E>
bool is_diagonal(const Matrix<E>& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace detail

/// Classical elimination by transvections: a = eval(left) * diag * eval(right)
/// with diag = diag(1,...,1,det a) or diag(1,...,1,0,...,0).
template <class E>
GLElimination<E> gl_eliminate(const Matrix<E>& a) {
  if (!a.is_square()) throw std::invalid_argument("gl_eliminate needs a square matrix");
  const GroupKind kind{Family::GL, a.rows()};
  detail::Reducer<E> red(kind, a);
  detail::reduce_block(red, a.rows(), [](size_t i) { return i - 1; });
  return GLElimination<E>{red.left_word(), red.g(), red.right_word()};
}

/// Expected canonical diagonal for the kind, given μ, λ and α.
template <class E>
Matrix<E> canonical_diagonal(const GroupKind& kind, const E& mu, const E& lambda, const std::optional<E>& alpha) {
  const auto& ctx = mu.context();
  const IndexMap ix = kind.index_map();
  const int l = static_cast<int>(kind.rank);
  Vec<E> d(kind.dim(), ctx.one());
  for (int i = 1; i <= l; ++i) d[ix(-i)] = mu;
  if (kind.orthogonal()) {
    d[ix(l)] = lambda;
    d[ix(-l)] = mu / lambda;
  }
  if (kind.orthogonal_odd()) d[0] = alpha ? *alpha : ctx.zero();
  return Matrix<E>::diagonal(ctx, d);
}

template <class E>
Decomposition<E> decompose(const Matrix<E>& g, const GroupKind& kind) {
  using Ctx = typename E::context_type;
  if (!kind.symplectic() && !kind.orthogonal())
    throw std::invalid_argument("decompose supports symplectic and orthogonal kinds, not " + kind.name());
  if (!g.is_square() || g.rows() != kind.dim())
    throw std::invalid_argument(kind.name() + " needs a " + std::to_string(kind.dim()) + "x" +
                                std::to_string(kind.dim()) + " matrix");
  const Ctx& ctx = g.context();
  if (kind.orthogonal()) require_odd_characteristic(ctx, "orthogonal elimination");
  const auto mu = similitude(g, kind);
  if (!mu) throw NotMember("matrix is not an element of " + kind.name());

  const IndexMap ix = kind.index_map();
  const size_t l = kind.rank;
  const int L = static_cast<int>(l);
  const bool odd = kind.orthogonal_odd();
  const bool sp = kind.symplectic();
  detail::Reducer<E> red(kind, g);
  Matrix<E>& m = red.g();
  auto at = [&](int r, int c) -> E& { return m(ix(r), ix(c)); };
  auto fail = [&](const std::string& what) {
    throw std::logic_error("elimination invariant violated (" + what + ") for " + kind.name());
  };

  std::vector<bool> pivot(l + 1, false);
  size_t rank = 0;
  for (size_t pass = 0; pass <= l; ++pass) {
    // Step 1: diagonalize A by x[i,j] row and column operations.
    detail::reduce_block(red, l, [&](size_t i) { return ix(int(i)); });
    rank = 0;
    for (int i = 1; i <= L; ++i) {
      pivot[i] = !at(i, i).is_zero();
      rank += pivot[i];
    }
    if (odd) {
      // Clear X_i and E_i at pivot positions.
      for (int i = 1; i <= L; ++i)
        if (pivot[i] && !at(0, i).is_zero()) red.left(Token<E>::x(0, i, -(at(0, i) / at(i, i))));
      for (int i = 1; i <= L; ++i)
        if (pivot[i] && !at(i, 0).is_zero())
          red.right(Token<E>::x(i, 0, -(at(i, 0) / (ctx.from_int(2) * at(i, i)))));
    }
    // Step 2: C <- C + R A with R symmetric (GSp) or skew (GO).
    auto r_entry = [&](int i, int j) -> E {
      if (pivot[j]) return -(at(-i, j) / at(j, j));
      if (pivot[i]) {
        const E v = -(at(-j, i) / at(i, i));
        return sp ? v : -v;
      }
      return ctx.zero();
    };
    std::vector<Token<E>> er3;
    for (int j = 1; j <= L; ++j)
      for (int i = 1; i <= j; ++i) {
        if (i == j && !sp) continue;
        const E t = r_entry(i, j);
        if (!t.is_zero()) er3.push_back(Token<E>::x(-i, j, t));
      }
    for (const auto& t : er3) red.left(t);
    for (int j = 1; j <= L; ++j)
      if (pivot[j])
        for (int i = 1; i <= L; ++i)
          if (!at(-i, j).is_zero()) fail("C on pivot columns");
    if (rank == l) break;
    // Rank deficient: swap i and -i on the non-pivot rows, then repeat.
    for (int i = 1; i <= L; ++i)
      if (!pivot[i]) red.left(w_pair(kind, size_t(i), ctx));
  }
  if (rank != l) fail("A did not reach full rank");
  for (int i = 1; i <= L; ++i)
    for (int j = 1; j <= L; ++j)
      if (!at(-i, j).is_zero()) fail("C not cleared");
  if (odd)
    for (int i = 1; i <= L; ++i)
      if (!at(0, i).is_zero() || !at(i, 0).is_zero()) fail("X or E not cleared");

  // Step 3: B <- B + R D.
  std::vector<Token<E>> er2;
  for (int j = 1; j <= L; ++j)
    for (int i = 1; i <= j; ++i) {
      if (i == j && !sp) continue;
      const E t = -(at(i, -j) / at(-j, -j));
      if (!t.is_zero()) er2.push_back(Token<E>::x(i, -j, t));
    }
  for (const auto& t : er2) red.left(t);
  if (!detail::is_diagonal(m)) fail("result not diagonal");

  E lambda = at(L, L);
  std::optional<E> alpha;
  if (sp) {
    // Step 4: absorb λ with h_l(λ^-1).
    if (!lambda.is_one()) red.left(torus_h(kind, lambda.inverse()));
    lambda = ctx.one();
  }
  if (odd) {
    const E a = m(0, 0);
    if constexpr (std::is_same_v<E, Fq>) {
      const auto s = sqrt(*mu);
      if (!s) throw NotMember("similitude factor is not a square");
      if (a != *s) {
        // diag(-1, 1, ..., 1) = w_{l,-l} w_l
        Word<E> flip = w_pair(kind, l, ctx);
        flip.tokens.push_back(Token<E>::w(L, ctx));
        red.left(flip);
      }
    } else {
      const auto s = sqrt(*mu);
      if (s && a != *s) {
        Word<E> flip = w_pair(kind, l, ctx);
        flip.tokens.push_back(Token<E>::w(L, ctx));
        red.left(flip);
      }
    }
    alpha = m(0, 0);
  }
  Decomposition<E> d{kind, red.left_word(), red.right_word(), m, *mu, lambda, alpha};
  if (d.diagonal != canonical_diagonal(kind, d.mu, d.lambda, d.alpha)) fail("diagonal shape");
  return d;
}

/// True iff eval(left) * diagonal * eval(right) = g and the diagonal has
/// the canonical shape for the kind.
template <class E>
bool verify(const Decomposition<E>& d, const Matrix<E>& g) {
  try {
    const GroupKind& kind = d.kind;
    if (d.left.kind != kind || d.right.kind != kind) return false;
    if (!g.is_square() || g.rows() != kind.dim() || d.diagonal.rows() != kind.dim()) return false;
    const auto& ctx = g.context();
    if (d.mu.is_zero() || d.lambda.is_zero()) return false;
    if (kind.isometry_only() && !d.mu.is_one()) return false;
    if (kind.symplectic() && !d.lambda.is_one()) return false;
    if (kind.orthogonal_odd()) {
      if (!d.alpha || *d.alpha * *d.alpha != d.mu) return false;
    } else if (d.alpha) {
      return false;
    }
    if (d.diagonal != canonical_diagonal(kind, d.mu, d.lambda, d.alpha)) return false;
    return eval_word(d.left, ctx) * d.diagonal * eval_word(d.right, ctx) == g;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace chevkit

#endif  // CHEVKIT_GAUSS_HPP
