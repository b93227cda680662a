#ifndef CHEVKIT_GENERATORS_HPP
#define CHEVKIT_GENERATORS_HPP

// Elementary generators x_a(t), w_l and torus elements h_i(λ), words in
// them, and their evaluation.  Indices are signed labels 1..l, -1..-l and 0
// (odd orthogonal); for GL/SL tokens x[i,j] are transvections I + t e_{i,j}.

#include "chevkit/forms.hpp"
#include "chevkit/rng.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace chevkit {

enum class TokenType { X, W, H };

template <class E>
struct Token {
  TokenType type = TokenType::X;
  int a = 0;
  int b = 0;
  E t{};  // unused for w

  static Token x(int a, int b, E t) { return Token{TokenType::X, a, b, std::move(t)}; }
  static Token w(int l, const typename E::context_type& ctx) { return Token{TokenType::W, l, 0, ctx.zero()}; }
  static Token h(int i, E lambda) { return Token{TokenType::H, i, 0, std::move(lambda)}; }

  friend bool operator==(const Token& p, const Token& q) {
    return p.type == q.type && p.a == q.a && p.b == q.b && (p.type == TokenType::W || p.t == q.t);
  }
  friend bool operator!=(const Token& p, const Token& q) { return !(p == q); }
};

template <class E>
struct Word {
  GroupKind kind;
  std::vector<Token<E>> tokens;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  void append(const Word& o) { tokens.insert(tokens.end(), o.tokens.begin(), o.tokens.end()); }
};

namespace detail {

inline void token_error(const GroupKind& kind, const std::string& what) {
  throw std::invalid_argument("illegal token for " + kind.name() + ": " + what);
}

inline bool in_range(int i, size_t l) { return i >= 1 && static_cast<size_t>(i) <= l; }

}  // namespace detail

/// Throws std::invalid_argument unless tok is a generator of the given kind.
template <class E>
void check_token(const GroupKind& kind, const Token<E>& tok) {
  const Family f = kind.similitude_family();
  const size_t l = kind.rank;
  const std::string desc = "(" + std::to_string(tok.a) + "," + std::to_string(tok.b) + ")";
  if (f == Family::U) detail::token_error(kind, "unitary groups have no elementary tokens here");
  if (tok.type == TokenType::W) {
    if (!kind.orthogonal()) detail::token_error(kind, "w exists only in orthogonal groups");
    if (tok.a != static_cast<int>(l)) detail::token_error(kind, "w is only defined for index l");
    return;
  }
  if (tok.type == TokenType::H) {
    if (!kind.symplectic()) detail::token_error(kind, "h exists only in symplectic groups");
    if (!detail::in_range(tok.a, l)) detail::token_error(kind, "h index out of range");
    if (tok.t.is_zero()) detail::token_error(kind, "h needs a nonzero parameter");
    return;
  }
  const int a = tok.a, b = tok.b;
  if (f == Family::GL || f == Family::SL) {
    if (!detail::in_range(a, l) || !detail::in_range(b, l) || a == b) detail::token_error(kind, "x" + desc);
    return;
  }
  if (a == 0 || b == 0) {
    if (f != Family::GOodd) detail::token_error(kind, "index 0 only exists in odd orthogonal groups");
    if (a == b || !detail::in_range(a + b, l)) detail::token_error(kind, "x" + desc);
    return;
  }
  const int i = a < 0 ? -a : a, j = b < 0 ? -b : b;
  if (!detail::in_range(i, l) || !detail::in_range(j, l)) detail::token_error(kind, "x" + desc + " index out of range");
  if (a > 0 && b > 0) {
    if (a == b) detail::token_error(kind, "x" + desc);
    return;
  }
  if (a < 0 && b < 0) detail::token_error(kind, "x" + desc + " has two negative indices");
  // x[i,-j] or x[-i,j]
  if (f == Family::GSp ? !(i <= j) : !(i < j)) detail::token_error(kind, "x" + desc + " needs i < j");
}

/// Nonzero entries (row, col, value) of elementary(tok) - I.
template <class E>
struct SparseEntry {
  size_t r, c;
  E v;
};

template <class E>
std::vector<SparseEntry<E>> token_offsets(const GroupKind& kind, const Token<E>& tok,
                                          const typename E::context_type& ctx) {
  check_token(kind, tok);
  const Family f = kind.similitude_family();
  std::vector<SparseEntry<E>> out;
  if (f == Family::GL || f == Family::SL) {
    out.push_back({size_t(tok.a - 1), size_t(tok.b - 1), tok.t});
    return out;
  }
  const IndexMap ix = kind.index_map();
  auto add = [&](int r, int c, E v) { out.push_back({ix(r), ix(c), std::move(v)}); };
  const E one = ctx.one();
  if (tok.type == TokenType::W) {
    const int l = tok.a;
    add(l, l, -one);
    add(-l, -l, -one);
    add(l, -l, -one);
    add(-l, l, -one);
    return out;
  }
  if (tok.type == TokenType::H) {
    add(tok.a, tok.a, tok.t - one);
    add(-tok.a, -tok.a, tok.t.inverse() - one);
    return out;
  }
  const int a = tok.a, b = tok.b;
  const E& t = tok.t;
  const E two = ctx.from_int(2);
  if (b == 0) {  // x[i,0]
    const int i = a;
    add(i, 0, two * t);
    add(0, -i, -t);
    add(i, -i, -(t * t));
  } else if (a == 0) {  // x[0,i]
    const int i = b;
    add(-i, 0, -(two * t));
    add(0, i, t);
    add(-i, i, -(t * t));
  } else if (a > 0 && b > 0) {
    add(a, b, t);
    add(-b, -a, -t);
  } else {
    // x[i,-j] (a > 0) or x[-i,j] (a < 0)
    const int i = a < 0 ? -a : a, j = b < 0 ? -b : b;
    const E partner = f == Family::GSp ? t : -t;
    if (a > 0) {
      add(i, -j, t);
      if (i != j) add(j, -i, partner);
    } else {
      add(-i, j, t);
      if (i != j) add(-j, i, partner);
    }
  }
  return out;
}

template <class E>
Matrix<E> elementary(const GroupKind& kind, const Token<E>& tok, const typename E::context_type& ctx) {
  Matrix<E> m = Matrix<E>::identity(ctx, kind.dim());
  for (const auto& e : token_offsets(kind, tok, ctx)) m(e.r, e.c) += e.v;
  return m;
}

/// m <- elementary(tok) * m
template <class E>
void apply_left(Matrix<E>& m, const GroupKind& kind, const Token<E>& tok) {
  const auto& ctx = m.context();
  const auto offs = token_offsets(kind, tok, ctx);
  std::vector<std::pair<size_t, Vec<E>>> deltas;
  for (const auto& e : offs) {
    Vec<E> d(m.cols(), ctx.zero());
    for (size_t j = 0; j < m.cols(); ++j) d[j] = e.v * m(e.c, j);
    deltas.emplace_back(e.r, std::move(d));
  }
  for (const auto& [r, d] : deltas)
    for (size_t j = 0; j < m.cols(); ++j) m(r, j) += d[j];
}

/// m <- m * elementary(tok)
template <class E>
void apply_right(Matrix<E>& m, const GroupKind& kind, const Token<E>& tok) {
  const auto& ctx = m.context();
  const auto offs = token_offsets(kind, tok, ctx);
  std::vector<std::pair<size_t, Vec<E>>> deltas;
  for (const auto& e : offs) {
    Vec<E> d(m.rows(), ctx.zero());
    for (size_t i = 0; i < m.rows(); ++i) d[i] = m(i, e.r) * e.v;
    deltas.emplace_back(e.c, std::move(d));
  }
  for (const auto& [c, d] : deltas)
    for (size_t i = 0; i < m.rows(); ++i) m(i, c) += d[i];
}

/// Left-to-right product of the tokens; the empty word is the identity.
template <class E>
Matrix<E> eval_word(const Word<E>& w, const typename E::context_type& ctx) {
  Matrix<E> m = Matrix<E>::identity(ctx, w.kind.dim());
  for (const auto& tok : w.tokens) apply_right(m, w.kind, tok);
  return m;
}

template <class E>
Token<E> inverse_token(const Token<E>& tok) {
  switch (tok.type) {
    case TokenType::X: return Token<E>::x(tok.a, tok.b, -tok.t);
    case TokenType::W: return tok;
    case TokenType::H: return Token<E>::h(tok.a, tok.t.inverse());
  }
  return tok;
}

template <class E>
Word<E> inverse_word(const Word<E>& w) {
  Word<E> r{w.kind, {}};
  r.tokens.reserve(w.tokens.size());
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) r.tokens.push_back(inverse_token(*it));
  return r;
}

/// m <- eval(w) * m
template <class E>
void apply_left(Matrix<E>& m, const Word<E>& w) {
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) apply_left(m, w.kind, *it);
}

namespace detail {

// Token with an integer parameter, instantiated per field on demand.
struct IntToken {
  TokenType type;
  int a, b;
  long long t;
};

inline std::vector<IntToken> three(int a, int b, long long t1, int c, int d, long long t2) {
  return {{TokenType::X, a, b, t1}, {TokenType::X, c, d, t2}, {TokenType::X, a, b, t1}};
}

// w_{i,-i} in GO(2l): w_l, then w_{k,-k} w_{k,k-1} w_{k,-(k-1)} = w_{k-1,-(k-1)}.
// x_{k,-(k-1)}(t) = x_{k-1,-k}(-t) and x_{-k,k-1}(t) = x_{-(k-1),k}(-t).
inline const std::vector<IntToken>& go_even_swap(size_t l, size_t i) {
  static std::mutex mu;
  static std::map<std::pair<size_t, size_t>, std::vector<IntToken>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(l, i);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<IntToken> w{{TokenType::W, static_cast<int>(l), 0, 0}};
  for (int k = static_cast<int>(l); k > static_cast<int>(i); --k) {
    auto pos = three(k, k - 1, 1, k - 1, k, -1);
    auto neg = three(k - 1, -k, -1, -(k - 1), k, -1);
    w.insert(w.end(), pos.begin(), pos.end());
    w.insert(w.end(), neg.begin(), neg.end());
  }
  return memo.emplace(key, std::move(w)).first->second;
}

}  // namespace detail

/// Word evaluating to w_{i,-i}, the signed swap of rows i and -i.
template <class Ctx>
Word<typename Ctx::element_type> w_pair(const GroupKind& kind, size_t i, const Ctx& ctx) {
  using E = typename Ctx::element_type;
  if (i < 1 || i > kind.rank) throw std::out_of_range("w_pair index out of range");
  Word<E> w{kind, {}};
  const int s = static_cast<int>(i);
  auto x = [&](int a, int b, long long t) { w.tokens.push_back(Token<E>::x(a, b, ctx.from_int(t))); };
  if (kind.symplectic()) {
    x(s, -s, 1);
    x(-s, s, -1);
    x(s, -s, 1);
  } else if (kind.orthogonal_odd()) {
    x(0, s, -1);
    x(s, 0, 1);
    x(0, s, -1);
  } else if (kind.orthogonal_even()) {
    for (const auto& t : detail::go_even_swap(kind.rank, i)) {
      if (t.type == TokenType::W)
        w.tokens.push_back(Token<E>::w(t.a, ctx));
      else
        x(t.a, t.b, t.t);
    }
  } else {
    throw std::invalid_argument("w_pair needs a symplectic or orthogonal kind");
  }
  return w;
}

/// h_i(λ) = w_{i,-i}(λ) w_{i,-i}(-1) with w_{i,-i}(t) = x_{i,-i}(t) x_{-i,i}(-1/t) x_{i,-i}(t).
template <class E>
Word<E> torus_h(const GroupKind& kind, const E& lambda, size_t i = 0) {
  if (!kind.symplectic()) throw std::invalid_argument("torus_h needs a symplectic kind");
  if (lambda.is_zero()) throw std::domain_error("torus_h needs a nonzero parameter");
  if (i == 0) i = kind.rank;
  if (i > kind.rank) throw std::out_of_range("torus_h index out of range");
  const int s = static_cast<int>(i);
  const auto& ctx = lambda.context();
  Word<E> w{kind, {}};
  if (lambda.is_one()) return w;
  auto wt = [&](const E& t) {
    w.tokens.push_back(Token<E>::x(s, -s, t));
    w.tokens.push_back(Token<E>::x(-s, s, -t.inverse()));
    w.tokens.push_back(Token<E>::x(s, -s, t));
  };
  wt(lambda);
  wt(-ctx.one());
  return w;
}

/// All legal token shapes (type, a, b) for a kind, in a fixed order.
inline std::vector<std::tuple<TokenType, int, int>> token_shapes(const GroupKind& kind) {
  std::vector<std::tuple<TokenType, int, int>> out;
  const Family f = kind.similitude_family();
  const int l = static_cast<int>(kind.rank);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      if (i != j) out.emplace_back(TokenType::X, i, j);
  if (f == Family::GL || f == Family::SL) return out;
  for (int i = 1; i <= l; ++i)
    for (int j = i; j <= l; ++j) {
      if (i == j && f != Family::GSp) continue;
      out.emplace_back(TokenType::X, i, -j);
      out.emplace_back(TokenType::X, -i, j);
    }
  if (f == Family::GOodd)
    for (int i = 1; i <= l; ++i) {
      out.emplace_back(TokenType::X, i, 0);
      out.emplace_back(TokenType::X, 0, i);
    }
  if (kind.orthogonal()) out.emplace_back(TokenType::W, l, 0);
  return out;
}

inline Fq random_element(const FiniteField& f, SplitMix64& rng) { return f.element(uint32_t(rng.uniform(f.order()))); }
inline Fq random_nonzero(const FiniteField& f, SplitMix64& rng) {
  return f.element(1 + uint32_t(rng.uniform(f.order() - 1)));
}
inline Rational random_element(const Rationals&, SplitMix64& rng) {
  const long long n = rng.range(-5, 5), d = rng.range(1, 3);
  return Rational(BigRational(n, d));
}
inline Rational random_nonzero(const Rationals& q, SplitMix64& rng) {
  for (;;) {
    Rational r = random_element(q, rng);
    if (!r.is_zero()) return r;
  }
}

template <class Ctx>
Word<typename Ctx::element_type> random_word(const GroupKind& kind, const Ctx& ctx, SplitMix64& rng, size_t length) {
  using E = typename Ctx::element_type;
  const auto shapes = token_shapes(kind);
  Word<E> w{kind, {}};
  for (size_t n = 0; n < length; ++n) {
    const auto& [type, a, b] = shapes[rng.uniform(shapes.size())];
    if (type == TokenType::W)
      w.tokens.push_back(Token<E>::w(a, ctx));
    else
      w.tokens.push_back(Token<E>::x(a, b, random_nonzero(ctx, rng)));
  }
  return w;
}

/// Random diagonal element of the kind's torus: GSp and GO(2l) take
/// diag(d, μ/d); GO(2l+1) prepends α with μ = α².  Isometry kinds use μ = 1.
template <class Ctx>
Matrix<typename Ctx::element_type> random_diagonal(const GroupKind& kind, const Ctx& ctx, SplitMix64& rng) {
  using E = typename Ctx::element_type;
  const size_t l = kind.rank;
  Vec<E> d(kind.dim(), ctx.one());
  if (kind.family == Family::GL) {
    d.back() = random_nonzero(ctx, rng);
    return Matrix<E>::diagonal(ctx, d);
  }
  if (kind.family == Family::SL) return Matrix<E>::diagonal(ctx, d);
  const IndexMap ix = kind.index_map();
  E mu = ctx.one();
  if (kind.orthogonal_odd()) {
    E alpha = kind.isometry_only() ? (rng.uniform(2) ? ctx.one() : -ctx.one()) : random_nonzero(ctx, rng);
    mu = alpha * alpha;
    d[0] = alpha;
  } else if (!kind.isometry_only()) {
    mu = random_nonzero(ctx, rng);
  }
  for (size_t i = 1; i <= l; ++i) {
    const E di = random_nonzero(ctx, rng);
    d[ix(int(i))] = di;
    d[ix(-int(i))] = mu / di;
  }
  return Matrix<E>::diagonal(ctx, d);
}

/// A member of the kind built as (random word) * (random diagonal).
template <class Ctx>
Matrix<typename Ctx::element_type> random_member(const GroupKind& kind, const Ctx& ctx, SplitMix64& rng,
                                                 size_t min_len = 20, size_t max_len = 60) {
  const size_t len = min_len + rng.uniform(max_len - min_len + 1);
  auto w = random_word(kind, ctx, rng, len);
  return eval_word(w, ctx) * random_diagonal(kind, ctx, rng);
}

// Text format: x[1,-2](3)  w[2]  h[2](5), whitespace separated.

template <class E>
std::string format_token(const Token<E>& tok) {
  switch (tok.type) {
    case TokenType::X:
      return "x[" + std::to_string(tok.a) + "," + std::to_string(tok.b) + "](" + to_string(tok.t) + ")";
    case TokenType::W: return "w[" + std::to_string(tok.a) + "]";
    case TokenType::H: return "h[" + std::to_string(tok.a) + "](" + to_string(tok.t) + ")";
  }
  return "";
}

template <class E>
std::string format_word(const Word<E>& w) {
  std::string s;
  for (size_t k = 0; k < w.tokens.size(); ++k) {
    if (k) s += ' ';
    s += format_token(w.tokens[k]);
  }
  return s;
}

template <class Ctx>
Token<typename Ctx::element_type> parse_token(const std::string& text, const Ctx& ctx) {
  using E = typename Ctx::element_type;
  auto fail = [&]() -> Token<E> { throw std::invalid_argument("malformed token '" + text + "'"); };
  if (text.size() < 4 || text[1] != '[') return fail();
  const auto close = text.find(']');
  if (close == std::string::npos) return fail();
  const std::string inside = text.substr(2, close - 2);
  std::string rest = text.substr(close + 1);
  E param = ctx.zero();
  if (!rest.empty()) {
    if (rest.front() != '(' || rest.back() != ')') return fail();
    param = parse_element(ctx, rest.substr(1, rest.size() - 2));
  }
  const char c = text[0];
  if (c == 'x') {
    const auto comma = inside.find(',');
    if (comma == std::string::npos || rest.empty()) return fail();
    return Token<E>::x(int(detail::parse_int(detail::strip(inside.substr(0, comma)))),
                       int(detail::parse_int(detail::strip(inside.substr(comma + 1)))), param);
  }
  if (c == 'w') {
    if (!rest.empty()) return fail();
    return Token<E>::w(int(detail::parse_int(detail::strip(inside))), ctx);
  }
  if (c == 'h') {
    if (rest.empty()) return fail();
    return Token<E>::h(int(detail::parse_int(detail::strip(inside))), param);
  }
  return fail();
}

/// Parses and legality-checks a whitespace-separated word.
template <class Ctx>
Word<typename Ctx::element_type> parse_word(const GroupKind& kind, const std::string& text, const Ctx& ctx) {
  using E = typename Ctx::element_type;
  Word<E> w{kind, {}};
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    w.tokens.push_back(parse_token(item, ctx));
    check_token(kind, w.tokens.back());
  }
  return w;
}

}  // namespace chevkit

#endif  // CHEVKIT_GENERATORS_HPP
