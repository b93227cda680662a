#ifndef CHEVKIT_FORMS_HPP
#define CHEVKIT_FORMS_HPP

#include "chevkit/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace chevkit {

enum class Family { GL, SL, GSp, Sp, GOeven, Oeven, GOodd, Oodd, U };

/// A classical group family with its rank parameter: n for GL, SL and U,
/// l for the symplectic and orthogonal families (dimension 2l or 2l+1).
struct GroupKind {
  Family family = Family::GL;
  size_t rank = 1;

  static GroupKind make(Family f, size_t rank) {
    GroupKind k{f, rank};
    k.validate();
    return k;
  }
  static GroupKind gl(size_t n) { return make(Family::GL, n); }
  static GroupKind sl(size_t n) { return make(Family::SL, n); }
  static GroupKind gsp(size_t l) { return make(Family::GSp, l); }
  static GroupKind sp(size_t l) { return make(Family::Sp, l); }
  static GroupKind go_even(size_t l) { return make(Family::GOeven, l); }
  static GroupKind o_even(size_t l) { return make(Family::Oeven, l); }
  static GroupKind go_odd(size_t l) { return make(Family::GOodd, l); }
  static GroupKind o_odd(size_t l) { return make(Family::Oodd, l); }
  static GroupKind unitary(size_t n) { return make(Family::U, n); }

  /// CLI token: gl | sl | gsp | sp | go-even | o-even | go-odd | o-odd | u.
  static GroupKind parse(const std::string& token, size_t rank) {
    static const std::pair<const char*, Family> names[] = {
        {"gl", Family::GL},         {"sl", Family::SL},         {"gsp", Family::GSp},
        {"sp", Family::Sp},         {"go-even", Family::GOeven}, {"o-even", Family::Oeven},
        {"go-odd", Family::GOodd},  {"o-odd", Family::Oodd},    {"u", Family::U}};
    for (const auto& [name, f] : names)
      if (token == name) return make(f, rank);
    throw std::invalid_argument("unknown group kind '" + token + "'");
  }

  void validate() const {
    if (rank == 0) throw std::invalid_argument("group rank must be positive");
    if ((family == Family::GSp || family == Family::Sp) && rank < 2)
      throw std::invalid_argument("symplectic groups need l >= 2");
  }

  bool symplectic() const { return family == Family::GSp || family == Family::Sp; }
  bool orthogonal_even() const { return family == Family::GOeven || family == Family::Oeven; }
  bool orthogonal_odd() const { return family == Family::GOodd || family == Family::Oodd; }
  bool orthogonal() const { return orthogonal_even() || orthogonal_odd(); }
  bool has_form() const { return symplectic() || orthogonal() || family == Family::U; }
  /// Isometry subgroups: similitude character forced to 1.
  bool isometry_only() const {
    return family == Family::Sp || family == Family::Oeven || family == Family::Oodd || family == Family::U;
  }
  /// Family whose tokens and form this kind shares (Sp -> GSp, ...).
  Family similitude_family() const {
    switch (family) {
      case Family::Sp: return Family::GSp;
      case Family::Oeven: return Family::GOeven;
      case Family::Oodd: return Family::GOodd;
      default: return family;
    }
  }
  size_t l() const { return rank; }
  size_t dim() const {
    if (symplectic() || orthogonal_even()) return 2 * rank;
    if (orthogonal_odd()) return 2 * rank + 1;
    return rank;
  }
  IndexMap index_map() const {
    if (!symplectic() && !orthogonal()) throw std::invalid_argument(name() + " has no signed index convention");
    return IndexMap{rank, orthogonal_odd()};
  }

  std::string token() const {
    switch (family) {
      case Family::GL: return "gl";
      case Family::SL: return "sl";
      case Family::GSp: return "gsp";
      case Family::Sp: return "sp";
      case Family::GOeven: return "go-even";
      case Family::Oeven: return "o-even";
      case Family::GOodd: return "go-odd";
      case Family::Oodd: return "o-odd";
      case Family::U: return "u";
    }
    return "?";
  }
  std::string name() const {
    const std::string d = std::to_string(dim());
    switch (family) {
      case Family::GL: return "GL(" + d + ")";
      case Family::SL: return "SL(" + d + ")";
      case Family::GSp: return "GSp(" + d + ")";
      case Family::Sp: return "Sp(" + d + ")";
      case Family::GOeven:
      case Family::GOodd: return "GO(" + d + ")";
      case Family::Oeven:
      case Family::Oodd: return "O(" + d + ")";
      case Family::U: return "U(" + d + ")";
    }
    return "?";
  }

  friend bool operator==(const GroupKind& a, const GroupKind& b) { return a.family == b.family && a.rank == b.rank; }
  friend bool operator!=(const GroupKind& a, const GroupKind& b) { return !(a == b); }
};

template <class Ctx>
void require_odd_characteristic(const Ctx& ctx, const std::string& what) {
  if (characteristic(ctx) == 2) throw std::domain_error(what + " requires odd characteristic");
}

/// Gram matrix of the split form defining the group.
template <class Ctx>
Matrix<typename Ctx::element_type> standard_form(const GroupKind& kind, const Ctx& ctx) {
  using E = typename Ctx::element_type;
  if (!kind.has_form()) throw std::invalid_argument(kind.name() + " preserves no form");
  const size_t n = kind.dim();
  Matrix<E> beta(ctx, n, n);
  if (kind.family == Family::U) {
    if constexpr (std::is_same_v<E, Fq>) {
      if (!ctx.has_involution()) throw std::invalid_argument("unitary groups need a field GF(q^2)");
      return Matrix<E>::identity(ctx, n);
    } else {
      throw std::invalid_argument("unitary groups need a finite field GF(q^2)");
    }
  }
  const IndexMap ix = kind.index_map();
  const size_t l = kind.l();
  for (size_t i = 1; i <= l; ++i) {
    const int s = static_cast<int>(i);
    beta(ix(s), ix(-s)) = ctx.one();
    beta(ix(-s), ix(s)) = kind.symplectic() ? -ctx.one() : ctx.one();
  }
  if (kind.orthogonal_odd()) {
    require_odd_characteristic(ctx, "GO(2l+1)");
    beta(0, 0) = ctx.from_int(2);
  }
  return beta;
}

/// μ with ᵗgβg = μβ (conjugate transpose for U), if g is in the group.
/// For isometry kinds the only admissible value is 1.
template <class E>
std::optional<E> similitude(const Matrix<E>& g, const GroupKind& kind) {
  if (!g.is_square() || g.rows() != kind.dim()) return std::nullopt;
  const auto& ctx = g.context();
  const Matrix<E> beta = standard_form(kind, ctx);
  Matrix<E> m;
  if constexpr (std::is_same_v<E, Fq>) {
    m = kind.family == Family::U ? conj_transpose(g) * beta * g : g.transpose() * beta * g;
  } else {
    m = g.transpose() * beta * g;
  }
  // μ from the first nonzero entry of β, then a full check.
  std::optional<E> mu;
  for (size_t i = 0; i < beta.rows() && !mu; ++i)
    for (size_t j = 0; j < beta.cols(); ++j)
      if (!beta(i, j).is_zero()) {
        mu = m(i, j) / beta(i, j);
        break;
      }
  if (!mu || mu->is_zero()) return std::nullopt;
  if (m != beta.scaled(*mu)) return std::nullopt;
  if constexpr (std::is_same_v<E, Fq>) {
    if (kind.family == Family::U && frobenius(*mu) != *mu) return std::nullopt;
  }
  if (kind.isometry_only() && !mu->is_one()) return std::nullopt;
  return mu;
}

/// Q(v) = B(v,v)/2.
template <class E>
E quadratic(const Vec<E>& v, const Matrix<E>& beta) {
  require_odd_characteristic(beta.context(), "the quadratic form");
  return bilinear(v, beta, v) / beta.context().from_int(2);
}

template <class E>
bool is_isometry(const Matrix<E>& g, const Matrix<E>& beta) {
  return g.is_square() && g.rows() == beta.rows() && g.transpose() * beta * g == beta;
}

/// Gram matrix of [u,v]_g = B(u,y), v = (1-g)y, on the column basis of
/// V_g = Im(1-g).
template <class E>
Matrix<E> wall_gram(const Matrix<E>& g, const Matrix<E>& beta) {
  if (!is_isometry(g, beta)) throw std::invalid_argument("wall_gram needs an isometry of the form");
  const auto& ctx = g.context();
  const Matrix<E> one_minus_g = Matrix<E>::identity(ctx, g.rows()) - g;
  const auto basis = column_basis(one_minus_g);
  const size_t r = basis.size();
  Matrix<E> gram(ctx, r, r);
  for (size_t j = 0; j < r; ++j) {
    const auto y = solve_preimage(one_minus_g, basis[j]);
    if (!y) throw std::logic_error("residual space basis vector without preimage");
    for (size_t i = 0; i < r; ++i) gram(i, j) = bilinear(basis[i], beta, *y);
  }
  return gram;
}

template <class E>
SquareClass trivial_class() {
  if constexpr (std::is_same_v<E, Fq>) {
    return SquareClass::finite(false);
  } else {
    return SquareClass::squarefree(1);
  }
}

/// Discriminant of a Gram matrix; a singular matrix gives a degenerate result.
struct Discriminant {
  bool degenerate = false;
  SquareClass cls;
};

template <class E>
Discriminant discriminant(const Matrix<E>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("discriminant of a non-square matrix");
  if (m.rows() == 0) return {false, trivial_class<E>()};
  const E d = det(m);
  if (d.is_zero()) return {true, trivial_class<E>()};
  return {false, square_class(d)};
}

}  // namespace chevkit

#endif  // CHEVKIT_FORMS_HPP
