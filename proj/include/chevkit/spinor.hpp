#ifndef CHEVKIT_SPINOR_HPP
#define CHEVKIT_SPINOR_HPP

// Spinor norm of orthogonal matrices, computed three ways: from the
// elimination diagonal, from the discriminant of Wall's form on the residual
// space, and from an explicit factorization into reflections.

#include "chevkit/gauss.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace chevkit {

/// σ_u(v) = v - (2B(u,v)/B(u,u)) u.
template <class E>
Matrix<E> reflection(const Vec<E>& u, const Matrix<E>& beta) {
  const auto& ctx = beta.context();
  require_odd_characteristic(ctx, "reflections");
  const E buu = bilinear(u, beta, u);
  if (buu.is_zero()) throw std::domain_error("cannot reflect along an isotropic vector");
  const size_t n = beta.rows();
  // row vector uᵗβ
  Vec<E> ub(n, ctx.zero());
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) ub[j] += u[i] * beta(i, j);
  const E c = ctx.from_int(2) / buu;
  Matrix<E> s = Matrix<E>::identity(ctx, n);
  for (size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    const E ci = c * u[i];
    for (size_t j = 0; j < n; ++j) s(i, j) -= ci * ub[j];
  }
  return s;
}

template <class E>
struct ReflectionFactorization {
  std::vector<Vec<E>> vectors;  // g = σ_{u1} σ_{u2} ... σ_{um}
  bool checked = false;
};

namespace detail {

template <class E>
bool totally_isotropic(const std::vector<Vec<E>>& basis, const Matrix<E>& beta) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j)
      if (!bilinear(basis[i], beta, basis[j]).is_zero()) return false;
  return true;
}

// Visits nonzero combinations Σ c_i basis[i] with coefficients drawn from a
// fixed element list, in odometer order, until f returns true.
template <class E, class F>
bool for_each_combination(const std::vector<Vec<E>>& basis, const std::vector<E>& coeffs, size_t budget, F&& f) {
  if (basis.empty()) return false;
  const size_t r = basis.size(), n = basis[0].size();
  std::vector<size_t> digit(r, 0);
  const auto& ctx = coeffs[0].context();
  for (size_t steps = 0; steps < budget; ++steps) {
    size_t k = 0;
    while (k < r && ++digit[k] == coeffs.size()) digit[k++] = 0;
    if (k == r) return false;
    Vec<E> v(n, ctx.zero());
    for (size_t i = 0; i < r; ++i) {
      if (coeffs[digit[i]].is_zero()) continue;
      for (size_t t = 0; t < n; ++t) v[t] += coeffs[digit[i]] * basis[i][t];
    }
    if (f(v)) return true;
  }
  return false;
}

template <class Ctx>
auto coefficient_list(const Ctx& ctx) {
  if constexpr (std::is_same_v<Ctx, FiniteField>) {
    return enumerate_elements(ctx);
  } else {
    return enumerate_elements(ctx, 3);
  }
}

}  // namespace detail

/// Writes an isometry as a product of at most n reflections.  Each step
/// reflects along an anisotropic v in the residual space of the remaining
/// factor h, chosen so that the next residual space is not totally
/// isotropic; a totally isotropic residual is first enlarged by one
/// reflection.
template <class E>
ReflectionFactorization<E> reflection_factor(const Matrix<E>& g, const Matrix<E>& beta) {
  const auto& ctx = g.context();
  require_odd_characteristic(ctx, "reflection factorization");
  if (!is_isometry(g, beta)) throw std::invalid_argument("reflection_factor needs an isometry");
  const size_t n = g.rows();
  const auto coeffs = detail::coefficient_list(ctx);
  const size_t budget = 1u << 22;
  const Matrix<E> I = Matrix<E>::identity(ctx, n);
  ReflectionFactorization<E> out;
  Matrix<E> h = g;

  auto residual = [&](const Matrix<E>& m) { return column_basis(m - I); };
  // Accept v when anisotropic and σ_v h leaves a residual that is empty or
  // not totally isotropic.
  auto try_step = [&](const Vec<E>& v, size_t r) -> std::optional<Matrix<E>> {
    if (bilinear(v, beta, v).is_zero()) return std::nullopt;
    Matrix<E> next = reflection(v, beta) * h;
    const auto res = residual(next);
    if (res.size() + 1 != r) return std::nullopt;
    if (!res.empty() && detail::totally_isotropic(res, beta)) return std::nullopt;
    return next;
  };

  for (size_t guard = 0; guard <= n + 2; ++guard) {
    auto basis = residual(h);
    if (basis.empty()) {
      out.checked = true;
      return out;
    }
    const size_t r = basis.size();
    if (detail::totally_isotropic(basis, beta)) {
      // h = σ_w (σ_w h): pick w making the residual of σ_w h non-isotropic.
      std::vector<Vec<E>> unit;
      for (size_t i = 0; i < n; ++i) {
        Vec<E> e(n, ctx.zero());
        e[i] = ctx.one();
        unit.push_back(e);
      }
      bool found = detail::for_each_combination(unit, coeffs, budget, [&](const Vec<E>& w) {
        if (bilinear(w, beta, w).is_zero()) return false;
        Matrix<E> next = reflection(w, beta) * h;
        const auto res = residual(next);
        if (res.size() != r + 1 || detail::totally_isotropic(res, beta)) return false;
        out.vectors.push_back(w);
        h = next;
        return true;
      });
      if (!found) throw std::logic_error("no reflection enlarges an isotropic residual space");
      continue;
    }
    bool found = false;
    for (const auto& v : basis) {
      if (auto next = try_step(v, r)) {
        out.vectors.push_back(v);
        h = *next;
        found = true;
        break;
      }
    }
    if (!found) {
      found = detail::for_each_combination(basis, coeffs, budget, [&](const Vec<E>& v) {
        if (auto next = try_step(v, r)) {
          out.vectors.push_back(v);
          h = *next;
          return true;
        }
        return false;
      });
    }
    if (!found) throw std::logic_error("no admissible reflection found");
  }
  throw std::logic_error("reflection factorization did not terminate");
}

template <class E>
Matrix<E> reflection_product(const ReflectionFactorization<E>& f, const Matrix<E>& beta) {
  Matrix<E> m = Matrix<E>::identity(beta.context(), beta.rows());
  for (const auto& v : f.vectors) m = m * reflection(v, beta);
  return m;
}

/// class(Π Q(u_i)) of a reflection factorization.
template <class E>
SquareClass spinor_reflect(const Matrix<E>& g, const Matrix<E>& beta) {
  const auto f = reflection_factor(g, beta);
  SquareClass c = trivial_class<E>();
  for (const auto& v : f.vectors) c = c * square_class(quadratic(v, beta));
  return c;
}

/// Class of λ in the elimination diagonal diag(1,...,1,λ,1,...,1,λ^-1).
template <class E>
SquareClass spinor_elimination(const Matrix<E>& g, const GroupKind& kind) {
  if (!kind.orthogonal()) throw std::invalid_argument("spinor norm needs an orthogonal kind");
  const GroupKind iso{kind.orthogonal_odd() ? Family::Oodd : Family::Oeven, kind.rank};
  const auto d = decompose(g, iso);
  return square_class(d.lambda);
}

/// Discriminant of Wall's form on the residual space.
template <class E>
SquareClass spinor_wall(const Matrix<E>& g, const Matrix<E>& beta) {
  const auto d = discriminant(wall_gram(g, beta));
  if (d.degenerate) throw std::logic_error("Wall form is degenerate");
  return d.cls;
}

/// For regular g (residual space non-degenerate):
/// det((1-g)|V_g) · d(V_g, B).  Absent when g is not regular.
template <class E>
std::optional<SquareClass> spinor_regular(const Matrix<E>& g, const Matrix<E>& beta) {
  const auto& ctx = g.context();
  const Matrix<E> one_minus_g = Matrix<E>::identity(ctx, g.rows()) - g;
  const auto basis = column_basis(one_minus_g);
  const size_t r = basis.size();
  if (r == 0) return trivial_class<E>();
  Matrix<E> gram(ctx, r, r), u(ctx, g.rows(), r), t(ctx, r, r);
  for (size_t j = 0; j < r; ++j)
    for (size_t i = 0; i < g.rows(); ++i) u(i, j) = basis[j][i];
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) gram(i, j) = bilinear(basis[i], beta, basis[j]);
  const auto dv = discriminant(gram);
  if (dv.degenerate) return std::nullopt;
  for (size_t j = 0; j < r; ++j) {
    const auto c = solve_preimage(u, one_minus_g * basis[j]);
    if (!c) throw std::logic_error("residual space is not invariant");
    for (size_t i = 0; i < r; ++i) t(i, j) = (*c)[i];
  }
  return square_class(det(t)) * dv.cls;
}

}  // namespace chevkit

#endif  // CHEVKIT_SPINOR_HPP
