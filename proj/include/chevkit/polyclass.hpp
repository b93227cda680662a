#ifndef CHEVKIT_POLYCLASS_HPP
#define CHEVKIT_POLYCLASS_HPP

// Polynomials over finite fields with the twisted reciprocal
// f~(x) = conj(f(0))^-1 x^n conj(f)(1/x) and the dual f*(x) = f(0)^-1 x^n f(1/x).

#include "chevkit/field.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

class Poly {
 public:
  Poly(const FiniteField& f, std::vector<Fq> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }
  static Poly monomial(const FiniteField& f, size_t deg) {
    std::vector<Fq> c(deg + 1, f.zero());
    c[deg] = f.one();
    return Poly(f, c);
  }
  /// x - a
  static Poly linear(const Fq& a) { return Poly(a.context(), {-a, a.context().one()}); }

  const FiniteField& context() const { return *f_; }
  const std::vector<Fq>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Fq coeff(size_t k) const { return k < c_.size() ? c_[k] : f_->zero(); }
  Fq leading() const { return c_.empty() ? f_->zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Fq operator()(const Fq& x) const {
    Fq r = f_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*f_, {});
    std::vector<Fq> r(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(*f_, r);
  }

  /// Remainder of division by a nonzero polynomial.
  Poly mod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Fq> r = c_;
    const Fq inv = d.leading().inverse();
    while (r.size() >= d.c_.size() && !r.empty()) {
      const Fq q = r.back() * inv;
      const size_t shift = r.size() - d.c_.size();
      for (size_t i = 0; i < d.c_.size(); ++i) r[shift + i] -= q * d.c_[i];
      while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return Poly(*f_, r);
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      const bool unit = c_[k].is_one() && k > 0;
      if (!unit) s += chevkit::to_string(c_[k]);
      if (k > 0) s += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  const FiniteField* f_;
  std::vector<Fq> c_;
};

/// f~ with coefficients conj(a_{n-k}) / conj(a_0).
inline Poly u_reciprocal(const Poly& f) {
  if (f.is_zero() || f.coeff(0).is_zero()) throw std::domain_error("u_reciprocal needs a nonzero constant term");
  const int n = f.degree();
  const Fq inv = frobenius(f.coeff(0)).inverse();
  std::vector<Fq> c;
  for (int k = 0; k <= n; ++k) c.push_back(frobenius(f.coeff(size_t(n - k))) * inv);
  return Poly(f.context(), c);
}

inline bool is_self_u_reciprocal(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("self-U-reciprocity is defined for monic polynomials");
  return u_reciprocal(f) == f;
}

inline void check_dual_domain(const Poly& f) {
  const auto& k = f.context();
  if (f.is_zero()) throw std::domain_error("dual of the zero polynomial");
  for (const Fq& r : {k.zero(), k.one(), -k.one()})
    if (f(r).is_zero()) throw std::domain_error("dual needs 0, 1 and -1 not to be roots");
}

/// f* with coefficients a_{n-k} / a_0.
inline Poly dual(const Poly& f) {
  check_dual_domain(f);
  const int n = f.degree();
  const Fq inv = f.coeff(0).inverse();
  std::vector<Fq> c;
  for (int k = 0; k <= n; ++k) c.push_back(f.coeff(size_t(n - k)) * inv);
  return Poly(f.context(), c);
}

inline bool is_self_dual(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("self-duality is defined for monic polynomials");
  return dual(f) == f;
}

/// Trial division by all monic polynomials of degree <= deg/2.
inline bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FiniteField& k = f.context();
  const uint32_t q = k.order();
  for (int d = 1; d <= n / 2; ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Fq> c(size_t(d) + 1, k.zero());
      uint64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        c[size_t(i)] = k.element(uint32_t(rest % q));
        rest /= q;
      }
      c[size_t(d)] = k.one();
      if (f.mod(Poly(k, c)).is_zero()) return false;
    }
  }
  return true;
}

/// All monic irreducible self-U-reciprocal polynomials over GF(q^2) of
/// degree 1..dmax, grouped by degree in a fixed enumeration order.
inline std::vector<Poly> enumerate_self_u_irreducibles(const FiniteField& k, int dmax) {
  if (!k.has_involution()) throw std::invalid_argument("self-U-reciprocal polynomials live over GF(q^2)");
  if (dmax < 1 || dmax > 5) throw std::invalid_argument("dmax must lie in 1..5");
  const uint32_t qq = k.order();
  // A self-U-reciprocal f has a_0 conj(a_0) = 1.
  std::vector<Fq> norm_one;
  for (uint32_t i = 1; i < qq; ++i) {
    const Fq a = k.element(i);
    if ((a * frobenius(a)).is_one()) norm_one.push_back(a);
  }
  std::vector<Poly> out;
  for (int d = 1; d <= dmax; ++d) {
    std::vector<uint32_t> mid(size_t(d - 1), 0);
    for (;;) {
      for (const Fq& a0 : norm_one) {
        std::vector<Fq> c;
        c.push_back(a0);
        for (uint32_t v : mid) c.push_back(k.element(v));
        c.push_back(k.one());
        Poly f(k, c);
        if (is_self_u_reciprocal(f) && is_irreducible(f)) out.push_back(f);
      }
      size_t pos = 0;
      while (pos < mid.size() && ++mid[pos] == qq) mid[pos++] = 0;
      if (pos == mid.size()) break;
    }
  }
  return out;
}

inline std::vector<Poly> enumerate_self_u_irreducibles(uint32_t q, int dmax) {
  return enumerate_self_u_irreducibles(FiniteField::of_order(uint64_t(q) * q), dmax);
}

/// All monic irreducible self-dual polynomials over GF(q) of degree
/// 1..dmax that do not vanish at 0, 1 or -1.
inline std::vector<Poly> enumerate_self_dual_irreducibles(const FiniteField& k, int dmax) {
  if (dmax < 1 || dmax > 6) throw std::invalid_argument("dmax must lie in 1..6");
  const uint32_t q = k.order();
  // f = f* forces a_0 = ±1.
  std::vector<Fq> ends{k.one()};
  if (k.characteristic() != 2) ends.push_back(-k.one());
  std::vector<Poly> out;
  for (int d = 1; d <= dmax; ++d) {
    std::vector<uint32_t> mid(size_t(d - 1), 0);
    for (;;) {
      for (const Fq& a0 : ends) {
        std::vector<Fq> c;
        c.push_back(a0);
        for (uint32_t v : mid) c.push_back(k.element(v));
        c.push_back(k.one());
        Poly f(k, c);
        if (f(k.one()).is_zero() || f(-k.one()).is_zero()) continue;
        if (is_self_dual(f) && is_irreducible(f)) out.push_back(f);
      }
      size_t pos = 0;
      while (pos < mid.size() && ++mid[pos] == q) mid[pos++] = 0;
      if (pos == mid.size()) break;
    }
  }
  return out;
}

}  // namespace chevkit

#endif  // CHEVKIT_POLYCLASS_HPP
