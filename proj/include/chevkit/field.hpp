#ifndef CHEVKIT_FIELD_HPP
#define CHEVKIT_FIELD_HPP

// Exact scalar fields: GF(p), GF(p^m) over an explicit modulus, and Q.
//
// Finite-field elements are stored by index: the coefficient vector
// (c_0, ..., c_{m-1}) of the residue polynomial, constant term first,
// read as the base-p number sum c_i p^i.  This index is the canonical
// encoding used for ordering, hashing and "smaller of {r, -r}" choices.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chevkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class FiniteField;

namespace detail {

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, constant first, trimmed.
using ModPoly = std::vector<uint32_t>;

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline uint32_t inv_mod(uint32_t a, uint32_t p) {
  // p prime, a != 0
  int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

// Remainder of a modulo b (b nonzero).
inline ModPoly poly_mod(ModPoly a, const ModPoly& b, uint32_t p) {
  trim(a);
  const uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const uint64_t coef = uint64_t(a.back()) * lead_inv % p;
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = uint32_t((a[shift + i] + uint64_t(p - b[i]) * coef) % p);
    }
    trim(a);
  }
  return a;
}

inline ModPoly poly_mul(const ModPoly& a, const ModPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const ModPoly& f, uint32_t p) {
  const size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (size_t d = 1; d <= deg / 2; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      ModPoly g(d + 1, 0);
      uint64_t rest = idx;
      for (size_t i = 0; i < d; ++i) {
        g[i] = uint32_t(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree m, comparing the
// coefficient lists constant-term first.
inline ModPoly smallest_irreducible(uint32_t p, uint32_t m) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < m; ++i) count *= p;
  for (uint64_t idx = 0; idx < count; ++idx) {
    ModPoly f(m + 1, 0);
    uint64_t rest = idx;
    for (uint32_t k = m; k-- > 0;) {  // c_0 is the most significant digit
      f[k] = uint32_t(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace detail

/// An element of a finite field: a context pointer plus the canonical index.
class Fq {
 public:
  using context_type = FiniteField;

  Fq() = default;
  Fq(const FiniteField* field, uint32_t index) : field_(field), v_(index) {}

  const FiniteField& context() const { return *field_; }
  uint32_t index() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq operator-() const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq& operator/=(const Fq& o) { return *this = *this / o; }
  Fq inverse() const;
  Fq pow(uint64_t e) const;

  friend bool operator==(const Fq& a, const Fq& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

 private:
  void check_same(const Fq& o) const {
    if (field_ != o.field_) throw std::invalid_argument("field elements from different contexts");
  }
  const FiniteField* field_ = nullptr;
  uint32_t v_ = 0;
};

/// GF(p^m).  Contexts are interned: get() returns a reference that stays
/// valid for the lifetime of the program, so elements may hold raw pointers.
class FiniteField {
 public:
  using element_type = Fq;

  static const FiniteField& get(uint32_t p, uint32_t m = 1) { return intern(p, m, {}); }

  /// Explicit modulus, constant-first; must be monic irreducible of degree m.
  static const FiniteField& get(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    return intern(p, m, modulus);
  }

  /// GF(q) for a prime power q.
  static const FiniteField& of_order(uint64_t q) {
    for (uint32_t p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      uint32_t m = 0;
      uint64_t r = q;
      while (r % p == 0) {
        r /= p;
        ++m;
      }
      if (r != 1 || !detail::is_prime(p)) break;
      return get(p, m);
    }
    throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  }

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return m_; }
  uint32_t order() const { return q_; }
  bool is_prime_field() const { return m_ == 1; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Fq zero() const { return Fq(this, 0); }
  Fq one() const { return Fq(this, 1); }
  Fq element(uint32_t index) const {
    if (index >= q_) throw std::out_of_range("field element index out of range");
    return Fq(this, index);
  }
  Fq from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fq(this, static_cast<uint32_t>(r));
  }
  Fq from_coeffs(const std::vector<long long>& c) const {
    if (c.size() > m_) throw std::invalid_argument("too many coefficients for GF(p^m) element");
    uint32_t idx = 0, place = 1;
    for (size_t i = 0; i < c.size(); ++i) {
      long long r = c[i] % static_cast<long long>(p_);
      if (r < 0) r += p_;
      idx += static_cast<uint32_t>(r) * place;
      place *= p_;
    }
    return Fq(this, idx);
  }
  std::vector<uint32_t> coeffs(uint32_t index) const {
    std::vector<uint32_t> c(m_);
    for (uint32_t i = 0; i < m_; ++i) {
      c[i] = index % p_;
      index /= p_;
    }
    return c;
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
      uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[size_t(a) * q_ + b];
    return digit_add(a, b);
  }
  uint32_t neg(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      uint32_t e = log_[a] + log_[b];
      if (e >= q_ - 1) e -= q_ - 1;
      return exp_[e];
    }
    return static_cast<uint32_t>(uint64_t(a) * b % p_);
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    if (!log_.empty()) return log_[a] == 0 ? 1 : exp_[q_ - 1 - log_[a]];
    return detail::inv_mod(a, p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t result = 1, base = a;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  /// True when the field is GF(r^2) for some r, i.e. carries a ↦ a^r.
  bool has_involution() const { return m_ % 2 == 0; }
  /// Order r of the fixed field of the involution (q = r^2).
  uint32_t involution_fixed_order() const {
    if (!has_involution()) throw std::invalid_argument("GF(" + std::to_string(q_) + ") is not a quadratic extension");
    uint32_t r = 1;
    for (uint32_t i = 0; i < m_ / 2; ++i) r *= p_;
    return r;
  }
  uint32_t conj(uint32_t a) const {
    if (!conj_table_.empty()) return conj_table_[a];
    return pow(a, involution_fixed_order());
  }

  /// Smallest-index generator of the multiplicative group.
  Fq primitive() const { return Fq(this, primitive_); }
  /// Fixed representative of the non-square class (q odd).
  Fq canonical_nonresidue() const {
    if (p_ == 2) throw std::domain_error("square classes are trivial in characteristic 2");
    return Fq(this, nonresidue_);
  }
  bool has_tables() const { return !log_.empty(); }
  // Discrete log w.r.t. primitive(); a != 0, requires tables.
  uint32_t log(uint32_t a) const { return log_[a]; }
  uint32_t exp(uint32_t e) const { return exp_[e % (q_ - 1)]; }

  std::string name() const {
    return m_ == 1 ? "GF(" + std::to_string(p_) + ")"
                   : "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
  }

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

 private:
  static constexpr uint32_t kTableLimit = 1u << 16;
  static constexpr uint32_t kAddTableLimit = 1024;

  FiniteField(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
      : p_(p), m_(m), modulus_(std::move(modulus)) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < m_; ++i) {
      q *= p_;
      if (q > (uint64_t(1) << 31)) throw std::invalid_argument("field order too large");
    }
    q_ = static_cast<uint32_t>(q);
    if (m_ > 1 && q_ > kTableLimit) throw std::invalid_argument("extension fields are limited to 65536 elements");
    build_tables();
  }

  static const FiniteField& intern(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    if (modulus.empty()) {
      modulus = m == 1 ? std::vector<uint32_t>{0, 1} : detail::smallest_irreducible(p, m);
    } else {
      if (modulus.size() != m + 1 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
      for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
      if (!detail::is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
    }
    static std::mutex mu;
    static std::map<std::vector<uint32_t>, std::unique_ptr<FiniteField>> registry;
    std::vector<uint32_t> key = modulus;
    key.push_back(p);
    key.push_back(m);
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it == registry.end()) {
      it = registry.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, m, modulus))).first;
    }
    return *it->second;
  }

  uint32_t digit_add(uint32_t a, uint32_t b) const {
    uint32_t r = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
      uint32_t s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * place;
      place *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }

  uint32_t poly_to_index(const detail::ModPoly& f) const {
    uint32_t idx = 0, place = 1;
    for (size_t i = 0; i < f.size(); ++i) {
      idx += f[i] * place;
      place *= p_;
    }
    return idx;
  }

  uint32_t slow_mul(uint32_t a, uint32_t b) const {
    detail::ModPoly fa = coeffs(a), fb = coeffs(b);
    detail::trim(fa);
    detail::trim(fb);
    return poly_to_index(detail::poly_mod(detail::poly_mul(fa, fb, p_), modulus_, p_));
  }

  void build_tables() {
    if (m_ > 1) {
      neg_table_.resize(q_);
      for (uint32_t a = 0; a < q_; ++a) {
        auto c = coeffs(a);
        for (auto& x : c) x = x == 0 ? 0 : p_ - x;
        neg_table_[a] = poly_to_index(c);
      }
      if (q_ <= kAddTableLimit) {
        add_table_.resize(size_t(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a)
          for (uint32_t b = 0; b < q_; ++b) add_table_[size_t(a) * q_ + b] = digit_add(a, b);
      }
    }
    auto mulf = [&](uint32_t a, uint32_t b) {
      return m_ == 1 ? static_cast<uint32_t>(uint64_t(a) * b % p_) : slow_mul(a, b);
    };
    // Smallest-index primitive element.
    auto order_of = [&](uint32_t g) {
      uint32_t x = g;
      uint32_t k = 1;
      while (x != 1) {
        x = mulf(x, g);
        ++k;
      }
      return k;
    };
    if (q_ == 2) {
      primitive_ = 1;
    } else if (q_ <= kTableLimit) {
      for (uint32_t g = 2; g < q_; ++g) {
        if (order_of(g) == q_ - 1) {
          primitive_ = g;
          break;
        }
      }
    } else {
      // Large prime field: find a generator by factoring p - 1.
      std::vector<uint64_t> factors;
      uint64_t n = q_ - 1;
      for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          factors.push_back(d);
          while (n % d == 0) n /= d;
        }
      }
      if (n > 1) factors.push_back(n);
      for (uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (auto f : factors) {
          if (pow(g, (q_ - 1) / f) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          primitive_ = g;
          break;
        }
      }
    }
    if (q_ <= kTableLimit) {
      exp_.resize(q_ - 1);
      log_.assign(q_, 0);
      uint32_t x = 1;
      for (uint32_t e = 0; e + 1 < q_; ++e) {
        exp_[e] = x;
        log_[x] = e;
        x = mulf(x, primitive_);
      }
      if (m_ % 2 == 0) {
        const uint32_t r = involution_fixed_order();
        conj_table_.resize(q_);
        for (uint32_t a = 0; a < q_; ++a) conj_table_[a] = pow(a, r);
      }
    }
    if (p_ != 2) {
      if (m_ == 1) {
        for (uint32_t a = 2; a < p_; ++a) {
          if (pow(a, (p_ - 1) / 2) != 1) {
            nonresidue_ = a;
            break;
          }
        }
      } else {
        nonresidue_ = primitive_;
      }
    }
  }

  uint32_t p_, m_, q_ = 0;
  std::vector<uint32_t> modulus_;
  uint32_t primitive_ = 1;
  uint32_t nonresidue_ = 0;
  std::vector<uint32_t> add_table_, neg_table_, log_, exp_, conj_table_;
};

inline Fq Fq::operator+(const Fq& o) const {
  check_same(o);
  return Fq(field_, field_->add(v_, o.v_));
}
inline Fq Fq::operator-(const Fq& o) const {
  check_same(o);
  return Fq(field_, field_->sub(v_, o.v_));
}
inline Fq Fq::operator*(const Fq& o) const {
  check_same(o);
  return Fq(field_, field_->mul(v_, o.v_));
}
inline Fq Fq::operator/(const Fq& o) const {
  check_same(o);
  return Fq(field_, field_->mul(v_, field_->inv(o.v_)));
}
inline Fq Fq::operator-() const { return Fq(field_, field_->neg(v_)); }
inline Fq Fq::inverse() const { return Fq(field_, field_->inv(v_)); }
inline Fq Fq::pow(uint64_t e) const { return Fq(field_, field_->pow(v_, e)); }

class Rationals;

/// An exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  using context_type = Rationals;

  Rational() = default;
  Rational(BigRational v) : v_(std::move(v)) {}
  Rational(long long n) : v_(n) {}

  const Rationals& context() const;
  const BigRational& value() const { return v_; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.v_ == 0) throw std::domain_error("division by zero in Q");
    return Rational(v_ / o.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }
  Rational inverse() const { return Rational(1) / *this; }
  Rational pow(uint64_t e) const {
    Rational r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

 private:
  BigRational v_;
};

class Rationals {
 public:
  using element_type = Rational;
  static const Rationals& instance() {
    static const Rationals q;
    return q;
  }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(n); }
  uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

 private:
  Rationals() = default;
};

inline const Rationals& Rational::context() const { return Rationals::instance(); }

inline uint32_t characteristic(const FiniteField& f) { return f.characteristic(); }
inline uint32_t characteristic(const Rationals&) { return 0; }

/// Canonical total order on elements (index order for finite fields).
inline bool canonical_less(const Fq& a, const Fq& b) { return a.index() < b.index(); }
inline bool canonical_less(const Rational& a, const Rational& b) {
  // |a| first, then negative before positive: 0, -1, 1, -2, 2, ...
  BigRational aa = abs(a.value()), bb = abs(b.value());
  if (aa != bb) return aa < bb;
  return a.value() < b.value();
}

/// The involution a ↦ a^r of GF(r^2).
inline Fq frobenius(const Fq& a) {
  const FiniteField& f = a.context();
  if (!f.has_involution()) throw std::invalid_argument(f.name() + " has no quadratic involution");
  return Fq(&f, f.conj(a.index()));
}

/// Element of k^x / k^x2.  Over GF(q), q odd, there are exactly two classes;
/// over Q a class is named by its squarefree integer representative.
class SquareClass {
 public:
  static SquareClass finite(bool nonresidue) {
    SquareClass c;
    c.rational_ = false;
    c.rep_ = nonresidue ? -1 : 1;
    return c;
  }
  static SquareClass squarefree(BigInt rep) {
    if (rep == 0) throw std::invalid_argument("zero has no square class");
    SquareClass c;
    c.rational_ = true;
    c.rep_ = std::move(rep);
    return c;
  }

  bool is_trivial() const { return rep_ == 1; }
  bool is_rational() const { return rational_; }
  bool is_nonresidue() const { return !rational_ && rep_ == -1; }
  /// Squarefree integer (rationals) or +1/-1 tag (finite fields).
  const BigInt& tag() const { return rep_; }

  SquareClass operator*(const SquareClass& o) const;

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.rational_ == b.rational_ && a.rep_ == b.rep_;
  }
  friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }

  std::string to_string() const {
    if (!rational_) return rep_ == 1 ? "square" : "nonsquare";
    return rep_.str();
  }

 private:
  bool rational_ = false;
  BigInt rep_ = 1;
};

namespace detail {

inline BigInt squarefree_part(BigInt n) {
  if (n == 0) throw std::invalid_argument("zero has no square class");
  BigInt sign = n < 0 ? -1 : 1;
  n = abs(n);
  BigInt result = 1;
  for (BigInt d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e % 2 == 1) result *= d;
  }
  return sign * result * n;
}

}  // namespace detail

inline SquareClass SquareClass::operator*(const SquareClass& o) const {
  if (rational_ != o.rational_) throw std::invalid_argument("square classes from different fields");
  if (!rational_) return finite(rep_ * o.rep_ == -1);
  BigInt g = boost::multiprecision::gcd(rep_, o.rep_);
  return squarefree(rep_ * o.rep_ / (g * g));
}

inline SquareClass square_class(const Fq& a) {
  const FiniteField& f = a.context();
  if (f.characteristic() == 2) throw std::domain_error("square classes need odd characteristic");
  if (a.is_zero()) throw std::domain_error("zero has no square class");
  if (f.has_tables()) return SquareClass::finite(f.log(a.index()) % 2 == 1);
  return SquareClass::finite(!a.pow((f.order() - 1) / 2).is_one());
}

inline SquareClass square_class(const Rational& a) {
  if (a.is_zero()) throw std::domain_error("zero has no square class");
  return SquareClass::squarefree(detail::squarefree_part(a.numerator() * a.denominator()));
}

/// Canonical element representing a square class of GF(q).
inline Fq representative(const SquareClass& c, const FiniteField& f) {
  if (c.is_rational()) throw std::invalid_argument("rational square class on a finite field");
  return c.is_trivial() ? f.one() : f.canonical_nonresidue();
}

/// Square root choosing the smaller canonical index of {r, -r}.
inline std::optional<Fq> sqrt(const Fq& a) {
  const FiniteField& f = a.context();
  if (f.characteristic() == 2) throw std::domain_error("sqrt is only provided in odd characteristic");
  if (a.is_zero()) return a;
  if (f.has_tables()) {
    const uint32_t e = f.log(a.index());
    if (e % 2 == 1) return std::nullopt;
    const uint32_t r1 = f.exp(e / 2);
    const uint32_t r2 = f.neg(r1);
    return Fq(&f, std::min(r1, r2));
  }
  for (uint32_t i = 0; i < f.order(); ++i) {
    if (f.mul(i, i) == a.index()) return Fq(&f, i);
  }
  return std::nullopt;
}

/// Non-negative square root, when a is a rational square.
inline std::optional<Rational> sqrt(const Rational& a) {
  if (a.value() < 0) return std::nullopt;
  BigInt n = a.numerator(), d = a.denominator();
  BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(BigRational(rn, rd));
}

/// Deterministic enumeration of field elements: all of GF(q) in index order,
/// or 0, -1, 1, -2, 2, ... up to |n| <= limit for Q.
inline std::vector<Fq> enumerate_elements(const FiniteField& f, size_t limit = 0) {
  size_t n = f.order();
  if (limit && limit < n) n = limit;
  std::vector<Fq> out;
  out.reserve(n);
  for (uint32_t i = 0; i < n; ++i) out.push_back(f.element(i));
  return out;
}
inline std::vector<Rational> enumerate_elements(const Rationals&, size_t limit = 3) {
  std::vector<Rational> out{Rational(0)};
  for (long long k = 1; k <= static_cast<long long>(limit); ++k) {
    out.push_back(Rational(-k));
    out.push_back(Rational(k));
  }
  return out;
}


/// Canonical text: integers for GF(p), "[c0,c1,...]" for GF(p^m),
/// "n" or "n/d" for Q.
inline std::string to_string(const Fq& a) {
  const FiniteField& f = a.context();
  if (f.is_prime_field()) return std::to_string(a.index());
  std::string s = "[";
  const auto c = f.coeffs(a.index());
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}
inline std::string to_string(const Rational& a) {
  if (a.denominator() == 1) return a.numerator().str();
  return a.numerator().str() + "/" + a.denominator().str();
}

namespace detail {
inline long long parse_int(const std::string& s) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed integer '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  return v;
}
inline std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}
}  // namespace detail

inline Fq parse_element(const FiniteField& f, const std::string& text) {
  const std::string s = detail::strip(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("malformed element '" + s + "'");
    std::vector<long long> c;
    std::string body = s.substr(1, s.size() - 2), item;
    size_t start = 0;
    while (start <= body.size()) {
      size_t comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      item = detail::strip(body.substr(start, comma - start));
      if (!item.empty()) c.push_back(detail::parse_int(item));
      start = comma + 1;
    }
    return f.from_coeffs(c);
  }
  if (!f.is_prime_field()) throw std::invalid_argument("extension field elements are written [c0,c1,...]");
  return f.from_int(detail::parse_int(s));
}

inline Rational parse_element(const Rationals&, const std::string& text) {
  const std::string s = detail::strip(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigRational(BigInt(s)));
    BigInt n(detail::strip(s.substr(0, slash))), d(detail::strip(s.substr(slash + 1)));
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) n = -n, d = -d;
    return Rational(BigRational(n, d));
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

}  // namespace chevkit

#endif  // CHEVKIT_FIELD_HPP
