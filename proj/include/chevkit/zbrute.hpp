#ifndef CHEVKIT_ZBRUTE_HPP
#define CHEVKIT_ZBRUTE_HPP

// Explicit finite matrix groups at desk scale: element lists, conjugacy
// classes, centralizers, and clustering of classes whose centralizers are
// conjugate (z-classes).
//
// Elements are n x n matrices over GF(Q) stored as byte arrays.  The
// canonical key reads the entries row-major as base-Q digits, first entry
// most significant, so key order is lexicographic order of the entries.

#include "chevkit/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace chevkit {

/// A computation would exceed its configured size limit.
class ResourceCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr size_t kMaxBruteDim = 5;

struct SmallMat {
  std::array<uint8_t, kMaxBruteDim * kMaxBruteDim> e{};
};

/// |G| from the classical order formulas; q is the order of the field of
/// definition (the fixed field for U).
inline BigInt classical_order(const GroupKind& kind, uint64_t q) {
  auto pw = [](uint64_t b, uint64_t e) {
    BigInt r = 1;
    for (uint64_t i = 0; i < e; ++i) r *= b;
    return r;
  };
  const uint64_t n = kind.dim(), l = kind.rank;
  BigInt r = 1;
  switch (kind.family) {
    case Family::GL:
    case Family::SL:
      for (uint64_t i = 0; i < n; ++i) r *= pw(q, n) - pw(q, i);
      if (kind.family == Family::SL) r /= (q - 1);
      return r;
    case Family::U:
      r = pw(q, n * (n - 1) / 2);
      for (uint64_t i = 1; i <= n; ++i) r *= (i % 2 ? pw(q, i) + 1 : pw(q, i) - 1);
      return r;
    case Family::Sp:
    case Family::GSp:
      r = pw(q, l * l);
      for (uint64_t i = 1; i <= l; ++i) r *= pw(q, 2 * i) - 1;
      if (kind.family == Family::GSp) r *= (q - 1);
      return r;
    case Family::Oeven:
    case Family::GOeven:
      r = 2 * pw(q, l * (l - 1)) * (pw(q, l) - 1);
      for (uint64_t i = 1; i < l; ++i) r *= pw(q, 2 * i) - 1;
      if (kind.family == Family::GOeven) r *= (q - 1);
      return r;
    case Family::Oodd:
    case Family::GOodd:
      r = 2 * pw(q, l * l);
      for (uint64_t i = 1; i <= l; ++i) r *= pw(q, 2 * i) - 1;
      if (kind.family == Family::GOodd) r = r * (q - 1) / 2;
      return r;
  }
  return r;
}

/// Byte-table arithmetic over GF(Q), Q <= 256.
struct ByteField {
  const FiniteField* f = nullptr;
  uint32_t q = 0;
  std::vector<uint8_t> add, mul, neg, inv, conj;

  explicit ByteField(const FiniteField& field) : f(&field), q(field.order()) {
    if (q > 256) throw std::invalid_argument("brute-force groups need a field with at most 256 elements");
    add.resize(q * q);
    mul.resize(q * q);
    neg.resize(q);
    inv.resize(q);
    conj.resize(q);
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        add[a * q + b] = uint8_t(field.add(a, b));
        mul[a * q + b] = uint8_t(field.mul(a, b));
      }
      neg[a] = uint8_t(field.neg(a));
      inv[a] = a ? uint8_t(field.inv(a)) : 0;
      conj[a] = field.has_involution() ? uint8_t(field.conj(a)) : uint8_t(a);
    }
  }
  uint8_t plus(uint8_t a, uint8_t b) const { return add[a * q + b]; }
  uint8_t times(uint8_t a, uint8_t b) const { return mul[a * q + b]; }
};

/// Open-addressing map from element keys to element indices.
class KeyIndex {
 public:
  static constexpr uint32_t npos = ~0u;

  void reserve(size_t n) {
    size_t cap = 16;
    while (cap < 2 * n) cap <<= 1;
    keys_.assign(cap, kEmpty);
    vals_.assign(cap, npos);
    mask_ = cap - 1;
    size_ = 0;
  }
  // Returns the existing index, or inserts v and returns npos.
  uint32_t insert(uint64_t key, uint32_t v) {
    if (2 * (size_ + 1) > keys_.size()) grow();
    size_t h = slot(key);
    while (keys_[h] != kEmpty) {
      if (keys_[h] == key) return vals_[h];
      h = (h + 1) & mask_;
    }
    keys_[h] = key;
    vals_[h] = v;
    ++size_;
    return npos;
  }
  uint32_t find(uint64_t key) const {
    if (keys_.empty()) return npos;
    size_t h = slot(key);
    while (keys_[h] != kEmpty) {
      if (keys_[h] == key) return vals_[h];
      h = (h + 1) & mask_;
    }
    return npos;
  }
  size_t size() const { return size_; }

 private:
  static constexpr uint64_t kEmpty = ~uint64_t(0);
  size_t slot(uint64_t key) const {
    uint64_t z = key * 0x9E3779B97F4A7C15ULL;
    return size_t(z ^ (z >> 29)) & mask_;
  }
  void grow() {
    auto old_k = std::move(keys_);
    auto old_v = std::move(vals_);
    reserve(std::max<size_t>(old_k.size(), 16));
    for (size_t i = 0; i < old_k.size(); ++i)
      if (old_k[i] != kEmpty) insert(old_k[i], old_v[i]);
  }
  std::vector<uint64_t> keys_;
  std::vector<uint32_t> vals_;
  size_t mask_ = 0, size_ = 0;
};

struct BruteOptions {
  uint64_t cap = 1000000;      // largest group order attempted
  uint64_t filter_limit = 400000;  // largest ambient matrix count for the filter path
  uint64_t seed = 1;
  unsigned jobs = 1;
};

/// An explicit finite matrix group with elements sorted by canonical key.
class MatrixGroup {
 public:
  MatrixGroup(GroupKind kind, const FiniteField& field) : kind_(kind), bf_(field), n_(kind.dim()) {
    if (n_ > kMaxBruteDim) throw std::invalid_argument("brute-force groups are limited to dimension 5");
    long double span = 1;
    for (size_t i = 0; i < n_ * n_; ++i) span *= bf_.q;
    if (span >= 1.8e19L) throw std::invalid_argument("matrix keys do not fit in 64 bits");
  }

  const GroupKind& kind() const { return kind_; }
  const FiniteField& field() const { return *bf_.f; }
  const ByteField& bytes() const { return bf_; }
  size_t dim() const { return n_; }
  size_t order() const { return elems_.size(); }
  const SmallMat& element(size_t i) const { return elems_[i]; }
  uint64_t key_of(size_t i) const { return keys_[i]; }
  const std::vector<uint64_t>& keys() const { return keys_; }
  uint32_t identity_index() const { return find(identity()); }

  uint64_t key(const SmallMat& m) const {
    uint64_t k = 0;
    for (size_t i = 0; i < n_ * n_; ++i) k = k * bf_.q + m.e[i];
    return k;
  }
  SmallMat decode(uint64_t k) const {
    SmallMat m;
    for (size_t i = n_ * n_; i-- > 0;) {
      m.e[i] = uint8_t(k % bf_.q);
      k /= bf_.q;
    }
    return m;
  }
  uint32_t find(const SmallMat& m) const { return index_.find(key(m)); }

  SmallMat identity() const {
    SmallMat m;
    for (size_t i = 0; i < n_; ++i) m.e[i * n_ + i] = 1;
    return m;
  }
  SmallMat mul(const SmallMat& a, const SmallMat& b) const {
    SmallMat c;
    const size_t n = n_;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        uint8_t s = 0;
        for (size_t k = 0; k < n; ++k) {
          const uint8_t x = a.e[i * n + k];
          if (x) s = bf_.plus(s, bf_.times(x, b.e[k * n + j]));
        }
        c.e[i * n + j] = s;
      }
    return c;
  }
  bool commute(const SmallMat& a, const SmallMat& b) const {
    const size_t n = n_;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        uint8_t s = 0, t = 0;
        for (size_t k = 0; k < n; ++k) {
          s = bf_.plus(s, bf_.times(a.e[i * n + k], b.e[k * n + j]));
          t = bf_.plus(t, bf_.times(b.e[i * n + k], a.e[k * n + j]));
        }
        if (s != t) return false;
      }
    return true;
  }
  /// Determinant by elimination; 0 for singular matrices.
  uint8_t det(SmallMat m) const {
    const size_t n = n_;
    uint8_t d = 1;
    for (size_t c = 0; c < n; ++c) {
      size_t p = c;
      while (p < n && !m.e[p * n + c]) ++p;
      if (p == n) return 0;
      if (p != c) {
        for (size_t j = 0; j < n; ++j) std::swap(m.e[p * n + j], m.e[c * n + j]);
        d = bf_.neg[d];
      }
      const uint8_t piv = m.e[c * n + c];
      d = bf_.times(d, piv);
      const uint8_t pinv = bf_.inv[piv];
      for (size_t i = c + 1; i < n; ++i) {
        const uint8_t x = m.e[i * n + c];
        if (!x) continue;
        const uint8_t f = bf_.neg[bf_.times(x, pinv)];
        for (size_t j = c; j < n; ++j) m.e[i * n + j] = bf_.plus(m.e[i * n + j], bf_.times(f, m.e[c * n + j]));
      }
    }
    return d;
  }
  SmallMat inverse(const SmallMat& a) const {
    // a^(ord-1)
    SmallMat p = a, prev = identity();
    const SmallMat id = identity();
    while (key(p) != key(id)) {
      prev = p;
      p = mul(p, a);
    }
    return prev;
  }
  uint64_t element_order(const SmallMat& a) const {
    const uint64_t id = key(identity());
    SmallMat p = a;
    uint64_t k = 1;
    while (key(p) != id) {
      p = mul(p, a);
      ++k;
    }
    return k;
  }

  Matrix<Fq> to_matrix(const SmallMat& m) const {
    Matrix<Fq> r(*bf_.f, n_, n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) r(i, j) = bf_.f->element(m.e[i * n_ + j]);
    return r;
  }
  SmallMat from_matrix(const Matrix<Fq>& m) const {
    SmallMat r;
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) r.e[i * n_ + j] = uint8_t(m(i, j).index());
    return r;
  }

  /// Membership by the defining equations.
  bool is_member(const SmallMat& m) const {
    switch (kind_.family) {
      case Family::GL: return det(m) != 0;
      case Family::SL: return det(m) == 1;
      case Family::U: {
        const size_t n = n_;
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) {
            uint8_t s = 0;
            for (size_t k = 0; k < n; ++k)
              s = bf_.plus(s, bf_.times(bf_.conj[m.e[k * n + i]], m.e[k * n + j]));
            if (s != (i == j ? 1 : 0)) return false;
          }
        return true;
      }
      default:
        if (det(m) == 0) return false;
        return similitude(to_matrix(m), kind_).has_value();
    }
  }

  /// Replaces the element set (sorts and indexes).
  void assign(std::vector<uint64_t> keys) {
    std::sort(keys.begin(), keys.end());
    keys_ = std::move(keys);
    elems_.resize(keys_.size());
    index_.reserve(keys_.size());
    for (size_t i = 0; i < keys_.size(); ++i) {
      elems_[i] = decode(keys_[i]);
      index_.insert(keys_[i], uint32_t(i));
    }
  }

 private:
  GroupKind kind_;
  ByteField bf_;
  size_t n_;
  std::vector<SmallMat> elems_;
  std::vector<uint64_t> keys_;
  KeyIndex index_;
};

namespace detail {

/// Subgroup generated by gens, as a sorted key list.  Stops early (and
/// returns what it has) once more than limit elements are found.
inline std::vector<uint64_t> closure(const MatrixGroup& g, const std::vector<SmallMat>& gens, uint64_t limit) {
  KeyIndex seen;
  seen.reserve(1024);
  std::vector<SmallMat> frontier{g.identity()};
  std::vector<uint64_t> out{g.key(g.identity())};
  seen.insert(out[0], 0);
  for (size_t head = 0; head < frontier.size(); ++head) {
    const SmallMat cur = frontier[head];
    for (const auto& s : gens) {
      const SmallMat nxt = g.mul(cur, s);
      const uint64_t k = g.key(nxt);
      if (seen.insert(k, uint32_t(out.size())) == KeyIndex::npos) {
        out.push_back(k);
        frontier.push_back(nxt);
        if (out.size() > limit) return out;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random element of U(n) over GF(q^2): orthonormal columns by Gram-Schmidt.
inline SmallMat random_unitary(const MatrixGroup& g, SplitMix64& rng) {
  const FiniteField& f = g.field();
  const size_t n = g.dim();
  auto herm = [&](const Vec<Fq>& a, const Vec<Fq>& b) {
    Fq s = f.zero();
    for (size_t i = 0; i < n; ++i) s += frobenius(a[i]) * b[i];
    return s;
  };
  std::vector<Vec<Fq>> cols;
  while (cols.size() < n) {
    Vec<Fq> v(n);
    for (auto& x : v) x = random_element(f, rng);
    for (const auto& c : cols) {
      const Fq h = herm(c, v);
      for (size_t i = 0; i < n; ++i) v[i] -= h * c[i];
    }
    const Fq nv = herm(v, v);
    if (nv.is_zero()) continue;
    // scale by s with s conj(s) = 1/nv
    const Fq target = nv.inverse();
    bool scaled = false;
    for (uint32_t i = 1; i < f.order() && !scaled; ++i) {
      const Fq s = f.element(i);
      if (s * frobenius(s) == target) {
        for (auto& x : v) x *= s;
        scaled = true;
      }
    }
    if (!scaled) continue;
    cols.push_back(v);
  }
  Matrix<Fq> m(f, n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return g.from_matrix(m);
}

// Additive generators of GF(p^m): 1, x, ..., x^(m-1).
inline std::vector<Fq> additive_basis(const FiniteField& f) {
  std::vector<Fq> out;
  uint32_t idx = 1;
  for (uint32_t i = 0; i < f.degree(); ++i) {
    out.push_back(f.element(idx));
    idx *= f.characteristic();
  }
  return out;
}

inline std::vector<SmallMat> seed_generators(const MatrixGroup& g, SplitMix64& rng) {
  const GroupKind& kind = g.kind();
  const FiniteField& f = g.field();
  std::vector<SmallMat> gens;
  const Fq zeta = f.primitive();
  if (kind.family == Family::U) {
    for (int i = 0; i < 3; ++i) gens.push_back(random_unitary(g, rng));
    return gens;
  }
  const GroupKind tk = kind.family == Family::GL ? GroupKind{Family::SL, kind.rank} : kind;
  for (const auto& [type, a, b] : token_shapes(tk)) {
    if (type == TokenType::W) {
      gens.push_back(g.from_matrix(elementary(tk, Token<Fq>::w(a, f), f)));
      continue;
    }
    for (const Fq& t : additive_basis(f)) gens.push_back(g.from_matrix(elementary(tk, Token<Fq>::x(a, b, t), f)));
  }
  const size_t n = kind.dim();
  Vec<Fq> d(n, f.one());
  switch (kind.family) {
    case Family::GL:
      d[n - 1] = zeta;
      gens.push_back(g.from_matrix(Matrix<Fq>::diagonal(f, d)));
      break;
    case Family::SL: break;
    case Family::GSp:
    case Family::GOeven: {
      const IndexMap ix = kind.index_map();
      for (int i = 1; i <= int(kind.rank); ++i) d[ix(-i)] = zeta;
      gens.push_back(g.from_matrix(Matrix<Fq>::diagonal(f, d)));
      [[fallthrough]];
    }
    default: {
      const IndexMap ix = kind.index_map();
      Vec<Fq> t(n, f.one());
      t[ix(int(kind.rank))] = zeta;
      t[ix(-int(kind.rank))] = zeta.inverse();
      gens.push_back(g.from_matrix(Matrix<Fq>::diagonal(f, t)));
      if (kind.family == Family::GOodd) gens.push_back(g.from_matrix(Matrix<Fq>::identity(f, n).scaled(zeta)));
      break;
    }
  }
  return gens;
}

}  // namespace detail

inline const FiniteField& brute_field(const GroupKind& kind, uint32_t q) {
  return FiniteField::of_order(kind.family == Family::U ? uint64_t(q) * q : q);
}

/// Builds the full element list of the group over GF(q) (GF(q^2) for U),
/// by filtering all matrices when there are few of them, else by closure
/// from generators.  The result is checked against the order formula.
inline MatrixGroup build_group(const GroupKind& kind, uint32_t q, const BruteOptions& opt = {}) {
  const BigInt expected = classical_order(kind, q);
  if (expected > opt.cap)
    throw ResourceCap(kind.name() + " over GF(" + std::to_string(q) + ") has order " + expected.str() +
                      ", above the cap of " + std::to_string(opt.cap));
  const FiniteField& f = brute_field(kind, q);
  if (kind.orthogonal()) require_odd_characteristic(f, "orthogonal groups");
  MatrixGroup g(kind, f);
  const size_t n = kind.dim();
  long double ambient = 1;
  for (size_t i = 0; i < n * n; ++i) ambient *= f.order();
  std::vector<uint64_t> keys;
  if (ambient <= opt.filter_limit) {
    const uint64_t total = uint64_t(ambient);
    for (uint64_t k = 0; k < total; ++k)
      if (g.is_member(g.decode(k))) keys.push_back(k);
  } else {
    SplitMix64 rng(opt.seed);
    auto gens = detail::seed_generators(g, rng);
    for (int attempt = 0;; ++attempt) {
      keys = detail::closure(g, gens, uint64_t(expected));
      if (keys.size() == expected || attempt > 16) break;
      if (kind.family != Family::U) break;
      gens.push_back(detail::random_unitary(g, rng));
    }
  }
  if (keys.size() != expected)
    throw std::logic_error("constructed " + std::to_string(keys.size()) + " elements for " + kind.name() +
                           ", expected " + expected.str());
  g.assign(std::move(keys));
  return g;
}

/// A generating set chosen greedily from seeded random elements.
inline std::vector<uint32_t> generating_set(const MatrixGroup& g, uint64_t seed = 7) {
  SplitMix64 rng(seed);
  std::vector<uint32_t> idx;
  std::vector<SmallMat> gens;
  size_t have = 1;
  while (have < g.order()) {
    uint32_t pick = uint32_t(rng.uniform(g.order()));
    gens.push_back(g.element(pick));
    const size_t now = detail::closure(g, gens, g.order()).size();
    if (now > have) {
      idx.push_back(pick);
      have = now;
    } else {
      gens.pop_back();
    }
  }
  return idx;
}

struct ConjugacyClass {
  uint32_t rep;         // smallest element index in the class
  uint64_t size;
  uint64_t centralizer_order;
  uint64_t element_order;
};

struct ZCluster {
  uint32_t rep;  // element index of the first member class representative
  uint64_t centralizer_order;
  std::vector<size_t> classes;  // indices into ZClassReport::classes
};

struct ZClassReport {
  size_t group_order = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<ZCluster> clusters;
  size_t class_count() const { return classes.size(); }
  size_t z_count() const { return clusters.size(); }
};

/// Conjugacy classes with members; class_of[i] is the class of element i.
struct ClassPartition {
  std::vector<ConjugacyClass> classes;
  std::vector<uint32_t> class_of;
  std::vector<std::vector<uint32_t>> members;
};

inline ClassPartition conjugacy_classes(const MatrixGroup& g) {
  const auto gen_idx = generating_set(g);
  std::vector<SmallMat> gens, invs;
  for (uint32_t i : gen_idx) {
    gens.push_back(g.element(i));
    invs.push_back(g.inverse(g.element(i)));
  }
  ClassPartition cp;
  const uint32_t none = ~0u;
  cp.class_of.assign(g.order(), none);
  for (uint32_t start = 0; start < g.order(); ++start) {
    if (cp.class_of[start] != none) continue;
    const uint32_t cid = uint32_t(cp.classes.size());
    std::vector<uint32_t> orbit{start};
    cp.class_of[start] = cid;
    for (size_t head = 0; head < orbit.size(); ++head) {
      const SmallMat& x = g.element(orbit[head]);
      for (size_t s = 0; s < gens.size(); ++s) {
        const uint32_t y = g.find(g.mul(g.mul(gens[s], x), invs[s]));
        if (y == KeyIndex::npos) throw std::logic_error("conjugate left the group");
        if (cp.class_of[y] == none) {
          cp.class_of[y] = cid;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cp.classes.push_back({start, orbit.size(), g.order() / orbit.size(), g.element_order(g.element(start))});
    cp.members.push_back(std::move(orbit));
  }
  return cp;
}

inline std::vector<uint32_t> centralizer(const MatrixGroup& g, uint32_t x) {
  if (x >= g.order()) throw std::out_of_range("element is not in the group");
  std::vector<uint32_t> out;
  const SmallMat& a = g.element(x);
  for (uint32_t h = 0; h < g.order(); ++h)
    if (g.commute(a, g.element(h))) out.push_back(h);
  return out;
}

namespace detail {

// Greedy generating set of a subgroup given as a sorted index list.
inline std::vector<SmallMat> subgroup_generators(const MatrixGroup& g, const std::vector<uint32_t>& sub) {
  std::vector<SmallMat> gens;
  std::vector<uint64_t> have{g.key(g.identity())};
  for (uint32_t h : sub) {
    const uint64_t k = g.key_of(h);
    if (std::binary_search(have.begin(), have.end(), k)) continue;
    gens.push_back(g.element(h));
    have = closure(g, gens, sub.size());
    if (have.size() == sub.size()) break;
  }
  return gens;
}

template <class F>
void parallel_for(size_t count, unsigned jobs, F&& f) {
  if (jobs <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < count; i += jobs) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Clusters conjugacy classes by conjugacy of their centralizers.  Classes
/// of x and y are joined when some conjugate x' of x commutes with a
/// generating set of Z(y) and |Z(x)| = |Z(y)|, i.e. Z(x') = Z(y).
/// Candidates must first agree on |Z| and on the multiset of element orders
/// in the centralizer.
inline ZClassReport z_classes(const MatrixGroup& g, const ClassPartition& cp, unsigned jobs = 1) {
  const size_t nc = cp.classes.size();
  std::vector<std::vector<uint32_t>> cent(nc);
  detail::parallel_for(nc, jobs, [&](size_t c) { cent[c] = centralizer(g, cp.classes[c].rep); });
  std::vector<std::map<uint64_t, uint64_t>> order_profile(nc);
  for (size_t c = 0; c < nc; ++c) {
    if (cent[c].size() != cp.classes[c].centralizer_order) throw std::logic_error("class equation violated");
    for (uint32_t h : cent[c]) ++order_profile[c][cp.classes[cp.class_of[h]].element_order];
  }
  ZClassReport rep;
  rep.group_order = g.order();
  rep.classes = cp.classes;
  std::vector<std::vector<SmallMat>> cluster_gens;
  for (size_t c = 0; c < nc; ++c) {
    bool placed = false;
    for (size_t k = 0; k < rep.clusters.size() && !placed; ++k) {
      const size_t r = rep.clusters[k].classes.front();
      if (cent[r].size() != cent[c].size() || order_profile[r] != order_profile[c]) continue;
      const auto& gens = cluster_gens[k];
      for (uint32_t x : cp.members[c]) {
        const SmallMat& xm = g.element(x);
        bool ok = true;
        for (const auto& s : gens)
          if (!g.commute(xm, s)) {
            ok = false;
            break;
          }
        if (ok) {
          placed = true;
          break;
        }
      }
      if (placed) rep.clusters[k].classes.push_back(c);
    }
    if (!placed) {
      rep.clusters.push_back({cp.classes[c].rep, cent[c].size(), {c}});
      cluster_gens.push_back(detail::subgroup_generators(g, cent[c]));
    }
  }
  return rep;
}

inline ZClassReport z_classes(const MatrixGroup& g, unsigned jobs = 1) {
  return z_classes(g, conjugacy_classes(g), jobs);
}

}  // namespace chevkit

#endif  // CHEVKIT_ZBRUTE_HPP
