#ifndef GK_ORACLE_HPP
#define GK_ORACLE_HPP

// Brute-force element orders in small concrete groups. Nothing here uses the
// closed-form spectra; these are the independent checks for them.

#include "gk/groups.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_set>
#include <vector>

namespace gk {

/// GF(p^k) presented as F_p[x]/(modulus), modulus monic of degree k
/// (coefficients low to high, leading 1 omitted).
struct FiniteFieldSpec {
  unsigned p = 0;
  unsigned k = 0;
  std::vector<unsigned> modulus;
  unsigned size() const {
    unsigned q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    return q;
  }
};

/// Fixed moduli: x^2+1 over F_3, F_7; x^2+2 over F_5; x^3+x+1 over F_2;
/// x^3-x+1 over F_3; x^2+x+1 over F_2.
inline FiniteFieldSpec field_spec(unsigned q) {
  switch (q) {
  case 4: return {2, 2, {1, 1}};
  case 8: return {2, 3, {1, 1, 0}};
  case 9: return {3, 2, {1, 0}};
  case 25: return {5, 2, {2, 0}};
  case 27: return {3, 3, {1, 2, 0}};
  case 49: return {7, 2, {1, 0}};
  default: break;
  }
  if (q >= 2 && is_prime(static_cast<long>(q))) return {q, 1, {0}};
  throw UnsupportedError("oracle: no field of order " + std::to_string(q));
}

/// Table-driven arithmetic; elements are 0..q-1 read as base-p digit vectors.
class FiniteField {
public:
  explicit FiniteField(FiniteFieldSpec spec) : spec_(std::move(spec)), q_(spec_.size()) {
    if (spec_.k > 3) throw UnsupportedError("oracle: field degree above 3");
    if (spec_.modulus.size() != spec_.k) throw std::invalid_argument("oracle: modulus has wrong degree");
    // Degree <= 3: irreducible iff the modulus has no root in F_p.
    for (unsigned x = 0; x < spec_.p && spec_.k > 1; ++x) {
      unsigned v = 1;
      for (unsigned i = spec_.k; i-- > 0;) v = (v * x + spec_.modulus[i]) % spec_.p;
      if (v == 0) throw std::invalid_argument("oracle: modulus has a root, not irreducible");
    }
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) {
        add_[a * q_ + b] = encode(add_digits(digits(a), digits(b)));
        mul_[a * q_ + b] = encode(mul_digits(digits(a), digits(b)));
      }
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) {
        if (add(a, b) == 0) neg_[a] = b;
        if (mul(a, b) == 1) inv_[a] = b;
      }
    for (unsigned a = 1; a < q_; ++a)
      if (mul(a, inv_[a]) != 1) throw std::logic_error("oracle: field has zero divisors");
  }

  unsigned size() const { return q_; }
  const FiniteFieldSpec& spec() const { return spec_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned pow(unsigned a, unsigned long e) const {
    unsigned r = 1;
    for (unsigned long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  /// A generator of the multiplicative group.
  unsigned primitive_element() const {
    for (unsigned a = 1; a < q_; ++a) {
      unsigned x = a, order = 1;
      while (x != 1) {
        x = mul(x, a);
        ++order;
      }
      if (order == q_ - 1) return a;
    }
    return 1;
  }

private:
  std::vector<unsigned> digits(unsigned a) const {
    std::vector<unsigned> d(spec_.k);
    for (unsigned i = 0; i < spec_.k; ++i) {
      d[i] = a % spec_.p;
      a /= spec_.p;
    }
    return d;
  }
  unsigned encode(const std::vector<unsigned>& d) const {
    unsigned a = 0;
    for (unsigned i = spec_.k; i-- > 0;) a = a * spec_.p + d[i];
    return a;
  }
  std::vector<unsigned> add_digits(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> r(spec_.k);
    for (unsigned i = 0; i < spec_.k; ++i) r[i] = (a[i] + b[i]) % spec_.p;
    return r;
  }
  std::vector<unsigned> mul_digits(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    const unsigned p = spec_.p, k = spec_.k;
    std::vector<unsigned> prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // x^k = -(modulus low part)
    for (unsigned d = 2 * k; d-- > k;) {
      const unsigned c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * spec_.modulus[i]) % p;
    }
    prod.resize(k);
    return prod;
  }

  FiniteFieldSpec spec_;
  unsigned q_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

/// Element orders of an enumerated group, with multiplicities.
struct MatrixGroupEnumeration {
  FiniteFieldSpec field;
  unsigned dimension = 0;
  std::map<std::uint64_t, std::uint64_t> order_counts;
  std::uint64_t group_order = 0;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto& [o, c] : order_counts) s += c;
    return s;
  }
  Spectrum spectrum() const {
    std::vector<std::uint64_t> orders;
    for (const auto& [o, c] : order_counts) orders.push_back(o);
    return Spectrum::generated_by(orders);
  }
};

/// Scans all q^4 matrices over GF(q), keeps det = 1, and takes the least k
/// with A^k = +-I. Multiplicities count elements of PSL2(q).
inline MatrixGroupEnumeration psl2_enumeration(unsigned q) {
  static const std::array<unsigned, 10> supported{4, 5, 7, 8, 9, 11, 13, 25, 27, 49};
  if (std::find(supported.begin(), supported.end(), q) == supported.end())
    throw UnsupportedError("psl2_orders: q = " + std::to_string(q) + " not supported");
  const FiniteField F(field_spec(q));
  const unsigned minus_one = F.neg(1);
  const std::uint64_t cap = std::uint64_t(q) * (std::uint64_t(q) * q - 1);
  std::map<std::uint64_t, std::uint64_t> matrix_counts;
  std::uint64_t sl2 = 0;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c)
        for (unsigned d = 0; d < q; ++d) {
          if (F.sub(F.mul(a, d), F.mul(b, c)) != 1) continue;
          ++sl2;
          unsigned x00 = a, x01 = b, x10 = c, x11 = d;
          std::uint64_t k = 1;
          while (!(x01 == 0 && x10 == 0 && x00 == x11 && (x00 == 1 || x00 == minus_one))) {
            const unsigned y00 = F.add(F.mul(x00, a), F.mul(x01, c));
            const unsigned y01 = F.add(F.mul(x00, b), F.mul(x01, d));
            const unsigned y10 = F.add(F.mul(x10, a), F.mul(x11, c));
            const unsigned y11 = F.add(F.mul(x10, b), F.mul(x11, d));
            x00 = y00, x01 = y01, x10 = y10, x11 = y11;
            if (++k > cap) throw std::logic_error("psl2_orders: order exceeds |SL2(q)|");
          }
          ++matrix_counts[k];
        }
  MatrixGroupEnumeration out;
  out.field = F.spec();
  out.dimension = 2;
  const std::uint64_t center = q % 2 ? 2 : 1;
  for (const auto& [k, c] : matrix_counts) out.order_counts[k] = c / center;
  out.group_order = sl2 / center;
  return out;
}

inline Spectrum psl2_orders(unsigned q) { return psl2_enumeration(q).spectrum(); }

/// Orders of all even permutations of n points, by direct enumeration.
inline std::map<std::uint64_t, std::uint64_t> alt_order_counts(unsigned n) {
  if (n < 1 || n > 12) throw BudgetError("alt_orders: n must be between 1 and 12");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::map<std::uint64_t, std::uint64_t> counts;
  std::vector<char> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t order = 1;
    unsigned transpositions = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      unsigned len = 0;
      for (unsigned j = i; !seen[j]; j = perm[j]) {
        seen[j] = 1;
        ++len;
      }
      transpositions += len - 1;
      order = std::lcm(order, std::uint64_t(len));
    }
    if (transpositions % 2 == 0) ++counts[order];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

inline Spectrum alt_orders(unsigned n) {
  std::vector<std::uint64_t> orders;
  for (const auto& [o, c] : alt_order_counts(n)) orders.push_back(o);
  return Spectrum::generated_by(orders);
}

namespace detail {

using Mat4 = std::array<std::uint8_t, 16>;

inline std::uint64_t mat_key(const Mat4& m) {
  std::uint64_t k = 0;
  for (auto v : m) k = (k << 3) | v;
  return k;
}

inline Mat4 mat_mul(const FiniteField& F, const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      unsigned s = 0;
      for (int t = 0; t < 4; ++t) s = F.add(s, F.mul(a[i * 4 + t], b[t * 4 + j]));
      r[i * 4 + j] = static_cast<std::uint8_t>(s);
    }
  return r;
}

inline Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i * 5] = 1;
  return m;
}

} // namespace detail

/// Sz(8) < Sp4(8) generated by the matrices T(a,b), the torus D(l) and the
/// antidiagonal W, after R. A. Wilson, "The Finite Simple Groups" (Springer
/// 2009), sec. 4.2. theta is x -> x^4 on GF(8), with 2^m = 2.
inline MatrixGroupEnumeration sz8_enumeration(std::uint64_t max_elements = 60000) {
  const FiniteField F(field_spec(8));
  auto th = [&](unsigned x) { return F.pow(x, 4); };
  auto T = [&](unsigned a, unsigned b) {
    detail::Mat4 m = detail::identity4();
    m[4] = static_cast<std::uint8_t>(a);
    m[8] = static_cast<std::uint8_t>(b);
    m[9] = static_cast<std::uint8_t>(th(a));
    m[12] = static_cast<std::uint8_t>(F.add(F.add(F.mul(F.pow(a, 2), th(a)), F.mul(a, b)), th(b)));
    m[13] = static_cast<std::uint8_t>(F.add(F.mul(a, th(a)), b));
    m[14] = static_cast<std::uint8_t>(a);
    return m;
  };
  const unsigned xi = F.primitive_element();
  detail::Mat4 D{};
  D[0] = static_cast<std::uint8_t>(F.pow(xi, 3));
  D[5] = static_cast<std::uint8_t>(F.pow(xi, 2));
  D[10] = static_cast<std::uint8_t>(F.inv(F.pow(xi, 2)));
  D[15] = static_cast<std::uint8_t>(F.inv(F.pow(xi, 3)));
  detail::Mat4 W{};
  for (int i = 0; i < 4; ++i) W[i * 4 + (3 - i)] = 1;
  const std::vector<detail::Mat4> gens = {T(1, 0), T(0, 1), T(xi, 0), D, W};

  std::unordered_set<std::uint64_t> seen;
  std::vector<detail::Mat4> elements{detail::identity4()};
  seen.insert(detail::mat_key(elements[0]));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : gens) {
      detail::Mat4 x = detail::mat_mul(F, elements[i], g);
      if (seen.insert(detail::mat_key(x)).second) {
        elements.push_back(x);
        if (elements.size() > max_elements) throw BudgetError("sz8_orders: closure exceeds element budget");
      }
    }

  MatrixGroupEnumeration out;
  out.field = F.spec();
  out.dimension = 4;
  out.group_order = elements.size();
  const std::uint64_t id = detail::mat_key(detail::identity4());
  for (const auto& e : elements) {
    detail::Mat4 x = e;
    std::uint64_t k = 1;
    while (detail::mat_key(x) != id) {
      x = detail::mat_mul(F, x, e);
      if (++k > out.group_order) throw std::logic_error("sz8_orders: order exceeds group order");
    }
    ++out.order_counts[k];
  }
  return out;
}

inline Spectrum sz8_orders() { return sz8_enumeration().spectrum(); }

} // namespace gk

#endif
