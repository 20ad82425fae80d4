#ifndef GK_GROUPS_HPP
#define GK_GROUPS_HPP

#include "gk/numtheory.hpp"
#include "gk/sporadic_orders.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gk {

enum class Family {
  Alt,
  PSL,         // PSL_n(q), n >= 2
  PSU,         // PSU_n(q), n >= 3
  PSp,         // PSp_{2m}(q), dim = 2m >= 4
  POmegaOdd,   // POmega_{2m+1}(q), q odd, dim >= 7
  POmegaPlus,  // POmega^+_{2m}(q), dim >= 8
  POmegaMinus, // POmega^-_{2m}(q), dim >= 6; 2D(n) is POmega^-_{2n}(3)
  Sz,
  G2,
  TwoG2,
  ThreeD4,
  F4,
  TwoF4,
  E6,
  TwoE6,
  E7,
  E8,
  Sporadic,
};

/// A finite simple group named by family and parameters.
struct GroupId {
  Family family = Family::Alt;
  unsigned n = 0;      // Alt: degree; classical: natural-module dimension
  std::uint64_t p = 0; // characteristic (Lie type)
  unsigned k = 0;      // q = p^k
  std::string name;    // sporadic name (canonical spelling)

  std::uint64_t q() const { return PrimePower{p, k}.q(); }
  bool is_lie_type() const { return family != Family::Alt && family != Family::Sporadic; }

  std::string str() const;

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

namespace detail {

inline std::string q_str(const GroupId& g) { return std::to_string(g.q()); }

inline bool odd_power_of(std::uint64_t base, const PrimePower& pp) {
  return pp.p == base && pp.k % 2 == 1;
}

inline std::string odd_exponent_hint(std::uint64_t base, const PrimePower& pp) {
  if (pp.p != base) return " (wrong characteristic)";
  if (pp.k % 2 == 0) return " (exponent " + std::to_string(pp.k) + " must be odd)";
  return " (exponent must be >= 3)";
}

inline bool is_fermat_prime_index(unsigned n) {
  // n prime and n = 2^m + 1 with m >= 1.
  if (n < 3 || !is_prime(static_cast<long>(n))) return false;
  unsigned m = n - 1;
  return (m & (m - 1)) == 0;
}

} // namespace detail

inline std::string GroupId::str() const {
  switch (family) {
  case Family::Alt: return "Alt(" + std::to_string(n) + ")";
  case Family::PSL: return "PSL" + std::to_string(n) + "(" + detail::q_str(*this) + ")";
  case Family::PSU: return "PSU" + std::to_string(n) + "(" + detail::q_str(*this) + ")";
  case Family::PSp: return "PSp" + std::to_string(n) + "(" + detail::q_str(*this) + ")";
  case Family::POmegaOdd: return "POmega" + std::to_string(n) + "(" + detail::q_str(*this) + ")";
  case Family::POmegaPlus: return "POmega" + std::to_string(n) + "+(" + detail::q_str(*this) + ")";
  case Family::POmegaMinus: return "POmega" + std::to_string(n) + "-(" + detail::q_str(*this) + ")";
  case Family::Sz: return "Sz(" + detail::q_str(*this) + ")";
  case Family::G2: return "G2(" + detail::q_str(*this) + ")";
  case Family::TwoG2: return "2G2(" + detail::q_str(*this) + ")";
  case Family::ThreeD4: return "3D4(" + detail::q_str(*this) + ")";
  case Family::F4: return "F4(" + detail::q_str(*this) + ")";
  case Family::TwoF4: return "2F4(" + detail::q_str(*this) + ")";
  case Family::E6: return "E6(" + detail::q_str(*this) + ")";
  case Family::TwoE6: return "2E6(" + detail::q_str(*this) + ")";
  case Family::E7: return "E7(" + detail::q_str(*this) + ")";
  case Family::E8: return "E8(" + detail::q_str(*this) + ")";
  case Family::Sporadic: return name;
  }
  return "?";
}

/// Checks the family's parameter constraints; throws ConstraintError naming the violation.
inline void validate(const GroupId& g) {
  const std::string who = g.str();
  if (g.family == Family::Alt) {
    if (g.n < 5) throw ConstraintError(who + ": alternating degree must be >= 5");
    return;
  }
  if (g.family == Family::Sporadic) {
    for (const auto& s : data::sporadic_orders)
      if (s.name == g.name) return;
    throw ConstraintError("unknown sporadic group '" + g.name + "'");
  }
  if (g.k == 0 || !is_prime(static_cast<long>(g.p)))
    throw ConstraintError(who + ": q must be a prime power");
  const PrimePower pp{g.p, g.k};
  const std::uint64_t q = g.q();
  switch (g.family) {
  case Family::PSL:
    if (g.n < 2) throw ConstraintError(who + ": dimension must be >= 2");
    if (g.n == 2 && q < 4) throw ConstraintError(who + ": PSL2(q) is simple only for q >= 4");
    break;
  case Family::PSU:
    if (g.n < 3) throw ConstraintError(who + ": unitary dimension must be >= 3");
    if (g.n == 3 && q == 2) throw ConstraintError(who + ": PSU3(2) is not simple");
    break;
  case Family::PSp:
    if (g.n < 4 || g.n % 2) throw ConstraintError(who + ": symplectic dimension must be even and >= 4");
    if (g.n == 4 && q == 2) throw ConstraintError(who + ": PSp4(2) is not simple");
    break;
  case Family::POmegaOdd:
    if (g.n < 7 || g.n % 2 == 0) throw ConstraintError(who + ": odd orthogonal dimension must be odd and >= 7");
    if (g.p == 2) throw ConstraintError(who + ": POmega_{2m+1}(q) requires q odd");
    break;
  case Family::POmegaPlus:
    if (g.n < 8 || g.n % 2) throw ConstraintError(who + ": plus-type dimension must be even and >= 8");
    break;
  case Family::POmegaMinus:
    if (g.n < 6 || g.n % 2) throw ConstraintError(who + ": minus-type dimension must be even and >= 6");
    break;
  case Family::Sz:
    if (!detail::odd_power_of(2, pp) || q <= 2)
      throw ConstraintError(who + ": Suzuki groups need q = 2^{2n+1} > 2" + detail::odd_exponent_hint(2, pp));
    break;
  case Family::TwoG2:
    if (!detail::odd_power_of(3, pp) || q <= 3)
      throw ConstraintError(who + ": Ree groups 2G2 need q = 3^{2n+1} > 3" + detail::odd_exponent_hint(3, pp));
    break;
  case Family::TwoF4:
    if (!detail::odd_power_of(2, pp) || q <= 2)
      throw ConstraintError(who + ": Ree groups 2F4 need q = 2^{2n+1} > 2" + detail::odd_exponent_hint(2, pp));
    break;
  case Family::G2:
    if (q == 2) throw ConstraintError(who + ": G2(2) is not simple");
    break;
  default: break;
  }
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::uint64_t parse_uint(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 18)
    throw ParseError("bad integer parameter '" + s + "' in '" + context + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad integer parameter '" + s + "' in '" + context + "'");
  return std::stoull(s);
}

inline GroupId lie(Family f, unsigned n, std::uint64_t q, const std::string& context) {
  auto pp = as_prime_power(q);
  if (!pp) throw ConstraintError(context + ": q = " + std::to_string(q) + " is not a prime power");
  GroupId g;
  g.family = f;
  g.n = n;
  g.p = pp->p;
  g.k = pp->k;
  return g;
}

} // namespace detail

/// Parses tokens like "E8(5)", "2F4(8)", "PSL2(49)", "POmega8+(4)", "2D(5)", "Alt(13)", "M11".
inline GroupId parse_group_id(std::string_view text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw ParseError("empty group identifier");
  const auto open = s.find('(');
  if (open == std::string::npos) {
    std::string name = s;
    for (const auto& [alias, canon] : data::sporadic_aliases)
      if (name == alias) name = std::string(canon);
    GroupId g;
    g.family = Family::Sporadic;
    g.name = name;
    for (const auto& so : data::sporadic_orders)
      if (so.name == name) return g;
    throw ParseError("unknown group identifier '" + s + "'");
  }
  if (s.back() != ')') throw ParseError("missing ')' in '" + s + "'");
  const std::string head = s.substr(0, open);
  const std::string arg = detail::trim(s.substr(open + 1, s.size() - open - 2));
  const std::uint64_t v = detail::parse_uint(arg, s);

  GroupId g;
  auto dim_after = [&](std::string_view prefix) -> std::optional<unsigned> {
    if (head.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = head.substr(prefix.size());
    if (rest.empty()) return std::nullopt;
    for (char c : rest)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return static_cast<unsigned>(std::stoul(rest));
  };

  if (head == "Alt" || head == "A") {
    g.family = Family::Alt;
    g.n = static_cast<unsigned>(v);
  } else if (head == "Sz" || head == "2B2") {
    g = detail::lie(Family::Sz, 4, v, s);
  } else if (head == "G2") {
    g = detail::lie(Family::G2, 7, v, s);
  } else if (head == "2G2") {
    g = detail::lie(Family::TwoG2, 7, v, s);
  } else if (head == "3D4") {
    g = detail::lie(Family::ThreeD4, 8, v, s);
  } else if (head == "F4") {
    g = detail::lie(Family::F4, 26, v, s);
  } else if (head == "2F4") {
    g = detail::lie(Family::TwoF4, 26, v, s);
  } else if (head == "E6") {
    g = detail::lie(Family::E6, 27, v, s);
  } else if (head == "2E6") {
    g = detail::lie(Family::TwoE6, 27, v, s);
  } else if (head == "E7") {
    g = detail::lie(Family::E7, 56, v, s);
  } else if (head == "E8") {
    g = detail::lie(Family::E8, 248, v, s);
  } else if (head == "2D") {
    if (!detail::is_fermat_prime_index(static_cast<unsigned>(v)))
      throw ConstraintError(s + ": 2D(n) needs n = 2^m + 1 >= 3 prime");
    g = detail::lie(Family::POmegaMinus, static_cast<unsigned>(2 * v), 3, s);
  } else if (head.rfind("POmega", 0) == 0) {
    std::string digits = head.substr(6);
    Family f = Family::POmegaOdd;
    if (!digits.empty() && (digits.back() == '+' || digits.back() == '-')) {
      f = digits.back() == '+' ? Family::POmegaPlus : Family::POmegaMinus;
      digits.pop_back();
    }
    const auto dim = static_cast<unsigned>(detail::parse_uint(digits, s));
    g = detail::lie(f, dim, v, s);
  } else if (auto d = dim_after("PSL")) {
    g = detail::lie(Family::PSL, *d, v, s);
  } else if (auto d = dim_after("PSU")) {
    g = detail::lie(Family::PSU, *d, v, s);
  } else if (auto d = dim_after("PSp")) {
    g = detail::lie(Family::PSp, *d, v, s);
  } else {
    throw ParseError("unknown family '" + head + "' in '" + s + "'");
  }
  validate(g);
  return g;
}

/// Divisor-closed set of element orders.
class Spectrum {
public:
  Spectrum() : orders_{1} {}

  /// Smallest divisor-closed set containing the generators.
  static Spectrum generated_by(const std::vector<std::uint64_t>& generators) {
    Spectrum s;
    for (std::uint64_t g : generators) s.add_with_divisors(g);
    return s;
  }

  void add_with_divisors(std::uint64_t v) {
    if (v == 0) throw std::invalid_argument("Spectrum: element orders are positive");
    if (orders_.count(v)) return;
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factor(big(v)).factors) {
      const std::uint64_t pu = to_u64(p);
      const std::size_t base = divs.size();
      std::uint64_t pk = 1;
      for (unsigned i = 1; i <= e; ++i) {
        pk *= pu;
        for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
      }
    }
    orders_.insert(divs.begin(), divs.end());
  }

  bool contains(std::uint64_t v) const { return orders_.count(v) > 0; }
  const std::set<std::uint64_t>& orders() const { return orders_; }
  std::size_t size() const { return orders_.size(); }

  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v : orders_)
      if (is_prime(big(v))) out.push_back(v);
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (std::uint64_t v : orders_) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.orders_ == b.orders_; }

private:
  std::set<std::uint64_t> orders_;
};

/// |G| as q^N * prod Phi_d(q)^{e_d} / center, or an explicit factorization
/// for alternating and sporadic groups.
class OrderFormula {
public:
  static OrderFormula explicit_order(Factorization f) {
    OrderFormula o;
    o.explicit_ = std::move(f);
    return o;
  }
  static OrderFormula lie_type(std::uint64_t q, unsigned q_exponent, std::map<unsigned, int> cyclo,
                               std::uint64_t center) {
    OrderFormula o;
    o.q_ = q;
    o.q_exponent_ = q_exponent;
    o.cyclotomic_ = std::move(cyclo);
    o.center_ = center;
    return o;
  }

  BigInt evaluate() const {
    if (explicit_) return explicit_->product();
    BigInt v = pow(big(q_), q_exponent_);
    for (const auto& [d, e] : cyclotomic_) v *= pow(cyclotomic(d, big(q_)), static_cast<unsigned long>(e));
    return v / center_;
  }

  /// Factorization assembled piecewise from the cyclotomic values.
  Factorization factorize(const FactorBudget& budget = {}) const {
    if (explicit_) return *explicit_;
    Factorization f;
    if (q_exponent_ > 0) {
      Factorization qp = factor(big(q_));
      for (auto& [p, e] : qp.factors) e *= q_exponent_;
      qp.value = pow(big(q_), q_exponent_);
      f.absorb(qp);
    }
    for (const auto& [d, e] : cyclotomic_) {
      Factorization c = factor(cyclotomic(d, big(q_)), budget);
      for (int i = 0; i < e; ++i) f.absorb(c);
    }
    if (center_ > 1) f.remove(factor(big(center_)));
    return f;
  }

  /// Values whose product (divided by the center) is |G|; used for smoothness tests.
  std::vector<BigInt> pieces() const {
    std::vector<BigInt> out;
    if (explicit_) {
      for (const auto& [p, e] : explicit_->factors) out.push_back(p);
      return out;
    }
    out.push_back(big(q_));
    for (const auto& [d, e] : cyclotomic_) out.push_back(cyclotomic(d, big(q_)));
    return out;
  }

private:
  std::optional<Factorization> explicit_;
  std::uint64_t q_ = 0;
  unsigned q_exponent_ = 0;
  std::map<unsigned, int> cyclotomic_;
  std::uint64_t center_ = 1;
};

namespace detail {

// Accumulates exponents of Phi_d for terms q^i - 1 and q^i + 1.
struct CycloProduct {
  std::map<unsigned, int> exps;
  CycloProduct& minus_one(unsigned i, int times = 1) {
    for (unsigned d : divisors_of(i)) exps[d] += times;
    return *this;
  }
  CycloProduct& plus_one(unsigned i, int times = 1) {
    for (unsigned d : divisors_of(2 * i))
      if (i % d != 0) exps[d] += times;
    return *this;
  }
  std::map<unsigned, int> done() {
    for (auto it = exps.begin(); it != exps.end();) {
      if (it->second < 0) throw std::logic_error("negative cyclotomic exponent");
      it = it->second == 0 ? exps.erase(it) : std::next(it);
    }
    return exps;
  }
};

inline Factorization factorial_half(unsigned n) {
  Factorization f;
  for (unsigned p = 2; p <= n; ++p) {
    if (!is_prime(static_cast<long>(p))) continue;
    unsigned e = 0;
    for (unsigned long pk = p; pk <= n; pk *= p) e += n / pk;
    f.factors[BigInt(p)] = e;
  }
  f.factors[BigInt(2)] -= 1;
  f.value = f.product();
  return f;
}

inline std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

} // namespace detail

/// |G| in structured form.
inline OrderFormula order_formula(const GroupId& g) {
  using detail::CycloProduct;
  if (g.family == Family::Alt) return OrderFormula::explicit_order(detail::factorial_half(g.n));
  if (g.family == Family::Sporadic) {
    for (const auto& so : data::sporadic_orders) {
      if (so.name != g.name) continue;
      Factorization f;
      for (const auto& [p, e] : so.factors)
        if (p) f.factors[BigInt(p)] = e;
      f.value = f.product();
      return OrderFormula::explicit_order(std::move(f));
    }
    throw UnsupportedError("no order data for sporadic group " + g.name);
  }
  const std::uint64_t q = g.q();
  const unsigned n = g.n;
  CycloProduct c;
  switch (g.family) {
  case Family::PSL: {
    for (unsigned i = 2; i <= n; ++i) c.minus_one(i);
    return OrderFormula::lie_type(q, n * (n - 1) / 2, c.done(), detail::gcd_u(n, q - 1));
  }
  case Family::PSU: {
    for (unsigned i = 2; i <= n; ++i) i % 2 ? c.plus_one(i) : c.minus_one(i);
    return OrderFormula::lie_type(q, n * (n - 1) / 2, c.done(), detail::gcd_u(n, q + 1));
  }
  case Family::PSp:
  case Family::POmegaOdd: {
    const unsigned m = n / 2;
    for (unsigned i = 1; i <= m; ++i) c.minus_one(2 * i);
    return OrderFormula::lie_type(q, m * m, c.done(), detail::gcd_u(2, q - 1));
  }
  case Family::POmegaPlus:
  case Family::POmegaMinus: {
    const unsigned m = n / 2;
    for (unsigned i = 1; i < m; ++i) c.minus_one(2 * i);
    const bool plus = g.family == Family::POmegaPlus;
    plus ? c.minus_one(m) : c.plus_one(m);
    BigInt qm = pow(big(q), m);
    qm += plus ? -1 : 1;
    const std::uint64_t center = mpz_fdiv_ui(qm.get_mpz_t(), 4) == 0 ? 4 : mpz_fdiv_ui(qm.get_mpz_t(), 2) == 0 ? 2 : 1;
    return OrderFormula::lie_type(q, m * (m - 1), c.done(), center);
  }
  case Family::Sz:
    c.plus_one(2).minus_one(1);
    return OrderFormula::lie_type(q, 2, c.done(), 1);
  case Family::G2:
    c.minus_one(6).minus_one(2);
    return OrderFormula::lie_type(q, 6, c.done(), 1);
  case Family::TwoG2:
    c.plus_one(3).minus_one(1);
    return OrderFormula::lie_type(q, 3, c.done(), 1);
  case Family::ThreeD4:
    // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
    c.minus_one(12).minus_one(4, -1).minus_one(6).minus_one(2);
    return OrderFormula::lie_type(q, 12, c.done(), 1);
  case Family::F4:
    c.minus_one(12).minus_one(8).minus_one(6).minus_one(2);
    return OrderFormula::lie_type(q, 24, c.done(), 1);
  case Family::TwoF4:
    c.plus_one(6).minus_one(4).plus_one(3).minus_one(1);
    return OrderFormula::lie_type(q, 12, c.done(), 1);
  case Family::E6:
    for (unsigned i : {12u, 9u, 8u, 6u, 5u, 2u}) c.minus_one(i);
    return OrderFormula::lie_type(q, 36, c.done(), detail::gcd_u(3, q - 1));
  case Family::TwoE6:
    c.minus_one(12).plus_one(9).minus_one(8).minus_one(6).plus_one(5).minus_one(2);
    return OrderFormula::lie_type(q, 36, c.done(), detail::gcd_u(3, q + 1));
  case Family::E7:
    for (unsigned i : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) c.minus_one(i);
    return OrderFormula::lie_type(q, 63, c.done(), detail::gcd_u(2, q - 1));
  case Family::E8:
    for (unsigned i : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u}) c.minus_one(i);
    return OrderFormula::lie_type(q, 120, c.done(), 1);
  default: break;
  }
  throw UnsupportedError("no order formula for " + g.str());
}

inline BigInt order(const GroupId& g) { return order_formula(g).evaluate(); }

/// pi(G) = pi(|G|).
inline PrimeSet prime_spectrum(const GroupId& g) { return order_formula(g).factorize().support(); }

/// f(x) = x^120 (x^2-1)(x^8-1)(x^12-1)(x^14-1)(x^18-1)(x^20-1)(x^24-1)(x^30-1) = |E8(x)|.
inline BigInt e8_order_polynomial(const BigInt& x) {
  BigInt v = pow(x, 120);
  for (unsigned i : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) v *= pow(x, i) - 1;
  return v;
}

/// The prime power q with |E8(q)| = N, if any. f is strictly increasing for x >= 1.
inline std::optional<std::uint64_t> recover_q_from_order(const BigInt& N) {
  if (N < 1) throw std::invalid_argument("recover_q_from_order: N must be >= 1");
  std::uint64_t lo = 2, hi = 2;
  while (e8_order_polynomial(big(hi)) < N) {
    lo = hi;
    if (hi > (std::uint64_t(1) << 40)) return std::nullopt;
    hi *= 2;
  }
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (e8_order_polynomial(big(mid)) < N)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (e8_order_polynomial(big(lo)) != N || !as_prime_power(lo)) return std::nullopt;
  return lo;
}

/// omega(PSL2(q)) for q > 3: divisors of p, (q-1)/d and (q+1)/d with d = (2, q-1).
inline Spectrum spectrum_psl2(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp || q <= 3) throw ConstraintError("spectrum_psl2: q must be a prime power > 3");
  const std::uint64_t d = q % 2 ? 2 : 1;
  return Spectrum::generated_by({pp->p, (q - 1) / d, (q + 1) / d});
}

/// omega(Sz(q)), q = 2^{2n+1} > 2: divisors of 4, q-1, q-sqrt(2q)+1, q+sqrt(2q)+1.
inline Spectrum spectrum_sz(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp || pp->p != 2 || pp->k % 2 == 0 || q <= 2)
    throw ConstraintError("spectrum_sz: q must be 2^{2n+1} > 2");
  const std::uint64_t r = std::uint64_t(1) << ((pp->k + 1) / 2);
  return Spectrum::generated_by({4, q - 1, q - r + 1, q + r + 1});
}

/// omega(A_n): lcms of cycle types of even permutations.
inline Spectrum spectrum_alt(unsigned n) {
  if (n < 5) throw ConstraintError("spectrum_alt: n must be >= 5");
  if (n > 40) throw BudgetError("spectrum_alt: n must be <= 40");
  std::set<std::uint64_t> lcms;
  // Parts in non-increasing order; parity tracks sum of (part - 1).
  auto rec = [&](auto& self, unsigned remaining, unsigned max_part, std::uint64_t l, unsigned parity) -> void {
    if (remaining == 0) {
      if (parity % 2 == 0) lcms.insert(l);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part)
      self(self, remaining - part, part, std::lcm(l, std::uint64_t(part)), parity + part - 1);
  };
  rec(rec, n, n, 1, 0);
  return Spectrum::generated_by({lcms.begin(), lcms.end()});
}

/// Unisingular groups of Lie type (seven families; all others false).
inline bool is_unisingular(const GroupId& g) {
  const bool prime_field = g.k == 1;
  const std::uint64_t p = g.p;
  switch (g.family) {
  case Family::PSL: return prime_field && (p - 1) % g.n == 0;
  case Family::PSU: return prime_field && (p + 1) % g.n == 0;
  case Family::PSp:
  case Family::POmegaOdd: return prime_field && p % 2 == 1;
  case Family::POmegaPlus:
  case Family::POmegaMinus: {
    if (!prime_field || p % 2 == 0) return false;
    const std::uint64_t m = g.n / 2;
    const bool plus_expected = (m * (p - 1) / 2) % 2 == 0;
    return plus_expected == (g.family == Family::POmegaPlus);
  }
  case Family::TwoG2:
  case Family::F4:
  case Family::TwoF4:
  case Family::E8: return true;
  case Family::G2: return p % 2 == 1;
  case Family::E6: return prime_field && (p - 1) % 3 == 0;
  case Family::TwoE6: return prime_field && (p + 1) % 3 == 0;
  case Family::E7: return prime_field && p % 2 == 1;
  default: return false;
  }
}

struct CandidateBounds {
  std::uint64_t q_max = 64;
  unsigned n_max = 20;
};

namespace detail {

struct RegistryEntry {
  Family family;
  unsigned dim;
};

// Lie-type families searched by enumerate_candidates, in output order.
inline const std::vector<RegistryEntry>& lie_registry() {
  static const std::vector<RegistryEntry> entries = {
      {Family::PSL, 2},         {Family::PSL, 3},         {Family::PSL, 4},   {Family::PSL, 5},
      {Family::PSL, 6},         {Family::PSU, 3},         {Family::PSU, 4},   {Family::PSU, 5},
      {Family::PSU, 6},         {Family::PSp, 4},         {Family::PSp, 6},   {Family::PSp, 8},
      {Family::POmegaOdd, 7},   {Family::POmegaOdd, 9},   {Family::POmegaPlus, 8},
      {Family::POmegaMinus, 8}, {Family::Sz, 4},          {Family::G2, 7},    {Family::TwoG2, 7},
      {Family::ThreeD4, 8},     {Family::F4, 26},         {Family::TwoF4, 26}, {Family::E6, 27},
      {Family::TwoE6, 27},      {Family::E7, 56},         {Family::E8, 248},
  };
  return entries;
}

inline bool smooth_over(BigInt v, const PrimeSet& pi) {
  v = abs(v);
  for (const BigInt& p : pi)
    while (v > 1 && mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) v /= p;
  return v == 1;
}

inline bool spectrum_within(const GroupId& g, const PrimeSet& pi) {
  for (const BigInt& piece : order_formula(g).pieces())
    if (!smooth_over(piece, pi)) return false;
  return true;
}

} // namespace detail

/// Simple groups with pi(S) contained in pi, over the family registry and bounds.
inline std::vector<GroupId> enumerate_candidates(const PrimeSet& pi, const CandidateBounds& bounds = {}) {
  std::vector<GroupId> out;
  for (unsigned n = 5; n <= bounds.n_max; ++n) {
    GroupId g;
    g.family = Family::Alt;
    g.n = n;
    if (detail::spectrum_within(g, pi)) out.push_back(g);
  }
  const auto qs = prime_powers_up_to(bounds.q_max);
  for (const auto& entry : detail::lie_registry()) {
    for (std::uint64_t q : qs) {
      GroupId g = detail::lie(entry.family, entry.dim, q, "candidate");
      try {
        validate(g);
      } catch (const ConstraintError&) {
        continue;
      }
      if (!pi.contains(BigInt(static_cast<unsigned long>(g.p)))) continue;
      if (detail::spectrum_within(g, pi)) out.push_back(g);
    }
  }
  // 2D(n) = POmega^-_{2n}(3), n = 2^m + 1 prime.
  for (unsigned n = 3; n <= bounds.n_max; ++n) {
    if (!detail::is_fermat_prime_index(n)) continue;
    GroupId g = detail::lie(Family::POmegaMinus, 2 * n, 3, "candidate");
    if (detail::spectrum_within(g, pi) && std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(g);
  }
  for (const auto& so : data::sporadic_orders) {
    GroupId g;
    g.family = Family::Sporadic;
    g.name = std::string(so.name);
    if (detail::spectrum_within(g, pi)) out.push_back(g);
  }
  return out;
}

} // namespace gk

#endif
