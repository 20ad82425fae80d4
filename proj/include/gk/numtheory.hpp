#ifndef GK_NUMTHEORY_HPP
#define GK_NUMTHEORY_HPP

// Exact integer number theory used by the prime-graph constructions:
// factorization, multiplicative orders, cyclotomic values and primitive
// prime divisors.
//
// Primality: Miller-Rabin with the first 13 prime bases, which is
// deterministic for n < 3.3e24 (covers every value below 2^64). Larger
// inputs additionally go through GMP's mpz_probab_prime_p (BPSW plus
// extra Miller-Rabin rounds); no BPSW pseudoprime is known, and GMP's
// internal generator is seeded identically on every call, so results are
// reproducible.

#include "gk/bigint.hpp"
#include "gk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gk {

/// Ascending set of distinct primes.
class PrimeSet {
public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<long> primes) {
    for (long p : primes) insert(BigInt(p));
  }
  explicit PrimeSet(std::vector<BigInt> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  }

  void insert(const BigInt& p) {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) primes_.insert(it, p);
  }
  bool contains(const BigInt& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }
  bool subset_of(const PrimeSet& other) const {
    return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(),
                         primes_.end());
  }
  PrimeSet united(const PrimeSet& other) const {
    std::vector<BigInt> out;
    std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                   std::back_inserter(out));
    PrimeSet r;
    r.primes_ = std::move(out);
    return r;
  }
  PrimeSet minus(const PrimeSet& other) const {
    std::vector<BigInt> out;
    std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(),
                        other.primes_.end(), std::back_inserter(out));
    PrimeSet r;
    r.primes_ = std::move(out);
    return r;
  }

  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  const BigInt& operator[](std::size_t i) const { return primes_[i]; }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }
  const std::vector<BigInt>& values() const { return primes_; }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i) s += ",";
      s += primes_[i].get_str();
    }
    return s + "}";
  }

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) { return a.primes_ == b.primes_; }

private:
  std::vector<BigInt> primes_;
};

/// Prime-power decomposition of a positive integer.
struct Factorization {
  BigInt value = 1;
  std::map<BigInt, unsigned> factors;

  PrimeSet support() const {
    std::vector<BigInt> ps;
    ps.reserve(factors.size());
    for (const auto& [p, e] : factors) ps.push_back(p);
    return PrimeSet(std::move(ps));
  }

  BigInt product() const {
    BigInt r = 1;
    for (const auto& [p, e] : factors) r *= pow(p, e);
    return r;
  }

  /// Merge another factorization into this one (multiplies the values).
  void absorb(const Factorization& other) {
    value *= other.value;
    for (const auto& [p, e] : other.factors) factors[p] += e;
  }

  /// Divide out an exact divisor given in factored form.
  void remove(const Factorization& divisor) {
    for (const auto& [p, e] : divisor.factors) {
      auto it = factors.find(p);
      if (it == factors.end() || it->second < e)
        throw std::logic_error("Factorization::remove: not a divisor");
      it->second -= e;
      if (it->second == 0) factors.erase(it);
    }
    value /= divisor.value;
  }
};

struct FactorBudget {
  /// Pollard-rho iterations allowed per composite cofactor.
  std::uint64_t max_rho_iterations = 500'000'000;
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 10000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, unsigned long base) {
  BigInt a(base);
  BigInt nm1 = n - 1;
  BigInt x = powm(a, d, n);
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

using u128 = unsigned __int128;

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's cycle-finding variant of Pollard rho, 64-bit path.
inline std::optional<std::uint64_t> rho64(std::uint64_t n, std::uint64_t c,
                                          std::uint64_t& iterations, std::uint64_t limit) {
  auto f = [&](std::uint64_t v) { return (mulmod64(v, v, n) + c) % n; };
  std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
  const std::uint64_t m = 128;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += m) {
      ys = y;
      std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod64(q, x > y ? x - y : y - x, n);
      }
      iterations += lim;
      g = gcd64(q, n);
      if (iterations > limit) return std::nullopt;
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

// Same algorithm on GMP integers; raw mpz_t keeps the inner loop allocation-free.
inline std::optional<BigInt> rho_big(const BigInt& n, unsigned long c, std::uint64_t& iterations,
                                     std::uint64_t limit) {
  mpz_t x, y, ys, q, g, t;
  mpz_inits(x, y, ys, q, g, t, nullptr);
  mpz_set_ui(y, 2);
  mpz_set_ui(q, 1);
  mpz_set_ui(g, 1);
  const mpz_srcptr nn = n.get_mpz_t();
  auto f = [&](mpz_t v) {
    mpz_mul(t, v, v);
    mpz_add_ui(t, t, c);
    mpz_mod(v, t, nn);
  };
  const std::uint64_t m = 256;
  bool over = false;
  for (std::uint64_t r = 1; mpz_cmp_ui(g, 1) == 0 && !over; r <<= 1) {
    mpz_set(x, y);
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    for (std::uint64_t k = 0; k < r && mpz_cmp_ui(g, 1) == 0; k += m) {
      mpz_set(ys, y);
      std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        f(y);
        mpz_sub(t, x, y);
        mpz_abs(t, t);
        mpz_mul(t, t, q);
        mpz_mod(q, t, nn);
      }
      iterations += lim;
      mpz_gcd(g, q, nn);
      if (iterations > limit) {
        over = true;
        break;
      }
    }
  }
  std::optional<BigInt> result;
  if (!over) {
    if (mpz_cmp(g, nn) == 0) {
      do {
        f(ys);
        mpz_sub(t, x, ys);
        mpz_abs(t, t);
        mpz_gcd(g, t, nn);
      } while (mpz_cmp_ui(g, 1) == 0);
    }
    if (mpz_cmp(g, nn) != 0) result = BigInt(g);
  }
  mpz_clears(x, y, ys, q, g, t, nullptr);
  return result;
}

inline BigInt find_factor(const BigInt& n, const FactorBudget& budget) {
  std::uint64_t iterations = 0;
  for (unsigned long c = 1; c < 64; ++c) {
    if (fits_u64(n)) {
      if (auto d = rho64(to_u64(n), c, iterations, budget.max_rho_iterations)) return big(*d);
    } else {
      if (auto d = rho_big(n, c, iterations, budget.max_rho_iterations)) return *d;
    }
    if (iterations > budget.max_rho_iterations) break;
  }
  throw BudgetError("factor: could not split " + n.get_str() + " within " +
                    std::to_string(budget.max_rho_iterations) + " rho iterations");
}

} // namespace detail

/// Primality test. Deterministic below 3.3e24; see the file comment above.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (std::uint32_t p : detail::small_primes()) {
    if (p > 1000) break;
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 1000 * 1000) return true;
  BigInt d = n - 1;
  unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
    if (!detail::miller_rabin_round(n, d, s, base)) return false;
  static const BigInt deterministic_limit("3317044064679887385961981");
  if (n < deterministic_limit) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline bool is_prime(long n) { return is_prime(BigInt(n)); }

/// Full prime factorization of n >= 1. Deterministic: rho seeds are fixed.
inline Factorization factor(const BigInt& n, const FactorBudget& budget = {}) {
  if (n < 1) throw std::invalid_argument("factor: n must be >= 1, got " + n.get_str());
  Factorization out;
  out.value = n;
  BigInt rest = n;
  for (std::uint32_t p : detail::small_primes()) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++out.factors[BigInt(p)];
    }
  }
  std::vector<BigInt> stack;
  if (rest > 1) stack.push_back(rest);
  while (!stack.empty()) {
    BigInt m = std::move(stack.back());
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      ++out.factors[m];
      continue;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      bool split = false;
      for (unsigned long e = mpz_sizeinbase(m.get_mpz_t(), 2); e >= 2 && !split; --e) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), e)) {
          for (unsigned long i = 0; i < e; ++i) stack.push_back(root);
          split = true;
        }
      }
      if (split) continue;
    }
    BigInt d = detail::find_factor(m, budget);
    stack.push_back(m / d);
    stack.push_back(d);
  }
  return out;
}

inline Factorization factor(long n) { return factor(BigInt(n)); }

/// Prime support of |n| (n != 0).
inline PrimeSet prime_divisors(const BigInt& n) {
  BigInt a = abs(n);
  if (a == 0) throw std::invalid_argument("prime_divisors: n must be nonzero");
  return factor(a).support();
}

/// The pi-part of n: largest divisor of n whose primes all lie in pi.
inline BigInt pi_part(const BigInt& n, const PrimeSet& pi) {
  if (n < 1) throw std::invalid_argument("pi_part: n must be >= 1");
  BigInt rest = n, part = 1;
  for (const BigInt& p : pi) {
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      part *= p;
    }
  }
  return part;
}

/// Exponent of the prime 2 under the convention e(2,n) = 1 if n = 1 (mod 4), 2 otherwise.
inline unsigned order_of_two(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t()))
    throw ConstraintError("e(2, n) undefined: n = " + n.get_str() + " is even");
  return mod_floor(n, 4) == 1 ? 1u : 2u;
}

/// e(r, n): multiplicative order of n modulo the prime r, with the e(2,n) convention.
inline BigInt mult_order(const BigInt& r, const BigInt& n) {
  if (r == 2) return order_of_two(n);
  BigInt a = mod_floor(n, r);
  if (a == 0) throw ConstraintError("e(r, n) undefined: " + r.get_str() + " divides " + n.get_str());
  BigInt order = r - 1;
  for (const auto& [p, e] : factor(r - 1).factors) {
    for (unsigned i = 0; i < e; ++i) {
      BigInt smaller = order / p;
      if (powm(a, smaller, r) != 1) break;
      order = smaller;
    }
  }
  return order;
}

inline BigInt mult_order(long r, long n) { return mult_order(BigInt(r), BigInt(n)); }

/// Small-integer helpers used for indices of cyclotomic polynomials.
inline std::vector<unsigned> divisors_of(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline int mobius(unsigned n) {
  int sign = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline std::vector<unsigned> prime_factors_small(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// True iff n modulo the prime r has order exactly i (e(2,.) convention for r = 2).
inline bool has_order(const BigInt& r, const BigInt& n, unsigned i) {
  if (r == 2) return mpz_odd_p(n.get_mpz_t()) && order_of_two(n) == i;
  BigInt a = mod_floor(n, r);
  if (a == 0) return false;
  if (powm(a, i, r) != 1) return false;
  for (unsigned p : prime_factors_small(i))
    if (powm(a, i / p, r) == 1) return false;
  return true;
}

/// Phi_i(a), via the Moebius product over divisors of i.
inline BigInt cyclotomic(unsigned i, const BigInt& a) {
  if (i == 0) throw std::invalid_argument("cyclotomic: index must be >= 1");
  if (abs(a) <= 1) throw std::invalid_argument("cyclotomic: |a| must exceed 1");
  BigInt num = 1, den = 1;
  for (unsigned d : divisors_of(i)) {
    int mu = mobius(i / d);
    if (mu == 0) continue;
    BigInt term = pow(a, d) - 1;
    (mu > 0 ? num : den) *= term;
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

inline BigInt cyclotomic(unsigned i, long a) { return cyclotomic(i, BigInt(a)); }

/// Product of all primitive prime divisors of a^i - 1, counted with their full
/// multiplicity in a^i - 1.
///
/// Works straight from the definition: every prime of a^i - 1 that also divides
/// some a^j - 1 with j < i is stripped by repeated gcds, and the prime 2 is
/// reinstated exactly when e(2, a) = i. No cyclotomic polynomial is involved.
inline BigInt k_bruteforce(unsigned i, const BigInt& a) {
  if (i == 0) throw std::invalid_argument("k_bruteforce: index must be >= 1");
  if (abs(a) <= 1) throw std::invalid_argument("k_bruteforce: |a| must exceed 1");
  BigInt n = abs(pow(a, i) - 1);
  unsigned long v2 = mpz_scan1(n.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), v2);
  for (unsigned j = 1; j < i && n > 1; ++j) {
    BigInt g = gcd(n, pow(a, j) - 1);
    while (g > 1) {
      n /= g;
      g = gcd(n, g);
    }
  }
  if (v2 > 0 && order_of_two(a) == i) mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), v2);
  return n;
}

inline BigInt k_bruteforce(unsigned i, long a) { return k_bruteforce(i, BigInt(a)); }

/// k_i(a). For i > 2 uses Phi_i(a) / gcd(r, Phi_{i_{r'}}(a)) with r the largest
/// prime divisor of i; k_1 comes from the definition and k_2(a) = k_1(-a).
inline BigInt k_value(unsigned i, const BigInt& a) {
  if (i == 0) throw std::invalid_argument("k_value: index must be >= 1");
  if (i == 1) return k_bruteforce(1, a);
  if (i == 2) return k_bruteforce(1, -a);
  unsigned r = prime_factors_small(i).back();
  unsigned rprime = i;
  while (rprime % r == 0) rprime /= r;
  BigInt g = gcd(BigInt(r), cyclotomic(rprime, a));
  return cyclotomic(i, a) / g;
}

inline BigInt k_value(unsigned i, long a) { return k_value(i, BigInt(a)); }

/// R_i(q): all primes r with e(r, q) = i.
inline PrimeSet primitive_divisors(unsigned i, const BigInt& q, const FactorBudget& budget = {}) {
  BigInt k = k_bruteforce(i, q);
  PrimeSet out;
  if (k == 1) return out;
  for (const auto& [p, e] : factor(k, budget).factors) {
    if (!has_order(p, q, i))
      throw std::logic_error("primitive_divisors: prime " + p.get_str() + " has wrong order");
    out.insert(p);
  }
  return out;
}

inline PrimeSet primitive_divisors(unsigned i, long q) { return primitive_divisors(i, BigInt(q)); }

/// R_i(q) nonempty, decided without factoring.
inline bool has_primitive_divisor(unsigned i, const BigInt& q) { return k_bruteforce(i, q) > 1; }

/// Bang-Zsigmondy: R_m(q) is nonempty except for (q,m) in {(2,1), (3,1), (2,6)}.
inline bool zsigmondy_exists(const BigInt& q, unsigned m) {
  if (q <= 1) throw std::invalid_argument("zsigmondy_exists: q must exceed 1");
  if (m == 0) throw std::invalid_argument("zsigmondy_exists: m must be >= 1");
  if (m == 1 && (q == 2 || q == 3)) return false;
  if (m == 6 && q == 2) return false;
  return true;
}

struct PowerSolution {
  std::uint64_t x;
  std::uint64_t y;
  unsigned k;
  friend bool operator==(const PowerSolution&, const PowerSolution&) = default;
};

namespace detail {
// y^k, or 0 if it exceeds `limit`.
inline std::uint64_t bounded_pow(std::uint64_t y, unsigned k, std::uint64_t limit) {
  unsigned __int128 v = 1;
  for (unsigned i = 0; i < k; ++i) {
    v *= y;
    if (v > limit) return 0;
  }
  return static_cast<std::uint64_t>(v);
}
} // namespace detail

/// All (x, y, k) with 1 <= x <= x_max, y >= 2, k >= 2 and x^2 + x + 1 = y^k.
inline std::vector<PowerSolution> nagell_search(std::uint64_t x_max) {
  if (x_max < 1) throw std::invalid_argument("nagell_search: x_max must be >= 1");
  if (x_max > (std::uint64_t(1) << 31)) throw BudgetError("nagell_search: x_max too large");
  std::vector<PowerSolution> out;
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    const std::uint64_t v = x * x + x + 1;
    for (unsigned k = 2; (std::uint64_t(1) << k) <= v; ++k) {
      // Floating-point estimate of the k-th root, corrected exactly.
      const auto est = static_cast<std::uint64_t>(std::pow(static_cast<double>(v), 1.0 / k));
      for (std::uint64_t y = est > 2 ? est - 1 : 2; y <= est + 1; ++y)
        if (detail::bounded_pow(y, k, v) == v) out.push_back({x, y, k});
    }
  }
  return out;
}

struct RestrictionResidue {
  BigInt prime;
  unsigned mod6;
  unsigned mod8;
};

/// When pi(q^2 + sign*q + 1) = {r}, returns r with its residues modulo 6 and 8.
inline std::optional<RestrictionResidue> restriction_residues(const BigInt& q, int sign) {
  if (q <= 2) throw std::invalid_argument("restriction_residues: q must exceed 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("restriction_residues: sign must be +-1");
  BigInt v = q * q + sign * q + 1;
  Factorization f = factor(v);
  if (f.factors.size() != 1) return std::nullopt;
  const BigInt& r = f.factors.begin()->first;
  return RestrictionResidue{r, static_cast<unsigned>(mod_floor(r, 6).get_ui()),
                            static_cast<unsigned>(mod_floor(r, 8).get_ui())};
}

/// q = p^k decomposition, if q is a prime power.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < k; ++i) v *= p;
    return v;
  }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    unsigned k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, k};
  }
  return PrimePower{q, 1};
}

inline std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q)
    if (as_prime_power(q)) out.push_back(q);
  return out;
}

} // namespace gk

#endif
