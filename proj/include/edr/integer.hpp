#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

namespace edr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Number-theoretic helpers over arbitrary-precision integers.
namespace integer {

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

struct ExtendedGcd {
  Integer g;  // nonnegative
  Integer x;
  Integer y;  // x*a + y*b == g
};

inline ExtendedGcd xgcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

/// Least nonnegative residue of a modulo n (n > 0).
inline Integer mod(const Integer& a, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer inverse_mod(const Integer& a, const Integer& n) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) return 0;
  return mod(r, n);
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer pow_mod(const Integer& base, const Integer& e, const Integer& n) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Largest divisor of |x| sharing no prime with y. x must be nonzero.
inline Integer coprime_part(Integer x, const Integer& y) {
  x = abs(x);
  for (Integer g = gcd(x, y); g != 1; g = gcd(x, y)) x /= g;
  return x;
}

inline bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace detail {

inline Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

inline void split_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  split_into(d, primes);
  split_into(n / d, primes);
}

}  // namespace detail

/// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
/// Trial division clears small primes; Pollard rho handles what remains.
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
  n = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  detail::split_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1u);
    }
  }
  return out;
}

/// Product of the distinct primes dividing n.
inline Integer radical(const Integer& n) {
  Integer r = 1;
  for (const auto& [p, e] : factorize(n)) r *= p;
  return r;
}

/// Returns q + s*step with s chosen so that the result is coprime to every
/// prime of n that does not divide step. The residue modulo step is unchanged.
inline Integer shift_to_coprime(const Integer& q, const Integer& step,
                                const Integer& n) {
  Integer s = coprime_part(n, step * q);
  return q + s * step;
}

/// Chinese remaindering of (residue, modulus) pairs with pairwise coprime moduli.
inline Integer crt(const std::vector<std::pair<Integer, Integer>>& parts) {
  Integer value = 0, modulus = 1;
  for (const auto& [r, m] : parts) {
    // value + modulus * t == r (mod m)
    Integer t = mod((r - value) * inverse_mod(modulus, m), m);
    value += modulus * t;
    modulus *= m;
  }
  return mod(value, modulus);
}

}  // namespace integer
}  // namespace edr
