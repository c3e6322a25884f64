#pragma once

#include "edr/error.hpp"
#include "edr/integer.hpp"
#include "edr/ring.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edr {

/// a^power = r * s with r coprime to b; `witness` is gcd_bezout(r, b).
struct AdequateSplit {
  RingElement r, s;
  unsigned long power = 1;
  BezoutData witness;
};

/// Largest divisor of a (up to units) sharing no nonunit factor with b.
/// Integers and polynomials only; a must be nonzero.
inline RingElement coprime_part(const RingElement& a, const RingElement& b) {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "coprime part of zero");
  RingElement x = a;
  for (auto g = gcd_bezout(x, b).g; !unit(g); g = gcd_bezout(x, b).g) x = divide_exact(x, g);
  return x;
}

namespace detail {

inline std::size_t size_bound(const RingElement& a) {
  if (a.ring().is_integers()) return mpz_sizeinbase(a.value().get_mpz_t(), 2) + 1;
  return a.coeffs().size() + 1;
}

}  // namespace detail

inline AdequateSplit adequate_split(const RingElement& a, const RingElement& b) {
  detail::require_same(a, b);
  if (!a.ring().is_euclidean_domain()) {
    fail(ErrorCode::UnsupportedRing, "adequate_split needs Z or GF(p)[x]; use the pi split for Z/n");
  }
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "adequate_split of zero");
  RingElement r = a;
  RingElement s = one(a.ring());
  const std::size_t cap = detail::size_bound(a);
  for (std::size_t i = 0;; ++i) {
    if (i > cap) fail(ErrorCode::InternalError, "gcd extraction did not terminate");
    auto g = gcd_bezout(r, b).g;
    if (unit(g)) break;
    r = divide_exact(r, g);
    s = s * g;
  }
  auto witness = gcd_bezout(r, b);
  return {std::move(r), std::move(s), 1, std::move(witness)};
}

namespace detail {

/// Largest exponent in the prime factorization of the modulus.
inline unsigned long max_prime_exponent(const RingDescriptor& ring) {
  if (ring.is_modular()) {
    unsigned long m = 1;
    for (const auto& [p, k] : integer::factorize(ring.modulus())) m = std::max<unsigned long>(m, k);
    return m;
  }
  if (ring.is_product()) {
    unsigned long m = 1;
    for (const auto& f : ring.factors()) m = std::max(m, max_prime_exponent(f));
    return m;
  }
  fail(ErrorCode::UnsupportedRing, "pi split needs Z/n or a product of them");
}

/// Idempotent e = a^m * u with u a unit and a^m * u * a^m = a^m, over Z/n.
/// Requires m to be at least every prime exponent of n.
inline std::pair<Integer, Integer> unit_regular_idempotent(const Integer& a, unsigned long m,
                                                           const Integer& n) {
  Integer am = integer::pow_mod(a, Integer(m), n);
  std::vector<std::pair<Integer, Integer>> e_parts, u_parts;
  for (const auto& [p, k] : integer::factorize(n)) {
    Integer pk = integer::pow(p, k);
    if (integer::divides(p, a)) {
      e_parts.emplace_back(0, pk);
      u_parts.emplace_back(1, pk);
    } else {
      e_parts.emplace_back(1, pk);
      u_parts.emplace_back(integer::inverse_mod(am, pk), pk);
    }
  }
  return {integer::crt(e_parts), integer::crt(u_parts)};
}

inline std::pair<RingElement, RingElement> pi_split_parts(const RingElement& a,
                                                          const RingElement& b,
                                                          unsigned long m) {
  const auto& ring = a.ring();
  if (ring.is_product()) {
    std::vector<RingElement> rs, ss;
    for (std::size_t i = 0; i < a.components().size(); ++i) {
      auto [r, s] = pi_split_parts(a.components()[i], b.components()[i], m);
      rs.push_back(std::move(r));
      ss.push_back(std::move(s));
    }
    return {RingElement::tuple(ring, std::move(rs)), RingElement::tuple(ring, std::move(ss))};
  }
  if (!ring.is_modular()) fail(ErrorCode::UnsupportedRing, "pi split needs Z/n or a product of them");
  const Integer& n = ring.modulus();
  auto [e_val, u_val] = unit_regular_idempotent(a.value(), m, n);
  auto [f_val, v_val] = unit_regular_idempotent(b.value(), m, n);
  (void)v_val;
  RingElement e(ring, e_val), f(ring, f_val), u(ring, u_val);
  RingElement ef = e * f;
  // (1 - f + ef)(e + f - ef) = e, and e * u^-1 = a^m
  RingElement r = one(ring) - f + ef;
  RingElement s = (e + f - ef) * inverse(u);
  return {std::move(r), std::move(s)};
}

}  // namespace detail

/// pi-adequate split of a with respect to b over Z/n (or a product of Z/n):
/// a^m = r * s for m the largest prime exponent of the modulus, built from
/// the unit-regular idempotents of a^m and b^m.
inline AdequateSplit pi_adequate_split_zn(const RingElement& a, const RingElement& b) {
  detail::require_same(a, b);
  unsigned long m = detail::max_prime_exponent(a.ring());
  auto [r, s] = detail::pi_split_parts(a, b, m);
  auto assoc = canonical_associate(s);
  r = r * assoc.unit;
  s = assoc.normal;
  if (!(r * s == pow(a, m))) fail(ErrorCode::InternalError, "pi split does not multiply back");
  auto witness = gcd_bezout(r, b);
  if (!unit(witness.g)) fail(ErrorCode::InternalError, "pi split factor not coprime to b");
  return {std::move(r), std::move(s), m, std::move(witness)};
}

struct AdequacyReport {
  bool holds = true;
  std::vector<std::string> failures;
  /// A nonunit divisor of s comaximal with b, when condition (3) fails.
  std::optional<RingElement> witness;
};

namespace detail {

/// A nonunit divisor of s comaximal with b, if any.
inline std::optional<RingElement> divisor_escaping(const RingElement& s, const RingElement& b) {
  const auto& ring = s.ring();
  switch (ring.kind()) {
    case RingKind::Integers: {
      if (s.is_zero()) {
        if (b.is_zero()) return std::nullopt;
        Integer p = 2;
        while (integer::divides(p, b.value())) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        return RingElement(ring, p);
      }
      Integer v = abs(s.value());
      if (v > Integer("1000000000000")) {
        fail(ErrorCode::ScaleExceeded, "divisor enumeration limited to |s| <= 10^12");
      }
      for (Integer d = 1; d * d <= v; ++d) {
        if (!integer::divides(d, v)) continue;
        for (const Integer& c : {d, Integer(v / d)}) {
          if (c > 1 && integer::gcd(c, b.value()) == 1) return RingElement(ring, c);
        }
      }
      return std::nullopt;
    }
    case RingKind::PolyOverPrimeField: {
      if (s.is_zero()) {
        if (b.is_zero()) return std::nullopt;
        // some monic polynomial of degree <= deg(b) + 1 is coprime to b
        const Integer& p = ring.prime();
        const long limit = static_cast<long>(b.coeffs().size());
        for (long deg = 1; deg <= limit; ++deg) {
          gf_poly::Coeffs c(static_cast<std::size_t>(deg) + 1, Integer(0));
          c.back() = 1;
          while (true) {
            auto q = RingElement::polynomial(ring, c);
            if (comaximal(q, b)) return q;
            std::size_t i = 0;
            while (i < static_cast<std::size_t>(deg) && ++c[i] == p) c[i++] = 0;
            if (i == static_cast<std::size_t>(deg)) break;
          }
        }
        fail(ErrorCode::InternalError, "no polynomial coprime to b found");
      }
      if (s.coeffs().size() > 13) fail(ErrorCode::ScaleExceeded, "divisor check limited to deg s <= 12");
      auto c = coprime_part(s, b);
      if (unit(c)) return std::nullopt;
      return canonical_associate(c).normal;
    }
    case RingKind::Modular: {
      const Integer& n = ring.modulus();
      if (n > 10000) fail(ErrorCode::ScaleExceeded, "divisor enumeration limited to n <= 10^4");
      for (Integer d = 0; d < n; ++d) {
        Integer g = integer::gcd(d, n);
        if (g == 1 || !integer::divides(g, s.value())) continue;
        if (integer::gcd(g, b.value()) == 1) return RingElement(ring, d);
      }
      return std::nullopt;
    }
    case RingKind::Product: {
      // a nonunit divisor must be a nonunit divisor in some component
      for (std::size_t i = 0; i < s.components().size(); ++i) {
        if (auto w = divisor_escaping(s.components()[i], b.components()[i])) {
          std::vector<RingElement> parts;
          for (const auto& f : ring.factors()) parts.push_back(one(f));
          parts[i] = *w;
          return RingElement::tuple(ring, std::move(parts));
        }
      }
      return std::nullopt;
    }
    case RingKind::TruncatedSeries: break;
  }
  fail(ErrorCode::UnsupportedRing, "verify_adequate does not support " + ring.to_string());
}

}  // namespace detail

/// Checks a^m = r*s, rR + bR = R, and that every nonunit divisor of s
/// shares a nonunit factor with b.
inline AdequacyReport verify_adequate(const RingElement& a, const RingElement& b,
                                      const RingElement& r, const RingElement& s,
                                      unsigned long m) {
  detail::require_same(a, b);
  detail::require_same(a, r);
  detail::require_same(a, s);
  if (m == 0) fail(ErrorCode::PreconditionFailed, "power must be positive");
  AdequacyReport report;
  auto failed = [&](std::string clause) {
    report.holds = false;
    report.failures.push_back(std::move(clause));
  };
  if (!(pow(a, m) == r * s)) failed("a^m = r*s");
  if (!comaximal(r, b)) failed("r coprime to b");
  if (auto w = detail::divisor_escaping(s, b)) {
    failed("nonunit divisors of s meet b");
    report.witness = std::move(w);
  }
  return report;
}

struct SeriesSplit {
  RingElement s, t;
};

/// Factors f = s * t modulo x^k over the truncated series ring, lifting the
/// integer adequate split of f(0) with respect to g(0) coefficient by
/// coefficient.
inline SeriesSplit truncated_series_split(const RingElement& f, const RingElement& g) {
  detail::require_same(f, g);
  const auto& ring = f.ring();
  if (!ring.is_series()) fail(ErrorCode::UnsupportedRing, "truncated_series_split needs Zser<k>");
  const Integer& y = f.series_payload().constant;
  const Integer& z = g.series_payload().constant;
  if (y == 0) fail(ErrorCode::ZeroConstantTerm, "f has zero constant term");
  if (y == 1 || y == -1) return {f, one(ring)};

  const auto Zr = RingDescriptor::integers();
  auto split = adequate_split(RingElement(Zr, y), RingElement(Zr, z));
  const Integer s0 = split.r.value();
  const Integer t0 = split.s.value();
  auto bez = integer::xgcd(s0, t0);
  if (bez.g != 1) fail(ErrorCode::NotCoprime, "constant-term split parts share a factor");
  Integer s_bar = bez.x, t_bar = bez.y;
  if (t0 == 1 || t0 == -1) {
    s_bar = 0;
    t_bar = t0;
  }

  const auto b = detail::series_full(f.series_payload());
  const std::size_t k = b.size();
  std::vector<Rational> d(k), e(k);
  d[0] = s0;
  e[0] = t0;
  for (std::size_t i = 1; i < k; ++i) {
    // s*e_i + d_i*t = b_i - sum_{0<j<i} d_j e_{i-j}
    Rational rhs = b[i];
    for (std::size_t j = 1; j < i; ++j) rhs -= d[j] * e[i - j];
    d[i] = rhs * t_bar;
    e[i] = (rhs - d[i] * t0) / s0;
  }
  auto s_el = detail::series_from_full(ring, std::move(d));
  auto t_el = detail::series_from_full(ring, std::move(e));
  if (!(s_el * t_el == f)) fail(ErrorCode::InternalError, "series split does not multiply back");
  return {std::move(s_el), std::move(t_el)};
}

}  // namespace edr
