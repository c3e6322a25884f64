#pragma once

#include "edr/integer.hpp"

#include <utility>
#include <vector>

namespace edr::gf_poly {

/// Little-endian coefficients in [0, p), no trailing zeros; zero is empty.
using Coeffs = std::vector<Integer>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Coeffs reduce(Coeffs a, const Integer& p) {
  for (auto& c : a) c = integer::mod(c, p);
  trim(a);
  return a;
}

inline long degree(const Coeffs& a) { return static_cast<long>(a.size()) - 1; }

inline const Integer& leading(const Coeffs& a) { return a.back(); }

inline Coeffs constant(const Integer& c, const Integer& p) {
  return reduce(Coeffs{c}, p);
}

inline Coeffs add(const Coeffs& a, const Coeffs& b, const Integer& p) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return reduce(std::move(r), p);
}

inline Coeffs neg(const Coeffs& a, const Integer& p) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r), p);
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b, const Integer& p) {
  return add(a, neg(b, p), p);
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(std::move(r), p);
}

inline Coeffs scale(const Coeffs& a, const Integer& c, const Integer& p) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return reduce(std::move(r), p);
}

/// Quotient and remainder; b must be nonzero.
inline std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b,
                                        const Integer& p) {
  if (a.size() < b.size()) return {Coeffs{}, std::move(a)};
  Integer lead_inv = integer::inverse_mod(leading(b), p);
  Coeffs q(a.size() - b.size() + 1);
  for (long i = degree(a); i >= degree(b); --i) {
    Integer c = integer::mod(a[i] * lead_inv, p);
    if (c == 0) continue;
    std::size_t shift = static_cast<std::size_t>(i - degree(b));
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = integer::mod(a[shift + j] - c * b[j], p);
    }
  }
  trim(q);
  trim(a);
  return {std::move(q), std::move(a)};
}

inline Coeffs monic(const Coeffs& a, const Integer& p) {
  if (a.empty()) return a;
  return scale(a, integer::inverse_mod(leading(a), p), p);
}

struct ExtendedGcd {
  Coeffs g;  // monic, or zero when both inputs are zero
  Coeffs x;
  Coeffs y;
};

inline ExtendedGcd xgcd(const Coeffs& a, const Coeffs& b, const Integer& p) {
  Coeffs r0 = a, r1 = b;
  Coeffs s0 = constant(1, p), s1{};
  Coeffs t0{}, t1 = constant(1, p);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Coeffs s2 = sub(s0, mul(q, s1, p), p);
    Coeffs t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, constant(1, p), {}};
  Integer inv = integer::inverse_mod(leading(r0), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

}  // namespace edr::gf_poly
