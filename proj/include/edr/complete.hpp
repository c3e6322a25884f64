#pragma once

#include "edr/adequate.hpp"
#include "edr/error.hpp"
#include "edr/matrix.hpp"
#include "edr/reduce.hpp"
#include "edr/ring.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edr {

/// y with aR + (b + c*y)R = R, for aR + bR + cR = R and a outside J(R).
/// Over Z and GF(p)[x], y is the part of a coprime to b: it vanishes modulo
/// every prime of a not dividing b and is nonzero modulo the others. Over
/// Z/n the same recipe runs on the integer lift gcd(a, n).
inline RingElement sr1_quotient_lift(const RingElement& a, const RingElement& b,
                                     const RingElement& c) {
  detail::require_same(a, b);
  detail::require_same(a, c);
  const auto& ring = a.ring();
  if (!ring.is_euclidean_domain() && !ring.is_modular()) {
    fail(ErrorCode::UnsupportedRing, "sr1_quotient_lift needs Z, Z/n or GF(p)[x]");
  }
  std::vector<RingElement> triple{a, b, c};
  if (!generates_unit_ideal(triple)) fail(ErrorCode::PreconditionFailed, "aR + bR + cR != R");
  if (jacobson_member(a)) fail(ErrorCode::PreconditionFailed, "a lies in the Jacobson radical");
  if (comaximal(a, b)) return zero(ring);
  switch (ring.kind()) {
    case RingKind::Integers:
      return RingElement(ring, integer::mod(coprime_part(a, b).value(), abs(a.value())));
    case RingKind::PolyOverPrimeField: {
      auto y = coprime_part(a, b);
      return RingElement::polynomial(ring, gf_poly::divmod(y.coeffs(), a.coeffs(), ring.prime()).second);
    }
    case RingKind::Modular: {
      Integer lifted = integer::gcd(a.value(), ring.modulus());
      return RingElement(ring, integer::coprime_part(lifted, b.value()));
    }
    default: break;
  }
  fail(ErrorCode::InternalError, "unreachable ring kind");
}

/// (y1, y2) with (a1 + a3*y1)R + (a2 + a3*y2)R = R.
inline std::pair<RingElement, RingElement> sr2_reduce(const RingElement& a1, const RingElement& a2,
                                                      const RingElement& a3) {
  detail::require_same(a1, a2);
  detail::require_same(a1, a3);
  const auto& ring = a1.ring();
  if (ring.is_product()) {
    std::vector<RingElement> y1, y2;
    for (std::size_t i = 0; i < ring.factors().size(); ++i) {
      auto [u, v] = sr2_reduce(a1.components()[i], a2.components()[i], a3.components()[i]);
      y1.push_back(std::move(u));
      y2.push_back(std::move(v));
    }
    return {assemble(ring, std::move(y1)), assemble(ring, std::move(y2))};
  }
  std::vector<RingElement> triple{a1, a2, a3};
  auto x = unimodular_witness(triple);
  if (!x) fail(ErrorCode::NotUnimodular, "a1R + a2R + a3R != R");
  if (!jacobson_member(a1)) return {zero(ring), sr1_quotient_lift(a1, a2, a3)};
  // a1 + a3 x3 u^-1 + a2 x2 u^-1 = 1 + a1 with u = 1 - a1 x1
  auto u = one(ring) - a1 * (*x)[0];
  return {(*x)[2] * inverse(u), zero(ring)};
}

struct CompletionStep {
  std::size_t size = 0;
  std::string rule;
  std::vector<RingElement> coefficients;
  std::optional<RingElement> shift;
};

/// Square matrix with prescribed first row and determinant.
struct CompletionCertificate {
  RingMatrix A;
  std::vector<RingElement> first_row;
  RingElement det_target;
  RingElement det_value;
  std::vector<CompletionStep> steps;
};

namespace detail {

/// a_i = d*q_i and sum x_i a_i = d.
inline RingMatrix complete_inductive(const std::vector<RingElement>& a, const RingElement& d,
                                     const std::vector<RingElement>& q,
                                     const std::vector<RingElement>& x,
                                     std::vector<CompletionStep>& steps) {
  const auto& ring = d.ring();
  const std::size_t n = a.size();
  if (n == 2) {
    steps.push_back({2, "base", x, std::nullopt});
    return RingMatrix(ring, 2, 2, {a[0], a[1], -x[1], x[0]});
  }
  RingElement c = -one(ring);
  for (std::size_t i = 0; i < n; ++i) c = c + x[i] * q[i];
  const RingElement w = q[n - 1] * x[n - 1] - c;

  std::optional<std::size_t> outside;
  for (std::size_t i = 0; i + 2 < n && !outside; ++i) {
    if (!jacobson_member(q[i])) outside = i;
  }

  if (outside) {
    // (q_1..q_(n-1), w) is unimodular; fold the heads into h and lift
    RingElement h = zero(ring);
    for (std::size_t i = 0; i + 2 < n; ++i) h = h + x[i] * q[i];
    if (jacobson_member(h)) h = h + q[*outside];
    RingElement z = sr1_quotient_lift(h, q[n - 2], w);
    std::vector<RingElement> a2(a.begin(), a.end() - 1), q2(q.begin(), q.end() - 1);
    a2[n - 2] = a2[n - 2] + a[n - 1] * x[n - 1] * z;
    q2[n - 2] = q2[n - 2] + w * z;
    auto x2 = unimodular_witness(q2);
    if (!x2) fail(ErrorCode::InternalError, "lifted row is not unimodular");
    steps.push_back({n, "lift", x, z});
    RingMatrix D = complete_inductive(a2, d, q2, *x2, steps);
    RingMatrix M(ring, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) M.at(i, j) = D.at(i, j);
    }
    M.at(0, n - 1) = a[n - 1];
    M.at(n - 1, n - 1) = one(ring);
    RingMatrix E = RingMatrix::identity(ring, n);
    E.at(n - 1, n - 2) = -(x[n - 1] * z);
    return M * E;
  }

  std::vector<RingElement> a2 = a, q2 = q, x2 = x;
  RingMatrix F = RingMatrix::identity(ring, n);
  if (!jacobson_member(q[n - 2])) {
    a2[0] = a[0] + a[n - 2];
    q2[0] = q[0] + q[n - 2];
    x2[n - 2] = x[n - 2] - x[0];
    F.at(n - 2, 0) = -one(ring);
    steps.push_back({n, "shift-first", x, std::nullopt});
  } else {
    // w = 1 - (element of J) is a unit here
    a2[0] = a[0] + a[n - 1] * x[n - 1];
    q2[0] = q[0] + w;
    x2[n - 1] = x[n - 1] - x[0] * x[n - 1];
    F.at(n - 1, 0) = -x[n - 1];
    steps.push_back({n, "shift-last", x, std::nullopt});
  }
  return complete_inductive(a2, d, q2, x2, steps) * F;
}

inline CompletionCertificate complete_leaf(const std::vector<RingElement>& a, const RingElement& d) {
  const auto& ring = d.ring();
  const std::size_t n = a.size();
  CompletionCertificate cert;
  cert.first_row = a;
  cert.det_target = d;
  auto gen = ideal_generator(a);
  std::optional<RingElement> t;
  for (const auto& ai : a) {
    if (!divides(d, ai)) fail(ErrorCode::NotPrincipal, "d does not divide every entry");
  }
  t = try_divide(d, gen.generator);
  if (!t) fail(ErrorCode::NotPrincipal, "d is not in the ideal generated by the row");
  std::vector<RingElement> x;
  for (const auto& cf : gen.coefficients) x.push_back(cf * *t);
  if (d.is_zero()) {
    cert.A = RingMatrix(ring, n, n);
    for (std::size_t i = 1; i < n; ++i) cert.A.at(i, i) = one(ring);
    cert.steps.push_back({n, "zero", x, std::nullopt});
  } else {
    std::vector<RingElement> q;
    for (const auto& ai : a) q.push_back(divide_exact(ai, d));
    cert.A = complete_inductive(a, d, q, x, cert.steps);
  }
  cert.det_value = determinant(cert.A);
  return cert;
}

}  // namespace detail

/// n x n matrix with first row a and determinant d, for a1R + ... + anR = dR.
inline CompletionCertificate complete_row(const std::vector<RingElement>& a, const RingElement& d) {
  if (a.size() < 2) fail(ErrorCode::PreconditionFailed, "row must have at least two entries");
  for (const auto& ai : a) detail::require_same(ai, d);
  const auto& ring = d.ring();
  if (ring.is_product()) {
    CompletionCertificate cert;
    cert.first_row = a;
    cert.det_target = d;
    std::vector<RingMatrix> parts;
    for (std::size_t k = 0; k < ring.factors().size(); ++k) {
      std::vector<RingElement> ak;
      for (const auto& ai : a) ak.push_back(ai.components()[k]);
      auto sub = complete_row(ak, d.components()[k]);
      parts.push_back(sub.A);
      for (auto& s : sub.steps) cert.steps.push_back(std::move(s));
    }
    cert.A = assemble(ring, parts);
    cert.det_value = determinant(cert.A);
    return cert;
  }
  if (!ring.is_euclidean_domain() && !ring.is_modular()) {
    fail(ErrorCode::UnsupportedRing, "complete_row needs Z, Z/n, GF(p)[x] or a product of them");
  }
  auto cert = detail::complete_leaf(a, d);
  if (!(cert.det_value == d)) fail(ErrorCode::InternalError, "completion has the wrong determinant");
  return cert;
}

/// Completion with determinant an idempotent e of the row's ideal. Over Z/n
/// the ring splits as Z/n1 x Z/n2 with e = (1, 0); the row is completed with
/// determinant 1 over Z/n1 and the lower rows vanish over Z/n2.
inline CompletionCertificate idempotent_complete(const std::vector<RingElement>& a,
                                                 const RingElement& e) {
  if (a.size() < 2) fail(ErrorCode::PreconditionFailed, "row must have at least two entries");
  for (const auto& ai : a) detail::require_same(ai, e);
  const auto& ring = e.ring();
  const std::size_t n = a.size();
  if (!(e * e == e)) fail(ErrorCode::NotIdempotent, "e*e != e");
  if (!divides(ideal_generator(a).generator, e)) fail(ErrorCode::NotInIdeal, "e is not in the row's ideal");

  CompletionCertificate cert;
  cert.first_row = a;
  cert.det_target = e;
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PolyOverPrimeField: {
      if (e == one(ring)) return complete_row(a, e);
      cert.A = RingMatrix(ring, n, n);
      for (std::size_t j = 0; j < n; ++j) cert.A.at(0, j) = a[j];
      break;
    }
    case RingKind::Modular: {
      const Integer& modulus = ring.modulus();
      Integer n2 = integer::gcd(e.value(), modulus);
      Integer n1 = modulus / n2;
      cert.A = RingMatrix(ring, n, n);
      for (std::size_t j = 0; j < n; ++j) cert.A.at(0, j) = a[j];
      if (n1 == 1) break;
      if (n2 == 1) return complete_row(a, e);
      auto corner = RingDescriptor::modular(n1);
      std::vector<RingElement> ac;
      for (const auto& ai : a) ac.emplace_back(corner, ai.value());
      auto sub = complete_row(ac, one(corner));
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) cert.A.at(i, j) = RingElement(ring, sub.A.at(i, j).value()) * e;
      }
      cert.steps = std::move(sub.steps);
      break;
    }
    case RingKind::Product: {
      std::vector<RingMatrix> parts;
      for (std::size_t k = 0; k < ring.factors().size(); ++k) {
        std::vector<RingElement> ak;
        for (const auto& ai : a) ak.push_back(ai.components()[k]);
        auto sub = idempotent_complete(ak, e.components()[k]);
        parts.push_back(sub.A);
        for (auto& s : sub.steps) cert.steps.push_back(std::move(s));
      }
      cert.A = assemble(ring, parts);
      break;
    }
    default: fail(ErrorCode::UnsupportedRing, "idempotent_complete needs Z/n or a product");
  }
  cert.det_value = determinant(cert.A);
  if (!(cert.det_value == e)) fail(ErrorCode::InternalError, "completion has the wrong determinant");
  return cert;
}

inline VerificationReport verify_completion(const CompletionCertificate& cert) {
  VerificationReport report;
  const auto& A = cert.A;
  if (!A.square() || A.rows() != cert.first_row.size() || A.rows() == 0) {
    report.fail_clause("shape");
    return report;
  }
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (!(A.at(0, j) == cert.first_row[j])) {
      report.fail_clause("first row");
      break;
    }
  }
  auto det = determinant(A);
  if (!(det == cert.det_value)) report.fail_clause("det(A) = det_value");
  if (!(det == cert.det_target)) report.fail_clause("det(A) = det_target");
  return report;
}

}  // namespace edr
