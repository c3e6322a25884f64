#pragma once

#include "edr/adequate.hpp"
#include "edr/error.hpp"
#include "edr/matrix.hpp"
#include "edr/ring.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edr {

/// P * A * Q == D, D diagonal with d_ii | d_(i+1)(i+1), detP/detQ units.
struct ReductionCertificate {
  RingMatrix P, D, Q;
  RingElement detP, detQ;
};

struct HermiteRow {
  RingElement d;
  RingMatrix U;
};

/// (a b) * U == (d 0) with det(U) == 1.
inline HermiteRow hermite_row(const RingElement& a, const RingElement& b) {
  auto bz = gcd_bezout(a, b);
  const auto& ring = a.ring();
  RingMatrix U(ring, 2, 2, {bz.x, -bz.b1, bz.y, bz.a1});
  return {bz.g, std::move(U)};
}

namespace detail {

inline RingMatrix mat2(const RingElement& a, const RingElement& b, const RingElement& c,
                       const RingElement& d) {
  return RingMatrix(a.ring(), 2, 2, {a, b, c, d});
}

inline RingElement det2(const RingMatrix& m) {
  return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

/// Scales row 1 of P and D so that d_22 becomes its canonical associate.
inline void normalize_second(ReductionCertificate& cert) {
  auto assoc = canonical_associate(cert.D.at(1, 1));
  auto inv = inverse(assoc.unit);
  for (std::size_t j = 0; j < 2; ++j) cert.P.at(1, j) = cert.P.at(1, j) * inv;
  cert.D.at(1, 1) = assoc.normal;
  cert.detP = cert.detP * inv;
}

inline AdequateSplit split_for_reduction(const RingElement& x, const RingElement& y) {
  if (x.ring().is_euclidean_domain()) return adequate_split(x, y);
  if (x.ring().is_modular()) return pi_adequate_split_zn(x, y);
  fail(ErrorCode::UnsupportedRing, "no adequate split over " + x.ring().to_string());
}

enum class KaplanskyBranch { CToA, AToC };

inline ReductionCertificate kaplansky_leaf(const RingElement& a, const RingElement& b,
                                           const RingElement& c, KaplanskyBranch branch) {
  const auto& ring = a.ring();
  const auto O = zero(ring), I = one(ring);
  ReductionCertificate cert;
  if (a.is_zero()) {
    // bR + cR = R
    auto bz = gcd_bezout(b, c);
    auto inv = inverse(bz.g);
    auto p = bz.x * inv, q = bz.y * inv;
    cert.P = mat2(O, I, I, O);
    cert.Q = mat2(p, -c, q, b);
    cert.D = mat2(I, O, O, O);
    cert.detP = -I;
    cert.detQ = I;
    return cert;
  }
  if (c.is_zero()) {
    // aR + bR = R
    auto bz = gcd_bezout(a, b);
    auto inv = inverse(bz.g);
    auto p = bz.x * inv, q = bz.y * inv;
    cert.P = mat2(p, q, -b, a);
    cert.Q = mat2(I, -(q * c), O, I);
    cert.D = mat2(I, O, O, a * c);
    cert.detP = I;
    cert.detQ = I;
    normalize_second(cert);
    return cert;
  }
  if (branch == KaplanskyBranch::CToA) {
    // c^m = r*s adequate to a gives (a + b*r)R + c*r*R = R
    auto r = split_for_reduction(c, a).r;
    auto bz = gcd_bezout(a + b * r, c * r);
    auto inv = inverse(bz.g);
    auto x = bz.x * inv, y = bz.y * inv;
    cert.P = mat2(I, O, -(b * x + c * y), I) * mat2(I, r, O, I);
    cert.Q = mat2(x, -(c * r), y, a + b * r);
    cert.D = mat2(I, O, O, c * a);
    cert.detP = I;
    cert.detQ = I;
  } else {
    // a^m = r*s adequate to c gives (b*r + c)R + a*r*R = R
    auto r = split_for_reduction(a, c).r;
    auto bz = gcd_bezout(a * r, b * r + c);
    auto inv = inverse(bz.g);
    auto x = bz.x * inv, y = bz.y * inv;
    cert.P = mat2(x, y, -(b * r + c), a * r);
    cert.Q = mat2(r, I, I, O) * mat2(I, -(x * a + y * b), O, I);
    cert.D = mat2(I, O, O, -(a * c));
    cert.detP = I;
    cert.detQ = -I;
  }
  normalize_second(cert);
  return cert;
}

}  // namespace detail

/// Diagonal reduction of [[a, 0], [b, c]] with aR + bR + cR = R to
/// diag(1, ac) up to a canonical associate.
inline ReductionCertificate kaplansky_2x2(
    const RingElement& a, const RingElement& b, const RingElement& c,
    detail::KaplanskyBranch branch = detail::KaplanskyBranch::CToA) {
  detail::require_same(a, b);
  detail::require_same(a, c);
  const auto& ring = a.ring();
  if (!ring.supports_bezout()) fail(ErrorCode::UnsupportedRing, "no Bezout arithmetic over " + ring.to_string());
  std::vector<RingElement> triple{a, b, c};
  if (!generates_unit_ideal(triple)) fail(ErrorCode::NotUnimodular, "aR + bR + cR != R");
  if (ring.is_product()) {
    std::vector<ReductionCertificate> parts;
    for (std::size_t i = 0; i < ring.factors().size(); ++i) {
      parts.push_back(kaplansky_2x2(a.components()[i], b.components()[i], c.components()[i], branch));
    }
    auto gather = [&](auto member) {
      std::vector<RingMatrix> ms;
      for (const auto& p : parts) ms.push_back(p.*member);
      return assemble(ring, ms);
    };
    std::vector<RingElement> dp, dq;
    for (const auto& p : parts) {
      dp.push_back(p.detP);
      dq.push_back(p.detQ);
    }
    return {gather(&ReductionCertificate::P), gather(&ReductionCertificate::D),
            gather(&ReductionCertificate::Q), assemble(ring, dp), assemble(ring, dq)};
  }
  return detail::kaplansky_leaf(a, b, c, branch);
}

namespace detail {

/// Working state with the invariant W == P * A * Q.
class Reducer {
 public:
  explicit Reducer(const RingMatrix& a)
      : ring_(a.ring()),
        W_(a),
        P_(RingMatrix::identity(ring_, a.rows())),
        Q_(RingMatrix::identity(ring_, a.cols())),
        detP_(one(ring_)),
        detQ_(one(ring_)) {}

  ReductionCertificate run() {
    const std::size_t r = std::min(W_.rows(), W_.cols());
    std::size_t rank_bound = r;
    for (std::size_t t = 0; t < r; ++t) {
      if (!clear_cross(t)) {
        rank_bound = t;
        break;
      }
    }
    for (std::size_t i = 0; i < rank_bound; ++i) {
      for (std::size_t j = i + 1; j < rank_bound; ++j) {
        if (!divides(W_.at(i, i), W_.at(j, j))) fix_pair(i, j);
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      auto assoc = canonical_associate(W_.at(i, i));
      if (assoc.unit == one(ring_)) continue;
      scale_row(i, inverse(assoc.unit));
    }
    return {P_, W_, Q_, detP_, detQ_};
  }

 private:
  /// Smaller is closer to a unit.
  static Integer size(const RingElement& e) {
    switch (e.ring().kind()) {
      case RingKind::Integers: return abs(e.value());
      case RingKind::Modular: return integer::gcd(e.value(), e.ring().modulus());
      case RingKind::PolyOverPrimeField: return Integer(static_cast<long>(e.coeffs().size()));
      default: fail(ErrorCode::UnsupportedRing, "diagonal_reduce does not support " + e.ring().to_string());
    }
  }

  /// Clears row t and column t outside the pivot. Returns false when the
  /// trailing block is zero.
  bool clear_cross(std::size_t t) {
    while (true) {
      std::size_t pi = 0, pj = 0;
      bool found = false;
      Integer best;
      for (std::size_t i = t; i < W_.rows(); ++i) {
        for (std::size_t j = t; j < W_.cols(); ++j) {
          if (W_.at(i, j).is_zero()) continue;
          Integer s = size(W_.at(i, j));
          if (!found || s < best) {
            best = s;
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      if (!found) return false;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < W_.rows(); ++i) {
        if (W_.at(i, t).is_zero()) continue;
        if (auto q = try_divide(W_.at(i, t), W_.at(t, t))) {
          add_row(i, t, -*q);
        } else {
          auto bz = gcd_bezout(W_.at(t, t), W_.at(i, t));
          row_op(t, i, mat2(bz.x, bz.y, -bz.b1, bz.a1));
        }
      }
      for (std::size_t j = t + 1; j < W_.cols(); ++j) {
        if (W_.at(t, j).is_zero()) continue;
        if (auto q = try_divide(W_.at(t, j), W_.at(t, t))) {
          add_col(j, t, -*q);
        } else {
          auto h = hermite_row(W_.at(t, t), W_.at(t, j));
          col_op(t, j, h.U);
          clean = false;  // column t changed, rows below may be dirty again
        }
      }
      if (clean) return true;
      bool dirty = false;
      for (std::size_t i = t + 1; i < W_.rows() && !dirty; ++i) dirty = !W_.at(i, t).is_zero();
      if (!dirty) return true;
    }
  }

  /// Makes d_i | d_j: [[a,0],[0,c]] -> [[a,0],[a,c]] -> diag(g, g*a'c').
  void fix_pair(std::size_t i, std::size_t j) {
    const auto a = W_.at(i, i), c = W_.at(j, j);
    auto bz = gcd_bezout(a, c);
    auto k = kaplansky_2x2(bz.a1, bz.a1, bz.b1);
    const auto O = zero(ring_), I = one(ring_);
    row_op(i, j, k.P * mat2(I, O, I, I), k.detP);
    col_op(i, j, k.Q, k.detQ);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < W_.cols(); ++j) std::swap(W_.at(a, j), W_.at(b, j));
    for (std::size_t j = 0; j < P_.cols(); ++j) std::swap(P_.at(a, j), P_.at(b, j));
    detP_ = -detP_;
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < W_.rows(); ++i) std::swap(W_.at(i, a), W_.at(i, b));
    for (std::size_t i = 0; i < Q_.rows(); ++i) std::swap(Q_.at(i, a), Q_.at(i, b));
    detQ_ = -detQ_;
  }

  // row_i += f * row_k
  void add_row(std::size_t i, std::size_t k, const RingElement& f) {
    for (std::size_t j = 0; j < W_.cols(); ++j) W_.at(i, j) = W_.at(i, j) + f * W_.at(k, j);
    for (std::size_t j = 0; j < P_.cols(); ++j) P_.at(i, j) = P_.at(i, j) + f * P_.at(k, j);
  }

  // col_j += f * col_k
  void add_col(std::size_t j, std::size_t k, const RingElement& f) {
    for (std::size_t i = 0; i < W_.rows(); ++i) W_.at(i, j) = W_.at(i, j) + f * W_.at(i, k);
    for (std::size_t i = 0; i < Q_.rows(); ++i) Q_.at(i, j) = Q_.at(i, j) + f * Q_.at(i, k);
  }

  void scale_row(std::size_t i, const RingElement& u) {
    for (std::size_t j = 0; j < W_.cols(); ++j) W_.at(i, j) = W_.at(i, j) * u;
    for (std::size_t j = 0; j < P_.cols(); ++j) P_.at(i, j) = P_.at(i, j) * u;
    detP_ = detP_ * u;
  }

  static void rows2(RingMatrix& m, std::size_t a, std::size_t b, const RingMatrix& M) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto x = m.at(a, j), y = m.at(b, j);
      m.at(a, j) = M.at(0, 0) * x + M.at(0, 1) * y;
      m.at(b, j) = M.at(1, 0) * x + M.at(1, 1) * y;
    }
  }

  static void cols2(RingMatrix& m, std::size_t a, std::size_t b, const RingMatrix& M) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto x = m.at(i, a), y = m.at(i, b);
      m.at(i, a) = x * M.at(0, 0) + y * M.at(1, 0);
      m.at(i, b) = x * M.at(0, 1) + y * M.at(1, 1);
    }
  }

  void row_op(std::size_t a, std::size_t b, const RingMatrix& M) { row_op(a, b, M, det2(M)); }
  void row_op(std::size_t a, std::size_t b, const RingMatrix& M, const RingElement& det) {
    rows2(W_, a, b, M);
    rows2(P_, a, b, M);
    detP_ = detP_ * det;
  }

  void col_op(std::size_t a, std::size_t b, const RingMatrix& M) { col_op(a, b, M, det2(M)); }
  void col_op(std::size_t a, std::size_t b, const RingMatrix& M, const RingElement& det) {
    cols2(W_, a, b, M);
    cols2(Q_, a, b, M);
    detQ_ = detQ_ * det;
  }

  RingDescriptor ring_;
  RingMatrix W_, P_, Q_;
  RingElement detP_, detQ_;
};

}  // namespace detail

/// Certificate P*A*Q = D with D diagonal, divisibility chain, canonical
/// diagonal entries. Z, Z/n, GF(p)[x] and products of those.
inline ReductionCertificate diagonal_reduce(const RingMatrix& a) {
  const auto& ring = a.ring();
  if (a.rows() == 0 || a.cols() == 0) fail(ErrorCode::PreconditionFailed, "empty matrix");
  if (ring.is_product()) {
    std::vector<ReductionCertificate> parts;
    for (std::size_t i = 0; i < ring.factors().size(); ++i) parts.push_back(diagonal_reduce(project(a, i)));
    std::vector<RingMatrix> P, D, Q;
    std::vector<RingElement> dp, dq;
    for (auto& c : parts) {
      P.push_back(c.P);
      D.push_back(c.D);
      Q.push_back(c.Q);
      dp.push_back(c.detP);
      dq.push_back(c.detQ);
    }
    return {assemble(ring, P), assemble(ring, D), assemble(ring, Q), assemble(ring, dp),
            assemble(ring, dq)};
  }
  if (!ring.supports_bezout()) fail(ErrorCode::UnsupportedRing, "diagonal_reduce needs a Bezout ring");
  return detail::Reducer(a).run();
}

struct VerificationReport {
  bool holds = true;
  std::vector<std::string> failures;

  void fail_clause(std::string clause) {
    holds = false;
    failures.push_back(std::move(clause));
  }
  bool has(std::string_view clause) const {
    for (const auto& f : failures) {
      if (f == clause) return true;
    }
    return false;
  }
};

inline VerificationReport verify_reduction(const RingMatrix& a, const ReductionCertificate& cert) {
  VerificationReport report;
  const auto& ring = a.ring();
  auto same_ring = [&](const RingMatrix& m) { return m.ring() == ring; };
  if (!same_ring(cert.P) || !same_ring(cert.D) || !same_ring(cert.Q) ||
      !(cert.detP.ring() == ring) || !(cert.detQ.ring() == ring) || cert.P.rows() != a.rows() ||
      !cert.P.square() || cert.Q.rows() != a.cols() || !cert.Q.square() ||
      cert.D.rows() != a.rows() || cert.D.cols() != a.cols()) {
    report.fail_clause("shape");
    return report;
  }
  if (!(cert.P * a * cert.Q == cert.D)) report.fail_clause("PAQ=D");
  auto dp = determinant(cert.P);
  auto dq = determinant(cert.Q);
  if (!unit(dp)) report.fail_clause("det(P) unit");
  if (!unit(dq)) report.fail_clause("det(Q) unit");
  if (!(dp == cert.detP)) report.fail_clause("detP matches");
  if (!(dq == cert.detQ)) report.fail_clause("detQ matches");
  if (!is_diagonal(cert.D)) report.fail_clause("D diagonal");
  const std::size_t r = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i + 1 < r; ++i) {
    if (!divides(cert.D.at(i, i), cert.D.at(i + 1, i + 1))) {
      report.fail_clause("divisibility chain");
      break;
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (!is_canonical(cert.D.at(i, i))) {
      report.fail_clause("canonical associates");
      break;
    }
  }
  return report;
}

namespace detail {

/// Laplace expansion along the first row; kept separate from the subset
/// determinant so the oracle does not share code with the reducer's checks.
inline RingElement laplace(const RingMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  RingElement acc = zero(m.ring());
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) cols.push_back(k);
    }
    auto term = m.at(0, j) * laplace(submatrix(m, rows, cols));
    acc = (j % 2) ? acc - term : acc + term;
  }
  return acc;
}

inline RingElement oracle_gcd(const RingElement& a, const RingElement& b) {
  const auto& ring = a.ring();
  if (ring.is_integers()) return RingElement(ring, integer::gcd(a.value(), b.value()));
  return RingElement::polynomial(ring, gf_poly::xgcd(a.coeffs(), b.coeffs(), ring.prime()).g);
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// D_k = canonical gcd of all k x k minors, k = 1..min(m, n).
inline std::vector<RingElement> determinantal_divisors(const RingMatrix& a) {
  const auto& ring = a.ring();
  if (!ring.is_euclidean_domain()) {
    fail(ErrorCode::UnsupportedRing, "determinantal divisors need Z or GF(p)[x]");
  }
  const std::size_t r = std::min(a.rows(), a.cols());
  if (r > 6) fail(ErrorCode::ScaleExceeded, "determinantal divisors limited to min(m, n) <= 6");
  std::vector<RingElement> out;
  for (std::size_t k = 1; k <= r; ++k) {
    RingElement g = zero(ring);
    detail::for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      detail::for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        g = detail::oracle_gcd(g, detail::laplace(submatrix(a, rows, cols)));
      });
    });
    out.push_back(canonical_associate(g).normal);
  }
  return out;
}

/// d_k = D_k / D_(k-1) with D_0 = 1, zero once D_k vanishes.
inline std::vector<RingElement> elementary_divisors(const std::vector<RingElement>& dets) {
  std::vector<RingElement> out;
  for (std::size_t k = 0; k < dets.size(); ++k) {
    if (dets[k].is_zero()) {
      out.push_back(dets[k]);
      continue;
    }
    out.push_back(k == 0 ? dets[0] : divide_exact(dets[k], dets[k - 1]));
  }
  return out;
}

}  // namespace edr
