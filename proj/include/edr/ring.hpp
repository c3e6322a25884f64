#pragma once

#include "edr/error.hpp"
#include "edr/gf_poly.hpp"
#include "edr/integer.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace edr {

enum class RingKind { Integers, Modular, PolyOverPrimeField, TruncatedSeries, Product };

/// Immutable, structurally compared description of one of the supported
/// commutative rings. Copies share the underlying node.
class RingDescriptor {
 public:
  RingDescriptor() : node_(integers_node()) {}

  static RingDescriptor integers() { return RingDescriptor(); }

  static RingDescriptor modular(const Integer& n) {
    if (n < 2) fail(ErrorCode::InvalidDescriptor, "Z/n requires n >= 2");
    return RingDescriptor(std::make_shared<const Node>(Node{RingKind::Modular, n, 0, {}}));
  }

  static RingDescriptor poly_over_prime_field(const Integer& p) {
    if (!integer::is_probable_prime(p)) {
      fail(ErrorCode::InvalidDescriptor, "GF(p)[x] requires a prime p, got " + p.get_str());
    }
    return RingDescriptor(
        std::make_shared<const Node>(Node{RingKind::PolyOverPrimeField, p, 0, {}}));
  }

  static RingDescriptor truncated_series(std::size_t order) {
    if (order < 1) fail(ErrorCode::InvalidDescriptor, "series order must be >= 1");
    return RingDescriptor(
        std::make_shared<const Node>(Node{RingKind::TruncatedSeries, 0, order, {}}));
  }

  static RingDescriptor product(std::vector<RingDescriptor> factors) {
    if (factors.size() < 2) fail(ErrorCode::InvalidDescriptor, "product needs >= 2 factors");
    return RingDescriptor(std::make_shared<const Node>(
        Node{RingKind::Product, 0, 0, std::move(factors)}));
  }

  RingKind kind() const { return node_->kind; }
  const Integer& modulus() const { return node_->parameter; }
  const Integer& prime() const { return node_->parameter; }
  std::size_t order() const { return node_->order; }
  const std::vector<RingDescriptor>& factors() const { return node_->factors; }

  bool is_integers() const { return kind() == RingKind::Integers; }
  bool is_modular() const { return kind() == RingKind::Modular; }
  bool is_poly() const { return kind() == RingKind::PolyOverPrimeField; }
  bool is_series() const { return kind() == RingKind::TruncatedSeries; }
  bool is_product() const { return kind() == RingKind::Product; }

  /// Integers and GF(p)[x]: the Euclidean domains where gcds are canonical.
  bool is_euclidean_domain() const { return is_integers() || is_poly(); }

  bool is_finite() const {
    if (is_modular()) return true;
    if (!is_product()) return false;
    for (const auto& f : factors()) {
      if (!f.is_finite()) return false;
    }
    return true;
  }

  /// Bezout arithmetic is available everywhere except truncated series.
  bool supports_bezout() const {
    if (is_series()) return false;
    if (!is_product()) return true;
    for (const auto& f : factors()) {
      if (!f.supports_bezout()) return false;
    }
    return true;
  }

  std::string to_string() const {
    switch (kind()) {
      case RingKind::Integers: return "Z";
      case RingKind::Modular: return "Z/" + modulus().get_str();
      case RingKind::PolyOverPrimeField: return "GF(" + prime().get_str() + ")[x]";
      case RingKind::TruncatedSeries: return "Zser" + std::to_string(order());
      case RingKind::Product: {
        std::string s = "prod(";
        for (std::size_t i = 0; i < factors().size(); ++i) {
          if (i) s += ',';
          s += factors()[i].to_string();
        }
        return s + ")";
      }
    }
    return "?";
  }

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.node_->parameter != b.node_->parameter ||
        a.order() != b.order()) {
      return false;
    }
    return a.factors() == b.factors();
  }

 private:
  struct Node {
    RingKind kind;
    Integer parameter;  // modulus or prime
    std::size_t order;  // truncation order
    std::vector<RingDescriptor> factors;
  };

  explicit RingDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static const std::shared_ptr<const Node>& integers_node() {
    static const auto node =
        std::make_shared<const Node>(Node{RingKind::Integers, 0, 0, {}});
    return node;
  }

  std::shared_ptr<const Node> node_;
};

class RingElement;

struct PolyPayload {
  gf_poly::Coeffs coeffs;
};

/// z0 + c1 x + ... + c_{k-1} x^{k-1} with z0 integral, ci rational.
struct SeriesPayload {
  Integer constant;
  std::vector<Rational> tail;  // exactly k-1 entries
};

struct TuplePayload {
  std::vector<RingElement> parts;
};

/// A value of a ring described by a RingDescriptor, always held in canonical
/// form: residues reduced, polynomial coefficients reduced and trimmed,
/// series tails of fixed length.
class RingElement {
 public:
  using Payload = std::variant<Integer, PolyPayload, SeriesPayload, TuplePayload>;

  RingElement() : payload_(Integer(0)) {}

  /// Image of an integer under the canonical map Z -> R.
  RingElement(RingDescriptor ring, const Integer& value) : ring_(std::move(ring)) {
    switch (ring_.kind()) {
      case RingKind::Integers: payload_ = value; break;
      case RingKind::Modular: payload_ = integer::mod(value, ring_.modulus()); break;
      case RingKind::PolyOverPrimeField:
        payload_ = PolyPayload{gf_poly::constant(value, ring_.prime())};
        break;
      case RingKind::TruncatedSeries:
        payload_ = SeriesPayload{value, std::vector<Rational>(ring_.order() - 1)};
        break;
      case RingKind::Product: {
        TuplePayload t;
        for (const auto& f : ring_.factors()) t.parts.emplace_back(f, value);
        payload_ = std::move(t);
        break;
      }
    }
  }

  static RingElement polynomial(RingDescriptor ring, gf_poly::Coeffs coeffs) {
    if (!ring.is_poly()) fail(ErrorCode::DescriptorMismatch, "not a polynomial ring");
    Integer p = ring.prime();
    return RingElement(std::move(ring), PolyPayload{gf_poly::reduce(std::move(coeffs), p)}, Raw{});
  }

  static RingElement series(RingDescriptor ring, Integer constant, std::vector<Rational> tail) {
    if (!ring.is_series()) fail(ErrorCode::DescriptorMismatch, "not a series ring");
    if (tail.size() > ring.order() - 1) {
      fail(ErrorCode::PreconditionFailed, "series literal longer than truncation order");
    }
    tail.resize(ring.order() - 1);
    for (auto& c : tail) c.canonicalize();
    return RingElement(std::move(ring), SeriesPayload{std::move(constant), std::move(tail)}, Raw{});
  }

  static RingElement tuple(RingDescriptor ring, std::vector<RingElement> parts) {
    if (!ring.is_product() || parts.size() != ring.factors().size()) {
      fail(ErrorCode::DescriptorMismatch, "tuple does not match product ring");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!(parts[i].ring() == ring.factors()[i])) {
        fail(ErrorCode::DescriptorMismatch, "tuple component has the wrong ring");
      }
    }
    return RingElement(std::move(ring), TuplePayload{std::move(parts)}, Raw{});
  }

  const RingDescriptor& ring() const { return ring_; }
  const Payload& payload() const { return payload_; }

  /// Integers: the value. Modular: the residue in [0, n).
  const Integer& value() const { return std::get<Integer>(payload_); }
  const gf_poly::Coeffs& coeffs() const { return std::get<PolyPayload>(payload_).coeffs; }
  const SeriesPayload& series_payload() const { return std::get<SeriesPayload>(payload_); }
  const std::vector<RingElement>& components() const {
    return std::get<TuplePayload>(payload_).parts;
  }

  bool is_zero() const {
    switch (ring_.kind()) {
      case RingKind::Integers:
      case RingKind::Modular: return value() == 0;
      case RingKind::PolyOverPrimeField: return coeffs().empty();
      case RingKind::TruncatedSeries: {
        const auto& s = series_payload();
        if (s.constant != 0) return false;
        for (const auto& c : s.tail) {
          if (c != 0) return false;
        }
        return true;
      }
      case RingKind::Product:
        for (const auto& c : components()) {
          if (!c.is_zero()) return false;
        }
        return true;
    }
    return false;
  }

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  struct Raw {};
  RingElement(RingDescriptor ring, Payload payload, Raw)
      : ring_(std::move(ring)), payload_(std::move(payload)) {}

  friend struct ElementAccess;

  RingDescriptor ring_;
  Payload payload_;
};

inline bool operator==(const PolyPayload& a, const PolyPayload& b) { return a.coeffs == b.coeffs; }
inline bool operator==(const SeriesPayload& a, const SeriesPayload& b) {
  return a.constant == b.constant && a.tail == b.tail;
}
inline bool operator==(const TuplePayload& a, const TuplePayload& b) { return a.parts == b.parts; }

inline bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_ == b.ring_ && a.payload_ == b.payload_;
}

struct ElementAccess {
  static RingElement make(RingDescriptor ring, RingElement::Payload payload) {
    return RingElement(std::move(ring), std::move(payload), RingElement::Raw{});
  }
};

inline RingElement zero(const RingDescriptor& ring) { return RingElement(ring, 0); }
inline RingElement one(const RingDescriptor& ring) { return RingElement(ring, 1); }

namespace detail {

inline void require_same(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) {
    fail(ErrorCode::DescriptorMismatch,
         "operands from " + a.ring().to_string() + " and " + b.ring().to_string());
  }
}

inline std::vector<Rational> series_full(const SeriesPayload& s) {
  std::vector<Rational> out;
  out.reserve(s.tail.size() + 1);
  out.emplace_back(s.constant);
  out.insert(out.end(), s.tail.begin(), s.tail.end());
  return out;
}

inline RingElement series_from_full(const RingDescriptor& ring, std::vector<Rational> full) {
  // The constant term is integral for every value we construct.
  Integer constant = full[0].get_num();
  return RingElement::series(ring, constant, {full.begin() + 1, full.end()});
}

template <class IntOp, class PolyOp, class RatOp>
RingElement combine(const RingElement& a, const RingElement& b, IntOp int_op,
                    PolyOp poly_op, RatOp rat_op) {
  require_same(a, b);
  const auto& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::Modular: return RingElement(ring, int_op(a.value(), b.value()));
    case RingKind::PolyOverPrimeField:
      return RingElement::polynomial(ring, poly_op(a.coeffs(), b.coeffs(), ring.prime()));
    case RingKind::TruncatedSeries: {
      auto fa = series_full(a.series_payload());
      auto fb = series_full(b.series_payload());
      return series_from_full(ring, rat_op(fa, fb));
    }
    case RingKind::Product: {
      std::vector<RingElement> parts;
      for (std::size_t i = 0; i < a.components().size(); ++i) {
        parts.push_back(combine(a.components()[i], b.components()[i], int_op, poly_op, rat_op));
      }
      return RingElement::tuple(ring, std::move(parts));
    }
  }
  fail(ErrorCode::InternalError, "unreachable ring kind");
}

inline std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace detail

inline RingElement add(const RingElement& a, const RingElement& b) {
  return detail::combine(
      a, b, [](const Integer& x, const Integer& y) { return Integer(x + y); },
      [](const auto& x, const auto& y, const Integer& p) { return gf_poly::add(x, y, p); },
      [](std::vector<Rational> x, const std::vector<Rational>& y) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return x;
      });
}

inline RingElement sub(const RingElement& a, const RingElement& b) {
  return detail::combine(
      a, b, [](const Integer& x, const Integer& y) { return Integer(x - y); },
      [](const auto& x, const auto& y, const Integer& p) { return gf_poly::sub(x, y, p); },
      [](std::vector<Rational> x, const std::vector<Rational>& y) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
        return x;
      });
}

inline RingElement mul(const RingElement& a, const RingElement& b) {
  return detail::combine(
      a, b, [](const Integer& x, const Integer& y) { return Integer(x * y); },
      [](const auto& x, const auto& y, const Integer& p) { return gf_poly::mul(x, y, p); },
      [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        return detail::series_mul(x, y);
      });
}

inline RingElement neg(const RingElement& a) { return sub(zero(a.ring()), a); }

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return sub(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
inline RingElement operator-(const RingElement& a) { return neg(a); }

enum class ArithOp { Add, Sub, Mul, Neg };

/// Single entry point for the four ring operations; y is ignored for Neg.
inline RingElement ring_arith(ArithOp op, const RingElement& x,
                              const std::optional<RingElement>& y = std::nullopt) {
  if (op == ArithOp::Neg) return neg(x);
  if (!y) fail(ErrorCode::PreconditionFailed, "binary operation needs two operands");
  switch (op) {
    case ArithOp::Add: return add(x, *y);
    case ArithOp::Sub: return sub(x, *y);
    case ArithOp::Mul: return mul(x, *y);
    case ArithOp::Neg: break;
  }
  return neg(x);
}

inline RingElement pow(const RingElement& base, unsigned long exponent) {
  RingElement result = one(base.ring());
  RingElement b = base;
  while (exponent) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

inline std::optional<RingElement> is_unit(const RingElement& x) {
  const auto& ring = x.ring();
  switch (ring.kind()) {
    case RingKind::Integers:
      if (x.value() == 1 || x.value() == -1) return x;
      return std::nullopt;
    case RingKind::Modular: {
      if (integer::gcd(x.value(), ring.modulus()) != 1) return std::nullopt;
      return RingElement(ring, integer::inverse_mod(x.value(), ring.modulus()));
    }
    case RingKind::PolyOverPrimeField: {
      if (x.coeffs().size() != 1) return std::nullopt;
      return RingElement(ring, integer::inverse_mod(x.coeffs()[0], ring.prime()));
    }
    case RingKind::TruncatedSeries: {
      const auto& s = x.series_payload();
      if (s.constant != 1 && s.constant != -1) return std::nullopt;
      auto f = detail::series_full(s);
      std::vector<Rational> inv(f.size());
      inv[0] = f[0];  // (+-1)^-1 == +-1
      for (std::size_t i = 1; i < f.size(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += f[j] * inv[i - j];
        inv[i] = -acc * f[0];
      }
      return detail::series_from_full(ring, std::move(inv));
    }
    case RingKind::Product: {
      std::vector<RingElement> parts;
      for (const auto& c : x.components()) {
        auto inv = is_unit(c);
        if (!inv) return std::nullopt;
        parts.push_back(std::move(*inv));
      }
      return RingElement::tuple(ring, std::move(parts));
    }
  }
  return std::nullopt;
}

inline bool unit(const RingElement& x) { return is_unit(x).has_value(); }

/// Inverse of a unit; throws PreconditionFailed otherwise.
inline RingElement inverse(const RingElement& x) {
  auto inv = is_unit(x);
  if (!inv) fail(ErrorCode::PreconditionFailed, "element is not a unit");
  return *inv;
}

inline bool jacobson_member(const RingElement& a) {
  const auto& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PolyOverPrimeField: return a.is_zero();
    case RingKind::Modular:
      // rad(n) | a  <=>  no prime of n survives after stripping gcds with a
      return integer::coprime_part(ring.modulus(), a.value()) == 1;
    case RingKind::TruncatedSeries: return a.series_payload().constant == 0;
    case RingKind::Product:
      for (const auto& c : a.components()) {
        if (!jacobson_member(c)) return false;
      }
      return true;
  }
  return false;
}

/// q with b*q == a, or nullopt. Over Z/n the least nonnegative solution is
/// returned. Over truncated series only divisors with nonzero constant term
/// are handled.
inline std::optional<RingElement> try_divide(const RingElement& a, const RingElement& b) {
  detail::require_same(a, b);
  const auto& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Integers:
      if (b.value() == 0) {
        if (a.value() == 0) return zero(ring);
        return std::nullopt;
      }
      if (!integer::divides(b.value(), a.value())) return std::nullopt;
      return RingElement(ring, Integer(a.value() / b.value()));
    case RingKind::Modular: {
      const Integer& n = ring.modulus();
      Integer g = integer::gcd(b.value(), n);
      if (!integer::divides(g, a.value())) return std::nullopt;
      Integer step = n / g;
      if (step == 1) return zero(ring);
      Integer q = integer::mod(Integer(a.value() / g) *
                                   integer::inverse_mod(Integer(b.value() / g), step),
                               step);
      return RingElement(ring, q);
    }
    case RingKind::PolyOverPrimeField: {
      if (b.is_zero()) {
        if (a.is_zero()) return zero(ring);
        return std::nullopt;
      }
      auto [q, r] = gf_poly::divmod(a.coeffs(), b.coeffs(), ring.prime());
      if (!r.empty()) return std::nullopt;
      return RingElement::polynomial(ring, std::move(q));
    }
    case RingKind::TruncatedSeries: {
      if (b.is_zero()) {
        if (a.is_zero()) return zero(ring);
        return std::nullopt;
      }
      const auto& bs = b.series_payload();
      if (bs.constant == 0) {
        fail(ErrorCode::UnsupportedRing, "series division by a radical element");
      }
      if (!integer::divides(bs.constant, a.series_payload().constant)) return std::nullopt;
      auto fa = detail::series_full(a.series_payload());
      auto fb = detail::series_full(bs);
      std::vector<Rational> q(fa.size());
      for (std::size_t i = 0; i < fa.size(); ++i) {
        Rational acc = fa[i];
        for (std::size_t j = 1; j <= i; ++j) acc -= fb[j] * q[i - j];
        q[i] = acc / fb[0];
      }
      return detail::series_from_full(ring, std::move(q));
    }
    case RingKind::Product: {
      std::vector<RingElement> parts;
      for (std::size_t i = 0; i < a.components().size(); ++i) {
        auto q = try_divide(a.components()[i], b.components()[i]);
        if (!q) return std::nullopt;
        parts.push_back(std::move(*q));
      }
      return RingElement::tuple(ring, std::move(parts));
    }
  }
  return std::nullopt;
}

inline bool divides(const RingElement& d, const RingElement& a) {
  return try_divide(a, d).has_value();
}

inline RingElement divide_exact(const RingElement& a, const RingElement& b) {
  auto q = try_divide(a, b);
  if (!q) fail(ErrorCode::NotDivisible, "divisor does not divide the dividend");
  return *q;
}

struct Associate {
  RingElement unit;
  RingElement normal;  // a == unit * normal
};

inline Associate canonical_associate(const RingElement& a) {
  const auto& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Integers:
      if (a.value() < 0) return {RingElement(ring, -1), neg(a)};
      return {one(ring), a};
    case RingKind::Modular: {
      if (a.is_zero()) return {one(ring), a};
      const Integer& n = ring.modulus();
      Integer g = integer::gcd(a.value(), n);
      Integer step = n / g;
      Integer u = integer::shift_to_coprime(Integer(a.value() / g), step, n);
      return {RingElement(ring, u), RingElement(ring, g)};
    }
    case RingKind::PolyOverPrimeField: {
      if (a.is_zero()) return {one(ring), a};
      Integer lead = gf_poly::leading(a.coeffs());
      return {RingElement(ring, lead),
              RingElement::polynomial(ring, gf_poly::monic(a.coeffs(), ring.prime()))};
    }
    case RingKind::TruncatedSeries: {
      const auto& s = a.series_payload();
      auto full = detail::series_full(s);
      std::size_t v = 0;
      while (v < full.size() && full[v] == 0) ++v;
      if (v == full.size()) return {one(ring), a};
      Rational lead = abs(full[v]);
      std::vector<Rational> normal(full.size()), unit(full.size());
      normal[v] = lead;
      for (std::size_t i = v; i < full.size(); ++i) unit[i - v] = full[i] / lead;
      return {detail::series_from_full(ring, std::move(unit)),
              detail::series_from_full(ring, std::move(normal))};
    }
    case RingKind::Product: {
      std::vector<RingElement> units, normals;
      for (const auto& c : a.components()) {
        auto [u, n] = canonical_associate(c);
        units.push_back(std::move(u));
        normals.push_back(std::move(n));
      }
      return {RingElement::tuple(ring, std::move(units)),
              RingElement::tuple(ring, std::move(normals))};
    }
  }
  return {one(ring), a};
}

inline bool is_canonical(const RingElement& a) { return canonical_associate(a).normal == a; }

/// g = x*a + y*b, a = a1*g, b = b1*g, x*a1 + y*b1 = 1.
struct BezoutData {
  RingElement g, x, y, a1, b1;
};

inline BezoutData gcd_bezout(const RingElement& a, const RingElement& b) {
  detail::require_same(a, b);
  const auto& ring = a.ring();
  auto make = [&](const Integer& v) { return RingElement(ring, v); };
  switch (ring.kind()) {
    case RingKind::Integers: {
      if (a.is_zero() && b.is_zero()) return {zero(ring), one(ring), zero(ring), one(ring), zero(ring)};
      auto e = integer::xgcd(a.value(), b.value());
      return {make(e.g), make(e.x), make(e.y), make(Integer(a.value() / e.g)),
              make(Integer(b.value() / e.g))};
    }
    case RingKind::Modular: {
      if (a.is_zero() && b.is_zero()) return {zero(ring), one(ring), zero(ring), one(ring), zero(ring)};
      const Integer& n = ring.modulus();
      Integer g = integer::gcd(integer::gcd(a.value(), b.value()), n);
      Integer step = n / g;
      // Cofactors are defined modulo n/g; shift a1 so that (a1, b1) is
      // unimodular modulo n itself.
      Integer a1 = integer::shift_to_coprime(Integer(a.value() / g), step, n);
      Integer b1 = b.value() / g;
      auto e1 = integer::xgcd(a1, b1);
      auto e2 = integer::xgcd(e1.g, n);
      return {make(g), make(Integer(e2.x * e1.x)), make(Integer(e2.x * e1.y)), make(a1), make(b1)};
    }
    case RingKind::PolyOverPrimeField: {
      const Integer& p = ring.prime();
      if (a.is_zero() && b.is_zero()) return {zero(ring), one(ring), zero(ring), one(ring), zero(ring)};
      auto e = gf_poly::xgcd(a.coeffs(), b.coeffs(), p);
      auto poly = [&](gf_poly::Coeffs c) { return RingElement::polynomial(ring, std::move(c)); };
      auto a1 = gf_poly::divmod(a.coeffs(), e.g, p).first;
      auto b1 = gf_poly::divmod(b.coeffs(), e.g, p).first;
      return {poly(e.g), poly(e.x), poly(e.y), poly(a1), poly(b1)};
    }
    case RingKind::TruncatedSeries:
      fail(ErrorCode::UnsupportedRing, "gcd_bezout is not available over truncated series");
    case RingKind::Product: {
      std::vector<RingElement> g, x, y, a1, b1;
      for (std::size_t i = 0; i < a.components().size(); ++i) {
        auto d = gcd_bezout(a.components()[i], b.components()[i]);
        g.push_back(d.g);
        x.push_back(d.x);
        y.push_back(d.y);
        a1.push_back(d.a1);
        b1.push_back(d.b1);
      }
      auto t = [&](std::vector<RingElement> v) { return RingElement::tuple(ring, std::move(v)); };
      return {t(g), t(x), t(y), t(a1), t(b1)};
    }
  }
  fail(ErrorCode::InternalError, "unreachable ring kind");
}

/// aR + bR == R.
inline bool comaximal(const RingElement& a, const RingElement& b) {
  return unit(gcd_bezout(a, b).g);
}

/// A generator g of the ideal spanned by `elements`, with coefficients
/// expressing it: sum coeffs[i]*elements[i] == g.
struct IdealGenerator {
  RingElement generator;
  std::vector<RingElement> coefficients;
};

inline IdealGenerator ideal_generator(std::span<const RingElement> elements) {
  if (elements.empty()) fail(ErrorCode::PreconditionFailed, "empty generator list");
  const auto& ring = elements[0].ring();
  IdealGenerator out{elements[0], {one(ring)}};
  for (std::size_t i = 1; i < elements.size(); ++i) {
    auto d = gcd_bezout(out.generator, elements[i]);
    for (auto& c : out.coefficients) c = c * d.x;
    out.coefficients.push_back(d.y);
    out.generator = d.g;
  }
  return out;
}

/// Coefficients writing 1 as a combination of `elements`, or nullopt when the
/// elements do not generate the unit ideal.
inline std::optional<std::vector<RingElement>> unimodular_witness(
    std::span<const RingElement> elements) {
  auto gen = ideal_generator(elements);
  auto inv = is_unit(gen.generator);
  if (!inv) return std::nullopt;
  for (auto& c : gen.coefficients) c = c * *inv;
  return std::move(gen.coefficients);
}

inline bool generates_unit_ideal(std::span<const RingElement> elements) {
  return unit(ideal_generator(elements).generator);
}

}  // namespace edr
