#pragma once

#include "edr/error.hpp"
#include "edr/integer.hpp"
#include "edr/ring.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edr {

enum class Predicate { StableRange1, Clean, PmRing, JStableCondition };

constexpr std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::StableRange1: return "StableRange1";
    case Predicate::Clean: return "Clean";
    case Predicate::PmRing: return "PmRing";
    case Predicate::JStableCondition: return "JStableCondition";
  }
  return "?";
}

inline std::optional<Predicate> predicate_from_string(std::string_view s) {
  for (auto p : {Predicate::StableRange1, Predicate::Clean, Predicate::PmRing,
                 Predicate::JStableCondition}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

/// Outcome of an exhaustive (or bounded) scan. On failure `witness` holds the
/// universally quantified tuple for which no existential choice works:
///   StableRange1      (a, b)     aR + bR = R, a + b*y never a unit
///   Clean             (a)        a - e never a unit for idempotent e
///   PmRing            (a, b)     a + b = 1, (1 - a*x)(1 - b*y) never 0
///   JStableCondition  (a, b, c)  a not in J, bR + cR = R, aR + (b + c*y)R never R
struct PredicateReport {
  Predicate predicate = Predicate::StableRange1;
  bool holds = true;
  std::optional<std::vector<RingElement>> witness;
  std::uint64_t elements_scanned = 0;
  std::string note;
};

/// Dense index model of a finite product of rings Z/n_i, elements encoded in
/// mixed radix. Arithmetic is on small machine integers: the ring has at most
/// 10^4 elements.
class FiniteRing {
 public:
  static constexpr long kMaxElements = 10000;

  explicit FiniteRing(const RingDescriptor& ring) : ring_(ring) {
    collect(ring);
    long stride = 1;
    for (std::size_t k = moduli_.size(); k-- > 0;) {
      strides_[k] = stride;
      stride = moduli_[k] > kMaxElements / stride ? kMaxElements + 1 : stride * moduli_[k];
    }
    long size = 1;
    for (long m : moduli_) {
      if (size > kMaxElements / m) fail(ErrorCode::ScaleExceeded, "finite checks limited to 10^4 elements");
      size *= m;
    }
    size_ = size;
    for (long m : moduli_) {
      long rad = 1;
      for (const auto& [p, k] : integer::factorize(Integer(m))) rad *= p.get_si();
      radicals_.push_back(rad);
    }
    gcds_.resize(static_cast<std::size_t>(size_) * moduli_.size());
    unit_.resize(size_);
    jacobson_.resize(size_);
    for (long x = 0; x < size_; ++x) {
      bool u = true, j = true;
      for (std::size_t k = 0; k < moduli_.size(); ++k) {
        long c = component(x, k);
        long g = std::gcd(c, moduli_[k]);
        gcds_[x * moduli_.size() + k] = g;
        u = u && g == 1;
        j = j && c % radicals_[k] == 0;
      }
      unit_[x] = u;
      jacobson_[x] = j;
    }
    for (long x = 0; x < size_; ++x) {
      if (mul(x, x) == x) idempotents_.push_back(x);
    }
  }

  long size() const { return size_; }
  long zero() const { return 0; }
  long one() const { return encode_all(1); }

  long component(long x, std::size_t k) const { return (x / strides_[k]) % moduli_[k]; }

  long add(long x, long y) const { return combine(x, y, [](long a, long b, long m) { return (a + b) % m; }); }
  long sub(long x, long y) const { return combine(x, y, [](long a, long b, long m) { return (a - b + m) % m; }); }
  long mul(long x, long y) const { return combine(x, y, [](long a, long b, long m) { return (a * b) % m; }); }

  bool is_unit(long x) const { return unit_[x]; }
  bool in_jacobson(long x) const { return jacobson_[x]; }
  const std::vector<long>& idempotents() const { return idempotents_; }

  /// xR + yR = R via componentwise gcd with the modulus.
  bool comaximal(long x, long y) const {
    for (std::size_t k = 0; k < moduli_.size(); ++k) {
      if (std::gcd(gcds_[x * moduli_.size() + k], gcds_[y * moduli_.size() + k]) != 1) return false;
    }
    return true;
  }

  /// xR + yR = R by scanning every combination x*s + y*t for a unit.
  bool comaximal_by_scan(long x, long y) const {
    for (long s = 0; s < size_; ++s) {
      for (long t = 0; t < size_; ++t) {
        if (is_unit(add(mul(x, s), mul(y, t)))) return true;
      }
    }
    return false;
  }

  /// Same principal ideal as x (componentwise gcd signature).
  bool same_ideal(long x, long y) const {
    for (std::size_t k = 0; k < moduli_.size(); ++k) {
      if (gcds_[x * moduli_.size() + k] != gcds_[y * moduli_.size() + k]) return false;
    }
    return true;
  }

  RingElement element(long x) const {
    std::size_t k = 0;
    return build(ring_, x, k);
  }

  long index(const RingElement& e) const {
    if (!(e.ring() == ring_)) fail(ErrorCode::DescriptorMismatch, "element from another ring");
    std::size_t k = 0;
    long x = 0;
    encode(e, k, x);
    return x;
  }

 private:
  void collect(const RingDescriptor& r) {
    if (r.is_modular()) {
      if (r.modulus() > kMaxElements) fail(ErrorCode::ScaleExceeded, "finite checks limited to 10^4 elements");
      strides_.push_back(0);
      moduli_.push_back(r.modulus().get_si());
      return;
    }
    if (r.is_product()) {
      for (const auto& f : r.factors()) collect(f);
      return;
    }
    fail(ErrorCode::UnsupportedRing, "finite checks need Z/n or a product of them, got " + r.to_string());
  }

  template <class Op>
  long combine(long x, long y, Op op) const {
    long out = 0;
    for (std::size_t k = 0; k < moduli_.size(); ++k) {
      out += op(component(x, k), component(y, k), moduli_[k]) * strides_[k];
    }
    return out;
  }

  long encode_all(long v) const {
    long out = 0;
    for (std::size_t k = 0; k < moduli_.size(); ++k) out += (v % moduli_[k]) * strides_[k];
    return out;
  }

  RingElement build(const RingDescriptor& r, long x, std::size_t& k) const {
    if (r.is_modular()) return RingElement(r, component(x, k++));
    std::vector<RingElement> parts;
    for (const auto& f : r.factors()) parts.push_back(build(f, x, k));
    return RingElement::tuple(r, std::move(parts));
  }

  void encode(const RingElement& e, std::size_t& k, long& x) const {
    if (e.ring().is_modular()) {
      x += e.value().get_si() * strides_[k++];
      return;
    }
    for (const auto& c : e.components()) encode(c, k, x);
  }

  RingDescriptor ring_;
  std::vector<long> moduli_, strides_, radicals_;
  long size_ = 1;
  std::vector<long> gcds_;
  std::vector<bool> unit_, jacobson_;
  std::vector<long> idempotents_;
};

namespace detail {

inline bool sr1_clause(const FiniteRing& R, long a, long b) {
  for (long y = 0; y < R.size(); ++y) {
    if (R.is_unit(R.add(a, R.mul(b, y)))) return true;
  }
  return false;
}

inline bool clean_clause(const FiniteRing& R, long a) {
  for (long e : R.idempotents()) {
    if (R.is_unit(R.sub(a, e))) return true;
  }
  return false;
}

inline bool pm_clause(const FiniteRing& R, long a, long b) {
  const long one = R.one();
  for (long x = 0; x < R.size(); ++x) {
    long s = R.sub(one, R.mul(a, x));
    for (long y = 0; y < R.size(); ++y) {
      if (R.mul(s, R.sub(one, R.mul(b, y))) == 0) return true;
    }
  }
  return false;
}

inline bool jstable_clause(const FiniteRing& R, long a, long b, long c) {
  for (long y = 0; y < R.size(); ++y) {
    if (R.comaximal(a, R.add(b, R.mul(c, y)))) return true;
  }
  return false;
}

}  // namespace detail

/// Exhaustive evaluation of a ring predicate over a finite ring.
inline PredicateReport check_finite_predicate(const RingDescriptor& ring, Predicate predicate) {
  FiniteRing R(ring);
  PredicateReport report;
  report.predicate = predicate;
  auto failed = [&](std::vector<long> xs) {
    report.holds = false;
    std::vector<RingElement> w;
    for (long x : xs) w.push_back(R.element(x));
    report.witness = std::move(w);
  };
  const long N = R.size();
  switch (predicate) {
    case Predicate::StableRange1:
      for (long a = 0; a < N && report.holds; ++a) {
        for (long b = 0; b < N && report.holds; ++b) {
          if (!R.comaximal(a, b)) continue;
          ++report.elements_scanned;
          if (!detail::sr1_clause(R, a, b)) failed({a, b});
        }
      }
      break;
    case Predicate::Clean:
      for (long a = 0; a < N && report.holds; ++a) {
        ++report.elements_scanned;
        if (!detail::clean_clause(R, a)) failed({a});
      }
      break;
    case Predicate::PmRing:
      for (long a = 0; a < N && report.holds; ++a) {
        long b = R.sub(R.one(), a);
        ++report.elements_scanned;
        if (!detail::pm_clause(R, a, b)) failed({a, b});
      }
      break;
    case Predicate::JStableCondition: {
      // the clause depends on a only through the ideal aR
      std::vector<long> reps;
      for (long a = 0; a < N; ++a) {
        if (R.in_jacobson(a)) continue;
        bool seen = false;
        for (long r : reps) seen = seen || R.same_ideal(a, r);
        if (!seen) reps.push_back(a);
      }
      for (long a : reps) {
        for (long b = 0; b < N && report.holds; ++b) {
          for (long c = 0; c < N && report.holds; ++c) {
            if (!R.comaximal(b, c)) continue;
            ++report.elements_scanned;
            if (!detail::jstable_clause(R, a, b, c)) failed({a, b, c});
          }
        }
        if (!report.holds) break;
      }
      break;
    }
  }
  return report;
}

/// Re-evaluates the predicate clause on a reported witness. Returns true when
/// the witness indeed violates the clause.
inline bool replay_witness(const RingDescriptor& ring, Predicate predicate,
                           const std::vector<RingElement>& witness) {
  FiniteRing R(ring);
  std::vector<long> x;
  for (const auto& w : witness) x.push_back(R.index(w));
  auto need = [&](std::size_t k) {
    if (x.size() != k) fail(ErrorCode::PreconditionFailed, "witness has the wrong arity");
  };
  switch (predicate) {
    case Predicate::StableRange1:
      need(2);
      return R.comaximal(x[0], x[1]) && !detail::sr1_clause(R, x[0], x[1]);
    case Predicate::Clean: need(1); return !detail::clean_clause(R, x[0]);
    case Predicate::PmRing:
      need(2);
      return R.add(x[0], x[1]) == R.one() && !detail::pm_clause(R, x[0], x[1]);
    case Predicate::JStableCondition:
      need(3);
      return !R.in_jacobson(x[0]) && R.comaximal(x[1], x[2]) &&
             !detail::jstable_clause(R, x[0], x[1], x[2]);
  }
  return false;
}

/// Clean check of Z/aZ for a nonzero integer a.
inline PredicateReport check_clean_quotient(const RingElement& a) {
  if (!a.ring().is_integers()) fail(ErrorCode::UnsupportedRing, "check_clean_quotient needs an integer");
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "quotient by zero is not finite");
  Integer n = abs(a.value());
  if (n > FiniteRing::kMaxElements) fail(ErrorCode::ScaleExceeded, "quotient limited to |a| <= 10^4");
  if (n == 1) {
    PredicateReport report;
    report.predicate = Predicate::Clean;
    report.note = "zero ring: holds vacuously";
    return report;
  }
  return check_finite_predicate(RingDescriptor::modular(n), Predicate::Clean);
}

/// Searches y with every component in [-bound, bound] such that
/// aR + (b + c*y)R = R over a product of copies of Z. A negative outcome is
/// bounded evidence only.
inline PredicateReport bounded_refute_sr1(const RingElement& a, const RingElement& b,
                                          const RingElement& c, long bound) {
  detail::require_same(a, b);
  detail::require_same(a, c);
  const auto& ring = a.ring();
  if (!ring.is_product()) fail(ErrorCode::UnsupportedRing, "bounded_refute_sr1 needs a product of Z");
  for (const auto& f : ring.factors()) {
    if (!f.is_integers()) fail(ErrorCode::UnsupportedRing, "bounded_refute_sr1 needs a product of Z");
  }
  std::vector<RingElement> triple{a, b, c};
  if (!generates_unit_ideal(triple)) fail(ErrorCode::PreconditionFailed, "triple is not unimodular");
  if (jacobson_member(a)) fail(ErrorCode::PreconditionFailed, "a lies in the Jacobson radical");

  PredicateReport report;
  report.predicate = Predicate::JStableCondition;
  std::vector<RingElement> lift;
  // components of y are independent: aR + (b + cy)R = R splits by factor
  for (std::size_t k = 0; k < ring.factors().size(); ++k) {
    const Integer& ak = a.components()[k].value();
    const Integer& bk = b.components()[k].value();
    const Integer& ck = c.components()[k].value();
    std::optional<long> found;
    for (long y = -bound; y <= bound && !found; ++y) {
      ++report.elements_scanned;
      if (integer::gcd(ak, bk + ck * y) == 1) found = y;
    }
    if (!found) {
      report.holds = false;
      report.witness = triple;
      report.note = "bounded evidence, not proof: no lift with |y_i| <= " + std::to_string(bound) +
                    " in component " + std::to_string(k);
      return report;
    }
    lift.emplace_back(ring.factors()[k], *found);
  }
  report.note = "lift y = (";
  for (std::size_t k = 0; k < lift.size(); ++k) {
    if (k) report.note += ",";
    report.note += lift[k].value().get_str();
  }
  report.note += ")";
  return report;
}

}  // namespace edr
