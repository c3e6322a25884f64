#pragma once

#include "edr/error.hpp"
#include "edr/ring.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace edr {

/// Recursive-descent reader for ring descriptors and element literals.
///
///   descriptor := "Z" | "Z/" <n> | "GF(" <p> ")[x]" | "Zser" <k>
///               | "prod(" descriptor ("," descriptor)+ ")"
///   element    := integer                      (Z, Z/n)
///               | "[" [integer ("," integer)*] "]"        (GF(p)[x])
///               | "{" integer [";" rational ("," rational)*] "}"  (Zser)
///               | "(" element ("," element)+ ")"          (products)
///
/// Whitespace is permitted between tokens inside brackets.
class LiteralReader {
 public:
  explicit LiteralReader(std::string_view text, std::size_t offset = 0)
      : text_(text), pos_(offset) {}

  std::size_t position() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) error(std::string("expected '") + c + "'");
  }

  bool consume_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) const { throw ParseError(pos_, what); }

  Integer read_integer() {
    std::size_t start = pos_;
    if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      error("expected integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
  }

  Rational read_rational() {
    Integer num = read_integer();
    if (!consume('/')) return Rational(num);
    std::size_t at = pos_;
    Integer den = read_integer();
    if (den <= 0) throw ParseError(at, "denominator must be positive");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::size_t read_size() {
    std::size_t at = pos_;
    Integer v = read_integer();
    if (v < 0 || !v.fits_ulong_p()) throw ParseError(at, "expected a nonnegative size");
    return v.get_ui();
  }

  RingDescriptor read_descriptor() {
    std::size_t start = pos_;
    try {
      if (consume_word("prod(")) {
        std::vector<RingDescriptor> factors;
        do {
          skip_space();
          factors.push_back(read_descriptor());
          skip_space();
        } while (consume(','));
        expect(')');
        if (factors.size() < 2) throw ParseError(start, "prod needs at least two factors");
        return RingDescriptor::product(std::move(factors));
      }
      if (consume_word("GF(")) {
        Integer p = read_integer();
        expect(')');
        if (!consume_word("[x]")) error("expected '[x]'");
        return RingDescriptor::poly_over_prime_field(p);
      }
      if (consume_word("Zser")) return RingDescriptor::truncated_series(read_size());
      if (consume_word("Z/")) return RingDescriptor::modular(read_integer());
      if (consume('Z')) return RingDescriptor::integers();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(start, e.detail());
    }
    error("unknown ring descriptor");
  }

  RingElement read_element(const RingDescriptor& ring) {
    switch (ring.kind()) {
      case RingKind::Integers:
      case RingKind::Modular: return RingElement(ring, read_integer());
      case RingKind::PolyOverPrimeField: {
        expect('[');
        gf_poly::Coeffs coeffs;
        skip_space();
        if (!consume(']')) {
          do {
            skip_space();
            coeffs.push_back(read_integer());
            skip_space();
          } while (consume(','));
          expect(']');
        }
        return RingElement::polynomial(ring, std::move(coeffs));
      }
      case RingKind::TruncatedSeries: {
        std::size_t start = pos_;
        expect('{');
        skip_space();
        Integer constant = read_integer();
        skip_space();
        std::vector<Rational> tail;
        if (consume(';')) {
          do {
            skip_space();
            tail.push_back(read_rational());
            skip_space();
          } while (consume(','));
        }
        expect('}');
        if (tail.size() > ring.order() - 1) {
          throw ParseError(start, "series literal has more than k-1 coefficients");
        }
        return RingElement::series(ring, std::move(constant), std::move(tail));
      }
      case RingKind::Product: {
        expect('(');
        std::vector<RingElement> parts;
        for (std::size_t i = 0; i < ring.factors().size(); ++i) {
          skip_space();
          if (i) {
            expect(',');
            skip_space();
          }
          parts.push_back(read_element(ring.factors()[i]));
        }
        skip_space();
        expect(')');
        return RingElement::tuple(ring, std::move(parts));
      }
    }
    error("unsupported ring");
  }

  /// Comma-separated element list (the CLI's --row argument).
  std::vector<RingElement> read_element_list(const RingDescriptor& ring) {
    std::vector<RingElement> out;
    do {
      skip_space();
      out.push_back(read_element(ring));
      skip_space();
    } while (consume(','));
    return out;
  }

  void expect_end() {
    skip_space();
    if (!at_end()) error("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_;
};

inline RingDescriptor parse_descriptor(std::string_view text) {
  LiteralReader r(text);
  auto d = r.read_descriptor();
  if (!r.at_end()) r.error("unexpected trailing input");
  return d;
}

inline RingElement parse_element(const RingDescriptor& ring, std::string_view text) {
  LiteralReader r(text);
  r.skip_space();
  auto e = r.read_element(ring);
  r.expect_end();
  return e;
}

inline std::vector<RingElement> parse_element_list(const RingDescriptor& ring,
                                                   std::string_view text) {
  LiteralReader r(text);
  auto v = r.read_element_list(ring);
  r.expect_end();
  return v;
}

inline std::string to_literal(const RingElement& e) {
  switch (e.ring().kind()) {
    case RingKind::Integers:
    case RingKind::Modular: return e.value().get_str();
    case RingKind::PolyOverPrimeField: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
        if (i) s += ',';
        s += e.coeffs()[i].get_str();
      }
      return s + "]";
    }
    case RingKind::TruncatedSeries: {
      const auto& p = e.series_payload();
      std::string s = "{" + p.constant.get_str();
      for (std::size_t i = 0; i < p.tail.size(); ++i) {
        s += (i ? "," : ";");
        s += p.tail[i].get_str();
      }
      return s + "}";
    }
    case RingKind::Product: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.components().size(); ++i) {
        if (i) s += ',';
        s += to_literal(e.components()[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace edr
