#pragma once

#include "edr/edr.hpp"

#include <random>
#include <vector>

namespace edr::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random element: integers in [-bound, bound], residues, polynomials of
/// degree <= max_degree, products componentwise.
inline RingElement random_element(const RingDescriptor& ring, Rng& rng, long bound = 50,
                                  long max_degree = 3) {
  switch (ring.kind()) {
    case RingKind::Integers: return RingElement(ring, uniform(rng, -bound, bound));
    case RingKind::Modular: {
      long n = ring.modulus().get_si();
      return RingElement(ring, uniform(rng, 0, n - 1));
    }
    case RingKind::PolyOverPrimeField: {
      long p = ring.prime().get_si();
      long deg = uniform(rng, -1, max_degree);
      gf_poly::Coeffs c;
      for (long i = 0; i <= deg; ++i) c.emplace_back(uniform(rng, 0, p - 1));
      return RingElement::polynomial(ring, std::move(c));
    }
    case RingKind::TruncatedSeries: {
      std::vector<Rational> tail;
      for (std::size_t i = 1; i < ring.order(); ++i) {
        tail.emplace_back(uniform(rng, -bound, bound), uniform(rng, 1, bound));
      }
      return RingElement::series(ring, uniform(rng, -bound, bound), std::move(tail));
    }
    case RingKind::Product: {
      std::vector<RingElement> parts;
      for (const auto& f : ring.factors()) parts.push_back(random_element(f, rng, bound, max_degree));
      return RingElement::tuple(ring, std::move(parts));
    }
  }
  return zero(ring);
}

inline RingMatrix random_matrix(const RingDescriptor& ring, Rng& rng, std::size_t rows,
                                std::size_t cols, long bound = 50, long max_degree = 3) {
  RingMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_element(ring, rng, bound, max_degree);
  }
  return m;
}

inline RingElement Z(long v) { return RingElement(RingDescriptor::integers(), v); }

inline RingElement poly(const RingDescriptor& ring, std::vector<long> coeffs) {
  gf_poly::Coeffs c(coeffs.begin(), coeffs.end());
  return RingElement::polynomial(ring, std::move(c));
}

}  // namespace edr::testing
