#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace edr;
using edr::testing::poly;
using edr::testing::Z;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();
const RingDescriptor kZ12 = RingDescriptor::modular(12);

RingElement mod12(long v) { return RingElement(kZ12, v); }

void expect_bezout_identities(const RingElement& a, const RingElement& b, const BezoutData& d) {
  EXPECT_EQ(d.x * a + d.y * b, d.g) << to_literal(a) << " " << to_literal(b);
  EXPECT_EQ(d.a1 * d.g, a) << to_literal(a) << " " << to_literal(b);
  EXPECT_EQ(d.b1 * d.g, b) << to_literal(a) << " " << to_literal(b);
  EXPECT_EQ(d.x * d.a1 + d.y * d.b1, one(a.ring())) << to_literal(a) << " " << to_literal(b);
}

}  // namespace

TEST(RingArith, IntegersAdditiveInverse) {
  EXPECT_TRUE(ring_arith(ArithOp::Add, Z(3), Z(-3)).is_zero());
  EXPECT_EQ(ring_arith(ArithOp::Neg, Z(3)), Z(-3));
  EXPECT_EQ(ring_arith(ArithOp::Sub, Z(3), Z(5)), Z(-2));
}

TEST(RingArith, ModularProductOfZeroDivisors) {
  EXPECT_EQ((8 * 9) % 12, 0);
  EXPECT_TRUE(ring_arith(ArithOp::Mul, mod12(8), mod12(9)).is_zero());
}

TEST(RingArith, CharacteristicTwoPolynomials) {
  auto gf2 = RingDescriptor::poly_over_prime_field(2);
  auto f = poly(gf2, {1, 1});
  EXPECT_TRUE((f + f).is_zero());
}

TEST(RingArith, DescriptorMismatchIsRejected) {
  try {
    (void)(Z(1) + mod12(1));
    FAIL() << "expected DescriptorMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DescriptorMismatch);
  }
}

TEST(RingDescriptorTest, ConstructionInvariants) {
  EXPECT_THROW(RingDescriptor::modular(1), Error);
  EXPECT_THROW(RingDescriptor::poly_over_prime_field(4), Error);
  EXPECT_THROW(RingDescriptor::truncated_series(0), Error);
  EXPECT_THROW(RingDescriptor::product({kZ}), Error);
  EXPECT_EQ(RingDescriptor::modular(12), kZ12);
  EXPECT_FALSE(RingDescriptor::modular(12) == RingDescriptor::modular(13));
  auto p = RingDescriptor::product({kZ12, RingDescriptor::poly_over_prime_field(5)});
  EXPECT_EQ(p.to_string(), "prod(Z/12,GF(5)[x])");
}

TEST(IsUnit, Examples) {
  EXPECT_EQ(*is_unit(Z(-1)), Z(-1));
  EXPECT_FALSE(is_unit(Z(2)));

  // brute-force inverse scan in Z/12
  long brute_inverse = -1;
  for (long t = 0; t < 12; ++t) {
    if ((5 * t) % 12 == 1) brute_inverse = t;
  }
  ASSERT_EQ(brute_inverse, 5);
  EXPECT_EQ(*is_unit(mod12(5)), mod12(brute_inverse));

  EXPECT_EQ(std::gcd(8, 12), 4);
  EXPECT_FALSE(is_unit(mod12(8)));
}

TEST(IsUnit, InverseProperty) {
  edr::testing::Rng rng(7);
  for (const auto& ring : {kZ, kZ12, RingDescriptor::modular(97),
                           RingDescriptor::poly_over_prime_field(7),
                           RingDescriptor::truncated_series(5),
                           RingDescriptor::product({kZ12, RingDescriptor::modular(5)})}) {
    for (int i = 0; i < 200; ++i) {
      auto x = edr::testing::random_element(ring, rng, 3, 2);
      if (auto inv = is_unit(x)) {
        EXPECT_EQ(x * *inv, one(ring)) << to_literal(x);
      }
    }
  }
}

TEST(GcdBezout, IntegerExample) {
  auto d = gcd_bezout(Z(4), Z(6));
  EXPECT_EQ(d.g, Z(2));
  EXPECT_EQ(d.a1, Z(2));
  EXPECT_EQ(d.b1, Z(3));
  expect_bezout_identities(Z(4), Z(6), d);
}

TEST(GcdBezout, BothZero) {
  auto d = gcd_bezout(Z(0), Z(0));
  EXPECT_EQ(d.g, Z(0));
  EXPECT_EQ(d.x, Z(1));
  EXPECT_EQ(d.y, Z(0));
  EXPECT_EQ(d.a1, Z(1));
  EXPECT_EQ(d.b1, Z(0));
  expect_bezout_identities(Z(0), Z(0), d);
}

TEST(GcdBezout, PolynomialExample) {
  auto gf5 = RingDescriptor::poly_over_prime_field(5);
  auto a = poly(gf5, {-1, 0, 1});  // x^2 - 1
  auto b = poly(gf5, {-1, 1});     // x - 1
  // oracle: (x - 1)(x + 1) expands to x^2 - 1 by schoolbook multiplication
  std::vector<long> prod(3, 0);
  std::vector<long> f{4, 1}, g{1, 1};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) prod[i + j] = (prod[i + j] + f[i] * g[j]) % 5;
  }
  ASSERT_EQ(prod, (std::vector<long>{4, 0, 1}));

  auto d = gcd_bezout(a, b);
  EXPECT_EQ(d.g, poly(gf5, {4, 1}));
  EXPECT_EQ(d.a1, poly(gf5, {1, 1}));
  EXPECT_EQ(d.b1, poly(gf5, {1}));
  expect_bezout_identities(a, b, d);
}

TEST(GcdBezout, SeriesUnsupported) {
  auto ser = RingDescriptor::truncated_series(3);
  try {
    gcd_bezout(one(ser), one(ser));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedRing);
  }
}

TEST(GcdBezout, IdentitiesHoldOnRandomPairs) {
  edr::testing::Rng rng(11);
  std::vector<RingDescriptor> rings{
      kZ,
      kZ12,
      RingDescriptor::modular(16),
      RingDescriptor::modular(36),
      RingDescriptor::modular(360),
      RingDescriptor::poly_over_prime_field(2),
      RingDescriptor::poly_over_prime_field(5),
      RingDescriptor::product({kZ12, RingDescriptor::modular(35)}),
      RingDescriptor::product({kZ, RingDescriptor::poly_over_prime_field(3)}),
  };
  for (const auto& ring : rings) {
    for (int i = 0; i < 300; ++i) {
      auto a = edr::testing::random_element(ring, rng);
      auto b = edr::testing::random_element(ring, rng);
      auto d = gcd_bezout(a, b);
      expect_bezout_identities(a, b, d);
      EXPECT_EQ(canonical_associate(d.g).normal, canonical_associate(gcd_bezout(b, a).g).normal);
    }
  }
}

TEST(GcdBezout, ModularCanonicalGenerator) {
  for (long a = 0; a < 12; ++a) {
    for (long b = 0; b < 12; ++b) {
      auto d = gcd_bezout(mod12(a), mod12(b));
      long expected = std::gcd(std::gcd(a, b), 12L) % 12;
      EXPECT_EQ(d.g, mod12(expected));
      expect_bezout_identities(mod12(a), mod12(b), d);
    }
  }
}

TEST(DivideExact, Examples) {
  EXPECT_EQ(divide_exact(Z(12), Z(4)), Z(3));

  std::vector<long> solutions;
  for (long q = 0; q < 12; ++q) {
    if ((4 * q) % 12 == 8) solutions.push_back(q);
  }
  ASSERT_EQ(solutions, (std::vector<long>{2, 5, 8, 11}));
  EXPECT_EQ(divide_exact(mod12(8), mod12(4)), mod12(solutions.front()));

  try {
    divide_exact(Z(5), Z(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
}

TEST(DivideExact, ModularMatchesEnumeration) {
  for (long n : {8L, 12L, 30L}) {
    auto ring = RingDescriptor::modular(n);
    for (long a = 0; a < n; ++a) {
      for (long b = 0; b < n; ++b) {
        long smallest = -1;
        for (long q = 0; q < n && smallest < 0; ++q) {
          if ((b * q) % n == a) smallest = q;
        }
        auto got = try_divide(RingElement(ring, a), RingElement(ring, b));
        if (smallest < 0) {
          EXPECT_FALSE(got) << a << "/" << b << " mod " << n;
        } else {
          ASSERT_TRUE(got) << a << "/" << b << " mod " << n;
          EXPECT_EQ(*got, RingElement(ring, smallest));
        }
      }
    }
  }
}

TEST(DivideExact, ProductRoundTrip) {
  edr::testing::Rng rng(5);
  for (const auto& ring : {kZ, RingDescriptor::poly_over_prime_field(5), kZ12,
                           RingDescriptor::modular(36)}) {
    for (int i = 0; i < 300; ++i) {
      auto a = edr::testing::random_element(ring, rng);
      auto b = edr::testing::random_element(ring, rng);
      if (b.is_zero()) continue;
      auto q = divide_exact(a * b, b);
      if (ring.is_euclidean_domain()) {
        EXPECT_EQ(q, a);
      } else {
        EXPECT_EQ(b * q, a * b);
      }
    }
  }
}

TEST(Jacobson, Examples) {
  for (long t = 0; t < 12; ++t) EXPECT_TRUE(unit(mod12(1 + 6 * t)));
  EXPECT_TRUE(jacobson_member(mod12(6)));
  EXPECT_FALSE(unit(mod12(1 + 4 * 2)));
  EXPECT_FALSE(jacobson_member(mod12(4)));
  EXPECT_TRUE(jacobson_member(Z(0)));
  EXPECT_FALSE(jacobson_member(Z(3)));
}

TEST(Jacobson, MatchesBruteForceDefinition) {
  for (long n = 2; n <= 60; ++n) {
    auto ring = RingDescriptor::modular(n);
    for (long a = 0; a < n; ++a) {
      bool brute = true;
      for (long t = 0; t < n && brute; ++t) brute = std::gcd((1 + a * t) % n, n) == 1;
      EXPECT_EQ(jacobson_member(RingElement(ring, a)), brute) << a << " mod " << n;
    }
  }
}

TEST(Jacobson, SeriesAndProducts) {
  auto ser = RingDescriptor::truncated_series(3);
  EXPECT_TRUE(jacobson_member(parse_element(ser, "{0; 1/2, 3}")));
  EXPECT_FALSE(jacobson_member(parse_element(ser, "{2; 1/2, 3}")));
  auto prod = RingDescriptor::product({kZ12, RingDescriptor::modular(5)});
  EXPECT_TRUE(jacobson_member(parse_element(prod, "(6,0)")));
  EXPECT_FALSE(jacobson_member(parse_element(prod, "(6,1)")));
}

TEST(CanonicalAssociate, Examples) {
  auto [u, n] = canonical_associate(Z(-6));
  EXPECT_EQ(u, Z(-1));
  EXPECT_EQ(n, Z(6));

  auto gf5 = RingDescriptor::poly_over_prime_field(5);
  auto f = poly(gf5, {1, 3});  // 3x + 1
  auto assoc = canonical_associate(f);
  EXPECT_EQ(assoc.unit, poly(gf5, {3}));
  EXPECT_EQ(assoc.normal, poly(gf5, {2, 1}));
  EXPECT_EQ(assoc.unit * assoc.normal, f);

  auto zero_assoc = canonical_associate(Z(0));
  EXPECT_EQ(zero_assoc.unit, Z(1));
  EXPECT_EQ(zero_assoc.normal, Z(0));
}

TEST(CanonicalAssociate, FactorizationProperty) {
  edr::testing::Rng rng(3);
  for (const auto& ring : {kZ, kZ12, RingDescriptor::modular(72), RingDescriptor::poly_over_prime_field(7),
                           RingDescriptor::truncated_series(4),
                           RingDescriptor::product({kZ, RingDescriptor::modular(10)})}) {
    for (int i = 0; i < 300; ++i) {
      auto a = edr::testing::random_element(ring, rng);
      auto [u, n] = canonical_associate(a);
      EXPECT_TRUE(unit(u)) << to_literal(a);
      EXPECT_EQ(u * n, a) << to_literal(a);
      EXPECT_TRUE(is_canonical(n)) << to_literal(a);
    }
  }
}

TEST(Series, ArithmeticAndInverse) {
  auto ser = RingDescriptor::truncated_series(4);
  auto f = parse_element(ser, "{-1; 1/2, 0, 3}");
  auto inv = is_unit(f);
  ASSERT_TRUE(inv);
  EXPECT_EQ(f * *inv, one(ser));
  EXPECT_FALSE(is_unit(parse_element(ser, "{2; 1}")));
  // (1 + x)^2 = 1 + 2x + x^2
  auto g = parse_element(ser, "{1; 1}");
  EXPECT_EQ(g * g, parse_element(ser, "{1; 2, 1, 0}"));
}

TEST(IdealGeneratorTest, CombinationReproducesGenerator) {
  std::vector<RingElement> v{Z(12), Z(18), Z(-8)};
  auto gen = ideal_generator(v);
  EXPECT_EQ(gen.generator, Z(2));
  RingElement sum = Z(0);
  for (std::size_t i = 0; i < v.size(); ++i) sum = sum + gen.coefficients[i] * v[i];
  EXPECT_EQ(sum, gen.generator);
  EXPECT_FALSE(generates_unit_ideal(v));
  std::vector<RingElement> w{Z(6), Z(10), Z(15)};
  EXPECT_TRUE(unimodular_witness(w));
}
