#include "test_support.hpp"

#include "edr/complete.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace edr;
using edr::testing::poly;
using edr::testing::Z;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();

std::vector<RingElement> row_of(const RingDescriptor& ring, std::vector<long> v) {
  std::vector<RingElement> out;
  for (long x : v) out.emplace_back(ring, x);
  return out;
}

void expect_verified(const CompletionCertificate& cert) {
  auto report = verify_completion(cert);
  EXPECT_TRUE(report.holds) << format_matrix_text(cert.A)
                            << (report.failures.empty() ? "" : report.failures.front());
}

bool triple_unimodular(const RingElement& a, const RingElement& b, const RingElement& c) {
  std::vector<RingElement> t{a, b, c};
  return generates_unit_ideal(t);
}

}  // namespace

TEST(Sr1Lift, IntegerExample) {
  std::vector<long> valid;
  for (long y = 0; y < 6; ++y) {
    if (std::gcd(6L, 3 + 2 * y) == 1) valid.push_back(y);
  }
  ASSERT_FALSE(valid.empty());
  auto y = sr1_quotient_lift(Z(6), Z(3), Z(2));
  EXPECT_EQ(std::gcd(6L, (Z(3) + Z(2) * y).value().get_si()), 1);
  EXPECT_TRUE(comaximal(Z(6), Z(3) + Z(2) * y));
}

TEST(Sr1Lift, AlreadyCoprime) { EXPECT_EQ(sr1_quotient_lift(Z(5), Z(1), Z(0)), Z(0)); }

TEST(Sr1Lift, PolynomialExample) {
  auto gf2 = RingDescriptor::poly_over_prime_field(2);
  auto y = sr1_quotient_lift(poly(gf2, {0, 1}), poly(gf2, {}), poly(gf2, {1}));
  EXPECT_EQ(y, poly(gf2, {1}));
}

TEST(Sr1Lift, Preconditions) {
  try {
    sr1_quotient_lift(Z(0), Z(1), Z(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
  try {
    sr1_quotient_lift(Z(2), Z(4), Z(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
  auto ser = RingDescriptor::truncated_series(2);
  try {
    sr1_quotient_lift(one(ser), one(ser), one(ser));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedRing);
  }
}

TEST(Sr1Lift, RandomTriplesPerRing) {
  edr::testing::Rng rng(500);
  std::vector<RingDescriptor> rings{kZ, RingDescriptor::modular(12), RingDescriptor::modular(72),
                                    RingDescriptor::modular(97), RingDescriptor::poly_over_prime_field(5)};
  for (const auto& ring : rings) {
    int done = 0;
    while (done < 500) {
      auto a = edr::testing::random_element(ring, rng, 100, 3);
      auto b = edr::testing::random_element(ring, rng, 100, 3);
      auto c = edr::testing::random_element(ring, rng, 100, 3);
      if (jacobson_member(a) || !triple_unimodular(a, b, c)) continue;
      ++done;
      auto y = sr1_quotient_lift(a, b, c);
      EXPECT_TRUE(comaximal(a, b + c * y)) << to_literal(a) << " " << to_literal(b) << " " << to_literal(c);
    }
  }
}

TEST(Sr2Reduce, Examples) {
  auto [y1, y2] = sr2_reduce(Z(0), Z(2), Z(3));
  EXPECT_EQ(y2, Z(0));
  EXPECT_TRUE(comaximal(Z(3) * y1, Z(2)));
  auto [u1, u2] = sr2_reduce(Z(1), Z(0), Z(0));
  EXPECT_EQ(u1, Z(0));
  EXPECT_EQ(u2, Z(0));

  auto z12 = RingDescriptor::modular(12);
  int solvable = 0;
  for (long s = 0; s < 12; ++s) {
    for (long t = 0; t < 12; ++t) solvable += std::gcd(std::gcd(4 + s, 3 + t), 12L) == 1;
  }
  ASSERT_GT(solvable, 0);
  RingElement a1(z12, 4), a2(z12, 3), a3(z12, 1);
  auto [v1, v2] = sr2_reduce(a1, a2, a3);
  EXPECT_TRUE(comaximal(a1 + a3 * v1, a2 + a3 * v2));
}

TEST(Sr2Reduce, RandomTriplesPerRing) {
  edr::testing::Rng rng(501);
  std::vector<RingDescriptor> rings{kZ, RingDescriptor::modular(36), RingDescriptor::modular(100),
                                    RingDescriptor::poly_over_prime_field(5),
                                    RingDescriptor::product({kZ, RingDescriptor::modular(8)})};
  for (const auto& ring : rings) {
    int done = 0;
    while (done < 500) {
      auto a1 = edr::testing::random_element(ring, rng, 100, 3);
      auto a2 = edr::testing::random_element(ring, rng, 100, 3);
      auto a3 = edr::testing::random_element(ring, rng, 100, 3);
      if (!triple_unimodular(a1, a2, a3)) continue;
      ++done;
      auto [y1, y2] = sr2_reduce(a1, a2, a3);
      EXPECT_TRUE(comaximal(a1 + a3 * y1, a2 + a3 * y2));
    }
  }
  try {
    sr2_reduce(Z(2), Z(4), Z(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
  }
}

TEST(Sr2Reduce, IntegerLiftWithThirdEntryThree) {
  // feeding (a1 + 3 y1, a2 + 3 y2) back through gcd
  for (long a1 = -6; a1 <= 6; ++a1) {
    for (long a2 = -6; a2 <= 6; ++a2) {
      if (std::gcd(std::gcd(a1, a2), 3L) != 1) continue;
      auto [y1, y2] = sr2_reduce(Z(a1), Z(a2), Z(3));
      long u = a1 + 3 * y1.value().get_si(), v = a2 + 3 * y2.value().get_si();
      EXPECT_EQ(std::gcd(u, v), 1) << a1 << " " << a2;
    }
  }
}

TEST(CompleteRow, TwoByTwo) {
  auto cert = complete_row(row_of(kZ, {3, 5}), Z(1));
  EXPECT_EQ(cert.A, RingMatrix::from_integers(kZ, {{3, 5}, {1, 2}}));
  EXPECT_EQ(3 * 2 - 5 * 1, 1);
  EXPECT_EQ(cert.det_value, Z(1));
  expect_verified(cert);
}

TEST(CompleteRow, ThreeEntriesWithCommonFactor) {
  auto cert = complete_row(row_of(kZ, {2, 4, 6}), Z(2));
  EXPECT_EQ(cert.A.rows(), 3u);
  expect_verified(cert);
  // independent cofactor expansion along the first row
  const auto& A = cert.A;
  auto m = [&](std::size_t i, std::size_t j) { return A.at(i, j).value(); };
  Integer det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  EXPECT_EQ(det, 2);
}

TEST(CompleteRow, ZeroRow) {
  auto cert = complete_row(row_of(kZ, {0, 0}), Z(0));
  EXPECT_EQ(cert.det_value, Z(0));
  expect_verified(cert);
}

TEST(CompleteRow, NotPrincipal) {
  try {
    complete_row(row_of(kZ, {4, 6}), Z(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrincipal);
  }
  try {
    complete_row(row_of(kZ, {4, 6}), Z(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrincipal);
  }
}

TEST(CompleteRow, CaseTwoShifts) {
  // heads in J(Z) = 0 force the shift branches
  for (auto v : std::vector<std::vector<long>>{{0, 3, 5}, {0, 0, 5}, {0, 0, 7, 4}, {0, 0, 0, 0, 9}}) {
    RingElement g = Z(0);
    for (long x : v) g = RingElement(kZ, integer::gcd(g.value(), Integer(x)));
    auto cert = complete_row(row_of(kZ, v), g);
    expect_verified(cert);
    bool shifted = false;
    for (const auto& s : cert.steps) shifted = shifted || s.rule.rfind("shift", 0) == 0;
    EXPECT_TRUE(shifted);
  }
}

TEST(CompleteRow, RandomIntegerRows) {
  edr::testing::Rng rng(411);
  for (int i = 0; i < 200; ++i) {
    auto n = static_cast<std::size_t>(edr::testing::uniform(rng, 2, 5));
    std::vector<RingElement> a;
    Integer g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      long v = edr::testing::uniform(rng, -30, 30);
      a.push_back(Z(v));
      g = integer::gcd(g, Integer(v));
    }
    auto cert = complete_row(a, RingElement(kZ, g));
    expect_verified(cert);
    EXPECT_EQ(cert.det_value, RingElement(kZ, g));
  }
}

TEST(CompleteRow, RandomModularRows) {
  edr::testing::Rng rng(412);
  for (long m : {6L, 12L, 30L}) {
    auto ring = RingDescriptor::modular(m);
    for (int i = 0; i < 200; ++i) {
      auto n = static_cast<std::size_t>(edr::testing::uniform(rng, 2, 5));
      std::vector<RingElement> a;
      for (std::size_t j = 0; j < n; ++j) a.push_back(edr::testing::random_element(ring, rng));
      auto d = ideal_generator(a).generator;
      expect_verified(complete_row(a, d));
    }
  }
}

TEST(CompleteRow, EveryModulusUpToSixty) {
  edr::testing::Rng rng(413);
  for (long m = 2; m <= 60; ++m) {
    auto ring = RingDescriptor::modular(m);
    for (int i = 0; i < 20; ++i) {
      auto n = static_cast<std::size_t>(edr::testing::uniform(rng, 2, 4));
      std::vector<RingElement> a;
      for (std::size_t j = 0; j < n; ++j) a.push_back(edr::testing::random_element(ring, rng));
      expect_verified(complete_row(a, ideal_generator(a).generator));
    }
  }
}

TEST(CompleteRow, PolynomialAndProductRows) {
  edr::testing::Rng rng(414);
  std::vector<RingDescriptor> rings{RingDescriptor::poly_over_prime_field(3),
                                    RingDescriptor::product({kZ, RingDescriptor::modular(12)})};
  for (const auto& ring : rings) {
    for (int i = 0; i < 100; ++i) {
      auto n = static_cast<std::size_t>(edr::testing::uniform(rng, 2, 4));
      std::vector<RingElement> a;
      for (std::size_t j = 0; j < n; ++j) a.push_back(edr::testing::random_element(ring, rng, 20, 2));
      expect_verified(complete_row(a, ideal_generator(a).generator));
    }
  }
}

TEST(CompleteRow, UnitScalingInvariance) {
  edr::testing::Rng rng(415);
  auto ring = RingDescriptor::modular(30);
  for (int i = 0; i < 100; ++i) {
    std::vector<RingElement> a;
    for (int j = 0; j < 3; ++j) a.push_back(edr::testing::random_element(ring, rng));
    auto d = ideal_generator(a).generator;
    RingElement u(ring, 7);
    std::vector<RingElement> ua;
    for (const auto& x : a) ua.push_back(u * x);
    expect_verified(complete_row(a, d));
    expect_verified(complete_row(ua, u * d));
  }
}

TEST(IdempotentComplete, Examples) {
  auto z6 = RingDescriptor::modular(6);
  auto c3 = idempotent_complete(row_of(z6, {3, 0}), RingElement(z6, 3));
  EXPECT_EQ(c3.det_value, RingElement(z6, 3));
  expect_verified(c3);

  auto z12 = RingDescriptor::modular(12);
  auto c1 = idempotent_complete(row_of(z12, {5, 0}), one(z12));
  EXPECT_EQ(c1.det_value, one(z12));
  expect_verified(c1);

  // exhaustive: some 2x2 matrix over Z/6 with first row (2,2) has det 4
  bool exists = false;
  for (long p = 0; p < 6; ++p) {
    for (long q = 0; q < 6; ++q) exists = exists || ((2 * q - 2 * p) % 6 + 6) % 6 == 4;
  }
  ASSERT_TRUE(exists);
  auto c4 = idempotent_complete(row_of(z6, {2, 2}), RingElement(z6, 4));
  EXPECT_EQ(c4.det_value, RingElement(z6, 4));
  expect_verified(c4);
}

TEST(IdempotentComplete, EveryIdempotentOfSmallModuli) {
  edr::testing::Rng rng(416);
  for (long m = 2; m <= 60; ++m) {
    auto ring = RingDescriptor::modular(m);
    for (long e = 0; e < m; ++e) {
      if ((e * e) % m != e) continue;
      for (int i = 0; i < 10; ++i) {
        std::vector<RingElement> a;
        for (int j = 0; j < 3; ++j) a.push_back(edr::testing::random_element(ring, rng));
        RingElement ee(ring, e);
        if (!divides(ideal_generator(a).generator, ee)) continue;
        expect_verified(idempotent_complete(a, ee));
      }
    }
  }
}

TEST(IdempotentComplete, Errors) {
  auto z6 = RingDescriptor::modular(6);
  try {
    idempotent_complete(row_of(z6, {1, 0}), RingElement(z6, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIdempotent);
  }
  try {
    idempotent_complete(row_of(z6, {2, 4}), RingElement(z6, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInIdeal);
  }
}

TEST(IdempotentComplete, ProductRing) {
  auto ring = RingDescriptor::product({RingDescriptor::modular(6), kZ});
  auto a = parse_element_list(ring, "(3,2),(0,3)");
  auto e = parse_element(ring, "(3,1)");
  auto cert = idempotent_complete(a, e);
  EXPECT_EQ(cert.det_value, e);
  expect_verified(cert);
}

TEST(VerifyCompletion, DetectsTampering) {
  auto cert = complete_row(row_of(kZ, {3, 5}), Z(1));
  cert.A.at(1, 1) = Z(3);
  auto report = verify_completion(cert);
  EXPECT_FALSE(report.holds);
  EXPECT_TRUE(report.has("det(A) = det_target"));
  cert = complete_row(row_of(kZ, {3, 5}), Z(1));
  cert.first_row[0] = Z(4);
  EXPECT_TRUE(verify_completion(cert).has("first row"));
}
