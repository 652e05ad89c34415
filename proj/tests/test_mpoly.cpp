#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pqgf/mpoly.hpp"

using namespace pqgf;

namespace {

const MPoly p(Var::p), q(Var::q), k(Var::k);

TEST(MPoly, RendersCanonically) {
  EXPECT_EQ(to_string(2 * p * p * q - q + 1), "2*p^2*q - q + 1");
  EXPECT_EQ(to_string(1 - q + q * p * p * 2), "2*p^2*q - q + 1");
  EXPECT_EQ(to_string(MPoly{}), "0");
  EXPECT_EQ(to_string(-p), "-p");
  EXPECT_EQ(to_string(MPoly(-7)), "-7");
  EXPECT_EQ(to_string(p * p + 2 * q), "p^2 + 2*q");
}

TEST(MPoly, GradedLexOrder) {
  // higher total degree first, then p before q
  EXPECT_EQ(to_string(q + p + p * q + 3), "p*q + p + q + 3");
  EXPECT_EQ(to_string(pow(p + q, 2)), "p^2 + 2*p*q + q^2");
}

TEST(MPoly, ZeroCoefficientsVanish) {
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p + q) - (q + p), MPoly{});
  EXPECT_EQ((p + 1) * (p - 1), p * p - 1);
}

TEST(MPoly, BigCoefficients) {
  const MPoly f = pow(2 * p, 100);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.leading_term().coeff, BigInt(1) << 100);
  EXPECT_EQ(f.total_degree(), 100u);
}

TEST(MPoly, Eval) {
  const MPoly f = 2 * p * p * q - q + 1;
  EXPECT_EQ(eval(f, {{Var::p, 3}, {Var::q, -2}}), BigInt(-33));
  EXPECT_THROW(eval(f, {{Var::p, 3}}), unbound_variable);
  EXPECT_EQ(eval(MPoly(5), {}), BigInt(5));
}

TEST(MPoly, Substitute) {
  EXPECT_EQ(substitute(p * p + q, Var::p, MPoly(1)), q + 1);
  EXPECT_EQ(substitute(p * q, Var::q, k + 1), p * k + p);
  EXPECT_EQ(substitute(p + 2 * q, {{Var::p, q}, {Var::q, p}}), q + 2 * p);
  EXPECT_EQ(swap_vars(p * p * q, Var::p, Var::q), p * q * q);
}

TEST(MPoly, Parse) {
  EXPECT_EQ(parse_mpoly("2*p^2*q - q + 1"), 2 * p * p * q - q + 1);
  EXPECT_EQ(parse_mpoly("2k + 4"), 2 * k + 4);
  EXPECT_EQ(parse_mpoly("-3"), MPoly(-3));
  EXPECT_EQ(parse_mpoly("e1*e2 - a1"), MPoly(Var::e1) * MPoly(Var::e2) - MPoly(Var::a1));
  EXPECT_THROW(parse_mpoly(""), parse_error);
  EXPECT_THROW(parse_mpoly("p^"), parse_error);
  EXPECT_THROW(parse_mpoly("x + 1"), std::invalid_argument);
  EXPECT_THROW(parse_mpoly("p + + q"), parse_error);
}

TEST(MPoly, DivideExact) {
  EXPECT_EQ(divide_exact(p * p - q * q, p - q), p + q);
  EXPECT_EQ(divide_exact(pow(p, 5) - 1, p - 1), pow(p, 4) + pow(p, 3) + p * p + p + 1);
  EXPECT_EQ(divide_exact(6 * p * q, 3 * q), 2 * p);
  try {
    divide_exact(p * p + 1, p - 1);
    FAIL() << "expected inexact_division";
  } catch (const inexact_division& e) {
    EXPECT_EQ(e.remainder(), MPoly(2));
  }
  EXPECT_THROW(divide_exact(p, 2 * p), inexact_division);
  EXPECT_THROW(divide_exact(p, MPoly{}), std::domain_error);
}

TEST(MPoly, ExponentOverflow) {
  EXPECT_THROW(pow(p, 70000), std::overflow_error);
}

class MPolyRandom : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240601};
  static constexpr int kCases = 250;
};

TEST_F(MPolyRandom, RingAxioms) {
  for (int i = 0; i < kCases; ++i) {
    const MPoly a = oracle::random_poly(rng), b = oracle::random_poly(rng), c = oracle::random_poly(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + MPoly{}, a);
    ASSERT_EQ(a * MPoly(1), a);
    ASSERT_TRUE((a + (-a)).is_zero());
    ASSERT_EQ(a - b, a + (-b));
  }
}

TEST_F(MPolyRandom, EvalIsAHomomorphism) {
  std::uniform_int_distribution<int> val(-9, 9);
  for (int i = 0; i < kCases; ++i) {
    const MPoly a = oracle::random_poly(rng), b = oracle::random_poly(rng);
    const Bindings at{{Var::p, val(rng)}, {Var::q, val(rng)}, {Var::k, val(rng)}};
    ASSERT_EQ(eval(a + b, at), eval(a, at) + eval(b, at));
    ASSERT_EQ(eval(a * b, at), eval(a, at) * eval(b, at));
    ASSERT_EQ(eval(-a, at), -eval(a, at));
  }
}

TEST_F(MPolyRandom, ExactDivisionRoundTrip) {
  int checked = 0;
  while (checked < kCases) {
    const MPoly f = oracle::random_poly(rng);
    const MPoly g = oracle::random_poly(rng, 3, 2);
    if (g.is_zero()) continue;
    ASSERT_EQ(divide_exact(f * g, g), f) << to_string(f) << " / " << to_string(g);
    ++checked;
  }
}

TEST_F(MPolyRandom, ParseRoundTrip) {
  for (int i = 0; i < kCases; ++i) {
    const MPoly f = oracle::random_poly(rng);
    ASSERT_EQ(parse_mpoly(to_string(f)), f) << to_string(f);
  }
}

}  // namespace
