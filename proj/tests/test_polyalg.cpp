#include "bidisk/polyalg.hpp"
#include "bidisk/random_poly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bidisk;

namespace {

Poly2 P(const char* s) { return Poly2::parse(s); }

std::uint64_t finite(const Colength& c) {
  EXPECT_TRUE(std::holds_alternative<std::uint64_t>(c));
  return std::holds_alternative<std::uint64_t>(c) ? std::get<std::uint64_t>(c) : ~0ULL;
}

}  // namespace

TEST(Rat, CanonicalForm) {
  EXPECT_EQ(Rat(6, -4).to_string(), "-3/2");
  EXPECT_EQ(*Rat::parse("-10/4"), Rat(-5, 2));
  EXPECT_FALSE(Rat::parse("1/0").has_value());
  EXPECT_FALSE(Rat::parse("1.5").has_value());
  EXPECT_EQ(*Rat(9, 4).sqrt(), Rat(3, 2));
  EXPECT_FALSE(Rat(2).sqrt().has_value());
  EXPECT_FALSE(Rat(-4).sqrt().has_value());
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
}

TEST(Poly2Literal, PrintsCanonically) {
  EXPECT_EQ(P("z2 + z1^2 + 2*z2*z1 - 1/3").to_string(), "z1^2 + 2*z1*z2 + z2 - 1/3");
  EXPECT_EQ(P("  -z1 * z1 +z1^2 ").to_string(), "0");
  EXPECT_EQ(P("3/6*z1^0*z2^3").to_string(), "1/2*z2^3");
  EXPECT_EQ(P("-1").to_string(), "-1");
  EXPECT_EQ(P("z1*z2 - 4/3*z2").to_string(), "z1*z2 - 4/3*z2");
}

TEST(Poly2Literal, RejectsMalformedInput) {
  EXPECT_THROW(P(""), PolyParseError);
  EXPECT_THROW(P("z3"), PolyParseError);
  EXPECT_THROW(P("z1 z2"), PolyParseError);
  EXPECT_THROW(P("2/0*z1"), PolyParseError);
  EXPECT_THROW(P("z1^"), PolyParseError);
  EXPECT_THROW(P("x + 1"), PolyParseError);
}

TEST(Poly2Literal, ParsePrintRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Poly2 p = random_poly(rng, {6, 8, 20, 9});
    EXPECT_EQ(Poly2::parse(p.to_string()), p) << p;
  }
}

TEST(Gcd3, Examples) {
  EXPECT_EQ(gcd3(P("z1*z2"), P("-z1^2"), P("z2^2")), P("1"));
  EXPECT_EQ(gcd3(P("z1"), P("z1^2"), P("z1*z2")), P("z1"));
  EXPECT_EQ(gcd3(P("5"), Poly2(), Poly2()), P("1"));
  EXPECT_THROW(gcd3(Poly2(), Poly2(), Poly2()), DegenerateInput);
}

TEST(Gcd3, MatchesFactorIntersectionOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 120; ++i) {
    std::vector<oracle::Factored> fs;
    const oracle::Factored common = oracle::random_factored(rng, 2, 2);
    for (int k = 0; k < 3; ++k) {
      oracle::Factored f = oracle::random_factored(rng, 2, 3);
      for (std::size_t j = 0; j < f.exponents.size(); ++j) f.exponents[j] += common.exponents[j];
      fs.push_back(f);
    }
    const Poly2 expected = oracle::gcd_by_factor_intersection(fs);
    const Poly2 got = gcd3(fs[0].expand(), fs[1].expand(), fs[2].expand());
    EXPECT_EQ(got, expected) << fs[0].expand() << " | " << fs[1].expand() << " | " << fs[2].expand();
  }
}

TEST(Gcd3, DividesEachArgumentProperty) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Poly2 delta = random_nonzero_poly(rng, {2, 3, 5, 2});
    const Poly2 a = delta * random_poly(rng, {3, 3, 5, 2});
    const Poly2 b = delta * random_poly(rng, {3, 3, 5, 2});
    const Poly2 c = delta * random_nonzero_poly(rng, {3, 3, 5, 2});
    const Poly2 g = gcd3(a, b, c);
    EXPECT_EQ(g.leading_coeff(), Rat(1));
    EXPECT_TRUE(divide_exact(a, g).has_value());
    EXPECT_TRUE(divide_exact(b, g).has_value());
    EXPECT_TRUE(divide_exact(c, g).has_value());
    EXPECT_TRUE(divide_exact(g, delta).has_value()) << "gcd " << g << " misses common factor " << delta;
  }
}

TEST(DivideExact, DetectsNonDivisibility) {
  EXPECT_EQ(*divide_exact(P("z1^2 - z2^2"), P("z1 + z2")), P("z1 - z2"));
  EXPECT_FALSE(divide_exact(P("z1^2 + z2"), P("z1")).has_value());
  EXPECT_THROW(divide_exact(P("z1"), Poly2()), std::domain_error);
}

TEST(PolySqrt, Examples) {
  EXPECT_EQ(*poly_sqrt(P("z1^2")), P("z1"));
  EXPECT_EQ(*poly_sqrt(P("z1^2 + 2*z1*z2 + z2^2")), P("z1 + z2"));
  EXPECT_FALSE(poly_sqrt(P("z1*z2")).has_value());
  EXPECT_EQ(*poly_sqrt(Poly2()), Poly2());
  EXPECT_EQ(*poly_sqrt(P("9/4")), P("3/2"));
  EXPECT_FALSE(poly_sqrt(P("-z1^2")).has_value());
  EXPECT_FALSE(poly_sqrt(P("2*z1^2")).has_value());
  EXPECT_FALSE(poly_sqrt(P("z1^2 + 1")).has_value());
  EXPECT_FALSE(poly_sqrt(P("z1^2 + z2")).has_value());
}

TEST(PolySqrt, RecoversNormalizedRootProperty) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Poly2 p = random_nonzero_poly(rng, {6, 5, 9, 4});
    const Poly2 normalized = p.leading_coeff().sign() > 0 ? p : -p;
    auto root = poly_sqrt(p * p);
    ASSERT_TRUE(root.has_value()) << p;
    EXPECT_EQ(*root, normalized);
    EXPECT_EQ(*root * *root, p * p);
  }
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(P("z2"), P("z1"), P("z1*z2")), P("z1*z2"));
  EXPECT_EQ(substitute(P("z1^2 + z2"), P("z1"), P("z2")), P("z1^2 + z2"));
  EXPECT_EQ(substitute(P("z1*z2"), P("z1 + z2"), P("z1 - z2")), P("z1^2 - z2^2"));
}

TEST(Substitute, IsRingHomomorphismProperty) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const Poly2 p = random_poly(rng, {3, 4, 5, 2});
    const Poly2 q = random_poly(rng, {3, 4, 5, 2});
    const Poly2 e1 = random_poly(rng, {2, 3, 3, 1});
    const Poly2 e2 = random_poly(rng, {2, 3, 3, 1});
    EXPECT_EQ(substitute(p * q, e1, e2), substitute(p, e1, e2) * substitute(q, e1, e2));
    EXPECT_EQ(substitute(p + q, e1, e2), substitute(p, e1, e2) + substitute(q, e1, e2));
    const int bound = std::max(p.total_degree(), 0) * std::max({e1.total_degree(), e2.total_degree(), 0});
    EXPECT_LE(substitute(p, e1, e2).total_degree(), bound);
  }
}

TEST(Colength, Examples) {
  EXPECT_EQ(finite(colength(P("z1"), P("z2"))), 1U);
  EXPECT_EQ(finite(colength(P("z1^2"), P("z2"))), 2U);
  EXPECT_TRUE(std::holds_alternative<NotFinite>(colength(P("z1"), P("z1"))));
}

TEST(Colength, UnitAndDegenerateIdeals) {
  EXPECT_EQ(finite(colength(Poly2(), P("1"))), 0U);
  EXPECT_EQ(finite(colength(P("z1"), P("z1 + 1"))), 0U);
  EXPECT_TRUE(std::holds_alternative<NotFinite>(colength(Poly2(), P("z1"))));
  EXPECT_TRUE(std::holds_alternative<NotFinite>(colength(Poly2(), Poly2())));
  EXPECT_TRUE(std::holds_alternative<NotFinite>(colength(P("z1*z2"), P("z1^2 + z1"))));
}

TEST(Colength, MonomialPairsGiveBezoutProduct) {
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = 1; b <= 6; ++b)
      EXPECT_EQ(finite(colength(P("z1").pow(a), P("z2").pow(b))), a * b) << a << "," << b;
}

TEST(Colength, CountsAllPointsOfTheAffineScheme) {
  // z1^2 - 1 = z2 = 0 is two reduced points; (z1^2, z1*z2, z2^2) is not a
  // complete intersection, but (z1^2 + z2, z2^2) has colength 4.
  EXPECT_EQ(finite(colength(P("z1^2 - 1"), P("z2"))), 2U);
  EXPECT_EQ(finite(colength(P("z1^2 + z2"), P("z2^2"))), 4U);
  EXPECT_EQ(finite(colength(P("z1*z2 - 1"), P("z1 - z2"))), 2U);
}

TEST(Colength, AgreesWithMacaulayOracleOnGenericPairs) {
  // Leading forms z1^d1 and z2^d2 are coprime, so there is no intersection at
  // infinity: colength = d1*d2 and the Macaulay quotient stabilizes.
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> deg(1, 3);
    const int d1 = deg(rng);
    const int d2 = deg(rng);
    const Poly2 beta = P("z1").pow(d1) + random_poly(rng, {d1 - 1, 4, 4, 2});
    const Poly2 gamma = P("z2").pow(d2) + random_poly(rng, {d2 - 1, 4, 4, 2});
    const std::uint64_t c = finite(colength(beta, gamma));
    EXPECT_EQ(c, static_cast<std::uint64_t>(d1 * d2)) << beta << " ; " << gamma;
    EXPECT_EQ(c, oracle::macaulay_quotient_dim({beta, gamma}, d1 + d2 + 1)) << beta << " ; " << gamma;
  }
}

TEST(Groebner, ReducedBasisOfPrincipalIdealIsMonicGenerator) {
  const auto basis = groebner_basis({P("2*z1^2 + 4*z2")});
  ASSERT_EQ(basis.size(), 1U);
  EXPECT_EQ(basis[0], P("z1^2 + 2*z2"));
}
