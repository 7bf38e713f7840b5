#include <gtest/gtest.h>

#include <random>

#include "genus/error.hpp"
#include "genus/polyring.hpp"
#include "support/oracles.hpp"

using genus::ErrorCode;
using genus::FiniteField;
using genus::FqElem;
using genus::Poly;
using genus::PolyRing;

namespace {

Poly random_poly(const FiniteField& F, std::mt19937_64& rng, int deg) {
  Poly p;
  for (int i = 0; i <= deg; ++i) p.c.push_back(FqElem{static_cast<std::uint32_t>(rng() % F.q())});
  if (p.c.back().is_zero()) p.c.back() = F.one();
  return p;
}

TEST(PolyRing, ParseRenderRoundTrip) {
  const PolyRing R(FiniteField::make(7, 1));
  const Poly D = R.parse("T^3+3*T^2+2*T");
  EXPECT_EQ(D, R.mul(R.mul(R.T(), R.parse("T+1")), R.parse("T+2")));
  EXPECT_EQ(R.render(D), "T^3+3*T^2+2*T");
  EXPECT_EQ(R.parse("(T+1)^2"), R.parse("T^2+2*T+1"));
  EXPECT_EQ(R.parse("2*T - 1"), R.parse("2*T+6"));
  EXPECT_EQ(R.parse("-T"), R.parse("6*T"));
  for (const char* s : {"T", "T+1", "3*T^4+T+6", "5"}) EXPECT_EQ(R.render(R.parse(s)), s);

  const PolyRing R9(FiniteField::make(3, 2));
  const Poly p = R9.parse("u*T+1");
  EXPECT_EQ(p.coeff(1), R9.field().u());
  EXPECT_EQ(R9.parse(R9.render(R9.parse("(u+1)*T^2+u*T+2"))), R9.parse("(u+1)*T^2+u*T+2"));
}

TEST(PolyRing, ParseErrors) {
  const PolyRing R(FiniteField::make(5, 1));
  try {
    R.parse("T+");
    FAIL();
  } catch (const genus::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  }
  try {
    R.parse("x+1");
    FAIL();
  } catch (const genus::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownCoefficient);
  }
}

TEST(PolyRing, OrderingIsDegreeThenConstantTermFirst) {
  const PolyRing R(FiniteField::make(3, 1));
  EXPECT_LT(R.parse("2"), R.parse("T"));
  EXPECT_LT(R.parse("T"), R.parse("T+1"));
  EXPECT_LT(R.parse("T+1"), R.parse("T+2"));
  EXPECT_LT(R.parse("2*T"), R.parse("T+1"));  // constant term compared first
  EXPECT_LT(R.parse("T+2"), R.parse("T^2"));
}

TEST(PolyRing, DivisionIdentity) {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 2u}, {7u, 1u}, {2u, 3u}}) {
    const PolyRing R(FiniteField::make(p, n));
    for (int t = 0; t < 200; ++t) {
      const Poly a = random_poly(R.field(), rng, static_cast<int>(rng() % 9));
      const Poly b = random_poly(R.field(), rng, static_cast<int>(rng() % 5));
      const auto [q, r] = R.divrem(a, b);
      ASSERT_EQ(R.add(R.mul(q, b), r), a);
      ASSERT_LT(r.degree(), b.degree());
      ASSERT_EQ(R.mul(a, b).c, oracle::naive_mul(R.field(), a.c, b.c));
      const Poly g = R.gcd(a, b);
      ASSERT_TRUE(R.mod(a, g).is_zero());
      ASSERT_TRUE(R.mod(b, g).is_zero());
    }
  }
}

TEST(PolyRing, IrreducibleCountMatchesNecklaceFormula) {
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    const PolyRing R(FiniteField::make(p, n));
    for (std::size_t d = 1; d <= (R.field().q() <= 3 ? 6u : 3u); ++d)
      EXPECT_EQ(R.monic_irreducibles(d).size(), oracle::necklace(R.field().q(), d)) << "q=" << R.field().q() << " d=" << d;
  }
}

TEST(PolyRing, IsIrreducibleMatchesTrialProducts) {
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const FiniteField F = FiniteField::make(p, n);
    const PolyRing R(F);
    for (std::size_t d = 1; d <= 4; ++d)
      for (const auto& f : oracle::all_monic(F, d)) ASSERT_EQ(R.is_irreducible(f), oracle::irreducible_by_products(F, f)) << R.render(f);
  }
}

TEST(PolyRing, FactorizationReexpandsIntoIrreducibles) {
  std::mt19937_64 rng(2024);
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {2u, 3u}, {13u, 1u}}) {
    const PolyRing R(FiniteField::make(p, n));
    for (int t = 0; t < 60; ++t) {
      // Products with repeated factors exercise the squarefree stage.
      Poly f = random_poly(R.field(), rng, 1 + static_cast<int>(rng() % 5));
      if (t % 3 == 0) f = R.mul(f, R.pow(random_poly(R.field(), rng, 1 + static_cast<int>(rng() % 2)), p));
      if (t % 4 == 0) f = R.mul(f, f);
      const auto fac = R.factor(f);
      ASSERT_EQ(R.expand(fac), f);
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const Poly& P = fac.factors[i].first;
        ASSERT_EQ(P.lead(), R.field().one());
        if (P.degree() <= 4 && R.field().q() <= 7) ASSERT_TRUE(oracle::irreducible_by_products(R.field(), P));
        ASSERT_TRUE(R.is_irreducible(P));
        for (std::size_t k = 0; k < i; ++k) ASSERT_NE(fac.factors[k].first, P);
      }
    }
  }
}

TEST(PolyRing, FactorizationIsDeterministic) {
  const PolyRing R(FiniteField::make(5, 1));
  const Poly f = R.parse("T^8+3*T^5+T^2+4");
  const auto a = R.factor(f, 7);
  const auto b = R.factor(f, 7);
  const auto c = R.factor(f, 99);
  EXPECT_EQ(a.factors, b.factors);
  EXPECT_EQ(a.factors, c.factors);  // sorted output does not depend on the seed
}

TEST(PolyRing, FactorMonicRejectsBadInput) {
  const PolyRing R(FiniteField::make(5, 1));
  auto code_of = [&](const Poly& f) {
    try {
      R.factor_monic(f);
    } catch (const genus::Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code_of(R.parse("3")), ErrorCode::Constant);
  EXPECT_EQ(code_of(R.parse("2*T+1")), ErrorCode::NotMonic);
}

TEST(PolyRing, EvaluationAgreesWithRoots) {
  const PolyRing R(FiniteField::make(7, 1));
  const Poly D = R.parse("T^3+3*T^2+2*T");
  for (std::uint32_t x = 0; x < 7; ++x)
    EXPECT_EQ(R.eval(D, FqElem{x}).is_zero(), x == 0 || x == 5 || x == 6) << x;
}

}  // namespace
