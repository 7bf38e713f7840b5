#include <gtest/gtest.h>

#include <random>

#include "genus/characters.hpp"
#include "genus/error.hpp"

using namespace genus;

namespace {

std::vector<std::uint64_t> trial_division(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Order of x in (R_T/P)^* by repeated multiplication.
std::uint64_t brute_order(const PolyRing& R, const Poly& x, const Poly& P) {
  Poly y = R.mod(x, P);
  std::uint64_t k = 1;
  while (y != R.one()) {
    y = R.mod(R.mul(y, x), P);
    ++k;
  }
  return k;
}

// Every polynomial of degree < d.
std::vector<Poly> residues(const PolyRing& R, int d) {
  std::vector<Poly> out;
  const std::uint32_t q = R.field().q();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<FqElem> c;
    for (std::uint64_t t = idx; t; t /= q) c.push_back(FqElem{static_cast<std::uint32_t>(t % q)});
    out.push_back(R.from_coeffs(c));
  }
  return out;
}

TEST(Characters, PrimeFactorsMatchTrialDivision) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t n = 1 + rng() % 10000000;
    ASSERT_EQ(prime_factors(n), trial_division(n)) << n;
  }
  EXPECT_EQ(prime_factors((1ULL << 61) - 1), (std::vector<std::uint64_t>{(1ULL << 61) - 1}));
  EXPECT_EQ(prime_factors((1ULL << 32) + 1), (std::vector<std::uint64_t>{641, 6700417}));
  EXPECT_EQ(prime_factors(1), (std::vector<std::uint64_t>{}));
}

TEST(Characters, UnitGeneratorExamples) {
  const PolyRing R2(FiniteField::make(2, 1));
  EXPECT_EQ(canonical_unit_generator(R2, R2.parse("T^2+T+1")), R2.parse("T"));
  EXPECT_EQ(canonical_unit_generator(R2, R2.parse("T")), R2.parse("1"));
  const PolyRing R7(FiniteField::make(7, 1));
  EXPECT_EQ(canonical_unit_generator(R7, R7.parse("T")), R7.parse("3"));
  EXPECT_EQ(unit_group_order(R7.field(), R7.parse("T^2+1")), 48u);
}

TEST(Characters, UnitGeneratorIsSmallestOfFullOrder) {
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const PolyRing R(FiniteField::make(p, n));
    for (std::size_t d = 1; d <= 3; ++d)
      for (const Poly& P : R.monic_irreducibles(d)) {
        const std::uint64_t N = unit_group_order(R.field(), P);
        const Poly g = canonical_unit_generator(R, P);
        ASSERT_LT(g.degree(), P.degree());
        ASSERT_EQ(brute_order(R, g, P), N) << R.render(P);
        // Every smaller nonzero residue has smaller order.
        for (const Poly& x : residues(R, P.degree())) {
          if (x.is_zero() || !(x < g)) continue;
          ASSERT_LT(brute_order(R, x, P), N) << R.render(P) << " " << R.render(x);
        }
      }
  }
}

TEST(Characters, GroupTooLarge) {
  const PolyRing R(FiniteField::make(2, 8));
  try {
    unit_group_order(R.field(), R.pow(R.T(), 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
  }
}

ErrorCode nk_error(std::uint32_t p, std::uint32_t l, const std::vector<const char*>& primes,
                   std::vector<std::vector<std::uint32_t>> C) {
  const FiniteField F = FiniteField::make(p, 1);
  const PolyRing R(F);
  std::vector<Poly> P;
  for (const char* s : primes) P.push_back(R.parse(s));
  try {
    build_nonkummer_spec(F, l, P, std::move(C), false);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

TEST(Characters, ValidationErrors) {
  EXPECT_EQ(nk_error(7, 3, {"T"}, {{1}}), ErrorCode::IsKummer);
  EXPECT_EQ(nk_error(2, 2, {"T"}, {{1}}), ErrorCode::WildPrime);
  EXPECT_EQ(nk_error(2, 4, {"T"}, {{1}}), ErrorCode::NotPrime);
  EXPECT_EQ(nk_error(2, 3, {"T^3+T+1"}, {{1}}), ErrorCode::NoDegreeLSubfield);
  EXPECT_EQ(nk_error(2, 3, {"T^2+1"}, {{1}}), ErrorCode::NotIrreducible);
  EXPECT_EQ(nk_error(3, 5, {"2*T^4+1"}, {{1}}), ErrorCode::NotMonic);
  EXPECT_EQ(nk_error(2, 3, {"T^2+T+1", "T^2+T+1"}, {{1}, {1}}), ErrorCode::DuplicatePrime);
  EXPECT_EQ(nk_error(2, 3, {"T^2+T+1", "T^4+T+1"}, {{1}, {0}}), ErrorCode::UnramifiedListedPrime);
  EXPECT_EQ(nk_error(2, 3, {"T^2+T+1", "T^4+T+1"}, {{1, 1}, {2, 2}}), ErrorCode::DependentGenerators);
  EXPECT_EQ(nk_error(2, 3, {"T^2+T+1"}, {{1}, {1}}), ErrorCode::InvalidInput);
  EXPECT_EQ(nk_error(2, 3, {}, {}), ErrorCode::InvalidInput);
}

TEST(Characters, ProductGroupFieldAndRamification) {
  const FiniteField F = FiniteField::make(2, 1);
  const PolyRing R(F);
  const NonKummerSpec s =
      build_nonkummer_spec(F, 3, {R.parse("T^2+T+1"), R.parse("T^4+T+1")}, {{1}, {2}}, false);
  const auto L = product_group_field(s);
  ASSERT_EQ(L.size(), 2u);
  EXPECT_EQ(L[0].P, R.parse("T^2+T+1"));
  EXPECT_EQ(L[0].ell, 3u);
  EXPECT_EQ(L[0].unit_generator, R.parse("T"));
  for (const auto& P : s.primes) EXPECT_EQ(ramification_via_characters(s, P), 3u);
  EXPECT_THROW(ramification_via_characters(s, R.parse("T")), Error);
}

}  // namespace

namespace {

TEST(Characters, ExistenceConstraintOverF2) {
  const FiniteField F = FiniteField::make(2, 1);
  const PolyRing R(F);
  for (std::size_t d = 1; d <= 4; ++d)
    for (const Poly& P : R.monic_irreducibles(d)) {
      bool accepted = true;
      try {
        build_nonkummer_spec(F, 3, {P}, {{1}}, false);
      } catch (const Error& e) {
        accepted = false;
        EXPECT_EQ(e.code(), ErrorCode::NoDegreeLSubfield);
      }
      EXPECT_EQ(accepted, d % 2 == 0) << R.render(P);
    }
}

}  // namespace
