#include <gtest/gtest.h>

#include <random>

#include "genus/error.hpp"
#include "genus/genus.hpp"
#include "support/random_spec.hpp"

using namespace genus;

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

class GenusF7 : public ::testing::Test {
 protected:
  FiniteField F = FiniteField::make(7, 1);
  PolyRing R{F};
  Poly P(const char* s) { return R.parse(s); }
  ExtensionSpec spec(std::vector<std::pair<std::uint32_t, const char*>> g) {
    std::vector<RawGenerator> raw;
    for (auto [a, A] : g) raw.push_back({FqElem{a}, R.parse(A)});
    return build_spec(F, 3, raw);
  }
};

TEST_F(GenusF7, CaseThreeExample) {
  const GenusReport rep = genus_field(spec({{6, "T^3+3*T^2+2*T"}}));
  EXPECT_EQ(rep.case_label, CaseLabel::C3);
  ASSERT_TRUE(rep.chosen_Pr);
  EXPECT_EQ(rep.chosen_Pr->P, P("T+2"));
  EXPECT_EQ(rep.chosen_Pr->a, 0);
  EXPECT_EQ(rep.chosen_Pr->b, 1);
  const std::vector<Poly> S{P("T"), P("T+1"), P("T+2")};
  const KummerLattice M = lattice::span(3, S, {Row{0, 1, 0, 2}, Row{0, 0, 1, 2}});
  ASSERT_TRUE(rep.M);
  EXPECT_EQ(rep.M->radical, M);
  EXPECT_EQ(rep.K_ge.radical, M);
  EXPECT_EQ(rep.K_gex.radical, lattice::span(3, S, {Row{0, 1, 0, 0}, Row{0, 0, 1, 0}, Row{0, 0, 0, 1}}));
  EXPECT_EQ(rep.genus_degree, 3u);
  EXPECT_EQ(rep.extended_degree, 9u);
  EXPECT_EQ(rep.e_inf, 1u);
  EXPECT_EQ(rep.f_inf, 1u);
  EXPECT_EQ(rep.m0, 1u);  // xi = -6 = 1 is a cube, so K = E
}

TEST_F(GenusF7, CaseSevenExample) {
  const GenusReport rep = genus_field(spec({{3, "T"}}));
  EXPECT_EQ(rep.case_label, CaseLabel::C7);
  EXPECT_EQ(rep.K_ge.radical, lattice::span(3, {P("T")}, {Row{1, 1}}));
  EXPECT_EQ(rep.K_gex.radical, lattice::span(3, {P("T")}, {Row{1, 0}, Row{0, 1}}));
  EXPECT_EQ(rep.K_gex.constant_degree, 3u);
  EXPECT_EQ(rep.K_ge.constant_degree, 1u);
  EXPECT_EQ(rep.genus_degree, 1u);
  EXPECT_EQ(rep.extended_degree, 3u);
  EXPECT_EQ(rep.e_inf, 3u);
  EXPECT_EQ(rep.f_inf, 1u);
  EXPECT_EQ(rep.m0, 3u);
}

TEST_F(GenusF7, CaseTwoExample) {
  const GenusReport rep = genus_field(spec({{6, "T"}}));
  EXPECT_EQ(rep.case_label, CaseLabel::C2);
  EXPECT_EQ(rep.K.radical, rep.E.radical);
  EXPECT_EQ(rep.K_ge.radical, rep.E_gex.radical);
  EXPECT_EQ(rep.K_ge.radical, rep.K.radical);
  EXPECT_EQ(rep.m0, 1u);
  ASSERT_TRUE(rep.M);
  EXPECT_EQ(rep.M->radical.rank(), 0u);  // one ramified prime
}

TEST_F(GenusF7, ExtendedGenusFieldOfMixedSupport) {
  const ExtensionSpec s = spec({{1, "T^4+T^2+T"}, {2, "T+1"}});
  const RamifiedSupport sup = ramified_support(s);
  ASSERT_EQ(sup.s, 1u);
  const KummerLattice Eg = build_E_gex(F, 3, sup);
  // -1 is a cube, so each prime contributes its own radical.
  EXPECT_EQ(Eg, lattice::span(3, sup.primes, {Row{0, 1, 0, 0}, Row{0, 0, 1, 0}, Row{0, 0, 0, 1}}));
}

TEST(Genus, EGexSignForEvenDegreeFreeExponent) {
  const FiniteField F = FiniteField::make(5, 1);
  const PolyRing R(F);
  RamifiedSupport sup;
  sup.primes = {R.parse("T"), R.parse("T^2+2")};
  sup.degrees = {1, 2};
  sup.beta = {{1}, {1}};
  sup.s = 1;
  // l = 2: T^2+2 keeps its sign, T picks up -1 = 4 (a square in F_5).
  const KummerLattice Eg = build_E_gex(F, 2, sup);
  EXPECT_EQ(Eg, lattice::span(2, sup.primes, {Row{F.power_class(F.from_int(-1), 2), 1, 0}, Row{0, 0, 1}}));
}

TEST(Genus, BezoutPairs) {
  const PolyRing R(FiniteField::make(7, 1));
  auto support_of = [&](std::vector<std::uint32_t> degs) {
    RamifiedSupport s;
    for (std::size_t i = 0; i < degs.size(); ++i) {
      s.primes.push_back(R.monic_irreducibles(degs[i])[i]);
      s.degrees.push_back(degs[i]);
    }
    return s;
  };
  auto check = [&](std::uint32_t l, std::uint32_t d, std::int64_t b, std::int64_t a) {
    const PrChoice c = choose_Pr_and_bezout(support_of({d}), l);
    EXPECT_EQ(c.b, b);
    EXPECT_EQ(c.a, a);
    EXPECT_EQ(c.a * l + c.b * d, 1);
  };
  check(3, 1, 1, 0);
  check(3, 2, 2, -1);
  check(2, 3, 1, -1);
  check(5, 2, 3, -1);
  try {
    choose_Pr_and_bezout(support_of({3}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllDegreesDivisible);
  }
  // The largest admissible prime in (degree, lex) order wins.
  const RamifiedSupport s = support_of({1, 2, 3});
  EXPECT_EQ(choose_Pr_and_bezout(s, 3).index, 1u);
  EXPECT_EQ(admissible_Pr(s, 3).size(), 2u);
}

TEST(Genus, BuildMTrivialForOnePrime) {
  const PolyRing R(FiniteField::make(7, 1));
  RamifiedSupport s;
  s.primes = {R.parse("T")};
  s.degrees = {1};
  EXPECT_EQ(build_M(s, 3, choose_Pr_and_bezout(s, 3)).rank(), 0u);
}

TEST(Genus, ConstantDegree) {
  const PolyRing R(FiniteField::make(7, 1));
  EXPECT_EQ(constant_degree(lattice::span(3, {R.T()}, {Row{1, 1}})), 1u);
  EXPECT_EQ(constant_degree(lattice::span(3, {R.T()}, {Row{1, 0}, Row{0, 1}})), 3u);
  EXPECT_EQ(constant_degree(lattice::trivial(3)), 1u);
}

TEST(Genus, NonKummerDegrees) {
  const FiniteField F = FiniteField::make(2, 1);
  const PolyRing R(F);
  const Poly A = R.parse("T^2+T+1"), B = R.parse("T^4+T+1");
  auto rep = [&](std::vector<Poly> P, std::vector<std::vector<std::uint32_t>> C, bool tw = false) {
    return genus_field_nonkummer(build_nonkummer_spec(F, 3, P, C, tw));
  };
  EXPECT_EQ(rep({A}, {{1}}).genus_degree, 1u);
  EXPECT_EQ(rep({A, B}, {{1}, {2}}).genus_degree, 3u);
  EXPECT_EQ(rep({A, B}, {{1, 0}, {0, 1}}).genus_degree, 1u);
  const GenusReport r = rep({A, B}, {{1}, {1}});
  EXPECT_EQ(r.case_label, CaseLabel::NonKummer);
  EXPECT_EQ(r.K_ge.cyclotomic.size(), 2u);
  EXPECT_EQ(r.K_ge, r.K_gex);
  EXPECT_EQ(r.e_inf, 1u);
  const GenusReport t = rep({A, B}, {{1}, {1}}, true);
  EXPECT_EQ(t.case_label, CaseLabel::NonKummerTwisted);
  EXPECT_FALSE(t.K_ge.constant_degree);
  EXPECT_FALSE(t.f_inf);
}

TEST(Genus, CaseLabelsRoundTrip) {
  for (auto c : {CaseLabel::C1, CaseLabel::C4, CaseLabel::C7, CaseLabel::NonKummer, CaseLabel::NonKummerTwisted})
    EXPECT_EQ(case_from_string(to_string(c)), c);
  EXPECT_THROW(case_from_string("C9"), Error);
}

TEST(Genus, PrOverrideMustBeAdmissible) {
  const FiniteField F = FiniteField::make(7, 1);
  const PolyRing R(F);
  const ExtensionSpec s = build_spec(F, 3, {{FqElem{1}, R.parse("T^4+T^2+T")}, {FqElem{2}, R.parse("T+1")}});
  try {
    genus_field(s, 0);  // T^3+T+1 has degree divisible by 3
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

struct FieldL {
  std::uint32_t p, n, l;
};

class GenusProperties : public ::testing::TestWithParam<FieldL> {};

TEST_P(GenusProperties, SandwichDegreesAndIdempotence) {
  const FiniteField F = FiniteField::make(GetParam().p, GetParam().n);
  const std::uint32_t l = GetParam().l;
  const PolyRing R(F);
  std::mt19937_64 rng(F.q() * 31 + l);
  for (int t = 0; t < 120; ++t) {
    const ExtensionSpec s = testgen::random_spec(F, l, rng);
    const GenusReport rep = genus_field(s);
    const KummerLattice& K = rep.K.radical;
    ASSERT_TRUE(lattice::contains(rep.K_ge.radical, K));
    ASSERT_TRUE(lattice::contains(rep.K_gex.radical, rep.K_ge.radical));
    ASSERT_TRUE(lattice::contains(rep.K_gex.radical, rep.E_gex.radical));
    ASSERT_TRUE(lattice::contains(rep.E_gex.radical, rep.E.radical));
    ASSERT_EQ(rep.genus_degree, ipow(l, rep.K_ge.radical.rank() - s.m()));
    ASSERT_EQ(rep.extended_degree, ipow(l, rep.K_gex.radical.rank() - s.m()));
    ASSERT_EQ(rep.K_gex.radical, lattice::join(rep.E_gex.radical, K));
    ASSERT_EQ(rep.m0 == 1u, rep.K.radical == rep.E.radical);
    if (rep.case_label == CaseLabel::C7 && s.m() == 1) {
      ASSERT_EQ(rep.K_gex.constant_degree, l);
      ASSERT_EQ(rep.extended_degree, rep.genus_degree * l);
    }

    // E_gex rebuilt from its own support is unchanged.
    RamifiedSupport again;
    for (const Poly& P : rep.E_gex.radical.support) {
      again.primes.push_back(P);
      again.degrees.push_back(static_cast<std::uint32_t>(P.degree()));
    }
    ASSERT_EQ(build_E_gex(F, l, again), rep.E_gex.radical);

    // K_ge is its own genus field. Radical inputs cannot carry constants,
    // so only geometric K_ge qualify.
    if (rep.K_ge.constant_degree != 1u) continue;
    std::vector<RawGenerator> raw;
    for (const auto& x : radicals(R, rep.K_ge.radical)) raw.push_back({x.gamma, x.poly});
    const ExtensionSpec g = build_spec(F, l, raw);
    ASSERT_EQ(genus_field(g).K_ge.radical, rep.K_ge.radical) << R.render(s.generators[0].D);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, GenusProperties,
                         ::testing::Values(FieldL{7, 1, 3}, FieldL{5, 1, 2}, FieldL{3, 2, 2}, FieldL{13, 1, 3},
                                           FieldL{2, 2, 3}));

}  // namespace
