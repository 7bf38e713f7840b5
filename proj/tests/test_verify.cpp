#include <gtest/gtest.h>

#include <random>

#include "genus/error.hpp"
#include "genus/verify.hpp"
#include "support/random_spec.hpp"

using namespace genus;

namespace {

ExtensionSpec one_gen(std::uint32_t p, std::uint32_t l, std::uint32_t a, const char* D) {
  const FiniteField F = FiniteField::make(p, 1);
  return build_spec(F, l, {{FqElem{a}, PolyRing(F).parse(D)}});
}

TEST(Verify, GenusPropertyExamples) {
  const ExtensionSpec s = one_gen(7, 3, 3, "T");
  const PolyRing R(s.field);
  const GenusReport rep = genus_field(s);
  EXPECT_TRUE(check_genus_property(R, rep.K.radical, rep.K.radical).passed);
  EXPECT_TRUE(check_genus_property(R, rep.K.radical, rep.K_ge.radical).passed);
  const PropertyCheck bad = check_genus_property(R, rep.K.radical, rep.K_gex.radical);
  EXPECT_FALSE(bad.passed);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->rfind("p_inf", 0), 0u);
  EXPECT_TRUE(check_genus_property(R, rep.K.radical, rep.K_gex.radical, true).passed);
  try {
    check_genus_property(R, rep.K_gex.radical, rep.K.radical);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContained);
  }
}

TEST(Verify, FinitePrimeWitness) {
  const ExtensionSpec s = one_gen(7, 3, 1, "T^2+T");
  const PolyRing R(s.field);
  const KummerLattice K = kummer_lattice(s);
  const KummerLattice L = lattice::join(K, lattice::span(3, {R.parse("T+2")}, {Row{0, 1}}));
  const PropertyCheck c = check_genus_property(R, K, L, true);
  EXPECT_FALSE(c.passed);
  EXPECT_EQ(c.witness, "T+2");
}

TEST(Verify, MaximalityMatchesExamples) {
  for (const auto& s : {one_gen(7, 3, 6, "T"), one_gen(7, 3, 6, "T^3+3*T^2+2*T"), one_gen(7, 3, 3, "T")}) {
    const GenusReport rep = genus_field(s);
    EXPECT_EQ(maximality_bruteforce(s), rep.K_ge.radical) << to_string(rep.case_label);
  }
  try {
    maximality_bruteforce(one_gen(7, 3, 1, "T^5+3*T^4+T^2+3*T"));  // T(T+1)(T+2)(T+3)(T+4)
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
}

TEST(Verify, CaseSevenConstants) {
  EXPECT_TRUE(verify_case7_constants(one_gen(7, 3, 3, "T"), 0).passed);
  EXPECT_TRUE(verify_case7_constants(one_gen(5, 2, 2, "T"), 0).passed);
  try {
    verify_case7_constants(one_gen(7, 3, 6, "T"), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

TEST(Verify, RunChecksDetectsTamperedReport) {
  const ExtensionSpec s = one_gen(7, 3, 6, "T^3+3*T^2+2*T");
  GenusReport rep = genus_field(s);
  for (const auto& c : run_checks(s, rep)) EXPECT_TRUE(c.passed) << c.name;
  rep.K_ge = rep.E_gex;
  bool any_failed = false;
  for (const auto& c : run_checks(s, rep)) any_failed = any_failed || !c.passed;
  EXPECT_TRUE(any_failed);
}

TEST(Verify, MaximalitySkippedAboveBound) {
  const ExtensionSpec s = one_gen(7, 3, 1, "T^5+3*T^4+T^2+3*T");
  ASSERT_EQ(ramified_support(s).r(), 5u);
  const auto checks = run_checks(s, genus_field(s));
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed) << c.name;
    if (c.name == "maximality") EXPECT_TRUE(c.skipped);
  }
}

TEST(Verify, RandomSpecsPassEveryCheck) {
  std::mt19937_64 rng(77);
  for (auto [p, l] : {std::pair{7u, 3u}, {5u, 2u}, {13u, 2u}}) {
    const FiniteField F = FiniteField::make(p, 1);
    for (int t = 0; t < 60; ++t) {
      const ExtensionSpec s = testgen::random_spec(F, l, rng);
      for (const auto& c : run_checks(s, genus_field(s)))
        ASSERT_TRUE(c.passed) << c.name << " " << c.witness.value_or("");
    }
  }
}

TEST(Verify, NonKummerChecks) {
  const FiniteField F = FiniteField::make(2, 1);
  const PolyRing R(F);
  const NonKummerSpec s = build_nonkummer_spec(F, 3, {R.parse("T^2+T+1"), R.parse("T^4+T+1")}, {{1}, {2}}, false);
  for (const auto& c : run_checks(s, genus_field_nonkummer(s))) EXPECT_TRUE(c.passed) << c.name;
}

}  // namespace
