#pragma once

#include <cstdint>
#include <vector>

#include "genus/extension.hpp"
#include "genus/polyring.hpp"

namespace genus {

/// L_P: the unique degree-ell subfield of the cyclotomic field k(Lambda_P).
/// The order-ell character chi_P it belongs to is fixed by unit_generator,
/// the canonical generator of (R_T/P)^*.
struct CyclotomicSubfield {
  Poly P;
  std::uint32_t ell = 2;
  Poly unit_generator;

  friend bool operator==(const CyclotomicSubfield&, const CyclotomicSubfield&) = default;
};

/// K cut out by chi_j = prod_i chi_{P_i}^{C[i][j]}, j = 1..m, with l not
/// dividing q - 1. `twisted` declares K not contained in a cyclotomic field.
struct NonKummerSpec {
  FiniteField field;
  std::uint32_t l = 3;
  std::vector<Poly> primes;
  std::vector<std::vector<std::uint32_t>> C;
  bool twisted = false;

  std::size_t r() const noexcept { return primes.size(); }
  std::size_t m() const noexcept { return C.empty() ? 0 : C.front().size(); }
  friend bool operator==(const NonKummerSpec&, const NonKummerSpec&) = default;
};

/// Largest supported |(R_T/P)^*| = q^deg P - 1.
inline constexpr std::uint64_t kMaxUnitGroupOrder = (1ULL << 62);

/// Prime factors (ascending, without multiplicity) of n >= 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Order of (R_T/P)^*, or GroupTooLarge.
std::uint64_t unit_group_order(const FiniteField& field, const Poly& P);

/// Smallest polynomial of degree < deg P (Poly ordering) generating (R_T/P)^*.
Poly canonical_unit_generator(const PolyRing& ring, const Poly& P);

/// Validates: l prime, l != p (WildPrime), l not dividing q - 1 (IsKummer),
/// primes monic (NotMonic) irreducible (NotIrreducible) distinct
/// (DuplicatePrime) with l | q^deg - 1 (NoDegreeLSubfield), C of shape r x m
/// with nonzero rows (UnramifiedListedPrime) and rank m (DependentGenerators).
NonKummerSpec build_nonkummer_spec(const FiniteField& field, std::uint32_t l, std::vector<Poly> primes,
                                   std::vector<std::vector<std::uint32_t>> C, bool twisted);

/// |X_P|: l when row P of C is nonzero.
std::uint32_t ramification_via_characters(const NonKummerSpec& spec, const Poly& P);

/// [L_1, ..., L_r], the field of Y = prod X_P.
std::vector<CyclotomicSubfield> product_group_field(const NonKummerSpec& spec);

}  // namespace genus
