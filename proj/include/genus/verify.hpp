#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus/genus.hpp"

namespace genus {

struct PropertyCheck {
  std::string name;
  bool passed = true;
  bool skipped = false;
  /// Prime, lattice row or message exposing the failure (or skip reason).
  std::optional<std::string> witness;
};

/// L/K unramified at every finite prime of the union support, and p_inf has
/// the same (e, f) in L as in K. `finite_only` drops the condition at p_inf.
/// Throws NotContained unless K is a sublattice of L.
PropertyCheck check_genus_property(const PolyRing& ring, const KummerLattice& K, const KummerLattice& L,
                                   bool finite_only = false);

/// Largest support size accepted by maximality_bruteforce.
inline constexpr std::size_t kMaxBruteforceSupport = 4;

/// The unique maximal L with K <= L <= join(E_gex, K, <c>), c a fixed
/// non-l-th power, passing check_genus_property. Enumerates every subspace of
/// the quotient by K. Throws BoundExceeded when r > 4 and NoUniqueMaximum if
/// the passing lattices do not have a largest element.
KummerLattice maximality_bruteforce(const ExtensionSpec& spec, std::uint64_t seed = kDefaultSeed);

/// Subfield enumeration verdict on f_inf against the local Kummer group.
PropertyCheck crosscheck_f_infinity(const ExtensionSpec& spec);

/// Constant growth test on generator j: requires l not dividing n_j and xi_j
/// not an l-th power (PreconditionViolated otherwise).
PropertyCheck verify_case7_constants(const ExtensionSpec& spec, std::size_t j);

/// genus_field with every admissible P_r gives the same K_ge lattice.
PropertyCheck check_alternate_Pr(const ExtensionSpec& spec, const GenusReport& report);

/// Every check that applies to the spec, given a report claimed for it.
/// Maximality is reported as skipped above the support bound.
std::vector<PropertyCheck> run_checks(const ExtensionSpec& spec, const GenusReport& report,
                                      std::uint64_t seed = kDefaultSeed);
std::vector<PropertyCheck> run_checks(const NonKummerSpec& spec, const GenusReport& report);

}  // namespace genus
