#pragma once

#include <cstdint>
#include <string_view>

#include "genus/extension.hpp"
#include "genus/lattice.hpp"

namespace genus {

/// Behaviour of p_inf in a cyclic degree-l Kummer layer.
enum class InfinityBehavior { Ramified, Split, Inert };

std::string_view to_string(InfinityBehavior b) noexcept;

/// Ramification index and inertia degree of p_inf (each 1 or l). The number
/// of places above p_inf is l^g_count_exponent.
struct InfinityInvariants {
  std::uint32_t e_inf = 1;
  std::uint32_t f_inf = 1;
  std::uint32_t g_count_exponent = 0;

  friend bool operator==(const InfinityInvariants&, const InfinityInvariants&) = default;
};

InfinityBehavior classify_p_infty_cyclic(const RadicalGenerator& gen, std::uint32_t l, const FiniteField& field);

/// Local Kummer computation: the image of the lattice in
/// k_inf^*/(k_inf^*)^l = Z/l x F_q^*/(F_q^*)^l under c*prod P^e ->
/// (-sum e deg P, c). e_inf is the order of its valuation projection and
/// f_inf = |image| / e_inf.
InfinityInvariants infinite_invariants(const KummerLattice& lat);

/// Same invariants for K, and additionally recomputes f_inf from the degree-l
/// subfields F_t (inert iff l | deg R_t and eta_t not an l-th power). Throws
/// InternalInconsistency if the two disagree.
InfinityInvariants infinite_invariants(const ExtensionSpec& spec);

/// f_inf decided by the subfield enumeration alone.
std::uint32_t f_inf_from_subfields(const ExtensionSpec& spec);

/// l if some lattice row has a nonzero exponent at P, else 1.
std::uint32_t finite_ramification_index(const KummerLattice& lat, const Poly& P);

}  // namespace genus
