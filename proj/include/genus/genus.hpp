#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "genus/characters.hpp"
#include "genus/extension.hpp"
#include "genus/lattice.hpp"
#include "genus/localdata.hpp"

namespace genus {

/// A field k(Delta^(1/l)) * L_1 ... L_t, optionally composed with K when K
/// has no explicit description (twisted non-Kummer input).
struct FieldDescription {
  KummerLattice radical;
  std::vector<CyclotomicSubfield> cyclotomic;
  bool joined_with_K = false;
  /// [constant field : F_q]; empty when undetermined.
  std::optional<std::uint32_t> constant_degree;

  friend bool operator==(const FieldDescription&, const FieldDescription&) = default;
};

enum class CaseLabel { C1, C2, C3, C4, C5, C6, C7, NonKummer, NonKummerTwisted };

std::string_view to_string(CaseLabel c) noexcept;
CaseLabel case_from_string(std::string_view s);

/// P_r (index into the support), its degree d_r and a, b with a l + b d_r = 1,
/// 0 < b < l.
struct PrChoice {
  std::size_t index = 0;
  Poly P;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const PrChoice&, const PrChoice&) = default;
};

using SpecVariant = std::variant<ExtensionSpec, NonKummerSpec>;

struct GenusReport {
  CaseLabel case_label = CaseLabel::C1;
  SpecVariant spec;
  RamifiedSupport support;
  std::optional<PrChoice> chosen_Pr;
  FieldDescription K;
  FieldDescription E;
  FieldDescription E_gex;
  std::optional<FieldDescription> M;
  FieldDescription K_ge;
  FieldDescription K_gex;
  std::uint64_t genus_degree = 1;
  std::uint64_t extended_degree = 1;
  std::uint32_t e_inf = 1;
  std::optional<std::uint32_t> f_inf;
  std::optional<std::uint32_t> m0;

  friend bool operator==(const GenusReport&, const GenusReport&) = default;
};

/// l^c with c the rank of the constant part of the lattice.
std::uint32_t constant_degree(const KummerLattice& lat);
FieldDescription describe(const KummerLattice& lat);

/// E = prod k((xi_j D_j)^(1/l)), xi_j = (-1)^deg D_j: the part of K with
/// p_inf split.
KummerLattice build_E(const ExtensionSpec& spec, const RamifiedSupport& support);

/// k((P_i)^(1/l)) for l | d_i and k(((-1)^d_i P_i)^(1/l)) otherwise.
KummerLattice build_E_gex(const FiniteField& field, std::uint32_t l, const RamifiedSupport& support);

/// Every prime with l not dividing its degree, each with its Bezout pair.
std::vector<PrChoice> admissible_Pr(const RamifiedSupport& support, std::uint32_t l);

/// The default P_r: largest admissible prime in (degree, lex) order. Throws
/// AllDegreesDivisible when there is none.
PrChoice choose_Pr_and_bezout(const RamifiedSupport& support, std::uint32_t l);

/// M = prod_{i != r} k((P_i P_r^{-b d_i})^(1/l)); trivial when r = 1.
KummerLattice build_M(const RamifiedSupport& support, std::uint32_t l, const PrChoice& pr);

/// Genus field K_ge and extended genus field K_gex of a Kummer extension.
/// `pr_index` overrides the choice of P_r (must be admissible).
GenusReport genus_field(const ExtensionSpec& spec, std::optional<std::size_t> pr_index = std::nullopt,
                        std::uint64_t seed = kDefaultSeed);

/// K_ge = K_gex = L_1 ... L_r (joined with K when twisted).
GenusReport genus_field_nonkummer(const NonKummerSpec& spec);

}  // namespace genus
