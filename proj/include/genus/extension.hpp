#pragma once

#include <cstdint>
#include <vector>

#include "genus/gf.hpp"
#include "genus/lattice.hpp"
#include "genus/polyring.hpp"

namespace genus {

/// gamma * D with D monic and l-power-free; houses K_j = k((gamma D)^(1/l)).
struct RadicalGenerator {
  FqElem gamma;
  Poly D;

  friend bool operator==(const RadicalGenerator&, const RadicalGenerator&) = default;
};

/// K = K_1 ... K_m, elementary abelian of exponent l, Kummer (l | q - 1).
struct ExtensionSpec {
  FiniteField field;
  std::uint32_t l = 2;
  std::vector<RadicalGenerator> generators;

  std::size_t m() const noexcept { return generators.size(); }
  friend bool operator==(const ExtensionSpec&, const ExtensionSpec&) = default;
};

/// Unnormalised generator a * A as read from input.
struct RawGenerator {
  FqElem a;
  Poly A;
};

/// Primes dividing some D_j, ordered so that the first s have l | deg P,
/// each block sorted by Poly ordering. beta[i][j] = v_{P_i}(D_j).
struct RamifiedSupport {
  std::vector<Poly> primes;
  std::vector<std::uint32_t> degrees;
  std::vector<std::vector<std::uint32_t>> beta;
  std::size_t s = 0;

  std::size_t r() const noexcept { return primes.size(); }
  friend bool operator==(const RamifiedSupport&, const RamifiedSupport&) = default;
};

/// F_t = k((eta R)^(1/l)) for one projective class alpha of F_l^m.
struct SubfieldDatum {
  std::vector<std::uint32_t> alpha;
  FqElem eta;
  Poly R;
};

/// a * A = gamma * f^l * D with D monic l-power-free.
RadicalGenerator normalize_generator(const PolyRing& ring, FqElem a, const Poly& A, std::uint32_t l,
                                     std::uint64_t seed = kDefaultSeed);

/// Validates and normalises. Throws WildPrime, NotKummer, ConstantRadical or
/// DependentGenerators (witness: a dependency vector alpha, first nonzero
/// entry 1, with prod (gamma_j D_j)^alpha_j in F_q^* (k^*)^l).
ExtensionSpec build_spec(const FiniteField& field, std::uint32_t l, const std::vector<RawGenerator>& raw,
                         std::uint64_t seed = kDefaultSeed);

/// Like build_spec, but replaces a dependent generator list by a basis of the
/// lattice it spans. Still throws DependentGenerators when the span contains a
/// nontrivial constant (the extension would not be geometric).
ExtensionSpec build_spec_reduced(const FiniteField& field, std::uint32_t l, const std::vector<RawGenerator>& raw,
                                 std::uint64_t seed = kDefaultSeed);

RamifiedSupport ramified_support(const ExtensionSpec& spec, std::uint64_t seed = kDefaultSeed);

/// One datum per projective class of F_l^m \ {0}, (l^m - 1)/(l - 1) in all.
std::vector<SubfieldDatum> enumerate_subfields(const ExtensionSpec& spec, std::uint64_t seed = kDefaultSeed);

/// Class of gamma * D in k^*/(k^*)^l.
RadicalClass radical_class(const PolyRing& ring, std::uint32_t l, FqElem gamma, const Poly& D,
                           std::uint64_t seed = kDefaultSeed);
/// The lattice of K.
KummerLattice kummer_lattice(const ExtensionSpec& spec, std::uint64_t seed = kDefaultSeed);

/// Representative gamma * poly of a lattice row, gamma = g0^constant, poly
/// monic: the form used in reports.
struct RadicalText {
  FqElem gamma;
  Poly poly;
};
std::vector<RadicalText> radicals(const PolyRing& ring, const KummerLattice& lat);
KummerLattice lattice_from_radicals(const PolyRing& ring, std::uint32_t l, const std::vector<RadicalText>& rads,
                                    std::uint64_t seed = kDefaultSeed);

/// Gamma replaced by the power-class representative g0^class.
ExtensionSpec canonical(const ExtensionSpec& spec);

}  // namespace genus
