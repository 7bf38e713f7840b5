#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "genus/polyring.hpp"

namespace genus {

using Row = std::vector<std::uint32_t>;

/// One class of k^*/(k^*)^l of the form c * prod P^e with P monic irreducible:
/// `constant` is the power class of c, exponents are reduced mod l.
struct RadicalClass {
  std::uint32_t constant = 0;
  std::vector<std::pair<Poly, std::uint32_t>> exponents;
};

/// Finite subgroup of k^*/(k^*)^l, i.e. the field k(Delta^(1/l)).
///
/// Coordinates: column 0 is the constant class, column i >= 1 is the exponent
/// of support[i - 1]. Canonical form: support sorted, every support prime has
/// a nonzero column, rows in reduced row-echelon form. Two lattices describe
/// the same field iff they compare equal.
struct KummerLattice {
  std::uint32_t l = 2;
  std::vector<Poly> support;
  std::vector<Row> rows;

  std::size_t rank() const noexcept { return rows.size(); }
  friend bool operator==(const KummerLattice&, const KummerLattice&) = default;
};

namespace lattice {

/// Subgroup generated by `rows` (coordinates over `support`), canonicalised.
/// Duplicate support entries are merged.
KummerLattice span(std::uint32_t l, std::vector<Poly> support, std::vector<Row> rows);
KummerLattice span(std::uint32_t l, const std::vector<RadicalClass>& generators);
KummerLattice trivial(std::uint32_t l);

bool member(const KummerLattice& lat, const RadicalClass& x);
/// Field compositum. Throws FieldMismatch when l differs.
KummerLattice join(const KummerLattice& a, const KummerLattice& b);
/// True iff sub is contained in super (member-wise).
bool contains(const KummerLattice& super, const KummerLattice& sub);
/// Rows with zero polynomial part: the constant subextension.
KummerLattice constant_kernel(const KummerLattice& lat);

/// Rows re-expressed over `support`, which must contain lat.support.
std::vector<Row> express(const KummerLattice& lat, const std::vector<Poly>& support);
std::vector<RadicalClass> classes(const KummerLattice& lat);

/// Reduced row-echelon form over F_l with pivots searched in column order
/// `order`; zero rows dropped. Exposed for the verify module and tests.
std::vector<Row> rref(std::uint32_t l, std::vector<Row> rows, const std::vector<std::size_t>& order);
std::vector<Row> rref(std::uint32_t l, std::vector<Row> rows);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t l);

}  // namespace lattice
}  // namespace genus
