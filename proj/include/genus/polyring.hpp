#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genus/gf.hpp"

namespace genus {

/// Dense polynomial in T over F_q, coefficients from the constant term up.
/// Canonical form: no trailing zero coefficients (the zero polynomial is empty).
struct Poly {
  std::vector<FqElem> c;

  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const noexcept { return c.empty(); }
  FqElem lead() const noexcept { return c.empty() ? FqElem{} : c.back(); }
  FqElem coeff(std::size_t i) const noexcept { return i < c.size() ? c[i] : FqElem{}; }

  friend bool operator==(const Poly&, const Poly&) = default;
  /// (degree, lexicographic coefficient tuple from the constant term up).
  /// This is the global tie-break wherever a choice of prime matters.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;
};

/// unit * prod(factor^multiplicity), factors monic irreducible, pairwise
/// distinct, sorted by Poly ordering.
struct Factorization {
  FqElem unit;
  std::vector<std::pair<Poly, std::uint32_t>> factors;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'6e6e'0001ULL;

class PolyRing {
 public:
  explicit PolyRing(FiniteField field) : F_(std::move(field)) {}

  const FiniteField& field() const noexcept { return F_; }

  Poly zero() const { return {}; }
  Poly one() const { return constant(F_.one()); }
  Poly T() const { return Poly{{F_.zero(), F_.one()}}; }
  Poly constant(FqElem c) const;
  Poly monomial(FqElem c, std::size_t e) const;
  /// Builds a canonical polynomial from raw coefficients (trailing zeros dropped).
  Poly from_coeffs(std::vector<FqElem> c) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, FqElem s) const;
  std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const;
  Poly div(const Poly& a, const Poly& b) const { return divrem(a, b).first; }
  Poly mod(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
  /// Monic gcd; gcd(0, 0) = 0.
  Poly gcd(const Poly& a, const Poly& b) const;
  Poly monic(const Poly& a) const;
  Poly pow(const Poly& a, std::uint64_t e) const;
  Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) const;
  Poly derivative(const Poly& a) const;
  FqElem eval(const Poly& a, FqElem x) const;

  /// Complete factorization of a monic nonconstant polynomial: squarefree
  /// decomposition, distinct-degree, then Cantor-Zassenhaus equal-degree
  /// splitting driven by a generator seeded with `seed`.
  Factorization factor_monic(const Poly& f, std::uint64_t seed = kDefaultSeed) const;
  /// Any nonzero polynomial: unit = leading coefficient, rest from factor_monic.
  Factorization factor(const Poly& f, std::uint64_t seed = kDefaultSeed) const;
  Poly expand(const Factorization& fac) const;
  bool is_irreducible(const Poly& f) const;

  /// Monic polynomial of degree `deg` whose lower coefficient tuple has rank
  /// `index` in lexicographic order (constant term most significant).
  Poly monic_from_index(std::size_t deg, std::uint64_t index) const;
  /// All monic irreducibles of the given degree, sorted.
  std::vector<Poly> monic_irreducibles(std::size_t deg) const;

  /// Grammar: sums/differences of products of integers, u, T, parenthesised
  /// subexpressions and ^-powers. Whitespace-insensitive.
  Poly parse(std::string_view text) const;
  /// A field element literal (the same grammar without T).
  FqElem parse_element(std::string_view text) const;
  /// Descending powers, "c*T^e" terms, compound coefficients parenthesised.
  std::string render(const Poly& a) const;

 private:
  void trim(Poly& a) const;
  std::vector<std::pair<Poly, std::uint32_t>> squarefree(const Poly& f) const;
  std::vector<std::pair<Poly, std::size_t>> distinct_degree(const Poly& f) const;
  void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) const;
  Poly frobenius_root(const Poly& f) const;

  FiniteField F_;
};

}  // namespace genus
