#pragma once

// Brute-force reference computations used by the tests. None of these call
// into the code paths they are used to check.

#include <cstdint>
#include <set>
#include <vector>

#include "genus/gf.hpp"
#include "genus/polyring.hpp"

namespace oracle {

/// { x^l : x in F_q^* } by direct multiplication.
inline std::set<std::uint32_t> lth_powers(const genus::FiniteField& F, std::uint32_t l) {
  std::set<std::uint32_t> out;
  for (std::uint32_t c = 1; c < F.q(); ++c) {
    genus::FqElem x{c}, y = F.one();
    for (std::uint32_t i = 0; i < l; ++i) y = F.mul(y, x);
    out.insert(y.code);
  }
  return out;
}

/// Multiplicative order by repeated multiplication.
inline std::uint32_t order(const genus::FiniteField& F, genus::FqElem x) {
  std::uint32_t k = 1;
  for (genus::FqElem y = x; y != F.one(); y = F.mul(y, x)) ++k;
  return k;
}

/// Schoolbook product, independent of PolyRing::mul.
inline std::vector<genus::FqElem> naive_mul(const genus::FiniteField& F, const std::vector<genus::FqElem>& a,
                                            const std::vector<genus::FqElem>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<genus::FqElem> c(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

/// Every monic polynomial of the given degree, coefficients enumerated directly.
inline std::vector<genus::Poly> all_monic(const genus::FiniteField& F, std::size_t deg) {
  std::vector<genus::Poly> out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < deg; ++i) count *= F.q();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    genus::Poly p;
    p.c.resize(deg + 1);
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < deg; ++i) {
      p.c[i] = genus::FqElem{static_cast<std::uint32_t>(v % F.q())};
      v /= F.q();
    }
    p.c[deg] = F.one();
    out.push_back(std::move(p));
  }
  return out;
}

/// Irreducibility by trial multiplication: f is reducible iff it equals a
/// product g*h of monic polynomials with 1 <= deg g <= deg f / 2.
inline bool irreducible_by_products(const genus::FiniteField& F, const genus::Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d)
    for (const auto& g : all_monic(F, static_cast<std::size_t>(d)))
      for (const auto& h : all_monic(F, static_cast<std::size_t>(n - d)))
        if (naive_mul(F, g.c, h.c) == f.c) return false;
  return true;
}

/// Number of monic irreducibles of degree d over F_q (necklace formula).
inline std::uint64_t necklace(std::uint64_t q, std::uint64_t d) {
  auto mobius = [](std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
      }
    if (n > 1) mu = -mu;
    return mu;
  };
  std::int64_t total = 0;
  for (std::uint64_t e = 1; e <= d; ++e)
    if (d % e == 0) {
      std::int64_t pw = 1;
      for (std::uint64_t i = 0; i < e; ++i) pw *= static_cast<std::int64_t>(q);
      total += mobius(d / e) * pw;
    }
  return static_cast<std::uint64_t>(total) / d;
}

}  // namespace oracle
