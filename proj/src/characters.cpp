#include "genus/characters.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "genus/error.hpp"
#include "genus/lattice.hpp"

namespace genus {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit n with these bases.
bool miller_rabin(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(n);
  for (;;) {
    const std::uint64_t c = rng() % (n - 1) + 1;
    std::uint64_t x = rng() % n, y = x, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void collect_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t p = 2; p < 1000; ++p)
    if (n % p == 0) {
      collect_factors(p, out);
      collect_factors(n / p, out);
      return;
    }
  const std::uint64_t d = pollard_rho(n);
  collect_factors(d, out);
  collect_factors(n / d, out);
}

std::uint64_t pow_mod_small(std::uint64_t base, std::uint64_t e, std::uint64_t m) { return powmod(base, e, m); }

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  collect_factors(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t unit_group_order(const FiniteField& field, const Poly& P) {
  std::uint64_t N = 1;
  for (int i = 0; i < P.degree(); ++i) {
    if (N > kMaxUnitGroupOrder / field.q())
      throw Error(ErrorCode::GroupTooLarge, "q^deg P - 1 exceeds the supported bound 2^62");
    N *= field.q();
  }
  return N - 1;
}

Poly canonical_unit_generator(const PolyRing& ring, const Poly& P) {
  const FiniteField& F = ring.field();
  const std::uint64_t N = unit_group_order(F, P);
  const auto primes = prime_factors(N);
  const Poly one = ring.one();
  const auto d = static_cast<std::size_t>(P.degree());
  for (std::size_t deg = 0; deg < d; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i <= deg; ++i) count *= F.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      // Tuple (c_0, ..., c_deg) with c_0 most significant.
      Poly g;
      g.c.resize(deg + 1);
      std::uint64_t v = idx;
      for (std::size_t k = deg + 1; k-- > 0;) {
        g.c[k] = FqElem{static_cast<std::uint32_t>(v % F.q())};
        v /= F.q();
      }
      if (g.c.back().is_zero()) continue;
      bool generator = true;
      for (std::uint64_t p : primes)
        if (ring.powmod(g, N / p, P) == one) {
          generator = false;
          break;
        }
      if (generator) return g;
    }
  }
  throw Error(ErrorCode::InternalInconsistency, "no generator of (R_T/P)^* found");
}

NonKummerSpec build_nonkummer_spec(const FiniteField& field, std::uint32_t l, std::vector<Poly> primes,
                                   std::vector<std::vector<std::uint32_t>> C, bool twisted) {
  if (!is_prime(l)) throw Error(ErrorCode::NotPrime, "l = " + std::to_string(l) + " is not prime");
  if (l == field.p()) throw Error(ErrorCode::WildPrime, "l equals the characteristic (wild ramification)");
  if ((field.q() - 1) % l == 0) throw Error(ErrorCode::IsKummer, "l divides q - 1; use the Kummer input schema");
  if (primes.empty()) throw Error(ErrorCode::InvalidInput, "at least one prime is required");
  const PolyRing ring(field);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Poly& P = primes[i];
    if (P.degree() < 1 || P.lead() != field.one())
      throw Error(ErrorCode::NotMonic, "prime " + ring.render(P) + " is not monic nonconstant");
    if (!ring.is_irreducible(P)) throw Error(ErrorCode::NotIrreducible, ring.render(P) + " is reducible");
    for (std::size_t k = 0; k < i; ++k)
      if (primes[k] == P) throw Error(ErrorCode::DuplicatePrime, ring.render(P) + " is listed twice");
    const std::uint64_t qd = pow_mod_small(field.q(), static_cast<std::uint64_t>(P.degree()), l);
    if ((qd + l - 1) % l != 0)
      throw Error(ErrorCode::NoDegreeLSubfield,
                  "l does not divide q^deg P - 1 for P = " + ring.render(P) + "; P cannot be tamely ramified of index l",
                  ring.render(P));
  }
  if (C.size() != primes.size()) throw Error(ErrorCode::InvalidInput, "C must have one row per prime");
  const std::size_t m = C.front().size();
  if (m == 0) throw Error(ErrorCode::InvalidInput, "C must have at least one column");
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (C[i].size() != m) throw Error(ErrorCode::InvalidInput, "C rows have different lengths");
    bool nonzero = false;
    for (auto& x : C[i]) {
      x %= l;
      nonzero = nonzero || x != 0;
    }
    if (!nonzero)
      throw Error(ErrorCode::UnramifiedListedPrime, ring.render(primes[i]) + " is not ramified (zero row of C)",
                  ring.render(primes[i]));
  }
  // rank of C (columns are the characters chi_j).
  std::vector<Row> cols(m, Row(C.size(), 0));
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) cols[j][i] = C[i][j];
  if (lattice::rref(l, cols).size() != m)
    throw Error(ErrorCode::DependentGenerators, "the columns of C are F_l-dependent");
  return NonKummerSpec{field, l, std::move(primes), std::move(C), twisted};
}

std::uint32_t ramification_via_characters(const NonKummerSpec& spec, const Poly& P) {
  const auto it = std::find(spec.primes.begin(), spec.primes.end(), P);
  if (it == spec.primes.end()) throw Error(ErrorCode::InvalidInput, "prime not listed in the specification");
  const auto& row = spec.C[static_cast<std::size_t>(it - spec.primes.begin())];
  for (auto x : row)
    if (x % spec.l) return spec.l;
  throw Error(ErrorCode::UnramifiedListedPrime, "listed prime has a zero character row");
}

std::vector<CyclotomicSubfield> product_group_field(const NonKummerSpec& spec) {
  const PolyRing ring(spec.field);
  std::vector<CyclotomicSubfield> out;
  for (const auto& P : spec.primes) out.push_back(CyclotomicSubfield{P, spec.l, canonical_unit_generator(ring, P)});
  return out;
}

}  // namespace genus
