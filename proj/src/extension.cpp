#include "genus/extension.hpp"

#include <algorithm>
#include <sstream>

#include "genus/error.hpp"

namespace genus {

namespace {

std::string vector_text(const std::vector<std::uint32_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

void check_kummer_exponent(const FiniteField& field, std::uint32_t l) {
  if (!is_prime(l)) throw Error(ErrorCode::NotPrime, "l = " + std::to_string(l) + " is not prime");
  if (l == field.p()) throw Error(ErrorCode::WildPrime, "l equals the characteristic (wild ramification)");
  if ((field.q() - 1) % l != 0)
    throw Error(ErrorCode::NotKummer, "l does not divide q - 1; use the non-Kummer input schema");
}

}  // namespace

RadicalGenerator normalize_generator(const PolyRing& ring, FqElem a, const Poly& A, std::uint32_t l,
                                     std::uint64_t seed) {
  const FiniteField& F = ring.field();
  if (A.is_zero() || a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "radicand is zero");
  const Factorization fac = ring.factor(A, seed);
  Poly D = ring.one();
  for (const auto& [P, e] : fac.factors)
    if (e % l) D = ring.mul(D, ring.pow(P, e % l));
  return RadicalGenerator{F.mul(a, fac.unit), std::move(D)};
}

RadicalClass radical_class(const PolyRing& ring, std::uint32_t l, FqElem gamma, const Poly& D, std::uint64_t seed) {
  const FiniteField& F = ring.field();
  if (D.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "radicand is zero");
  RadicalClass c;
  FqElem unit = gamma;
  if (D.degree() > 0) {
    const Factorization fac = ring.factor(D, seed);
    unit = F.mul(unit, fac.unit);
    for (const auto& [P, e] : fac.factors)
      if (e % l) c.exponents.emplace_back(P, e % l);
  } else {
    unit = F.mul(unit, D.lead());
  }
  c.constant = F.power_class(unit, l);
  return c;
}

KummerLattice kummer_lattice(const ExtensionSpec& spec, std::uint64_t seed) {
  const PolyRing ring(spec.field);
  std::vector<RadicalClass> gens;
  for (const auto& g : spec.generators) gens.push_back(radical_class(ring, spec.l, g.gamma, g.D, seed));
  return lattice::span(spec.l, gens);
}

ExtensionSpec build_spec(const FiniteField& field, std::uint32_t l, const std::vector<RawGenerator>& raw,
                         std::uint64_t seed) {
  check_kummer_exponent(field, l);
  if (raw.empty()) throw Error(ErrorCode::InvalidInput, "at least one generator is required");
  const PolyRing ring(field);
  ExtensionSpec spec{field, l, {}};
  for (const auto& g : raw) {
    auto gen = normalize_generator(ring, g.a, g.A, l, seed);
    if (gen.D.degree() < 1)
      throw Error(ErrorCode::ConstantRadical, "generator " + std::to_string(spec.generators.size() + 1) +
                                                  " has constant l-power-free part");
    spec.generators.push_back(std::move(gen));
  }

  // rank of beta over F_l: eliminate on the transposed system to find a
  // dependency alpha with beta * alpha = 0.
  const RamifiedSupport sup = ramified_support(spec, seed);
  const std::size_t m = spec.m();
  std::vector<Row> rows;  // row j: (exponents of D_j | e_j)
  for (std::size_t j = 0; j < m; ++j) {
    Row r(sup.r() + m, 0);
    for (std::size_t i = 0; i < sup.r(); ++i) r[i] = sup.beta[i][j];
    r[sup.r() + j] = 1;
    rows.push_back(std::move(r));
  }
  const auto reduced = lattice::rref(l, rows);
  for (const Row& r : reduced) {
    bool poly_zero = true;
    for (std::size_t i = 0; i < sup.r(); ++i) poly_zero = poly_zero && r[i] == 0;
    if (!poly_zero) continue;
    std::vector<std::uint32_t> alpha(r.begin() + static_cast<std::ptrdiff_t>(sup.r()), r.end());
    const auto first = std::find_if(alpha.begin(), alpha.end(), [](std::uint32_t x) { return x != 0; });
    const std::uint32_t inv = lattice::inverse_mod(*first, l);
    for (auto& x : alpha) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % l);
    FqElem c = field.one();
    for (std::size_t j = 0; j < m; ++j) c = field.mul(c, field.pow(spec.generators[j].gamma, alpha[j]));
    const bool geometric_dup = field.is_lth_power(c, l);
    throw Error(ErrorCode::DependentGenerators,
                std::string("generators are F_l-dependent, alpha = ") + vector_text(alpha) +
                    (geometric_dup ? " (repeated subfield)" : " (constant subextension: not geometric)"),
                vector_text(alpha));
  }
  return spec;
}

ExtensionSpec build_spec_reduced(const FiniteField& field, std::uint32_t l, const std::vector<RawGenerator>& raw,
                                 std::uint64_t seed) {
  check_kummer_exponent(field, l);
  const PolyRing ring(field);
  std::vector<RadicalClass> classes;
  for (const auto& g : raw) {
    if (g.A.is_zero() || g.a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "radicand is zero");
    const auto norm = normalize_generator(ring, g.a, g.A, l, seed);
    classes.push_back(radical_class(ring, l, norm.gamma, norm.D, seed));
  }
  const KummerLattice lat = lattice::span(l, classes);
  const KummerLattice consts = lattice::constant_kernel(lat);
  if (consts.rank() > 0)
    throw Error(ErrorCode::DependentGenerators, "the generators span a constant extension (not geometric)");

  std::vector<RawGenerator> basis;
  for (const auto& rad : radicals(ring, lat)) basis.push_back(RawGenerator{rad.gamma, rad.poly});
  return build_spec(field, l, basis, seed);
}

RamifiedSupport ramified_support(const ExtensionSpec& spec, std::uint64_t seed) {
  const PolyRing ring(spec.field);
  const std::uint32_t l = spec.l;
  std::vector<Factorization> facs;
  std::vector<Poly> primes;
  for (const auto& g : spec.generators) {
    facs.push_back(ring.factor_monic(g.D, seed));
    for (const auto& [P, e] : facs.back().factors) primes.push_back(P);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::stable_partition(primes.begin(), primes.end(),
                        [l](const Poly& P) { return static_cast<std::uint32_t>(P.degree()) % l == 0; });

  RamifiedSupport sup;
  sup.primes = primes;
  for (const auto& P : primes) {
    sup.degrees.push_back(static_cast<std::uint32_t>(P.degree()));
    if (sup.degrees.back() % l == 0) ++sup.s;
  }
  sup.beta.assign(primes.size(), std::vector<std::uint32_t>(spec.m(), 0));
  for (std::size_t j = 0; j < facs.size(); ++j)
    for (const auto& [P, e] : facs[j].factors) {
      const auto i = static_cast<std::size_t>(std::find(primes.begin(), primes.end(), P) - primes.begin());
      sup.beta[i][j] = e % l;
    }
  return sup;
}

std::vector<SubfieldDatum> enumerate_subfields(const ExtensionSpec& spec, std::uint64_t seed) {
  const PolyRing ring(spec.field);
  const FiniteField& F = spec.field;
  const std::uint32_t l = spec.l;
  const std::size_t m = spec.m();
  const RamifiedSupport sup = ramified_support(spec, seed);

  std::uint64_t total = 1;
  for (std::size_t j = 0; j < m; ++j) total *= l;
  std::vector<SubfieldDatum> out;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::vector<std::uint32_t> alpha(m);
    std::uint64_t v = idx;
    for (std::size_t j = m; j-- > 0;) {
      alpha[j] = static_cast<std::uint32_t>(v % l);
      v /= l;
    }
    const auto first = std::find_if(alpha.begin(), alpha.end(), [](std::uint32_t x) { return x != 0; });
    if (*first != 1) continue;

    SubfieldDatum d{alpha, F.one(), ring.one()};
    for (std::size_t j = 0; j < m; ++j) d.eta = F.mul(d.eta, F.pow(spec.generators[j].gamma, alpha[j]));
    for (std::size_t i = 0; i < sup.r(); ++i) {
      std::uint64_t e = 0;
      for (std::size_t j = 0; j < m; ++j) e += static_cast<std::uint64_t>(sup.beta[i][j]) * alpha[j];
      if (e % l) d.R = ring.mul(d.R, ring.pow(sup.primes[i], e % l));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<RadicalText> radicals(const PolyRing& ring, const KummerLattice& lat) {
  const FiniteField& F = ring.field();
  std::vector<RadicalText> out;
  for (const Row& r : lat.rows) {
    RadicalText t{F.exp(r[0]), ring.one()};
    for (std::size_t i = 0; i < lat.support.size(); ++i)
      if (r[i + 1]) t.poly = ring.mul(t.poly, ring.pow(lat.support[i], r[i + 1]));
    out.push_back(std::move(t));
  }
  return out;
}

KummerLattice lattice_from_radicals(const PolyRing& ring, std::uint32_t l, const std::vector<RadicalText>& rads,
                                    std::uint64_t seed) {
  std::vector<RadicalClass> classes;
  for (const auto& r : rads) classes.push_back(radical_class(ring, l, r.gamma, r.poly, seed));
  return lattice::span(l, classes);
}

ExtensionSpec canonical(const ExtensionSpec& spec) {
  ExtensionSpec out = spec;
  for (auto& g : out.generators) g.gamma = spec.field.exp(spec.field.power_class(g.gamma, spec.l));
  return out;
}

}  // namespace genus
