#include "genus/verify.hpp"

#include <algorithm>
#include <sstream>

#include "genus/error.hpp"

namespace genus {

namespace {

std::string row_text(const Row& r) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
  out << ']';
  return out.str();
}

PropertyCheck pass(std::string name) { return PropertyCheck{std::move(name), true, false, std::nullopt}; }
PropertyCheck fail(std::string name, std::string witness) {
  return PropertyCheck{std::move(name), false, false, std::move(witness)};
}

std::uint32_t valuation_at_infinity(const KummerLattice& lat, const Row& r) {
  std::uint64_t deg = 0;
  for (std::size_t i = 0; i < lat.support.size(); ++i)
    deg += static_cast<std::uint64_t>(r[i + 1]) * static_cast<std::uint64_t>(lat.support[i].degree());
  return static_cast<std::uint32_t>((lat.l - deg % lat.l) % lat.l);
}

// Sublattice of rows with trivial valuation at p_inf.
KummerLattice valuation_kernel(const KummerLattice& lat) {
  const std::uint32_t l = lat.l;
  std::vector<Row> rows = lat.rows;
  std::vector<std::uint32_t> v;
  for (const Row& r : rows) v.push_back(valuation_at_infinity(lat, r));
  const auto piv = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (piv == v.end()) return lat;
  const auto p = static_cast<std::size_t>(piv - v.begin());
  const std::uint32_t inv = lattice::inverse_mod(v[p], l);
  std::vector<Row> kernel;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k == p) continue;
    const std::uint64_t f = static_cast<std::uint64_t>(v[k]) * inv % l;
    Row r = rows[k];
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = static_cast<std::uint32_t>((r[c] + (l - f) * rows[p][c]) % l);
    kernel.push_back(std::move(r));
  }
  return lattice::span(l, lat.support, std::move(kernel));
}

// Every subspace of F_l^k, each given by a basis in reduced echelon form.
template <typename Fn>
void for_each_subspace(std::uint32_t l, std::size_t k, Fn&& fn) {
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < k; ++c)
      if (mask & (1U << c)) pivots.push_back(c);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t c = pivots[i] + 1; c < k; ++c)
        if (!(mask & (1U << c))) free.emplace_back(i, c);
    std::uint64_t count = 1;
    for (std::size_t f = 0; f < free.size(); ++f) count *= l;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Row> basis(pivots.size(), Row(k, 0));
      for (std::size_t i = 0; i < pivots.size(); ++i) basis[i][pivots[i]] = 1;
      std::uint64_t v = idx;
      for (const auto& [i, c] : free) {
        basis[i][c] = static_cast<std::uint32_t>(v % l);
        v /= l;
      }
      fn(basis);
    }
  }
}

}  // namespace

PropertyCheck check_genus_property(const PolyRing& ring, const KummerLattice& K, const KummerLattice& L,
                                   bool finite_only) {
  if (!lattice::contains(L, K)) throw Error(ErrorCode::NotContained, "K is not contained in L");
  const std::string name = finite_only ? "finite_unramified" : "genus_property";
  std::vector<Poly> primes = K.support;
  primes.insert(primes.end(), L.support.begin(), L.support.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& P : primes)
    if (finite_ramification_index(K, P) != finite_ramification_index(L, P)) return fail(name, ring.render(P));
  if (!finite_only) {
    const auto a = infinite_invariants(K);
    const auto b = infinite_invariants(L);
    if (a.e_inf != b.e_inf || a.f_inf != b.f_inf)
      return fail(name, "p_inf: (e,f) = (" + std::to_string(a.e_inf) + "," + std::to_string(a.f_inf) + ") in K, (" +
                            std::to_string(b.e_inf) + "," + std::to_string(b.f_inf) + ") in L");
  }
  return pass(name);
}

KummerLattice maximality_bruteforce(const ExtensionSpec& spec, std::uint64_t seed) {
  const std::uint32_t l = spec.l;
  const RamifiedSupport sup = ramified_support(spec, seed);
  if (sup.r() > kMaxBruteforceSupport)
    throw Error(ErrorCode::BoundExceeded, "maximality enumeration supports r <= " +
                                              std::to_string(kMaxBruteforceSupport) + ", got r = " +
                                              std::to_string(sup.r()));
  const PolyRing ring(spec.field);
  const KummerLattice K = kummer_lattice(spec, seed);
  const KummerLattice constant_row = lattice::span(l, {}, {Row{1}});
  const KummerLattice ambient =
      lattice::join(lattice::join(build_E_gex(spec.field, l, sup), K), constant_row);

  // Complement of K inside the ambient lattice.
  std::vector<Row> span_rows = lattice::express(K, ambient.support);
  std::vector<Row> complement;
  for (const Row& a : ambient.rows) {
    auto trial = span_rows;
    trial.push_back(a);
    if (lattice::rref(l, trial).size() > lattice::rref(l, span_rows).size()) {
      span_rows.push_back(a);
      complement.push_back(a);
    }
  }

  const std::vector<Row> K_rows = lattice::express(K, ambient.support);
  std::vector<KummerLattice> passing;
  for_each_subspace(l, complement.size(), [&](const std::vector<Row>& basis) {
    std::vector<Row> rows = K_rows;
    for (const Row& b : basis) {
      Row r(ambient.support.size() + 1, 0);
      for (std::size_t c = 0; c < b.size(); ++c)
        for (std::size_t x = 0; x < r.size(); ++x) r[x] = (r[x] + b[c] * complement[c][x]) % l;
      rows.push_back(std::move(r));
    }
    KummerLattice L = lattice::span(l, ambient.support, std::move(rows));
    if (check_genus_property(ring, K, L).passed) passing.push_back(std::move(L));
  });

  const auto top = std::max_element(passing.begin(), passing.end(),
                                    [](const KummerLattice& a, const KummerLattice& b) { return a.rank() < b.rank(); });
  for (const auto& L : passing)
    if (!lattice::contains(*top, L))
      throw Error(ErrorCode::NoUniqueMaximum, "two maximal lattices with the genus property");
  return *top;
}

PropertyCheck crosscheck_f_infinity(const ExtensionSpec& spec) {
  const std::uint32_t by_subfields = f_inf_from_subfields(spec);
  const std::uint32_t local = infinite_invariants(kummer_lattice(spec)).f_inf;
  if (by_subfields == local) return pass("f_infinity");
  return fail("f_infinity", "subfields give " + std::to_string(by_subfields) + ", local group gives " +
                                std::to_string(local));
}

PropertyCheck verify_case7_constants(const ExtensionSpec& spec, std::size_t j) {
  const FiniteField& F = spec.field;
  const std::uint32_t l = spec.l;
  if (j >= spec.m()) throw Error(ErrorCode::PreconditionViolated, "generator index out of range");
  const RadicalGenerator& g = spec.generators[j];
  const auto n = static_cast<std::uint32_t>(g.D.degree());
  const FqElem minus_one = F.neg(F.one());
  const FqElem xi = F.mul(F.pow(minus_one, n), g.gamma);
  if (n % l == 0 || F.is_lth_power(xi, l))
    throw Error(ErrorCode::PreconditionViolated, "needs l not dividing deg D_j and xi_j not an l-th power");
  const std::uint32_t r_j = (l - n % l) % l;  // n = l m_j - r_j
  const std::uint32_t s_j = lattice::inverse_mod(r_j, l);
  const FqElem delta = F.pow(g.gamma, s_j);
  const FqElem test = F.mul(delta, F.inv(minus_one));
  if (!F.is_lth_power(test, l)) return pass("case7_constants");
  return fail("case7_constants", "delta = " + F.to_string(delta) + " is congruent to -1 mod l-th powers");
}

PropertyCheck check_alternate_Pr(const ExtensionSpec& spec, const GenusReport& report) {
  const PolyRing ring(spec.field);
  for (const auto& pr : admissible_Pr(report.support, spec.l)) {
    const GenusReport alt = genus_field(spec, pr.index);
    const auto& a = alt.K_ge.radical;
    const auto& b = report.K_ge.radical;
    if (!lattice::contains(a, b) || !lattice::contains(b, a)) return fail("alternate_Pr", ring.render(pr.P));
  }
  return pass("alternate_Pr");
}

std::vector<PropertyCheck> run_checks(const ExtensionSpec& spec, const GenusReport& report, std::uint64_t seed) {
  const std::uint32_t l = spec.l;
  const PolyRing ring(spec.field);
  const KummerLattice K = kummer_lattice(spec, seed);
  const KummerLattice& K_ge = report.K_ge.radical;
  const KummerLattice& K_gex = report.K_gex.radical;
  std::vector<PropertyCheck> out;

  if (!lattice::contains(K_ge, K)) {
    out.push_back(fail("sandwich", "K not contained in K_ge"));
  } else if (!lattice::contains(K_gex, K_ge)) {
    out.push_back(fail("sandwich", "K_ge not contained in K_gex"));
  } else {
    out.push_back(pass("sandwich"));
  }

  auto guarded = [&](const char* name, const KummerLattice& L, bool finite_only) {
    try {
      out.push_back(check_genus_property(ring, K, L, finite_only));
    } catch (const Error& e) {
      out.push_back(fail(name, e.what()));
    }
  };
  guarded("genus_property", K_ge, false);
  guarded("finite_unramified", K_gex, true);

  std::optional<KummerLattice> best;
  try {
    best = maximality_bruteforce(spec, seed);
  } catch (const Error& e) {
    const bool bound = e.code() == ErrorCode::BoundExceeded;
    out.push_back(PropertyCheck{"maximality", bound, bound, std::string(e.what())});
  }
  if (best && *best == K_ge) {
    out.push_back(pass("maximality"));
  } else if (best) {
    std::string w = "brute force rank " + std::to_string(best->rank()) + " vs reported " + std::to_string(K_ge.rank());
    for (const Row& r : best->rows)
      if (!lattice::contains(K_ge, lattice::span(l, best->support, {r}))) {
        w = "row " + row_text(r) + " missing from K_ge";
        break;
      }
    out.push_back(fail("maximality", w));
  }

  out.push_back(crosscheck_f_infinity(spec));

  const InfinityInvariants inv = infinite_invariants(K);
  const std::uint32_t cd_ge = constant_degree(K_ge);
  if (cd_ge == inv.f_inf && report.K_ge.constant_degree == cd_ge) {
    out.push_back(pass("constant_field_law"));
  } else {
    out.push_back(fail("constant_field_law", "constant degree of K_ge is " + std::to_string(cd_ge) + ", f_inf is " +
                                                 std::to_string(inv.f_inf)));
  }

  if (report.case_label == CaseLabel::C7) {
    const FiniteField& F = spec.field;
    const FqElem minus_one = F.neg(F.one());
    std::optional<std::size_t> j;
    for (std::size_t t = 0; t < spec.m() && !j; ++t) {
      const auto& g = spec.generators[t];
      const auto n = static_cast<std::uint64_t>(g.D.degree());
      if (n % l && !F.is_lth_power(F.mul(F.pow(minus_one, n), g.gamma), l)) j = t;
    }
    if (!j) {
      out.push_back(fail("case7_constants", "no generator with l not dividing n_j and xi_j not an l-th power"));
    } else {
      auto chk = verify_case7_constants(spec, *j);
      if (chk.passed && constant_degree(K_gex) != l) chk = fail("case7_constants", "K_gex is geometric");
      out.push_back(std::move(chk));
    }
  } else if (report.m0 == 1u) {
    const KummerLattice kernel = valuation_kernel(K_gex);
    if (constant_degree(K_gex) != cd_ge) {
      out.push_back(fail("extended_difference", "constant degrees of K_ge and K_gex differ"));
    } else if (!lattice::contains(K_ge, kernel)) {
      std::string w = "unramified row outside K_ge";
      for (const Row& r : kernel.rows)
        if (!lattice::contains(K_ge, lattice::span(l, kernel.support, {r}))) {
          w = "row " + row_text(r) + " unramified at p_inf but outside K_ge";
          break;
        }
      out.push_back(fail("extended_difference", w));
    } else {
      out.push_back(pass("extended_difference"));
    }
  }

  out.push_back(check_alternate_Pr(spec, report));

  std::uint64_t expect = 1;
  for (std::size_t i = spec.m(); i < K_ge.rank(); ++i) expect *= l;
  if (K_ge.rank() >= spec.m() && report.genus_degree == expect && report.e_inf == inv.e_inf &&
      report.f_inf == inv.f_inf) {
    out.push_back(pass("report_invariants"));
  } else {
    out.push_back(fail("report_invariants", "degree or (e,f) at p_inf disagree with the lattices"));
  }
  return out;
}

std::vector<PropertyCheck> run_checks(const NonKummerSpec& spec, const GenusReport& report) {
  const PolyRing ring(spec.field);
  std::vector<PropertyCheck> out;
  std::uint64_t expect = 1;
  for (std::size_t i = spec.m(); i < spec.r(); ++i) expect *= spec.l;
  if (report.genus_degree == expect) {
    out.push_back(pass("genus_degree"));
  } else {
    out.push_back(fail("genus_degree", "expected " + std::to_string(expect)));
  }
  out.push_back(report.e_inf == 1 ? pass("e_inf") : fail("e_inf", "p_inf reported ramified"));

  PropertyCheck cyc = pass("cyclotomic_factors");
  if (report.K_ge.cyclotomic.size() != spec.r()) cyc = fail("cyclotomic_factors", "wrong number of factors");
  for (const auto& L : report.K_ge.cyclotomic) {
    if (!cyc.passed) break;
    if (std::find(spec.primes.begin(), spec.primes.end(), L.P) == spec.primes.end() ||
        ramification_via_characters(spec, L.P) != spec.l) {
      cyc = fail("cyclotomic_factors", ring.render(L.P));
      break;
    }
    // Order of the unit generator by direct multiplication, bounded cost.
    const std::uint64_t N = unit_group_order(spec.field, L.P);
    if (N <= 1'000'000) {
      std::uint64_t order = 1;
      Poly x = ring.mod(L.unit_generator, L.P);
      while (x != ring.one() && order <= N) {
        x = ring.mod(ring.mul(x, L.unit_generator), L.P);
        ++order;
      }
      if (order != N) cyc = fail("cyclotomic_factors", "unit generator for " + ring.render(L.P) + " has order " +
                                                           std::to_string(order));
    }
  }
  out.push_back(std::move(cyc));
  return out;
}

}  // namespace genus
