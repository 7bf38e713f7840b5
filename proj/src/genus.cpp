#include "genus/genus.hpp"

#include <algorithm>

#include "genus/error.hpp"

namespace genus {

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool all_xi_lth_powers(const ExtensionSpec& spec) {
  const FiniteField& F = spec.field;
  const FqElem minus_one = F.neg(F.one());
  for (const auto& g : spec.generators) {
    const FqElem xi = F.mul(F.pow(minus_one, static_cast<std::uint64_t>(g.D.degree())), g.gamma);
    if (!F.is_lth_power(xi, spec.l)) return false;
  }
  return true;
}

PrChoice make_choice(const RamifiedSupport& support, std::uint32_t l, std::size_t i) {
  const std::uint32_t d = support.degrees[i] % l;
  const std::int64_t b = lattice::inverse_mod(d, l);
  const std::int64_t a = (1 - b * static_cast<std::int64_t>(support.degrees[i])) / static_cast<std::int64_t>(l);
  return PrChoice{i, support.primes[i], a, b};
}

}  // namespace

std::string_view to_string(CaseLabel c) noexcept {
  switch (c) {
    case CaseLabel::C1: return "C1";
    case CaseLabel::C2: return "C2";
    case CaseLabel::C3: return "C3";
    case CaseLabel::C4: return "C4";
    case CaseLabel::C5: return "C5";
    case CaseLabel::C6: return "C6";
    case CaseLabel::C7: return "C7";
    case CaseLabel::NonKummer: return "NK_cyclotomic";
    case CaseLabel::NonKummerTwisted: return "NK_twisted";
  }
  return "?";
}

CaseLabel case_from_string(std::string_view s) {
  for (auto c : {CaseLabel::C1, CaseLabel::C2, CaseLabel::C3, CaseLabel::C4, CaseLabel::C5, CaseLabel::C6,
                 CaseLabel::C7, CaseLabel::NonKummer, CaseLabel::NonKummerTwisted})
    if (to_string(c) == s) return c;
  throw Error(ErrorCode::InvalidInput, "unknown case label '" + std::string(s) + "'");
}

std::uint32_t constant_degree(const KummerLattice& lat) {
  return lattice::constant_kernel(lat).rank() ? lat.l : 1;
}

FieldDescription describe(const KummerLattice& lat) { return FieldDescription{lat, {}, false, constant_degree(lat)}; }

KummerLattice build_E(const ExtensionSpec& spec, const RamifiedSupport& support) {
  const FiniteField& F = spec.field;
  const std::uint32_t l = spec.l;
  const std::uint32_t kappa = F.power_class(F.neg(F.one()), l);
  std::vector<Row> rows;
  for (std::size_t j = 0; j < spec.m(); ++j) {
    Row row(support.r() + 1, 0);
    row[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(spec.generators[j].D.degree()) * kappa % l);
    for (std::size_t i = 0; i < support.r(); ++i) row[i + 1] = support.beta[i][j];
    rows.push_back(std::move(row));
  }
  return lattice::span(l, support.primes, std::move(rows));
}

KummerLattice build_E_gex(const FiniteField& field, std::uint32_t l, const RamifiedSupport& support) {
  const std::uint32_t kappa = field.power_class(field.neg(field.one()), l);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < support.r(); ++i) {
    Row row(support.r() + 1, 0);
    if (i >= support.s) row[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(support.degrees[i]) * kappa % l);
    row[i + 1] = 1;
    rows.push_back(std::move(row));
  }
  return lattice::span(l, support.primes, std::move(rows));
}

std::vector<PrChoice> admissible_Pr(const RamifiedSupport& support, std::uint32_t l) {
  std::vector<PrChoice> out;
  for (std::size_t i = 0; i < support.r(); ++i)
    if (support.degrees[i] % l) out.push_back(make_choice(support, l, i));
  return out;
}

PrChoice choose_Pr_and_bezout(const RamifiedSupport& support, std::uint32_t l) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < support.r(); ++i)
    if (support.degrees[i] % l && (!best || support.primes[*best] < support.primes[i])) best = i;
  if (!best) throw Error(ErrorCode::AllDegreesDivisible, "every ramified prime has degree divisible by l");
  return make_choice(support, l, *best);
}

KummerLattice build_M(const RamifiedSupport& support, std::uint32_t l, const PrChoice& pr) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < support.r(); ++i) {
    if (i == pr.index) continue;
    Row row(support.r() + 1, 0);
    row[i + 1] = 1;
    const std::uint64_t bd = static_cast<std::uint64_t>(pr.b) * support.degrees[i] % l;
    row[pr.index + 1] = static_cast<std::uint32_t>((l - bd) % l);
    rows.push_back(std::move(row));
  }
  return lattice::span(l, support.primes, std::move(rows));
}

GenusReport genus_field(const ExtensionSpec& spec, std::optional<std::size_t> pr_index, std::uint64_t seed) {
  const std::uint32_t l = spec.l;
  GenusReport rep{CaseLabel::C1, spec};
  rep.support = ramified_support(spec, seed);
  const RamifiedSupport& sup = rep.support;

  const KummerLattice K = kummer_lattice(spec, seed);
  const KummerLattice E = build_E(spec, sup);
  const KummerLattice E_gex = build_E_gex(spec.field, l, sup);
  const bool K_is_E = all_xi_lth_powers(spec);
  if (K_is_E != (K == E))
    throw Error(ErrorCode::InternalInconsistency, "K = E criterion disagrees with lattice equality");

  const InfinityInvariants inv = infinite_invariants(spec);
  rep.e_inf = inv.e_inf;
  rep.f_inf = inv.f_inf;
  rep.m0 = K_is_E ? 1 : l;

  bool all_n_divisible = true;
  for (const auto& g : spec.generators) all_n_divisible = all_n_divisible && g.D.degree() % static_cast<int>(l) == 0;

  KummerLattice K_ge;
  if (sup.s == sup.r()) {
    rep.case_label = K_is_E ? CaseLabel::C1 : CaseLabel::C4;
    K_ge = lattice::join(E_gex, K);
    if (pr_index) throw Error(ErrorCode::PreconditionViolated, "no admissible P_r when every degree is divisible by l");
  } else {
    PrChoice pr;
    if (pr_index) {
      if (*pr_index >= sup.r() || sup.degrees[*pr_index] % l == 0)
        throw Error(ErrorCode::PreconditionViolated, "P_r override is not an admissible prime");
      pr = make_choice(sup, l, *pr_index);
    } else {
      pr = choose_Pr_and_bezout(sup, l);
    }
    const KummerLattice M = build_M(sup, l, pr);
    rep.chosen_Pr = pr;
    rep.M = describe(M);
    if (all_n_divisible) {
      rep.case_label = K_is_E ? CaseLabel::C3 : CaseLabel::C5;
      K_ge = K_is_E ? M : lattice::join(M, K);
    } else if (K_is_E) {
      rep.case_label = CaseLabel::C2;
      K_ge = E_gex;
    } else if (inv.f_inf == l) {
      rep.case_label = CaseLabel::C6;
      K_ge = lattice::join(E_gex, K);
    } else {
      rep.case_label = CaseLabel::C7;
      K_ge = lattice::join(M, K);
    }
  }
  const KummerLattice K_gex = lattice::join(E_gex, K);

  rep.K = describe(K);
  rep.E = describe(E);
  rep.E_gex = describe(E_gex);
  rep.K_ge = describe(K_ge);
  rep.K_gex = describe(K_gex);
  rep.genus_degree = ipow(l, K_ge.rank() - spec.m());
  rep.extended_degree = ipow(l, K_gex.rank() - spec.m());
  return rep;
}

GenusReport genus_field_nonkummer(const NonKummerSpec& spec) {
  const std::uint32_t l = spec.l;
  GenusReport rep{CaseLabel::NonKummer, spec};
  rep.case_label = spec.twisted ? CaseLabel::NonKummerTwisted : CaseLabel::NonKummer;

  std::vector<std::size_t> order(spec.r());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool da = static_cast<std::uint32_t>(spec.primes[a].degree()) % l == 0;
    const bool db = static_cast<std::uint32_t>(spec.primes[b].degree()) % l == 0;
    if (da != db) return da;
    return spec.primes[a] < spec.primes[b];
  });
  for (std::size_t i : order) {
    rep.support.primes.push_back(spec.primes[i]);
    rep.support.degrees.push_back(static_cast<std::uint32_t>(spec.primes[i].degree()));
    rep.support.beta.push_back(spec.C[i]);
    if (rep.support.degrees.back() % l == 0) ++rep.support.s;
  }

  NonKummerSpec sorted = spec;
  sorted.primes = rep.support.primes;
  const auto cyc = product_group_field(sorted);

  const FieldDescription symbolic_K{lattice::trivial(l), {}, true, 1};
  rep.K = symbolic_K;
  rep.E = symbolic_K;
  rep.E_gex = FieldDescription{lattice::trivial(l), cyc, false, 1};
  FieldDescription ge{lattice::trivial(l), cyc, spec.twisted, std::nullopt};
  if (!spec.twisted) ge.constant_degree = 1;
  rep.K_ge = ge;
  rep.K_gex = ge;
  rep.genus_degree = ipow(l, spec.r() - spec.m());
  rep.extended_degree = rep.genus_degree;
  rep.e_inf = 1;
  if (!spec.twisted) {
    rep.f_inf = 1;
    rep.m0 = 1;
  }
  return rep;
}

}  // namespace genus
