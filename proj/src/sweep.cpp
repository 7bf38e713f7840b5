#include "genus/sweep.hpp"

#include <algorithm>

#include "genus/error.hpp"

namespace genus {

namespace {

struct Candidate {
  Poly D;
  std::vector<std::size_t> primes;  // indices into the irreducible list
};

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    std::uint32_t n = 0, v = q;
    while (v % p == 0) {
      v /= p;
      ++n;
    }
    if (v != 1) break;
    return {p, n};
  }
  throw Error(ErrorCode::InvalidInput, "q = " + std::to_string(q) + " is not a prime power");
}

std::vector<Candidate> radicands(const PolyRing& ring, std::uint32_t l, const SweepConfig& cfg) {
  std::vector<Poly> irr;
  for (std::size_t d = 1; d <= cfg.max_factor_deg && d <= cfg.max_deg; ++d)
    for (auto& P : ring.monic_irreducibles(d)) irr.push_back(std::move(P));

  std::vector<Candidate> out;
  Candidate cur{ring.one(), {}};
  // Depth-first over the irreducible list, exponents 1..l-1.
  auto rec = [&](auto&& self, std::size_t start, std::uint32_t deg) -> void {
    for (std::size_t i = start; i < irr.size(); ++i) {
      const auto d = static_cast<std::uint32_t>(irr[i].degree());
      const Candidate saved = cur;
      cur.primes.push_back(i);
      for (std::uint32_t e = 1; e < l && deg + e * d <= cfg.max_deg; ++e) {
        cur.D = ring.mul(cur.D, irr[i]);
        out.push_back(cur);
        self(self, i + 1, deg + e * d);
      }
      cur = saved;
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.D < b.D; });
  return out;
}

}  // namespace

SweepEnumeration enumerate_sweep(const SweepConfig& cfg) {
  SweepEnumeration en;
  for (std::uint32_t q : cfg.q_list) {
    const auto [p, n] = prime_power(q);
    const FiniteField F = FiniteField::make(p, n);
    const PolyRing ring(F);
    std::vector<std::uint32_t> ls;
    for (std::uint32_t l = 2; l < q; ++l)
      if (is_prime(l) && (q - 1) % l == 0 && l != p &&
          (cfg.l_list.empty() || std::find(cfg.l_list.begin(), cfg.l_list.end(), l) != cfg.l_list.end()))
        ls.push_back(l);

    for (std::uint32_t l : ls) {
      const auto cands = radicands(ring, l, cfg);
      for (std::uint32_t m = 1; m <= cfg.max_m; ++m) {
        std::vector<std::size_t> pick;
        auto emit = [&]() {
          std::vector<std::size_t> support;
          for (auto k : pick) support.insert(support.end(), cands[k].primes.begin(), cands[k].primes.end());
          std::sort(support.begin(), support.end());
          support.erase(std::unique(support.begin(), support.end()), support.end());
          if (support.size() > cfg.max_r) return;
          std::uint64_t combos = 1;
          for (std::uint32_t j = 0; j < m; ++j) combos *= l;
          for (std::uint64_t idx = 0; idx < combos; ++idx) {
            std::vector<RawGenerator> raw(m);
            std::uint64_t v = idx;
            for (std::size_t j = m; j-- > 0;) {
              raw[j] = RawGenerator{F.exp(v % l), cands[pick[j]].D};
              v /= l;
            }
            try {
              en.cases.push_back(SweepCase{en.cases.size(), build_spec(F, l, raw, cfg.seed)});
            } catch (const Error&) {
              ++en.skipped;
            }
          }
        };
        auto rec = [&](auto&& self, std::size_t start, std::uint32_t deg) -> void {
          if (pick.size() == m) {
            emit();
            return;
          }
          for (std::size_t k = start; k < cands.size(); ++k) {
            const auto d = static_cast<std::uint32_t>(cands[k].D.degree());
            if (deg + d > cfg.max_deg) continue;
            pick.push_back(k);
            self(self, k + 1, deg + d);
            pick.pop_back();
          }
        };
        rec(rec, 0, 0);
      }
    }
  }
  return en;
}

SweepOutcome run_case(const ExtensionSpec& spec, std::uint64_t seed) {
  SweepOutcome out;
  try {
    GenusReport rep = genus_field(spec, std::nullopt, seed);
    out.case_label = std::string(to_string(rep.case_label));
    out.checks = run_checks(spec, rep, seed);
    out.report = std::move(rep);
  } catch (const Error& e) {
    out.case_label = "error";
    out.checks.push_back(PropertyCheck{"engine", false, false, std::string(e.what())});
  }
  for (const auto& c : out.checks) out.passed = out.passed && c.passed;
  return out;
}

std::vector<SweepOutcome> run_serial(const std::vector<SweepCase>& cases, std::uint64_t seed) {
  std::vector<SweepOutcome> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(run_case(c.spec, seed));
  return out;
}

std::vector<SweepOutcome> run_parallel(const std::vector<SweepCase>& cases, std::uint64_t seed) {
  std::vector<SweepOutcome> out(cases.size());
  const auto n = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_case(cases[static_cast<std::size_t>(i)].spec, seed);
  return out;
}

SweepSummary summarize(const std::vector<SweepOutcome>& outcomes, std::size_t skipped) {
  SweepSummary s;
  s.total = outcomes.size();
  s.skipped = skipped;
  for (const auto& o : outcomes) {
    ++s.per_case[o.case_label];
    if (!o.passed) ++s.failed;
    for (const auto& c : o.checks)
      if (c.skipped) ++s.maximality_skipped;
  }
  return s;
}

}  // namespace genus
