#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus/verify.hpp"

namespace genus {

struct SweepConfig {
  std::vector<std::uint32_t> q_list;
  std::vector<std::uint32_t> l_list;  // empty: every prime l | q - 1, l != p
  std::uint32_t max_deg = 4;          // bound on deg D_1 + ... + deg D_m
  std::uint32_t max_factor_deg = 2;   // bound on the degree of each prime factor
  std::uint32_t max_m = 1;
  std::uint32_t max_r = 4;
  std::uint64_t seed = kDefaultSeed;
};

struct SweepCase {
  std::size_t index = 0;
  ExtensionSpec spec;
};

struct SweepOutcome {
  std::string case_label;
  bool passed = true;
  std::vector<PropertyCheck> checks;
  std::optional<GenusReport> report;  // empty when the engine threw
};

struct SweepEnumeration {
  std::vector<SweepCase> cases;
  std::size_t skipped = 0;  // tuples rejected by build_spec
};

/// Deterministic enumeration: for each q and l, each m, tuples D_1 < ... < D_m
/// of monic l-power-free products of primes of degree <= max_factor_deg, and
/// gamma_j over the transversal g0^0, ..., g0^(l-1).
SweepEnumeration enumerate_sweep(const SweepConfig& config);

SweepOutcome run_case(const ExtensionSpec& spec, std::uint64_t seed = kDefaultSeed);

/// Reference implementation: one case after another.
std::vector<SweepOutcome> run_serial(const std::vector<SweepCase>& cases, std::uint64_t seed = kDefaultSeed);
/// OpenMP version; results are stored by case index, so the output equals
/// run_serial exactly.
std::vector<SweepOutcome> run_parallel(const std::vector<SweepCase>& cases, std::uint64_t seed = kDefaultSeed);

struct SweepSummary {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t maximality_skipped = 0;
  std::map<std::string, std::size_t> per_case;
};

SweepSummary summarize(const std::vector<SweepOutcome>& outcomes, std::size_t skipped);

}  // namespace genus
