#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "genus/sweep.hpp"

namespace genus::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2, kVerificationFailed = 3 };

struct JobConfig {
  std::string subcommand;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_json;
  std::optional<std::string> report_path;  // verify: check this report instead of recomputing
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  bool reduce = false;
  bool serial = false;  // sweep: use the single-threaded reference
  SweepConfig sweep;
};

int cmd_compute(const JobConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const JobConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genus::cli
