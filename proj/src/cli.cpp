#include "genus/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "genus/error.hpp"
#include "genus/report.hpp"

namespace genus::cli {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return Json::parse(in);
}

Json load_spec_json(const JobConfig& c) {
  if (c.inline_json) return Json::parse(*c.inline_json);
  if (c.input_path) return read_json_file(*c.input_path);
  throw Error(ErrorCode::InvalidInput, "one of --input or --inline is required");
}

bool is_internal(ErrorCode code) {
  return code == ErrorCode::InternalInconsistency || code == ErrorCode::NoUniqueMaximum;
}

// Runs `body`, mapping exceptions to the exit-code contract.
template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return is_internal(e.code()) ? kInternal : kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

GenusReport compute_report(const SpecVariant& spec, std::uint64_t seed) {
  if (const auto* k = std::get_if<ExtensionSpec>(&spec)) return genus_field(*k, std::nullopt, seed);
  return genus_field_nonkummer(std::get<NonKummerSpec>(spec));
}

Json check_json(const PropertyCheck& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["skipped"] = c.skipped;
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  return j;
}

}  // namespace

int cmd_compute(const JobConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SpecInput in = parse_spec_input(load_spec_json(c));
    const GenusReport rep = compute_report(build_spec_variant(in, c.reduce, c.seed), c.seed);
    if (c.format == "json") {
      out << report_to_json(rep).dump(2) << "\n";
    } else {
      out << render_text(rep);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const JobConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::optional<SpecVariant> spec;
    std::optional<GenusReport> rep;
    if (c.report_path) {
      const Json rj = read_json_file(*c.report_path);
      spec = build_spec_variant(parse_spec_input(rj.at("spec")), false, c.seed);
      rep = report_from_json(rj, c.seed);
    } else {
      spec = build_spec_variant(parse_spec_input(load_spec_json(c)), c.reduce, c.seed);
      rep = compute_report(*spec, c.seed);
    }
    std::vector<PropertyCheck> checks;
    if (const auto* k = std::get_if<ExtensionSpec>(&*spec)) {
      checks = run_checks(*k, *rep, c.seed);
    } else {
      checks = run_checks(std::get<NonKummerSpec>(*spec), *rep);
    }
    bool ok = true;
    for (const auto& ch : checks) {
      ok = ok && ch.passed;
      if (c.format == "json") {
        out << check_json(ch).dump() << "\n";
      } else {
        out << (ch.skipped ? "SKIP " : ch.passed ? "PASS " : "FAIL ") << ch.name;
        if (ch.witness) out << "  (" << *ch.witness << ")";
        out << "\n";
      }
    }
    return static_cast<int>(ok ? kOk : kVerificationFailed);
  });
}

int cmd_sweep(const JobConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SweepConfig cfg = c.sweep;
    cfg.seed = c.seed;
    const SweepEnumeration en = enumerate_sweep(cfg);
    const auto outcomes = c.serial ? run_serial(en.cases, cfg.seed) : run_parallel(en.cases, cfg.seed);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& o = outcomes[i];
      Json j;
      j["index"] = i;
      j["case"] = o.case_label;
      j["spec"] = spec_to_json(en.cases[i].spec);
      if (o.report) {
        j["genus_degree"] = o.report->genus_degree;
        j["extended_degree"] = o.report->extended_degree;
      }
      j["passed"] = o.passed;
      Json failed = Json::array();
      for (const auto& ch : o.checks)
        if (!ch.passed) failed.push_back(check_json(ch));
      j["failed"] = failed;
      out << j.dump() << "\n";
    }
    const SweepSummary s = summarize(outcomes, en.skipped);
    Json sj;
    sj["total"] = s.total;
    sj["failed"] = s.failed;
    sj["skipped_invalid"] = s.skipped;
    sj["maximality_skipped"] = s.maximality_skipped;
    Json per = Json::object();
    for (const auto& [k, v] : s.per_case) per[k] = v;
    sj["per_case"] = per;
    out << Json{{"summary", sj}}.dump() << "\n";
    return static_cast<int>(s.failed ? kVerificationFailed : kOk);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus and extended genus fields of elementary abelian l-extensions of F_q(T)"};
  app.require_subcommand(1);
  JobConfig c;

  auto add_common = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", c.input_path, "Spec JSON file");
    auto* inl = sub->add_option("--inline", c.inline_json, "Spec JSON given inline");
    in->excludes(inl);
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", c.seed, "Seed for polynomial factorization");
    sub->add_flag("--reduce", c.reduce, "Replace dependent generators by a basis");
  };
  auto* compute = app.add_subcommand("compute", "Compute K_ge and K_gex for a spec");
  add_common(compute);
  auto* verify = app.add_subcommand("verify", "Run the independent checks on a spec or a saved report");
  add_common(verify);
  verify->add_option("--report", c.report_path, "Saved JSON report to check");
  auto* sweep = app.add_subcommand("sweep", "Exhaustive sweep over small fields");
  sweep->add_option("--q", c.sweep.q_list, "Field sizes")->delimiter(',');
  sweep->add_option("--l", c.sweep.l_list, "Exponents l (default: all primes l | q - 1)")->delimiter(',');
  sweep->add_option("--max-deg", c.sweep.max_deg, "Bound on deg D_1 + ... + deg D_m");
  sweep->add_option("--max-m", c.sweep.max_m, "Bound on the number of generators");
  sweep->add_option("--max-factor-deg", c.sweep.max_factor_deg, "Bound on the degree of prime factors");
  sweep->add_option("--max-r", c.sweep.max_r, "Bound on the number of ramified primes");
  sweep->add_option("--seed", c.seed, "Seed for polynomial factorization");
  sweep->add_flag("--serial", c.serial, "Run the single-threaded reference loop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kInvalidInput;
  }
  if (*compute) return cmd_compute(c, out, err);
  if (*verify) return cmd_verify(c, out, err);
  return cmd_sweep(c, out, err);
}

}  // namespace genus::cli
