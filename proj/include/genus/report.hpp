#pragma once

#include <string>

#include <json.hpp>

#include "genus/genus.hpp"

namespace genus {

using Json = nlohmann::ordered_json;

/// A spec as read from the wire, before validation. The Kummer schema has
/// "generators"; the non-Kummer schema has "primes", "C" and "twisted".
struct SpecInput {
  FiniteField field;
  std::uint32_t l = 2;
  bool non_kummer = false;
  std::vector<RawGenerator> generators;
  std::vector<Poly> primes;
  std::vector<std::vector<std::uint32_t>> C;
  bool twisted = false;
};

/// Throws InvalidInput on schema errors and the gf/polyring parse errors.
SpecInput parse_spec_input(const Json& j);
/// Runs the validating constructors (build_spec, build_spec_reduced or
/// build_nonkummer_spec).
SpecVariant build_spec_variant(const SpecInput& in, bool reduce, std::uint64_t seed = kDefaultSeed);

Json spec_to_json(const SpecVariant& spec);
Json field_to_json(const PolyRing& ring, const FieldDescription& d);
Json report_to_json(const GenusReport& report);
/// Inverse of report_to_json. The embedded spec is taken as given.
GenusReport report_from_json(const Json& j, std::uint64_t seed = kDefaultSeed);

/// "k( ³√(T(T+2)²), ³√((T+1)(T+2)²) )"; "k" for the base field.
std::string render_field(const PolyRing& ring, const FieldDescription& d);
std::string render_text(const GenusReport& report);

std::string to_json_line(const Json& j);

}  // namespace genus
