#include "genus/report.hpp"

#include <algorithm>

#include "genus/error.hpp"

namespace genus {

namespace {

const FiniteField& field_of(const SpecVariant& spec) {
  return std::visit([](const auto& s) -> const FiniteField& { return s.field; }, spec);
}
std::uint32_t l_of(const SpecVariant& spec) {
  return std::visit([](const auto& s) { return s.l; }, spec);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint32_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint32_t>();
}

FqElem parse_elem(const PolyRing& ring, const Json& j) {
  if (j.is_number_integer()) return ring.field().from_int(j.get<std::int64_t>());
  if (j.is_string()) return ring.parse_element(j.get<std::string>());
  throw Error(ErrorCode::InvalidInput, "field element must be an integer or a string");
}

Poly parse_poly(const PolyRing& ring, const Json& j) {
  if (j.is_string()) return ring.parse(j.get<std::string>());
  if (j.is_number_integer()) return ring.constant(ring.field().from_int(j.get<std::int64_t>()));
  throw Error(ErrorCode::InvalidInput, "polynomial must be a string");
}

FiniteField parse_field(const Json& j) {
  const std::uint32_t p = as_uint(require(j, "p"), "p");
  const std::uint32_t n = j.contains("n") ? as_uint(j.at("n"), "n") : 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) {
    modulus.emplace();
    for (const auto& c : j.at("modulus")) modulus->push_back(as_uint(c, "modulus coefficient"));
  }
  return FiniteField::make(p, n, modulus);
}

Json matrix_json(const std::vector<std::vector<std::uint32_t>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

std::vector<std::vector<std::uint32_t>> parse_matrix(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "matrix must be an array of rows");
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorCode::InvalidInput, "matrix row must be an array");
    auto& r = out.emplace_back();
    for (const auto& x : row) r.push_back(as_uint(x, "matrix entry"));
  }
  return out;
}

Json optional_degree(const std::optional<std::uint32_t>& v) {
  return v ? Json(*v) : Json("undetermined");
}
std::optional<std::uint32_t> parse_optional_degree(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "undetermined") return std::nullopt;
  return as_uint(j, "degree");
}

FieldDescription field_from_json(const PolyRing& ring, std::uint32_t l, const Json& j, std::uint64_t seed) {
  FieldDescription d;
  std::vector<RadicalText> rads;
  for (const auto& r : require(j, "radicals"))
    rads.push_back(RadicalText{parse_elem(ring, require(r, "gamma")), parse_poly(ring, require(r, "poly"))});
  d.radical = lattice_from_radicals(ring, l, rads, seed);
  if (j.contains("cyclotomic"))
    for (const auto& c : j.at("cyclotomic"))
      d.cyclotomic.push_back(CyclotomicSubfield{parse_poly(ring, require(c, "P")), as_uint(require(c, "l"), "l"),
                                                parse_poly(ring, require(c, "unit_generator"))});
  d.joined_with_K = j.value("joined_with_K", false);
  d.constant_degree = parse_optional_degree(require(j, "constant_degree"));
  return d;
}

std::string superscript(std::uint64_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  const std::string s = std::to_string(n);
  std::string out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

bool compound(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('-', 1) != std::string::npos || s.find('*') != std::string::npos;
}

std::string render_radicand(const PolyRing& ring, const KummerLattice& lat, const Row& row) {
  const FiniteField& F = ring.field();
  std::vector<std::pair<std::string, std::uint32_t>> parts;
  const FqElem gamma = F.exp(row[0]);
  if (gamma != F.one()) parts.emplace_back(F.to_string(gamma), 1);
  for (std::size_t i = 0; i < lat.support.size(); ++i)
    if (row[i + 1]) parts.emplace_back(ring.render(lat.support[i]), row[i + 1]);
  std::string out;
  for (const auto& [s, e] : parts) {
    const bool wrap = compound(s) && (parts.size() > 1 || e > 1);
    out += wrap ? "(" + s + ")" : s;
    if (e > 1) out += superscript(e);
  }
  return out;
}

}  // namespace

SpecInput parse_spec_input(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "spec must be a JSON object");
  const bool has_gens = j.contains("generators");
  const bool has_primes = j.contains("primes");
  if (has_gens == has_primes)
    throw Error(ErrorCode::InvalidInput, "spec needs exactly one of \"generators\" or \"primes\"");
  SpecInput in{parse_field(j), as_uint(require(j, "l"), "l")};
  const PolyRing ring(in.field);
  if (has_gens) {
    for (const auto& g : j.at("generators")) {
      const FqElem a = g.contains("gamma") ? parse_elem(ring, g.at("gamma")) : in.field.one();
      in.generators.push_back(RawGenerator{a, parse_poly(ring, require(g, "D"))});
    }
  } else {
    in.non_kummer = true;
    for (const auto& P : j.at("primes")) in.primes.push_back(parse_poly(ring, P));
    in.C = parse_matrix(require(j, "C"));
    in.twisted = j.value("twisted", false);
  }
  return in;
}

SpecVariant build_spec_variant(const SpecInput& in, bool reduce, std::uint64_t seed) {
  if (in.non_kummer) return build_nonkummer_spec(in.field, in.l, in.primes, in.C, in.twisted);
  return reduce ? build_spec_reduced(in.field, in.l, in.generators, seed) : build_spec(in.field, in.l, in.generators, seed);
}

Json spec_to_json(const SpecVariant& spec) {
  const FiniteField& F = field_of(spec);
  const PolyRing ring(F);
  Json j;
  j["p"] = F.p();
  j["n"] = F.n();
  if (F.n() > 1) j["modulus"] = F.modulus();
  j["l"] = l_of(spec);
  if (const auto* k = std::get_if<ExtensionSpec>(&spec)) {
    Json gens = Json::array();
    for (const auto& g : k->generators) gens.push_back(Json{{"gamma", F.to_string(g.gamma)}, {"D", ring.render(g.D)}});
    j["generators"] = gens;
  } else {
    const auto& nk = std::get<NonKummerSpec>(spec);
    Json primes = Json::array();
    for (const auto& P : nk.primes) primes.push_back(ring.render(P));
    j["primes"] = primes;
    j["C"] = matrix_json(nk.C);
    j["twisted"] = nk.twisted;
  }
  return j;
}

Json field_to_json(const PolyRing& ring, const FieldDescription& d) {
  const FiniteField& F = ring.field();
  Json j;
  Json rads = Json::array();
  for (const auto& r : radicals(ring, d.radical))
    rads.push_back(Json{{"gamma", F.to_string(r.gamma)}, {"poly", ring.render(r.poly)}});
  j["radicals"] = rads;
  Json cyc = Json::array();
  for (const auto& c : d.cyclotomic)
    cyc.push_back(Json{{"P", ring.render(c.P)}, {"l", c.ell}, {"unit_generator", ring.render(c.unit_generator)}});
  j["cyclotomic"] = cyc;
  j["joined_with_K"] = d.joined_with_K;
  j["constant_degree"] = optional_degree(d.constant_degree);
  j["text"] = render_field(ring, d);
  return j;
}

Json report_to_json(const GenusReport& report) {
  const FiniteField& F = field_of(report.spec);
  const PolyRing ring(F);
  Json j;
  j["case"] = std::string(to_string(report.case_label));
  Json spec = spec_to_json(report.spec);
  spec["beta"] = matrix_json(report.support.beta);
  j["spec"] = spec;

  Json sup;
  Json primes = Json::array();
  for (const auto& P : report.support.primes) primes.push_back(ring.render(P));
  sup["primes"] = primes;
  sup["degrees"] = report.support.degrees;
  sup["s"] = report.support.s;
  j["support"] = sup;

  if (report.chosen_Pr) {
    j["P_r"] = ring.render(report.chosen_Pr->P);
    j["bezout"] = Json{{"a", report.chosen_Pr->a}, {"b", report.chosen_Pr->b}};
  } else {
    j["P_r"] = nullptr;
    j["bezout"] = nullptr;
  }
  j["K"] = field_to_json(ring, report.K);
  j["E"] = field_to_json(ring, report.E);
  j["E_gex"] = field_to_json(ring, report.E_gex);
  j["M"] = report.M ? field_to_json(ring, *report.M) : Json(nullptr);
  j["K_ge"] = field_to_json(ring, report.K_ge);
  j["K_gex"] = field_to_json(ring, report.K_gex);
  j["genus_degree"] = report.genus_degree;
  j["extended_degree"] = report.extended_degree;
  j["e_inf"] = report.e_inf;
  j["f_inf"] = optional_degree(report.f_inf);
  j["m0"] = optional_degree(report.m0);
  return j;
}

GenusReport report_from_json(const Json& j, std::uint64_t seed) {
  const Json& sj = require(j, "spec");
  const SpecInput in = parse_spec_input(sj);
  const PolyRing ring(in.field);
  const std::uint32_t l = in.l;

  // The echo is already normalised; rebuild it without revalidating.
  SpecVariant spec = [&]() -> SpecVariant {
    if (in.non_kummer) return NonKummerSpec{in.field, l, in.primes, in.C, in.twisted};
    ExtensionSpec k{in.field, l, {}};
    for (const auto& g : in.generators) k.generators.push_back(RadicalGenerator{g.a, g.A});
    return k;
  }();

  GenusReport rep{case_from_string(require(j, "case").get<std::string>()), std::move(spec)};
  const Json& sup = require(j, "support");
  for (const auto& P : require(sup, "primes")) rep.support.primes.push_back(parse_poly(ring, P));
  for (const auto& d : require(sup, "degrees")) rep.support.degrees.push_back(as_uint(d, "degree"));
  rep.support.s = as_uint(require(sup, "s"), "s");
  rep.support.beta = parse_matrix(require(sj, "beta"));

  if (!require(j, "P_r").is_null()) {
    const Poly P = parse_poly(ring, j.at("P_r"));
    const auto it = std::find(rep.support.primes.begin(), rep.support.primes.end(), P);
    if (it == rep.support.primes.end()) throw Error(ErrorCode::InvalidInput, "P_r is not in the support");
    const Json& bz = require(j, "bezout");
    rep.chosen_Pr = PrChoice{static_cast<std::size_t>(it - rep.support.primes.begin()), P,
                             require(bz, "a").get<std::int64_t>(), require(bz, "b").get<std::int64_t>()};
  }
  rep.K = field_from_json(ring, l, require(j, "K"), seed);
  rep.E = field_from_json(ring, l, require(j, "E"), seed);
  rep.E_gex = field_from_json(ring, l, require(j, "E_gex"), seed);
  if (!require(j, "M").is_null()) rep.M = field_from_json(ring, l, j.at("M"), seed);
  rep.K_ge = field_from_json(ring, l, require(j, "K_ge"), seed);
  rep.K_gex = field_from_json(ring, l, require(j, "K_gex"), seed);
  rep.genus_degree = require(j, "genus_degree").get<std::uint64_t>();
  rep.extended_degree = require(j, "extended_degree").get<std::uint64_t>();
  rep.e_inf = as_uint(require(j, "e_inf"), "e_inf");
  rep.f_inf = parse_optional_degree(require(j, "f_inf"));
  rep.m0 = parse_optional_degree(require(j, "m0"));
  return rep;
}

std::string render_field(const PolyRing& ring, const FieldDescription& d) {
  const std::uint32_t l = d.radical.l;
  const std::string root = l == 2 ? "√" : superscript(l) + "√";
  std::vector<std::string> parts;
  for (const Row& r : d.radical.rows) parts.push_back(root + "(" + render_radicand(ring, d.radical, r) + ")");
  for (const auto& c : d.cyclotomic) parts.push_back("L(" + ring.render(c.P) + ")");
  std::string out;
  if (parts.empty()) {
    out = d.joined_with_K ? "K" : "k";
  } else {
    out = "k( ";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    out += " )";
    if (d.joined_with_K) out += "·K";
  }
  return out;
}

std::string render_text(const GenusReport& report) {
  const FiniteField& F = field_of(report.spec);
  const PolyRing ring(F);
  auto deg = [](const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : std::string("undetermined"); };
  std::string out;
  out += "case: " + std::string(to_string(report.case_label)) + "\n";
  out += "K = " + render_field(ring, report.K) + "\n";
  out += "support:";
  for (std::size_t i = 0; i < report.support.r(); ++i) out += (i ? ", " : " ") + ring.render(report.support.primes[i]);
  out += " (r = " + std::to_string(report.support.r()) + ", s = " + std::to_string(report.support.s) + ")\n";
  if (report.chosen_Pr)
    out += "P_r = " + ring.render(report.chosen_Pr->P) + ", a = " + std::to_string(report.chosen_Pr->a) +
           ", b = " + std::to_string(report.chosen_Pr->b) + "\n";
  out += "E = " + render_field(ring, report.E) + "\n";
  out += "E_gex = " + render_field(ring, report.E_gex) + "\n";
  if (report.M) out += "M = " + render_field(ring, *report.M) + "\n";
  out += "K_ge = " + render_field(ring, report.K_ge) + "\n";
  out += "K_gex = " + render_field(ring, report.K_gex) + "\n";
  out += "[K_ge:K] = " + std::to_string(report.genus_degree) + ", [K_gex:K] = " +
         std::to_string(report.extended_degree) + "\n";
  out += "constant field degree: K_ge " + deg(report.K_ge.constant_degree) + ", K_gex " +
         deg(report.K_gex.constant_degree) + "\n";
  out += "p_inf in K: e = " + std::to_string(report.e_inf) + ", f = " + deg(report.f_inf) + "\n";
  out += "m0 = " + deg(report.m0) + "\n";
  return out;
}

std::string to_json_line(const Json& j) { return j.dump(); }

}  // namespace genus
