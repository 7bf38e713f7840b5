#include "genus/localdata.hpp"

#include <algorithm>

#include "genus/error.hpp"

namespace genus {

std::string_view to_string(InfinityBehavior b) noexcept {
  switch (b) {
    case InfinityBehavior::Ramified: return "ramified";
    case InfinityBehavior::Split: return "split";
    case InfinityBehavior::Inert: return "inert";
  }
  return "unknown";
}

InfinityBehavior classify_p_infty_cyclic(const RadicalGenerator& gen, std::uint32_t l, const FiniteField& field) {
  if (static_cast<std::uint32_t>(gen.D.degree()) % l != 0) return InfinityBehavior::Ramified;
  return field.is_lth_power(gen.gamma, l) ? InfinityBehavior::Split : InfinityBehavior::Inert;
}

InfinityInvariants infinite_invariants(const KummerLattice& lat) {
  const std::uint32_t l = lat.l;
  std::vector<Row> image;
  for (const Row& r : lat.rows) {
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < lat.support.size(); ++i)
      deg += static_cast<std::uint64_t>(r[i + 1]) * static_cast<std::uint64_t>(lat.support[i].degree());
    const auto val = static_cast<std::uint32_t>((l - deg % l) % l);
    image.push_back(Row{val, r[0] % l});
  }
  const auto basis = lattice::rref(l, std::move(image));
  // Pivot in the valuation column means the projection is onto.
  const bool ramified = !basis.empty() && basis.front()[0] != 0;
  InfinityInvariants inv;
  inv.e_inf = ramified ? l : 1;
  const std::size_t image_rank = basis.size();
  const std::size_t f_rank = image_rank - (ramified ? 1 : 0);
  inv.f_inf = f_rank ? l : 1;
  inv.g_count_exponent = static_cast<std::uint32_t>(lat.rank() - image_rank);
  return inv;
}

std::uint32_t f_inf_from_subfields(const ExtensionSpec& spec) {
  for (const auto& d : enumerate_subfields(spec))
    if (static_cast<std::uint32_t>(d.R.degree()) % spec.l == 0 && !spec.field.is_lth_power(d.eta, spec.l))
      return spec.l;
  return 1;
}

InfinityInvariants infinite_invariants(const ExtensionSpec& spec) {
  const InfinityInvariants local = infinite_invariants(kummer_lattice(spec));
  if (f_inf_from_subfields(spec) != local.f_inf)
    throw Error(ErrorCode::InternalInconsistency,
                "f_inf from the local Kummer group disagrees with the subfield enumeration");
  return local;
}

std::uint32_t finite_ramification_index(const KummerLattice& lat, const Poly& P) {
  const auto it = std::find(lat.support.begin(), lat.support.end(), P);
  if (it == lat.support.end()) return 1;
  const auto col = static_cast<std::size_t>(it - lat.support.begin()) + 1;
  for (const Row& r : lat.rows)
    if (r[col] != 0) return lat.l;
  return 1;
}

}  // namespace genus
