#include "genus/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "genus/error.hpp"

namespace genus::lattice {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t l) {
  a %= l;
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 mod l");
  std::uint64_t result = 1, base = a, e = l - 2;
  while (e > 0) {
    if (e & 1) result = result * base % l;
    base = base * base % l;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<Row> rref(std::uint32_t l, std::vector<Row> rows, const std::vector<std::size_t>& order) {
  std::size_t pivot_row = 0;
  for (std::size_t col : order) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col] % l == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    Row& pr = rows[pivot_row];
    const std::uint32_t inv = inverse_mod(pr[col], l);
    for (auto& x : pr) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x % l) * inv % l);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] % l == 0) continue;
      const std::uint64_t f = rows[r][col] % l;
      for (std::size_t k = 0; k < pr.size(); ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] % l + l * l - f * pr[k] % l) % l);
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<Row> rref(std::uint32_t l, std::vector<Row> rows) {
  if (rows.empty()) return rows;
  std::vector<std::size_t> order(rows.front().size());
  std::iota(order.begin(), order.end(), 0);
  return rref(l, std::move(rows), order);
}

KummerLattice trivial(std::uint32_t l) { return KummerLattice{l, {}, {}}; }

KummerLattice span(std::uint32_t l, std::vector<Poly> support, std::vector<Row> rows) {
  // Merge and sort the support, remapping columns.
  std::vector<Poly> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Row> mapped;
  mapped.reserve(rows.size());
  for (const Row& r : rows) {
    Row m(sorted.size() + 1, 0);
    m[0] = r.at(0) % l;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const auto pos = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), support[i]) - sorted.begin());
      m[pos + 1] = (m[pos + 1] + r.at(i + 1)) % l;
    }
    mapped.push_back(std::move(m));
  }
  mapped = rref(l, std::move(mapped));

  // Drop support primes whose column vanishes.
  std::vector<std::size_t> keep{0};
  std::vector<Poly> kept_support;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool nonzero = false;
    for (const Row& r : mapped) nonzero = nonzero || r[i + 1] != 0;
    if (nonzero) {
      keep.push_back(i + 1);
      kept_support.push_back(sorted[i]);
    }
  }
  KummerLattice out{l, std::move(kept_support), {}};
  for (const Row& r : mapped) {
    Row m;
    m.reserve(keep.size());
    for (std::size_t k : keep) m.push_back(r[k]);
    out.rows.push_back(std::move(m));
  }
  return out;
}

KummerLattice span(std::uint32_t l, const std::vector<RadicalClass>& generators) {
  std::vector<Poly> support;
  for (const auto& g : generators)
    for (const auto& [P, e] : g.exponents) support.push_back(P);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<Row> rows;
  for (const auto& g : generators) {
    Row r(support.size() + 1, 0);
    r[0] = g.constant % l;
    for (const auto& [P, e] : g.exponents) {
      const auto pos = static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), P) - support.begin());
      r[pos + 1] = (r[pos + 1] + e) % l;
    }
    rows.push_back(std::move(r));
  }
  return span(l, std::move(support), std::move(rows));
}

std::vector<Row> express(const KummerLattice& lat, const std::vector<Poly>& support) {
  std::vector<std::size_t> where(lat.support.size());
  for (std::size_t i = 0; i < lat.support.size(); ++i) {
    const auto it = std::find(support.begin(), support.end(), lat.support[i]);
    if (it == support.end()) throw Error(ErrorCode::FieldMismatch, "target support does not contain lattice support");
    where[i] = static_cast<std::size_t>(it - support.begin());
  }
  std::vector<Row> out;
  for (const Row& r : lat.rows) {
    Row m(support.size() + 1, 0);
    m[0] = r[0];
    for (std::size_t i = 0; i < where.size(); ++i) m[where[i] + 1] = r[i + 1];
    out.push_back(std::move(m));
  }
  return out;
}

KummerLattice join(const KummerLattice& a, const KummerLattice& b) {
  if (a.l != b.l) throw Error(ErrorCode::FieldMismatch, "joining lattices with different l");
  std::vector<Poly> support = a.support;
  support.insert(support.end(), b.support.begin(), b.support.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  auto rows = express(a, support);
  auto rb = express(b, support);
  rows.insert(rows.end(), rb.begin(), rb.end());
  return span(a.l, std::move(support), std::move(rows));
}

bool contains(const KummerLattice& super, const KummerLattice& sub) {
  if (super.l != sub.l) throw Error(ErrorCode::FieldMismatch, "comparing lattices with different l");
  return join(super, sub).rank() == super.rank();
}

bool member(const KummerLattice& lat, const RadicalClass& x) {
  return contains(lat, span(lat.l, std::vector<RadicalClass>{x}));
}

KummerLattice constant_kernel(const KummerLattice& lat) {
  // Eliminate on the polynomial columns first; surviving rows with no
  // polynomial pivot are pure constants.
  if (lat.rows.empty()) return trivial(lat.l);
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i <= lat.support.size(); ++i) order.push_back(i);
  order.push_back(0);
  auto reduced = rref(lat.l, lat.rows, order);
  std::vector<Row> constants;
  for (const Row& r : reduced) {
    bool poly_zero = true;
    for (std::size_t i = 1; i < r.size(); ++i) poly_zero = poly_zero && r[i] == 0;
    if (poly_zero) constants.push_back(Row{r[0]});
  }
  return span(lat.l, {}, std::move(constants));
}

std::vector<RadicalClass> classes(const KummerLattice& lat) {
  std::vector<RadicalClass> out;
  for (const Row& r : lat.rows) {
    RadicalClass c{r[0], {}};
    for (std::size_t i = 0; i < lat.support.size(); ++i)
      if (r[i + 1] != 0) c.exponents.emplace_back(lat.support[i], r[i + 1]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace genus::lattice
