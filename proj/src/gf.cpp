#include "genus/gf.hpp"

#include <numeric>
#include <sstream>

#include "genus/error.hpp"

namespace genus {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Digits = std::vector<std::uint32_t>;

// Polynomials over F_p as low-to-high coefficient vectors; only used while
// building the field tables.
Digits trim(Digits a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Digits fp_mod(Digits a, const Digits& m, std::uint32_t p) {
  a = trim(std::move(a));
  const std::size_t dm = m.size() - 1;
  const std::uint32_t inv_lead = [&] {
    for (std::uint32_t x = 1; x < p; ++x)
      if (x * m.back() % p == 1) return x;
    return 1u;
  }();
  while (a.size() > dm) {
    const std::uint32_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    a = trim(std::move(a));
  }
  return a;
}

Digits fp_mulmod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(r), m, p);
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool fp_irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Digits g(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (fp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t n,
                              std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw Error(ErrorCode::FieldTooLarge,
                  "q = p^n exceeds the supported bound " + std::to_string(kMaxFieldSize));
  }

  Digits m;
  if (modulus) {
    m = *modulus;
    if (m.size() != n + 1 || m.back() != 1)
      throw Error(ErrorCode::DegreeMismatch, "modulus must be monic of degree " + std::to_string(n));
    for (auto c : m)
      if (c >= p) throw Error(ErrorCode::DegreeMismatch, "modulus coefficient out of range");
    if (!fp_irreducible(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
  } else {
    // Tuples (c_0, ..., c_{n-1}) in lexicographic order, c_0 most significant.
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      Digits cand(n + 1, 0);
      std::uint64_t v = idx;
      for (std::uint32_t k = n; k-- > 0;) {
        cand[k] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      cand[n] = 1;
      if (fp_irreducible(cand, p)) {
        m = cand;
        break;
      }
    }
  }

  FiniteField F;
  F.p_ = p;
  F.n_ = n;
  F.q_ = static_cast<std::uint32_t>(q);
  F.modulus_ = m;
  std::uint32_t pn1 = 1;
  for (std::uint32_t i = 1; i < n; ++i) pn1 *= p;
  F.one_ = FqElem{pn1};

  auto tables = std::make_shared<Tables>();
  tables->add.resize(q * q);
  tables->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto da = F.coeffs(FqElem{a});
    Digits dn(n);
    for (std::uint32_t k = 0; k < n; ++k) dn[k] = (p - da[k]) % p;
    tables->neg[a] = static_cast<std::uint8_t>(F.from_coeffs(dn).code);
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto db = F.coeffs(FqElem{b});
      Digits ds(n);
      for (std::uint32_t k = 0; k < n; ++k) ds[k] = (da[k] + db[k]) % p;
      tables->add[a * q + b] = static_cast<std::uint8_t>(F.from_coeffs(ds).code);
    }
  }

  // Canonical generator: smallest code whose multiplicative order is q - 1.
  const Digits one_d = trim(F.coeffs(F.one_));
  for (std::uint32_t g = 1; g < q; ++g) {
    const Digits dg = trim(F.coeffs(FqElem{g}));
    std::vector<std::uint8_t> powers{static_cast<std::uint8_t>(F.one_.code)};
    Digits cur = dg;
    while (cur != one_d && powers.size() < q) {
      Digits padded = cur;
      padded.resize(n, 0);
      powers.push_back(static_cast<std::uint8_t>(F.from_coeffs(padded).code));
      cur = fp_mulmod(cur, dg, m, p);
    }
    if (powers.size() == q - 1 && cur == one_d) {
      tables->exp.resize(2 * (q - 1));
      tables->log.assign(q, 0);
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        tables->exp[i] = tables->exp[i + q - 1] = powers[i];
        tables->log[powers[i]] = static_cast<std::uint16_t>(i);
      }
      break;
    }
  }
  F.t_ = std::move(tables);
  return F;
}

FqElem FiniteField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FqElem{static_cast<std::uint32_t>(r) * one_.code};
}

FqElem FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) throw Error(ErrorCode::DegreeMismatch, "too many coefficients for F_q");
  std::uint32_t code = 0;
  for (std::uint32_t k = 0; k < n_; ++k) {
    const std::uint32_t c = k < coeffs.size() ? coeffs[k] % p_ : 0;
    code = code * p_ + c;
  }
  return FqElem{code};
}

std::vector<std::uint32_t> FiniteField::coeffs(FqElem x) const {
  std::vector<std::uint32_t> c(n_);
  std::uint32_t v = x.code;
  for (std::uint32_t k = n_; k-- > 0;) {
    c[k] = v % p_;
    v /= p_;
  }
  return c;
}

FqElem FiniteField::u() const {
  std::vector<std::uint32_t> c(n_, 0);
  if (n_ > 1) c[1] = 1;
  return from_coeffs(c);
}

FqElem FiniteField::inv(FqElem a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_q");
  const std::uint32_t l = t_->log[a.code];
  return FqElem{t_->exp[(q_ - 1 - l) % (q_ - 1)]};
}

FqElem FiniteField::pow(FqElem a, std::uint64_t e) const {
  FqElem result = one_;
  FqElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FiniteField::log(FqElem x) const {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "logarithm of zero");
  return t_->log[x.code];
}

bool FiniteField::is_lth_power(FqElem x, std::uint32_t l) const {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "l-th power test of zero");
  const std::uint32_t g = std::gcd(l, q_ - 1);
  return pow(x, (q_ - 1) / g) == one_;
}

std::uint32_t FiniteField::power_class(FqElem x, std::uint32_t l) const {
  const std::uint32_t g = std::gcd(l, q_ - 1);
  return log(x) % g;
}

std::string FiniteField::to_string(FqElem x) const {
  const auto c = coeffs(x);
  if (n_ == 1) return std::to_string(c[0]);
  std::ostringstream out;
  bool first = true;
  for (std::uint32_t k = n_; k-- > 0;) {
    if (c[k] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (k == 0) {
      out << c[k];
      continue;
    }
    if (c[k] != 1) out << c[k] << '*';
    out << 'u';
    if (k > 1) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace genus
