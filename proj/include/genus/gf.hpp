#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace genus {

/// Element of F_q. The code packs the coefficient tuple (c_0, ..., c_{n-1})
/// of the representing polynomial in u as base-p digits with c_0 most
/// significant, so comparing codes is the lexicographic order of the tuples
/// read from the constant term up. Code 0 is the zero element.
struct FqElem {
  std::uint32_t code = 0;

  friend auto operator<=>(const FqElem&, const FqElem&) = default;
  bool is_zero() const noexcept { return code == 0; }
};

/// Largest supported field size. q^8 - 1 must fit in 64 bits.
inline constexpr std::uint32_t kMaxFieldSize = 256;

bool is_prime(std::uint64_t n) noexcept;

/// The finite field F_q = F_p[u]/(m(u)) together with the lookup tables
/// (addition, discrete log to the canonical generator) used by every other
/// module. Copies share the tables; instances are immutable.
class FiniteField {
 public:
  /// Canonical modulus when `modulus` is absent: the lexicographically
  /// smallest monic irreducible of degree n, coefficients listed from the
  /// constant term up. A supplied modulus is given in the same order and must
  /// have n + 1 entries ending in 1.
  static FiniteField make(std::uint32_t p, std::uint32_t n,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FqElem zero() const noexcept { return FqElem{0}; }
  FqElem one() const noexcept { return one_; }
  /// Image of an integer under Z -> F_p -> F_q.
  FqElem from_int(std::int64_t v) const noexcept;
  FqElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FqElem x) const;
  /// The element u (only meaningful for n > 1; equals 0 in a prime field).
  FqElem u() const;

  FqElem add(FqElem a, FqElem b) const noexcept { return FqElem{t_->add[a.code * q_ + b.code]}; }
  FqElem neg(FqElem a) const noexcept { return FqElem{t_->neg[a.code]}; }
  FqElem sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const noexcept {
    if (a.is_zero() || b.is_zero()) return zero();
    return FqElem{t_->exp[t_->log[a.code] + t_->log[b.code]]};
  }
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t e) const;

  /// Canonical generator of F_q^*: the generator with the smallest code.
  FqElem generator() const noexcept { return FqElem{t_->exp[1]}; }
  /// Discrete logarithm to base generator(), in [0, q - 1).
  std::uint32_t log(FqElem x) const;
  FqElem exp(std::uint64_t i) const noexcept { return FqElem{t_->exp[i % (q_ - 1)]}; }

  /// True iff x lies in (F_q^*)^l.
  bool is_lth_power(FqElem x, std::uint32_t l) const;
  /// Coordinate of x in F_q^*/(F_q^*)^l, i.e. log(x) mod gcd(l, q - 1).
  std::uint32_t power_class(FqElem x, std::uint32_t l) const;

  /// Integers for prime fields, polynomials in u otherwise ("u+2", "2*u^2+1").
  std::string to_string(FqElem x) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint8_t> add;
    std::vector<std::uint8_t> neg;
    std::vector<std::uint8_t> exp;  // length 2(q-1)
    std::vector<std::uint16_t> log;
  };

  FiniteField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  FqElem one_{};
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> t_;
};

}  // namespace genus
