#include "genus/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "genus/error.hpp"

namespace genus {

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (auto cmp = a.degree() <=> b.degree(); cmp != 0) return cmp;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (auto cmp = a.c[i] <=> b.c[i]; cmp != 0) return cmp;
  return std::strong_ordering::equal;
}

void PolyRing::trim(Poly& a) const {
  while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

Poly PolyRing::constant(FqElem c) const {
  Poly r;
  if (!c.is_zero()) r.c.push_back(c);
  return r;
}

Poly PolyRing::monomial(FqElem c, std::size_t e) const {
  if (c.is_zero()) return {};
  Poly r;
  r.c.assign(e + 1, F_.zero());
  r.c[e] = c;
  return r;
}

Poly PolyRing::from_coeffs(std::vector<FqElem> c) const {
  Poly r{std::move(c)};
  trim(r);
  return r;
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F_.add(a.coeff(i), b.coeff(i));
  trim(r);
  return r;
}

Poly PolyRing::neg(const Poly& a) const {
  Poly r = a;
  for (auto& x : r.c) x = F_.neg(x);
  return r;
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, F_.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F_.add(r.c[i + j], F_.mul(a.c[i], b.c[j]));
  }
  trim(r);
  return r;
}

Poly PolyRing::scale(const Poly& a, FqElem s) const {
  if (s.is_zero()) return {};
  Poly r = a;
  for (auto& x : r.c) x = F_.mul(x, s);
  return r;
}

std::pair<Poly, Poly> PolyRing::divrem(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  Poly r = a;
  Poly quot;
  quot.c.assign(a.c.size() - b.c.size() + 1, F_.zero());
  const FqElem inv_lead = F_.inv(b.lead());
  const std::size_t db = b.c.size() - 1;
  for (std::size_t k = a.c.size(); k-- > db;) {
    const FqElem coef = F_.mul(r.c[k], inv_lead);
    if (coef.is_zero()) continue;
    const std::size_t shift = k - db;
    quot.c[shift] = coef;
    for (std::size_t i = 0; i <= db; ++i) r.c[shift + i] = F_.sub(r.c[shift + i], F_.mul(coef, b.c[i]));
  }
  r.c.resize(db);
  trim(r);
  trim(quot);
  return {std::move(quot), std::move(r)};
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, F_.inv(a.lead()));
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly PolyRing::pow(const Poly& a, std::uint64_t e) const {
  Poly result = one(), base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Poly PolyRing::powmod(const Poly& a, std::uint64_t e, const Poly& m) const {
  Poly result = mod(one(), m), base = mod(a, m);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base), m);
    e >>= 1;
    if (e > 0) base = mod(mul(base, base), m);
  }
  return result;
}

Poly PolyRing::derivative(const Poly& a) const {
  Poly r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = F_.mul(F_.from_int(static_cast<std::int64_t>(i)), a.c[i]);
  trim(r);
  return r;
}

FqElem PolyRing::eval(const Poly& a, FqElem x) const {
  FqElem acc = F_.zero();
  for (std::size_t k = a.c.size(); k-- > 0;) acc = F_.add(F_.mul(acc, x), a.c[k]);
  return acc;
}

// f(T) = g(T)^p with g recovered coefficient-wise via a -> a^(q/p).
Poly PolyRing::frobenius_root(const Poly& f) const {
  const std::uint64_t p = F_.p();
  const std::uint64_t root_exp = F_.q() / F_.p();
  Poly g;
  g.c.resize(f.c.size() / p + 1, F_.zero());
  for (std::size_t i = 0; i < f.c.size(); i += p) g.c[i / p] = F_.pow(f.c[i], root_exp);
  trim(g);
  return g;
}

std::vector<std::pair<Poly, std::uint32_t>> PolyRing::squarefree(const Poly& f) const {
  std::vector<std::pair<Poly, std::uint32_t>> out;
  const Poly unit = one();
  Poly c = gcd(f, derivative(f));
  Poly w = div(f, c);
  std::uint32_t i = 1;
  while (w != unit) {
    Poly y = gcd(w, c);
    Poly fac = div(w, y);
    if (fac != unit) out.emplace_back(std::move(fac), i);
    w = std::move(y);
    c = div(c, w);
    ++i;
  }
  if (c != unit) {
    for (auto& [g, j] : squarefree(frobenius_root(c))) out.emplace_back(std::move(g), j * F_.p());
  }
  return out;
}

std::vector<std::pair<Poly, std::size_t>> PolyRing::distinct_degree(const Poly& f) const {
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly rest = f;
  Poly h = mod(T(), rest);
  for (std::size_t i = 1; rest.degree() >= static_cast<int>(2 * i); ++i) {
    h = powmod(h, F_.q(), rest);
    Poly g = gcd(rest, sub(h, T()));
    if (g.degree() > 0) {
      rest = div(rest, g);
      h = mod(h, rest);
      out.emplace_back(std::move(g), i);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<std::size_t>(rest.degree()));
  return out;
}

void PolyRing::equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) const {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::uniform_int_distribution<std::uint32_t> coef(0, F_.q() - 1);
  for (;;) {
    Poly a;
    a.c.resize(n);
    for (auto& x : a.c) x = FqElem{coef(rng)};
    trim(a);
    if (a.degree() < 1) continue;
    Poly g = gcd(a, f);
    if (g.degree() <= 0) {
      Poly b;
      if (F_.p() == 2) {
        // Absolute trace a + a^2 + ... + a^(2^(k d - 1)), q = 2^k.
        Poly t = mod(a, f), s = t;
        for (std::size_t i = 1; i < F_.n() * d; ++i) {
          t = mod(mul(t, t), f);
          s = add(s, t);
        }
        b = s;
      } else {
        // a^((q^d - 1)/2) = (prod_i a^(q^i))^((q - 1)/2).
        Poly t = mod(a, f), s = t;
        for (std::size_t i = 1; i < d; ++i) {
          t = powmod(t, F_.q(), f);
          s = mod(mul(s, t), f);
        }
        b = sub(powmod(s, (F_.q() - 1) / 2, f), one());
      }
      g = gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(div(f, g), d, rng, out);
      return;
    }
  }
}

Factorization PolyRing::factor_monic(const Poly& f, std::uint64_t seed) const {
  if (f.degree() < 1) throw Error(ErrorCode::Constant, "cannot factor a constant polynomial");
  if (f.lead() != F_.one()) throw Error(ErrorCode::NotMonic, "factor_monic requires a monic polynomial");
  std::mt19937_64 rng(seed);
  std::map<Poly, std::uint32_t> mult;
  for (const auto& [sqf, e] : squarefree(f)) {
    for (const auto& [block, d] : distinct_degree(sqf)) {
      std::vector<Poly> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) mult[piece] += e;
    }
  }
  Factorization out{F_.one(), {}};
  out.factors.assign(mult.begin(), mult.end());
  return out;
}

Factorization PolyRing::factor(const Poly& f, std::uint64_t seed) const {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor zero");
  if (f.degree() == 0) return Factorization{f.lead(), {}};
  Factorization out = factor_monic(monic(f), seed);
  out.unit = f.lead();
  return out;
}

Poly PolyRing::expand(const Factorization& fac) const {
  Poly r = constant(fac.unit);
  for (const auto& [P, e] : fac.factors) r = mul(r, pow(P, e));
  return r;
}

bool PolyRing::is_irreducible(const Poly& f) const {
  if (f.degree() < 1) return false;
  const Poly m = monic(f);
  Poly h = mod(T(), m);
  for (int i = 1; 2 * i <= m.degree(); ++i) {
    h = powmod(h, F_.q(), m);
    if (gcd(m, sub(h, T())).degree() > 0) return false;
  }
  return true;
}

Poly PolyRing::monic_from_index(std::size_t deg, std::uint64_t index) const {
  Poly r;
  r.c.assign(deg + 1, F_.zero());
  r.c[deg] = F_.one();
  for (std::size_t k = deg; k-- > 0;) {
    r.c[k] = FqElem{static_cast<std::uint32_t>(index % F_.q())};
    index /= F_.q();
  }
  return r;
}

std::vector<Poly> PolyRing::monic_irreducibles(std::size_t deg) const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < deg; ++i) count *= F_.q();
  std::vector<Poly> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(deg, idx);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

class Parser {
 public:
  Parser(const PolyRing& ring, std::string_view text, bool allow_T) : R_(ring), s_(text), allow_T_(allow_T) {}

  Poly run() {
    Poly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"",
                std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ULL << 40)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  Poly expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly acc = term();
    if (negate) acc = R_.neg(acc);
    for (;;) {
      if (accept('+')) acc = R_.add(acc, term());
      else if (accept('-')) acc = R_.sub(acc, term());
      else return acc;
    }
  }

  Poly term() {
    Poly acc = power();
    while (accept('*')) acc = R_.mul(acc, power());
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) base = R_.pow(base, integer());
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::uint64_t v = integer();
      return R_.constant(R_.field().from_int(static_cast<std::int64_t>(v % R_.field().p())));
    }
    if (ch == 'T' && allow_T_) {
      ++pos_;
      return R_.T();
    }
    if (ch == 'u' && R_.field().n() > 1) {
      ++pos_;
      return R_.constant(R_.field().u());
    }
    if (std::isalpha(static_cast<unsigned char>(ch)))
      throw Error(ErrorCode::UnknownCoefficient,
                  std::string("unknown symbol '") + ch + "' at position " + std::to_string(pos_), std::to_string(pos_));
    fail("unexpected character");
  }

  const PolyRing& R_;
  std::string_view s_;
  bool allow_T_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly PolyRing::parse(std::string_view text) const { return Parser(*this, text, true).run(); }

FqElem PolyRing::parse_element(std::string_view text) const {
  const Poly p = Parser(*this, text, false).run();
  return p.coeff(0);
}

std::string PolyRing::render(const Poly& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = a.c.size(); e-- > 0;) {
    const FqElem c = a.c[e];
    if (c.is_zero()) continue;
    if (!first) out << '+';
    first = false;
    const std::string cs = F_.to_string(c);
    if (e == 0) {
      out << cs;
      continue;
    }
    if (c != F_.one()) {
      if (cs.find('+') != std::string::npos) out << '(' << cs << ")*";
      else out << cs << '*';
    }
    out << 'T';
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace genus
