#include "lehmer/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

namespace lehmer {

namespace {

const Integer kZero{0};

// Exponents beyond this are treated as input errors rather than allocations.
constexpr std::size_t kMaxParsedExponent = 1'000'000;

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t IntPoly::deg() const {
  if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

const Integer& IntPoly::operator[](std::size_t k) const noexcept {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPoly::low_order() const {
  if (coeffs_.empty()) throw std::domain_error("valuation of the zero polynomial");
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    mpz_divexact(out[k].get_mpz_t(), coeffs_[k].get_mpz_t(), g.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(out));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  // Homogenized Horner: sum a_k num^k den^(d-k) over den^d, all in Z.
  if (coeffs_.empty()) return Rat(0);
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0;
  Integer den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // den_pow ended at den^(d+1); the value is acc / den^d.
  mpz_divexact(den_pow.get_mpz_t(), den_pow.get_mpz_t(), den.get_mpz_t());
  Rat out(acc, den_pow);
  out.canonicalize();
  return out;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool IntPoly::lex_less(const IntPoly& a, const IntPoly& b) {
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

IntPoly arith(const IntPoly& a, const IntPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw std::logic_error("unknown polynomial operation");
}

IntPoly x_pow_minus_one(std::size_t n) {
  std::vector<Integer> c(n + 1);
  c[0] = -1;
  c[n] += 1;
  return IntPoly(std::move(c));
}

IntPoly pow(const IntPoly& base, std::size_t k) {
  IntPoly result = IntPoly::constant(1);
  IntPoly b = base;
  while (k > 0) {
    if (k & 1U) result *= b;
    k >>= 1U;
    if (k > 0) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    IntPoly out = text_.find(',') != std::string_view::npos ? parse_list() : parse_expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Unsigned digit run; rejects a decimal point or fraction bar right after.
  Integer parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    if (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E') {
      throw ParseError("non-integer coefficient", start);
    }
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Integer parse_signed_int() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    Integer v = parse_digits();
    return negative ? Integer(-v) : v;
  }

  IntPoly parse_list() {
    std::vector<Integer> coeffs;
    coeffs.push_back(parse_signed_int());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      coeffs.push_back(parse_signed_int());
      skip_ws();
    }
    return IntPoly(std::move(coeffs));
  }

  std::size_t parse_exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    Integer e = parse_digits();
    if (e > static_cast<unsigned long>(kMaxParsedExponent)) throw ParseError("exponent too large", start);
    return e.get_ui();
  }

  void expect_x() {
    skip_ws();
    if (peek() != 'x' && peek() != 'X') throw ParseError("expected 'x'", pos_);
    ++pos_;
  }

  // term ::= int | int "*" "x" ["^" uint] | "x" ["^" uint]
  void parse_term(bool negative, std::vector<Integer>& acc) {
    skip_ws();
    Integer c = 1;
    std::size_t k = 0;
    if (peek() == 'x' || peek() == 'X') {
      ++pos_;
      k = parse_exponent();
    } else {
      c = parse_digits();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        expect_x();
        k = parse_exponent();
      }
    }
    if (acc.size() <= k) acc.resize(k + 1);
    if (negative) {
      acc[k] -= c;
    } else {
      acc[k] += c;
    }
  }

  IntPoly parse_expr() {
    std::vector<Integer> acc;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term(negative, acc);
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      parse_term(negative, acc);
      skip_ws();
    }
    return IntPoly(std::move(acc));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Integer mag = abs(c[i]);
    if (c[i] < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::string format_coeffs(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) out << ',';
    out << f.coeffs()[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------

IntPoly compose_xn(const IntPoly& t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("compose_xn requires n >= 1");
  if (t.is_zero()) return {};
  std::vector<Integer> out(t.deg() * n + 1);
  for (std::size_t k = 0; k <= t.deg(); ++k) out[k * n] = t[k];
  return IntPoly(std::move(out));
}

IntPoly taylor_shift(const IntPoly& t, const Integer& c) {
  std::vector<Integer> a = t.coeffs();
  const std::size_t d = a.size();
  if (d <= 1 || c == 0) return t;
  // After pass i, a[i] holds the i-th remainder of synthetic division by (x - c).
  for (std::size_t i = 0; i + 1 < d; ++i) {
    for (std::size_t j = d - 1; j-- > i;) mpz_addmul(a[j].get_mpz_t(), a[j + 1].get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(a));
}

std::vector<Integer> taylor_coeffs_at_one(const IntPoly& t) {
  if (t.is_zero()) throw std::invalid_argument("taylor_coeffs_at_one: zero polynomial");
  std::vector<Integer> out = taylor_shift(t, 1).coeffs();
  out.resize(t.deg() + 1);
  return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.is_zero() || a.deg() < b.deg()) return a;
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = b.deg();
  const Integer& lb = bc.back();
  const bool monic = lb == 1;
  std::size_t e = a.deg() - db + 1;
  std::size_t top = r.size() - 1;
  Integer lead;
  while (true) {
    while (top > 0 && r[top] == 0) --top;
    if (r[top] == 0 || top < db) break;
    lead = r[top];
    const std::size_t shift = top - db;
    if (!monic) {
      for (std::size_t k = 0; k < top; ++k) r[k] *= lb;
    }
    for (std::size_t k = 0; k < db; ++k) mpz_submul(r[shift + k].get_mpz_t(), lead.get_mpz_t(), bc[k].get_mpz_t());
    r[top] = 0;
    --e;
    if (top == 0) break;
  }
  if (!monic && e > 0) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), e);
    for (auto& x : r) x *= scale;
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.deg() < b.deg()) return std::nullopt;
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = b.deg();
  const Integer& lb = bc.back();
  std::vector<Integer> q(a.deg() - db + 1);
  for (std::size_t top = r.size() - 1;; --top) {
    if (r[top] != 0) {
      if (top < db) return std::nullopt;
      if (!mpz_divisible_p(r[top].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
      Integer qk;
      mpz_divexact(qk.get_mpz_t(), r[top].get_mpz_t(), lb.get_mpz_t());
      const std::size_t shift = top - db;
      for (std::size_t k = 0; k <= db; ++k) mpz_submul(r[shift + k].get_mpz_t(), qk.get_mpz_t(), bc[k].get_mpz_t());
      q[shift] = std::move(qk);
    }
    if (top == 0) break;
  }
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) { return divide_exact(a, b).has_value(); }

namespace {

Integer ipow(const Integer& base, std::size_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

IntPoly exact_scalar_div(const IntPoly& p, const Integer& s) {
  std::vector<Integer> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
  if (b_in.is_zero()) return a_in.primitive_part();
  if (a_in.is_zero()) return b_in.primitive_part();
  IntPoly a = a_in.primitive_part();
  IntPoly b = b_in.primitive_part();
  if (a.deg() < b.deg()) std::swap(a, b);
  if (b.deg() == 0) return IntPoly::constant(1);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const std::size_t delta = a.deg() - b.deg();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return b.primitive_part();
    if (r.deg() == 0) return IntPoly::constant(1);
    a = std::move(b);
    b = exact_scalar_div(r, g * ipow(h, delta));
    g = a.leading();
    // h <- g^delta / h^(delta - 1), exact in Z.
    if (delta > 0) {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

namespace {

using Residues = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t out = 1;
  for (b %= p; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) out = out * b % p;
  }
  return out;
}

// Reduction mod p that keeps the degree; nullopt when p divides the leading
// coefficient.
std::optional<Residues> reduce_keep_degree(const IntPoly& f, std::uint64_t p) {
  Residues out(f.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = mpz_fdiv_ui(f.coeffs()[k].get_mpz_t(), p);
  if (out.back() == 0) return std::nullopt;
  return out;
}

void trim(Residues& r) {
  while (!r.empty() && r.back() == 0) r.pop_back();
}

// Degree of gcd(a, b) over F_p; both inputs nonzero.
std::size_t gcd_degree_mod(Residues a, Residues b, std::uint64_t p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t q = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        a[shift + k] = (a[shift + k] + (p - q) * b[k]) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

}  // namespace

bool coprime(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return poly_gcd(a, b).deg() == 0;
  // A common factor over Q survives reduction modulo any prime that keeps both
  // degrees, so a trivial gcd mod p settles coprimality. Otherwise fall back
  // to the exact computation.
  for (std::uint64_t p : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
    auto ra = reduce_keep_degree(a, p);
    auto rb = reduce_keep_degree(b, p);
    if (ra && rb && gcd_degree_mod(std::move(*ra), std::move(*rb), p) == 0) return true;
  }
  return poly_gcd(a, b).deg() == 0;
}

namespace {

Residues mul_mod_poly(const Residues& a, const Residues& b, const Residues& g, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Residues prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t dg = g.size() - 1;
  const std::uint64_t inv = pow_mod(g.back(), p - 2, p);
  for (std::size_t top = prod.size(); top-- > dg;) {
    const std::uint64_t q = prod[top] * inv % p;
    if (q == 0) continue;
    const std::size_t shift = top - dg;
    for (std::size_t k = 0; k <= dg; ++k) prod[shift + k] = (prod[shift + k] + (p - q) * g[k]) % p;
  }
  prod.resize(std::min(prod.size(), dg));
  trim(prod);
  return prod;
}

// T(x^e) mod g over F_p, by square-and-multiply for x^e and Horner for T.
Residues composed_mod(const IntPoly& t, std::size_t e, const Residues& g, std::uint64_t p) {
  Residues xe{1};
  Residues base = mul_mod_poly(Residues{0, 1}, xe, g, p);
  for (std::size_t k = e; k > 0; k >>= 1) {
    if (k & 1) xe = mul_mod_poly(xe, base, g, p);
    base = mul_mod_poly(base, base, g, p);
  }
  Residues acc;
  for (std::size_t k = t.coeffs().size(); k-- > 0;) {
    acc = mul_mod_poly(acc, xe, g, p);
    const std::uint64_t c = mpz_fdiv_ui(t.coeffs()[k].get_mpz_t(), p);
    if (acc.empty()) acc.push_back(0);
    acc[0] = (acc[0] + c) % p;
    trim(acc);
  }
  return acc;
}

using RatPoly = std::vector<Rat>;

void trim(RatPoly& r) {
  while (!r.empty() && r.back() == 0) r.pop_back();
}

RatPoly mul_mod_poly(const RatPoly& a, const RatPoly& b, const RatPoly& g) {
  if (a.empty() || b.empty()) return {};
  RatPoly prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  const std::size_t dg = g.size() - 1;
  for (std::size_t top = prod.size(); top-- > dg;) {
    if (prod[top] == 0) continue;
    const Rat q = prod[top] / g.back();
    const std::size_t shift = top - dg;
    for (std::size_t k = 0; k <= dg; ++k) prod[shift + k] -= q * g[k];
  }
  prod.resize(std::min(prod.size(), dg));
  trim(prod);
  return prod;
}

IntPoly clear_denominators(const RatPoly& r) {
  Integer l = 1;
  for (const auto& c : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    Rat scaled = r[k] * l;
    out[k] = scaled.get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace

bool coprime_composed(const IntPoly& g, const IntPoly& t, std::size_t e) {
  if (g.is_zero() || t.is_zero() || e == 0) throw std::invalid_argument("coprime_composed: zero argument");
  if (g.deg() == 0) return true;
  if (t.deg() * e <= 4096) return coprime(g, compose_xn(t, e));
  for (std::uint64_t p : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
    auto gp = reduce_keep_degree(g, p);
    if (!gp) continue;
    Residues rem = composed_mod(t, e, *gp, p);
    if (!rem.empty() && gcd_degree_mod(*gp, std::move(rem), p) == 0) return true;
  }
  // gcd(g, T(x^e)) = gcd(g, T(x^e) mod g), computed exactly in Q[x]/(g).
  RatPoly gq(g.coeffs().begin(), g.coeffs().end());
  RatPoly xe{Rat(1)};
  RatPoly base = mul_mod_poly(RatPoly{Rat(0), Rat(1)}, xe, gq);
  for (std::size_t k = e; k > 0; k >>= 1) {
    if (k & 1) xe = mul_mod_poly(xe, base, gq);
    base = mul_mod_poly(base, base, gq);
  }
  RatPoly acc;
  for (std::size_t k = t.coeffs().size(); k-- > 0;) {
    acc = mul_mod_poly(acc, xe, gq);
    if (acc.empty()) acc.push_back(Rat(0));
    acc[0] += Rat(t.coeffs()[k]);
    trim(acc);
  }
  if (acc.empty()) return false;
  return coprime(g, clear_denominators(acc));
}

bool congruent_mod(const IntPoly& a, const IntPoly& b, const Integer& m) {
  if (m < 2) throw std::invalid_argument("congruent_mod requires m >= 2");
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  Integer diff;
  for (std::size_t k = 0; k < n; ++k) {
    diff = a[k] - b[k];
    if (!mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t())) return false;
  }
  return true;
}

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  const std::size_t da = a_in.deg();
  const std::size_t db = b_in.deg();
  if (da == 0) return ipow(a_in[0], db);
  if (db == 0) return ipow(b_in[0], da);

  IntPoly a = a_in;
  IntPoly b = b_in;
  int sign = 1;
  if (da < db) {
    std::swap(a, b);
    if ((da & 1U) && (db & 1U)) sign = -sign;
  }
  const Integer ca = a.content();
  const Integer cb = b.content();
  const Integer t = ipow(ca, b.deg()) * ipow(cb, a.deg());
  a = exact_scalar_div(a, ca);
  b = exact_scalar_div(b, cb);

  Integer g = 1;
  Integer h = 1;
  while (true) {
    const std::size_t delta = a.deg() - b.deg();
    if ((a.deg() & 1U) && (b.deg() & 1U)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = exact_scalar_div(r, g * ipow(h, delta));
    g = a.leading();
    if (delta > 0) {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.deg() == 0) {
      // h <- lc(b)^deg(a) / h^(deg(a) - 1)
      const std::size_t dA = a.deg();
      Integer num = ipow(b.leading(), dA);
      Integer den = ipow(h, dA - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      Integer out = t * h;
      return sign < 0 ? Integer(-out) : out;
    }
  }
}

std::vector<std::pair<IntPoly, std::size_t>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, std::size_t>> out;
  if (f.is_zero()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
  IntPoly a = f.primitive_part();
  if (a.deg() == 0) return out;
  IntPoly da = a.derivative();
  IntPoly b = poly_gcd(a, da);
  IntPoly c = *divide_exact(a, b);
  IntPoly d = *divide_exact(da, b) - c.derivative();
  std::size_t i = 1;
  while (c.deg() > 0) {
    IntPoly s = poly_gcd(c, d);
    if (s.deg() > 0) out.emplace_back(s, i);
    c = *divide_exact(c, s);
    d = *divide_exact(d, s) - c.derivative();
    ++i;
  }
  return out;
}

}  // namespace lehmer
