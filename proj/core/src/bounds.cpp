#include "lehmer/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "lehmer/analytic.hpp"
#include "lehmer/cyclotomic.hpp"
#include "lehmer/numtheory.hpp"

namespace lehmer {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"dubmoss_gen", "dubmoss", "padic",     "cyclos",
                                                     "cyclos2",     "universal", "threshold", "lowsup"};

const double kLog2 = std::numbers::ln2;

std::string num(const Integer& v) { return v.get_str(); }

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_modulus(const Integer& m) { require(m >= 2, "modulus must be >= 2"); }

void require_aux(const IntPoly& t) {
  require(!t.is_zero() && t.deg() >= 1, "auxiliary polynomial T must have degree >= 1");
}

void require_nonzero(const IntPoly& f, const char* message) { require(!f.is_zero(), message); }

double nu_hi(const IntPoly& t) { return sup_norm(t).hi; }

Hypothesis assumed(std::string name, std::string evidence) {
  return {std::move(name), true, "assumed: " + std::move(evidence)};
}

Hypothesis degree_is(const IntPoly& f, std::size_t expected, const std::string& label) {
  const std::size_t d = f.deg();
  return {"deg f = " + label, d == expected, "deg f = " + std::to_string(d) + ", " + label + " = " +
                                                 std::to_string(expected)};
}

Hypothesis congruence(const IntPoly& lhs, const IntPoly& rhs, const Integer& m, const std::string& label) {
  const bool ok = congruent_mod(lhs, rhs, m);
  return {label, ok, ok ? "every coefficient of the difference is divisible by " + num(m)
                        : "some coefficient of the difference is not divisible by " + num(m)};
}

Hypothesis factor_of(const IntPoly& g, const IntPoly& f) {
  const bool ok = divides(g, f);
  return {"g | f", ok, ok ? "exact division in Z[x]" : "division leaves a remainder"};
}

Hypothesis coprime_to(const IntPoly& g, const IntPoly& t, std::size_t e, const std::string& label) {
  const bool ok = coprime_composed(g, t, e);
  return {label, ok, ok ? "gcd is 1" : "nontrivial common factor"};
}

Hypothesis no_cyclotomic_factor(const IntPoly& g) {
  const CycloProfile profile = cyclo_profile(g);
  if (profile.cyclotomic_free()) return {"g has no cyclotomic factor", true, "no Phi_d divides g"};
  std::string ev = "divisible by";
  for (const auto& f : profile.factors) ev += " Phi_" + std::to_string(f.d) + "^" + std::to_string(f.mult);
  return {"g has no cyclotomic factor", false, ev};
}

// Shared tail of every report: attach the value only if all hypotheses hold.
BoundReport finish(BoundReport report, double value, double degree) {
  if (!report.all_passed()) return report;
  report.value = value;
  report.per_degree = report.target == Target::mahler_measure && degree > 0 ? value / degree : value;
  return report;
}

BoundReport start(Theorem theorem, Target target) {
  BoundReport r;
  r.theorem = theorem;
  r.target = target;
  return r;
}

std::size_t as_size(const Integer& p) {
  require(p.fits_ulong_p(), "prime is too large");
  return p.get_ui();
}

// (x^n - 1)^e, written down from the binomial theorem.
IntPoly binomial_power(std::size_t n, std::size_t e) {
  std::vector<Integer> c(n * e + 1);
  for (std::size_t k = 0; k <= e; ++k) {
    mpz_bin_uiui(c[n * k].get_mpz_t(), e, k);
    if ((e - k) % 2 == 1) c[n * k] = -c[n * k];
  }
  return IntPoly(std::move(c));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p <= (1ULL << 32)) return a * b % p;
  Integer prod = Integer(static_cast<unsigned long>(a)) * static_cast<unsigned long>(b);
  return mpz_fdiv_ui(prod.get_mpz_t(), p);
}

// C(e, k) mod p by Lucas' theorem.
std::uint64_t binomial_mod(std::size_t e, std::size_t k, std::uint64_t p) {
  std::uint64_t out = 1;
  while ((e > 0 || k > 0) && out != 0) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), e % p, k % p);
    out = mul_mod(out, mpz_fdiv_ui(b.get_mpz_t(), p), p);
    e /= p;
    k /= p;
  }
  return out;
}

// (x^n - 1)^(q - r) f == (x^n - 1)^q mod p, computed with residues mod p so
// the large binomial coefficients never appear.
bool raised_congruence(const IntPoly& f, std::size_t n, std::size_t rr, std::size_t q, std::uint64_t p) {
  const std::size_t e = q - rr;
  std::vector<std::uint64_t> lhs(n * e + f.coeffs().size(), 0);
  std::vector<std::uint64_t> fp(f.coeffs().size());
  for (std::size_t k = 0; k < fp.size(); ++k) fp[k] = mpz_fdiv_ui(f.coeffs()[k].get_mpz_t(), p);
  for (std::size_t k = 0; k <= e; ++k) {
    std::uint64_t b = binomial_mod(e, k, p);
    if (b == 0) continue;
    if ((e - k) % 2 == 1) b = (p - b) % p;
    for (std::size_t j = 0; j < fp.size(); ++j) {
      const std::uint64_t term = mul_mod(b, fp[j], p);
      std::uint64_t& slot = lhs[n * k + j];
      slot = slot >= p - term ? slot - (p - term) : slot + term;
    }
  }
  std::vector<std::uint64_t> rhs(std::max(lhs.size(), n * q + 1), 0);
  for (std::size_t k = 0; k <= q; ++k) {
    std::uint64_t b = binomial_mod(q, k, p);
    if ((q - k) % 2 == 1) b = (p - b) % p;
    rhs[n * k] = b;
  }
  lhs.resize(rhs.size(), 0);
  return lhs == rhs;
}

// Hypotheses shared by the (x^n - 1)^r family.
void near_power_hypotheses(BoundReport& r, const IntPoly& f, const IntPoly& g, const Integer& m, std::size_t n,
                           std::size_t rr) {
  r.hypotheses.push_back(degree_is(f, n * rr, "nr"));
  r.hypotheses.push_back(congruence(f, binomial_power(n, rr), m, "f = (x^n - 1)^r mod m"));
  r.hypotheses.push_back(factor_of(g, f));
}

void echo_family(BoundReport& r, const IntPoly& f, const IntPoly& g, const Integer& m, std::size_t n,
                 std::size_t rr) {
  r.inputs["f"] = format_poly(f);
  r.inputs["g"] = format_poly(g);
  r.inputs["m"] = num(m);
  r.inputs["n"] = n;
  r.inputs["r"] = rr;
  r.inputs["deg_g"] = g.deg();
}

}  // namespace

std::string_view theorem_name(Theorem t) { return kNames[static_cast<std::size_t>(t)]; }

Theorem theorem_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k] == name) return static_cast<Theorem>(k);
  }
  throw std::invalid_argument("unknown theorem '" + std::string(name) + "'");
}

bool BoundReport::all_passed() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.passed; });
}

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json::object();
  j["theorem"] = theorem_name(r.theorem);
  j["target"] = r.target == Target::height ? "height" : "mahler_measure";
  j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
  j["per_degree"] = r.per_degree ? nlohmann::json(*r.per_degree) : nlohmann::json(nullptr);
  j["vacuous"] = r.vacuous();
  auto& hyps = j["hypotheses"] = nlohmann::json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"passed", h.passed}, {"evidence", h.evidence}});
  j["inputs_echo"] = r.inputs;
}

double omega(const IntPoly& t, const Integer& m) {
  require_nonzero(t, "omega: T must be nonzero");
  require(m >= 1, "omega: m must be >= 1");
  Integer g = 0;
  Integer m_pow = 1;
  for (const auto& c : taylor_coeffs_at_one(t)) {
    const Integer entry = m_pow * c;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), entry.get_mpz_t());
    m_pow *= m;
  }
  return log_abs(g);
}

double n_of_m(const Integer& m) {
  require(m != 0, "N(m) requires m != 0");
  return log_abs(m);
}

double solve_c() {
  const double rhs = std::log(1.5) * kLog2;
  const double log3 = std::log(3.0);
  double lo = 0.0;
  double hi = 1.0;
  // Bisect until the midpoint no longer separates the endpoints.
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mid * std::exp(mid / 2) * log3 < rhs) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const auto residual = [&](double c) { return std::fabs(c * std::exp(c / 2) * log3 - rhs); };
  return residual(lo) <= residual(hi) ? lo : hi;
}

std::size_t prime_power_at_least(std::size_t p, std::size_t r) {
  require(p >= 2 && r >= 1, "prime_power_at_least: p >= 2 and r >= 1 required");
  std::size_t q = 1;
  while (q < r) q *= p;
  return q;
}

BoundReport bound_dubmoss_gen(std::size_t n, const Integer& m, const IntPoly& t) {
  require(n >= 1, "n must be >= 1");
  require_modulus(m);
  require_aux(t);
  BoundReport r = start(Theorem::dubmoss_gen, Target::height);
  r.hypotheses.push_back(assumed("f = x^n - 1 mod m", "alpha is a root of such an f of degree " + std::to_string(n)));
  r.hypotheses.push_back(assumed("T(alpha^n) != 0", "alpha is not an input"));
  const double w = omega(t, m);
  const double nu = nu_hi(t);
  r.inputs = {{"n", n}, {"m", num(m)}, {"T", format_poly(t)}, {"deg_T", t.deg()}, {"omega", w}, {"nu_hi", nu}};
  return finish(std::move(r), (w - nu) / static_cast<double>(n * t.deg()), 1.0);
}

BoundReport bound_dubmoss(const IntPoly& f, const IntPoly& g, const IntPoly& t, const Integer& m) {
  require_nonzero(f, "f must be nonzero");
  require_nonzero(g, "g must be nonzero");
  require(f.deg() >= 1, "f must have degree >= 1");
  require_modulus(m);
  require_aux(t);
  const std::size_t n = f.deg();
  BoundReport r = start(Theorem::dubmoss, Target::mahler_measure);
  r.hypotheses.push_back(congruence(f, x_pow_minus_one(n), m, "f = x^n - 1 mod m"));
  r.hypotheses.push_back(factor_of(g, f));
  r.hypotheses.push_back(coprime_to(g, t, n, "gcd(g, T(x^n)) = 1"));
  const double w = omega(t, m);
  const double nu = nu_hi(t);
  r.inputs = {{"f", format_poly(f)}, {"g", format_poly(g)}, {"T", format_poly(t)}, {"m", num(m)},
              {"n", n},            {"deg_g", g.deg()},    {"deg_T", t.deg()},    {"omega", w}, {"nu_hi", nu}};
  const double deg_g = static_cast<double>(g.deg());
  const double value = (w - nu) / static_cast<double>(t.deg()) * deg_g / static_cast<double>(n);
  return finish(std::move(r), value, deg_g);
}

BoundReport bound_padic(const Integer& p, const IntPoly& t) {
  require(is_prime(p), "p must be prime");
  require_aux(t);
  BoundReport r = start(Theorem::padic, Target::height);
  r.hypotheses.push_back(assumed("alpha is a totally p-adic unit", "alpha is not an input"));
  r.hypotheses.push_back(assumed("T(alpha^(p-1)) != 0", "alpha is not an input"));
  const double w = omega(t, p);
  const double nu = nu_hi(t);
  r.inputs = {{"p", num(p)}, {"T", format_poly(t)}, {"deg_T", t.deg()}, {"omega", w}, {"nu_hi", nu}};
  const double value = (w - nu) / ((p.get_d() - 1.0) * static_cast<double>(t.deg()));
  return finish(std::move(r), value, 1.0);
}

CyclosRate cyclos_rate(const IntPoly& t, const Integer& m, std::size_t n, std::size_t rr) {
  require_modulus(m);
  require_aux(t);
  require(n >= 1 && rr >= 1, "n and r must be >= 1");
  CyclosRate out;
  out.mult = multiplicity(t, x_pow_minus_one(n));
  out.nu_hi = nu_hi(t);
  const double denom = static_cast<double>(rr * t.deg());
  const double log_m = log_abs(m);
  const double base = static_cast<double>(out.mult) * log_m - static_cast<double>(rr) * out.nu_hi;
  out.odd_value = base / denom;
  out.value = out.odd_value;
  if (mpz_even_p(m.get_mpz_t())) {
    out.mult_gn = gn_multiplicity(t, n);
    out.even_value = (base + static_cast<double>(*out.mult_gn) * kLog2) / denom;
    out.value = std::max(out.value, *out.even_value);
  }
  return out;
}

BoundReport bound_cyclos(const IntPoly& f, const IntPoly& g, const IntPoly& t, const Integer& m, std::size_t n,
                         std::size_t rr) {
  require_nonzero(f, "f must be nonzero");
  require_nonzero(g, "g must be nonzero");
  const CyclosRate rate = cyclos_rate(t, m, n, rr);
  BoundReport r = start(Theorem::cyclos, Target::mahler_measure);
  near_power_hypotheses(r, f, g, m, n, rr);
  r.hypotheses.push_back(coprime_to(g, t, 1, "gcd(T, g) = 1"));

  const double deg_g = static_cast<double>(g.deg());
  echo_family(r, f, g, m, n, rr);
  r.inputs["T"] = format_poly(t);
  r.inputs["deg_T"] = t.deg();
  r.inputs["scaling"] = 1;
  r.inputs["mult_xn_minus_1"] = rate.mult;
  r.inputs["nu_hi"] = rate.nu_hi;
  r.inputs["odd_modulus_value"] = rate.odd_value * deg_g;
  if (rate.even_value) {
    r.inputs["mult_gn"] = *rate.mult_gn;
    r.inputs["even_modulus_value"] = *rate.even_value * deg_g;
  }
  return finish(std::move(r), rate.value * deg_g, deg_g);
}

BoundReport bound_cyclos2(const IntPoly& f, const IntPoly& g, const IntPoly& t, const Integer& p, std::size_t n,
                          std::size_t rr) {
  require_nonzero(f, "f must be nonzero");
  require_nonzero(g, "g must be nonzero");
  require(is_prime(p), "p must be prime");
  require_aux(t);
  require(n >= 1 && rr >= 1, "n and r must be >= 1");
  const std::size_t q = prime_power_at_least(as_size(p), rr);
  BoundReport r = start(Theorem::cyclos2, Target::mahler_measure);
  r.hypotheses.push_back(degree_is(f, n * rr, "nr"));
  const IntPoly xn1 = x_pow_minus_one(n);
  const bool raised = raised_congruence(f, n, rr, q, as_size(p));
  r.hypotheses.push_back({"(x^n - 1)^(q - r) f = (x^n - 1)^q mod p", raised,
                          raised ? "coefficients agree mod " + num(p) : "coefficients differ mod " + num(p)});
  r.hypotheses.push_back(factor_of(g, f));
  r.hypotheses.push_back(coprime_to(g, t, q, "gcd(T(x^q), g) = 1"));

  const std::size_t mult = multiplicity(t, xn1);
  const double nu = nu_hi(t);
  const double deg_g = static_cast<double>(g.deg());
  const double denom = static_cast<double>(q * t.deg());
  double value = (static_cast<double>(mult) * log_abs(p) - nu) / denom * deg_g;
  echo_family(r, f, g, p, n, rr);
  r.inputs.erase("m");
  r.inputs["p"] = num(p);
  r.inputs["q"] = q;
  r.inputs["T"] = format_poly(t);
  r.inputs["deg_T"] = t.deg();
  r.inputs["mult_xn_minus_1"] = mult;
  r.inputs["nu_hi"] = nu;
  r.inputs["prime_value"] = value;
  if (p == 2) {
    const std::size_t gn = gn_multiplicity(t, n);
    const double two = (static_cast<double>(mult + gn) * kLog2 - nu) / denom * deg_g;
    r.inputs["mult_gn"] = gn;
    r.inputs["two_value"] = two;
    value = std::max(value, two);
  }
  return finish(std::move(r), value, deg_g);
}

BoundReport bound_universal(const IntPoly& f, const IntPoly& g, const Integer& m, std::size_t n, std::size_t rr) {
  require_nonzero(f, "f must be nonzero");
  require_nonzero(g, "g must be nonzero");
  require_modulus(m);
  require(n >= 1 && rr >= 1, "n and r must be >= 1");
  BoundReport r = start(Theorem::universal, Target::mahler_measure);
  near_power_hypotheses(r, f, g, m, n, rr);
  r.hypotheses.push_back(no_cyclotomic_factor(g));

  const double deg_g = static_cast<double>(g.deg());
  const double scale = deg_g / static_cast<double>(n * rr);
  echo_family(r, f, g, m, n, rr);
  double value = (log_abs(m) - static_cast<double>(rr) * kLog2) * scale;
  r.inputs["large_modulus_value"] = value;
  auto per_prime = nlohmann::json::object();
  for (const auto& el : integer_support({m})) {
    if (!el.prime) continue;
    const double pd = el.base.get_d();
    const double v = std::log(pd / 2) / pd * scale;
    per_prime[num(el.base)] = v;
    value = std::max(value, v);
  }
  r.inputs["prime_divisor_values"] = per_prime;
  if (mpz_even_p(m.get_mpz_t())) {
    const double v = kLog2 / 4 * scale;
    r.inputs["even_modulus_value"] = v;
    value = std::max(value, v);
  }
  return finish(std::move(r), value, deg_g);
}

BoundReport bound_threshold(const IntPoly& f, const IntPoly& g, const Integer& m, std::size_t n, std::size_t rr) {
  require_nonzero(f, "f must be nonzero");
  require_nonzero(g, "g must be nonzero");
  require_modulus(m);
  require(n >= 1 && rr >= 1, "n and r must be >= 1");
  BoundReport r = start(Theorem::threshold, Target::mahler_measure);
  near_power_hypotheses(r, f, g, m, n, rr);
  r.hypotheses.push_back(no_cyclotomic_factor(g));

  const double c = solve_c();
  const double c0 = c / (2 * kLog2);
  const double deg_g = static_cast<double>(g.deg());
  std::string regime;
  if (log_abs(m) >= (static_cast<double>(rr) + c0) * kLog2) {
    regime = "m >= 2^(r + c0): large-modulus estimate";
  } else if (mpz_even_p(m.get_mpz_t())) {
    regime = "m < 2^(r + c0), m even: (log 2)/4 estimate";
  } else {
    regime = "m < 2^(r + c0), m odd: odd prime divisor estimate";
  }
  echo_family(r, f, g, m, n, rr);
  r.inputs["c"] = c;
  r.inputs["c0"] = c0;
  r.inputs["case"] = regime;
  const double value = c * std::ldexp(deg_g / static_cast<double>(n), -static_cast<int>(std::min<std::size_t>(rr, 4096)));
  return finish(std::move(r), value, deg_g);
}

BoundReport bound_lowsup(const IntPoly& f, const IntPoly& g, const IntPoly& t, const Integer& m) {
  require_nonzero(f, "f must be nonzero");
  require_nonzero(g, "g must be nonzero");
  require_modulus(m);
  require_aux(t);
  BoundReport r = start(Theorem::lowsup, Target::mahler_measure);
  r.hypotheses.push_back(degree_is(f, t.deg(), "deg T"));
  r.hypotheses.push_back(congruence(f, t, m, "f = T mod m"));
  r.hypotheses.push_back(factor_of(g, f));
  r.hypotheses.push_back(coprime_to(g, t, 1, "gcd(g, T) = 1"));
  const double nu = nu_hi(t);
  const double deg_g = static_cast<double>(g.deg());
  r.inputs = {{"f", format_poly(f)}, {"g", format_poly(g)},   {"T", format_poly(t)},
              {"m", num(m)},         {"N_m", n_of_m(m)},      {"nu_hi", nu},
              {"deg_g", g.deg()},    {"deg_f", f.deg()}};
  const double value = deg_g * (n_of_m(m) - nu) / static_cast<double>(f.deg());
  return finish(std::move(r), value, deg_g);
}

BestBound best_bound(const Instance& in) {
  require_nonzero(in.f, "f must be nonzero");
  require_modulus(in.m);
  require(in.n >= 1 && in.r >= 1, "n and r must be >= 1");
  const IntPoly& f = in.f;
  const IntPoly& g = in.factor();
  require_nonzero(g, "g must be nonzero");

  std::vector<IntPoly> ts;
  if (in.t) {
    require_aux(*in.t);
    ts.push_back(*in.t);
  }
  for (const IntPoly& d : {x_pow_minus_one(in.n), x_pow_minus_one(2 * in.n)}) {
    if (std::find(ts.begin(), ts.end(), d) == ts.end()) ts.push_back(d);
  }

  BestBound out;
  auto& all = out.evaluated;
  if (in.r == 1 && f.deg() >= 1) {
    for (const auto& t : ts) all.push_back(bound_dubmoss(f, g, t, in.m));
  }
  for (const auto& t : ts) all.push_back(bound_cyclos(f, g, t, in.m, in.n, in.r));
  for (const auto& el : integer_support({in.m})) {
    if (!el.prime || !el.base.fits_ulong_p()) continue;
    for (const auto& t : ts) all.push_back(bound_cyclos2(f, g, t, el.base, in.n, in.r));
  }
  all.push_back(bound_universal(f, g, in.m, in.n, in.r));
  all.push_back(bound_threshold(f, g, in.m, in.n, in.r));
  if (in.t) {
    all.push_back(bound_lowsup(f, g, *in.t, in.m));
    if (!(g == f)) all.push_back(bound_lowsup(g, g, *in.t, in.m));
  }

  const BoundReport* best = nullptr;
  for (const auto& rep : all) {
    if (!rep.value) continue;
    if (best == nullptr || *rep.value > *best->value ||
        (*rep.value == *best->value && rep.theorem < best->theorem)) {
      best = &rep;
    }
  }
  if (best == nullptr) {
    out.status = BestBound::Status::none;
  } else {
    out.best = *best;
    out.status = *best->value > 0 ? BestBound::Status::bound : BestBound::Status::vacuous;
  }
  return out;
}

}  // namespace lehmer
