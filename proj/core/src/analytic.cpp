#include "lehmer/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lehmer/numtheory.hpp"

namespace lehmer {

namespace {

using real = long double;
using cplx = std::complex<long double>;

constexpr real kEps = std::numeric_limits<real>::epsilon();
constexpr int kAberthMaxIter = 1000;
constexpr int kPolishSteps = 3;

real to_real(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return static_cast<real>(n.get_si());
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::ldexp(static_cast<real>(mant), static_cast<int>(exp));
}

std::vector<real> to_real(const IntPoly& p) {
  std::vector<real> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_real(c));
  return out;
}

// Drops the x^v factor; its roots sit at 0 and never move log+ sums or |T| on
// the unit circle.
IntPoly strip_x_power(const IntPoly& p) {
  const std::size_t v = p.low_order();
  if (v == 0) return p;
  return IntPoly(std::vector<Integer>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(v), p.coeffs().end()));
}

struct Eval {
  cplx p;
  cplx dp;
  real magnitude;  // sum |a_k| |z|^k, scale of the rounding error in p
};

Eval horner(const std::vector<real>& a, cplx z) {
  cplx p = a.back();
  cplx dp = 0;
  real mag = std::fabs(a.back());
  const real r = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    mag = mag * r + std::fabs(a[k]);
  }
  return {p, dp, mag};
}

real log_abs_real(real x) { return std::log(std::fabs(x)); }

// Initial guesses from the upper convex hull of (k, log|a_k|): each hull edge
// of width w carries w roots of modulus about exp(-slope).
std::vector<cplx> initial_guesses(const std::vector<real>& a) {
  const std::size_t n = a.size() - 1;
  std::vector<std::size_t> hull;
  std::vector<real> la(a.size(), -std::numeric_limits<real>::infinity());
  for (std::size_t k = 0; k <= n; ++k) {
    if (a[k] != 0) la[k] = log_abs_real(a[k]);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (a[k] == 0) continue;
    while (hull.size() >= 2) {
      const std::size_t i = hull[hull.size() - 2];
      const std::size_t j = hull.back();
      // Remove j if it lies on or below the segment i -> k.
      const real cross = (la[j] - la[i]) * static_cast<real>(k - i) - (la[k] - la[i]) * static_cast<real>(j - i);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<cplx> z;
  z.reserve(n);
  const real two_pi = 2 * std::numbers::pi_v<real>;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const std::size_t i = hull[s];
    const std::size_t j = hull[s + 1];
    const std::size_t w = j - i;
    const real radius = std::exp((la[i] - la[j]) / static_cast<real>(w));
    const real offset = two_pi * static_cast<real>(s + 1) / static_cast<real>(n) + 0.4L;
    for (std::size_t k = 0; k < w; ++k) {
      const real angle = two_pi * static_cast<real>(k) / static_cast<real>(w) + offset;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

// Roots of a square-free polynomial with nonzero constant term.
std::vector<cplx> aberth(const std::vector<real>& a) {
  const std::size_t n = a.size() - 1;
  if (n == 1) return {cplx(-a[0] / a[1], 0)};
  std::vector<cplx> z = initial_guesses(a);
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kAberthMaxIter; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Eval e = horner(a, z[k]);
      if (std::abs(e.p) <= 4 * kEps * e.magnitude) {
        done[k] = true;
        continue;
      }
      const cplx ratio = e.p / e.dp;
      cplx sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += real(1) / (z[k] - z[j]);
      }
      const cplx corr = ratio / (real(1) - ratio * sum);
      z[k] -= corr;
      if (std::abs(corr) <= 4 * kEps * std::abs(z[k])) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  for (auto& root : z) {
    for (int s = 0; s < kPolishSteps; ++s) {
      const Eval e = horner(a, root);
      if (e.dp == cplx(0)) break;
      const cplx next = root - e.p / e.dp;
      if (std::abs(horner(a, next).p) >= std::abs(e.p)) break;
      root = next;
    }
  }
  return z;
}

struct RootEstimate {
  cplx z;
  real radius;  // a true root lies within this distance
  std::size_t mult;
};

std::vector<RootEstimate> estimated_roots(const IntPoly& f) {
  std::vector<RootEstimate> out;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    const std::vector<real> a = to_real(factor);
    const real n = static_cast<real>(a.size() - 1);
    for (const cplx& z : aberth(a)) {
      const Eval e = horner(a, z);
      const real err = 4 * n * kEps * e.magnitude;
      const real dp = std::abs(e.dp);
      const real radius = dp > 0 ? n * (std::abs(e.p) + err) / dp : std::numeric_limits<real>::infinity();
      out.push_back({z, radius, mult});
    }
  }
  return out;
}

real log_plus(real x) { return x > 1 ? std::log(x) : real(0); }

}  // namespace

std::vector<std::complex<double>> roots(const IntPoly& f) {
  if (f.is_zero() || f.deg() == 0) throw std::invalid_argument("roots: polynomial must have positive degree");
  std::vector<std::complex<double>> out;
  const std::size_t v = f.low_order();
  out.assign(v, {0.0, 0.0});
  const IntPoly g = strip_x_power(f);
  if (g.deg() == 0) return out;
  for (const auto& r : estimated_roots(g)) {
    for (std::size_t k = 0; k < r.mult; ++k) out.emplace_back(static_cast<double>(r.z.real()), static_cast<double>(r.z.imag()));
  }
  return out;
}

double root_residual(const IntPoly& f, std::complex<double> z) {
  const std::vector<real> a = to_real(f);
  const cplx zz(z.real(), z.imag());
  const real r = std::max<real>(1, std::abs(zz));
  cplx p = a.back();
  real scale = 0;
  real rk = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    scale += std::fabs(a[k]) * rk;
    rk *= r;
  }
  for (std::size_t k = a.size() - 1; k-- > 0;) p = p * zz + a[k];
  return static_cast<double>(std::abs(p) / scale);
}

Bracket mahler_measure(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
  const IntPoly g = f.primitive_part();
  if (g.deg() == 0) return {0.0, 0.0};
  const IntPoly h = strip_x_power(g);
  const real lc_term = static_cast<real>(log_abs(h.leading()));
  real lo = lc_term;
  real hi = lc_term;
  std::size_t terms = 1;
  if (h.deg() > 0) {
    for (const auto& r : estimated_roots(h)) {
      const real m = std::abs(r.z);
      const real k = static_cast<real>(r.mult);
      lo += k * log_plus(std::max<real>(m - r.radius, 0));
      hi += k * log_plus(m + r.radius);
      ++terms;
    }
  }
  const double slack = 8 * std::numeric_limits<double>::epsilon() *
                       (std::fabs(static_cast<double>(lo)) + std::fabs(static_cast<double>(hi)) + static_cast<double>(terms));
  // mu >= 0 for every integer polynomial.
  return {std::max(static_cast<double>(lo) - slack, 0.0), static_cast<double>(hi) + slack};
}

// ---------------------------------------------------------------------------
// Graeffe enclosure

namespace {

Bracket graeffe_bracket(const IntPoly& s) {
  const std::size_t n = s.deg();
  const double ln2 = std::numbers::ln2;
  // Enough squarings for a width of 1e-7 nats.
  const int steps = std::max(1, static_cast<int>(std::ceil(std::log2(static_cast<double>(n) * ln2 / 1e-7))));
  // Each squaring may cost up to 2n + log n bits to cancellation.
  const mp_bitcnt_t bits = std::min<mp_bitcnt_t>(256 + static_cast<mp_bitcnt_t>(steps) * (2 * n + 8), 1U << 16);

  std::vector<mpf_class> c;
  c.reserve(n + 1);
  for (const auto& a : s.coeffs()) c.emplace_back(a, bits);

  auto normalize = [&](std::vector<mpf_class>& v) {
    mpf_class top(0, bits);
    for (const auto& x : v) {
      if (abs(x) > top) top = abs(x);
    }
    long exp = 0;
    const double mant = mpf_get_d_2exp(&exp, top.get_mpf_t());
    for (auto& x : v) x /= top;
    return std::log(mant) + static_cast<double>(exp) * ln2;
  };

  // scaled_log = log(scale of f_k) / 2^k
  double scaled_log = normalize(c);
  double weight = 1.0;
  std::vector<mpf_class> next(n + 1, mpf_class(0, bits));
  mpf_class term(0, bits);
  for (int k = 1; k <= steps; ++k) {
    for (std::size_t j = 0; j <= n; ++j) {
      next[j] = 0;
      const std::size_t lo = 2 * j > n ? 2 * j - n : 0;
      const std::size_t hi = std::min(n, 2 * j);
      for (std::size_t i = lo; i <= hi; ++i) {
        term = c[i] * c[2 * j - i];
        if (i & 1U) {
          next[j] -= term;
        } else {
          next[j] += term;
        }
      }
    }
    std::swap(c, next);
    weight *= 0.5;
    scaled_log += normalize(c) * weight;
  }
  mpf_class sumsq(0, bits);
  for (const auto& x : c) sumsq += x * x;
  long exp = 0;
  const double mant = mpf_get_d_2exp(&exp, sumsq.get_mpf_t());
  const double log_norm = 0.5 * (std::log(mant) + static_cast<double>(exp) * ln2);
  const double upper = scaled_log + log_norm * weight;
  const double lower = upper - static_cast<double>(n) * ln2 * weight;
  const double slack = 1e-12 * (1.0 + std::fabs(upper));
  return {lower - slack, upper + slack};
}

}  // namespace

Bracket mahler_oracle(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("mahler_oracle: zero polynomial");
  const IntPoly g = f.primitive_part();
  if (g.deg() == 0) return {0.0, 0.0};
  const IntPoly h = strip_x_power(g);
  if (h.deg() == 0) return {0.0, 0.0};
  // Square-free parts carry their multiplicity; pp(f) = +-prod s_i^e_i, so
  // mu(f) = sum e_i mu(s_i).
  Bracket total{0.0, 0.0};
  for (const auto& [factor, mult] : squarefree_decomposition(h)) {
    const Bracket b = graeffe_bracket(factor);
    total.lo += static_cast<double>(mult) * b.lo;
    total.hi += static_cast<double>(mult) * b.hi;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Sup norm on the unit circle

namespace {

struct TrigSample {
  real p;   // |T(e^{i theta})|^2
  real dp;  // derivative in theta
};

TrigSample trig_sample(const std::vector<real>& a, real theta) {
  const cplx z(std::cos(theta), std::sin(theta));
  const Eval e = horner(a, z);
  const cplx dtheta = cplx(0, 1) * z * e.dp;
  return {std::norm(e.p), 2 * (std::conj(e.p) * dtheta).real()};
}

struct Interval {
  real center;
  real half_width;
};

constexpr std::size_t kMaxIntervals = 1U << 18;
constexpr std::size_t kMaxSamples = 1U << 22;

}  // namespace

Bracket sup_norm(const IntPoly& t_in, const SupNormOptions& options) {
  if (t_in.is_zero()) throw std::invalid_argument("sup_norm: zero polynomial");
  IntPoly t = strip_x_power(t_in);
  // T(x^e) takes the same values on the circle as T.
  std::size_t step = 0;
  for (std::size_t k = 1; k < t.coeffs().size(); ++k) {
    if (t[k] != 0) step = std::gcd(step, k);
  }
  if (step > 1) {
    std::vector<Integer> c(t.deg() / step + 1);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = t[k * step];
    t = IntPoly(std::move(c));
  }
  Integer l1 = 0;
  for (const auto& c : t.coeffs()) l1 += abs(c);
  const double log_l1 = log_abs(l1);
  if (t.deg() == 0) return {log_l1, log_l1};

  const std::vector<real> a = to_real(t);
  const real d = static_cast<real>(t.deg());
  const real l1_sq = to_real(l1) * to_real(l1);

  // Exact lower bounds from z = 1 and z = -1.
  double exact_lo = -std::numeric_limits<double>::infinity();
  const Integer at_one = t.eval(Integer(1));
  const Integer at_minus_one = t.eval(Integer(-1));
  if (at_one != 0) exact_lo = std::max(exact_lo, log_abs(at_one));
  if (at_minus_one != 0) exact_lo = std::max(exact_lo, log_abs(at_minus_one));

  const real slack = 8 * (d + 1) * kEps * l1_sq;
  const real tol = static_cast<real>(options.target_width);
  const real two_pi = 2 * std::numbers::pi_v<real>;

  std::size_t samples = std::max<std::size_t>(options.min_samples, 64 * t.deg());
  samples += samples & 1U;  // keep theta = pi on the grid
  real best_lo_sq = 0;
  real best_hi_sq = l1_sq;
  while (true) {
    const real h = two_pi / static_cast<real>(samples);
    std::vector<real> grid(samples);
    real max_p = 0;
    for (std::size_t j = 0; j < samples; ++j) {
      grid[j] = trig_sample(a, h * static_cast<real>(j)).p;
      max_p = std::max(max_p, grid[j]);
    }
    real lower_sq = std::max<real>(max_p - slack, 0);
    if (std::isfinite(exact_lo)) lower_sq = std::max(lower_sq, std::exp(2 * static_cast<real>(exact_lo)));
    if (lower_sq * (1 + tol) >= l1_sq) {
      best_lo_sq = lower_sq;
      break;
    }

    // |P''| <= d^2 max P (Bernstein), and P' = 0 at the maximizer, so the
    // nearest grid point sits within d^2 h^2 max P / 8 of the maximum.
    const real shrink = d * d * h * h / 8;
    real upper_sq = l1_sq;
    if (shrink < 1) upper_sq = std::min(upper_sq, (max_p + slack) / (1 - shrink));
    const real gap = shrink * upper_sq + 2 * slack;

    std::vector<Interval> work;
    for (std::size_t j = 0; j < samples; ++j) {
      if (grid[j] >= lower_sq - gap) work.push_back({h * static_cast<real>(j), h / 2});
    }
    real leaf_max = 0;
    std::size_t processed = 0;
    bool overflow = false;
    while (!work.empty()) {
      if (++processed > kMaxIntervals) {
        overflow = true;
        break;
      }
      const Interval iv = work.back();
      work.pop_back();
      const TrigSample s = trig_sample(a, iv.center);
      lower_sq = std::max(lower_sq, s.p - slack);
      const real w = iv.half_width;
      const real bound = s.p + std::fabs(s.dp) * w + d * d * upper_sq * w * w / 2 + slack;
      if (bound <= lower_sq * (1 + tol) || w < 1e-14L) {
        leaf_max = std::max(leaf_max, bound);
        continue;
      }
      work.push_back({iv.center - w / 2, w / 2});
      work.push_back({iv.center + w / 2, w / 2});
    }
    best_lo_sq = std::max(best_lo_sq, lower_sq);
    if (!overflow) {
      best_hi_sq = std::min(best_hi_sq, std::max(leaf_max, lower_sq));
      break;
    }
    best_hi_sq = std::min(best_hi_sq, upper_sq);
    if (samples >= kMaxSamples) break;
    samples *= 2;
  }

  double lo = 0.5 * static_cast<double>(std::log(best_lo_sq));
  if (std::isfinite(exact_lo)) lo = std::max(lo, exact_lo);
  double hi = std::min(0.5 * static_cast<double>(std::log(best_hi_sq)), log_l1);
  lo = std::min(lo, hi);
  return {lo, hi};
}

}  // namespace lehmer
