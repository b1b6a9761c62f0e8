#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "lehmer/poly.hpp"

namespace lehmer {

/// Closed real interval in nats. Producers guarantee the true value lies in
/// [lo, hi].
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v, double slack = 0.0) const { return lo - slack <= v && v <= hi + slack; }
  bool overlaps(const Bracket& other) const { return lo <= other.hi && other.lo <= hi; }
};

/// All deg f complex roots, repeated by multiplicity. Multiplicities come from
/// an exact square-free decomposition; each square-free part is solved by
/// Aberth-Ehrlich iteration in extended precision followed by Newton polish.
std::vector<std::complex<double>> roots(const IntPoly& f);

/// Backward-error residual |f(z)| / sum |a_k| max(1,|z|)^k of a root estimate.
double root_residual(const IntPoly& f, std::complex<double> z);

/// mu(f) = log|lc| + sum log+|alpha_i| after dividing out the integer content,
/// so mu depends only on the roots. The bracket width comes from Newton
/// inclusion disks d |p(z)/p'(z)| around every root estimate.
Bracket mahler_measure(const IntPoly& f);

/// Independent Graeffe root-squaring enclosure of mu(f): after k squarings
/// mu lies in [(log||f_k||_2 - d log 2) / 2^k, log||f_k||_2 / 2^k].
Bracket mahler_oracle(const IntPoly& f);

struct SupNormOptions {
  std::size_t min_samples = 4096;   // grid size is max(min_samples, 64 deg T)
  double target_width = 1e-9;       // bracket width goal, in nats
};

/// nu(T) = log max_{|z|=1} |T(z)|. The lower end is an attained sample value;
/// the upper end is certified by Bernstein's inequality for the trigonometric
/// polynomial |T(e^{i theta})|^2 and is never above log sum |a_k|.
Bracket sup_norm(const IntPoly& t, const SupNormOptions& options = {});

}  // namespace lehmer
