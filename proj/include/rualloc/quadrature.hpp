#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "rualloc/link.hpp"
#include "rualloc/params.hpp"

namespace rualloc {

/// Gaussian tail probability Q(z).
inline double gaussian_q(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

/// Decoding error probability of `bits` on one RU at instantaneous SINR,
/// with the channel dispersion V = 1 - (1+SINR)^-2 evaluated at that SINR.
inline double short_packet_error(double inst_snr, double bits, const SystemParams& p) {
  const double q = p.symbols_per_ru();
  const double v = 1.0 - 1.0 / ((1.0 + inst_snr) * (1.0 + inst_snr));
  if (v <= 0) return 1.0;  // zero SINR carries nothing
  const double arg = std::sqrt(q / v) * std::log1p(inst_snr) - bits * M_LN2 / std::sqrt(v * q);
  return gaussian_q(arg);
}

namespace detail {

// Argument of the Q function as a function of the instantaneous SINR u.
// Strictly increasing: from -inf at u -> 0+ to +inf.
inline double q_argument(double u, double bits, double q) {
  const double v = 1.0 - 1.0 / ((1.0 + u) * (1.0 + u));
  return std::sqrt(q / v) * std::log1p(u) - bits * M_LN2 / std::sqrt(v * q);
}

// SINR at which the Q argument equals `target`, by bisection in log space.
inline double solve_q_argument(double target, double bits, double q) {
  double lo = -80.0, hi = 80.0;  // log(u)
  if (q_argument(std::exp(lo), bits, q) > target) return std::exp(lo);
  if (q_argument(std::exp(hi), bits, q) < target) return std::exp(hi);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (q_argument(std::exp(mid), bits, q) < target ? lo : hi) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

struct SimpsonState {
  long evals = 0;
  long budget = 4'000'000;
  double bits, mean_snr;
  const SystemParams* params;

  double f(double x) {
    ++evals;
    return short_packet_error(mean_snr * x, bits, *params) * std::exp(-x);
  }
};

inline double adaptive_simpson(SimpsonState& st, double a, double b, double fa, double fm,
                               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = st.f(lm), frm = st.f(rm);
  if (st.evals > st.budget)
    throw std::runtime_error("error-probability quadrature exceeded its evaluation budget");
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "error-probability quadrature failed to converge on [%g, %g], residual %g", a, b,
                  delta);
    throw std::runtime_error(buf);
  }
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Packet-fraction decoding error probability of `bits` on one RU, averaged
/// over exponential fading: the exact integral of the dispersion-corrected
/// error function against the fading density. Absolute accuracy ~1e-10.
///
/// The integrand equals exp(-x) below the Q-transition and ~0 above it, so the
/// fading axis is split at the SINR values where the Q argument reaches -+8.5
/// (Q within 1e-17 of its limits) and only the transition band is integrated
/// adaptively. Tail cutoff at x = 40 bounds truncation by e^-40.
inline double exact_error_prob(double bits, double distance_m, double interf_factor,
                               const SystemParams& p) {
  if (!(bits > 0)) throw std::invalid_argument("exact_error_prob requires positive bits");
  const double q = p.symbols_per_ru();
  const double snr = mean_snr(distance_m, interf_factor, p);
  constexpr double kTailCut = 40.0;

  const double u_lo = detail::solve_q_argument(-8.5, bits, q);
  const double u_hi = detail::solve_q_argument(8.5, bits, q);
  const double x_lo = std::min(u_lo / snr, kTailCut);
  const double x_hi = std::min(u_hi / snr, kTailCut);

  double result = -std::expm1(-x_lo);  // integrand ~ exp(-x) below the transition
  if (x_hi > x_lo) {
    detail::SimpsonState st{.bits = bits, .mean_snr = snr, .params = &p};
    const double fa = st.f(x_lo), fb = st.f(x_hi);
    const double fm = st.f(0.5 * (x_lo + x_hi));
    const double whole = (x_hi - x_lo) / 6.0 * (fa + 4.0 * fm + fb);
    result += detail::adaptive_simpson(st, x_lo, x_hi, fa, fm, fb, whole, 1e-10, 52);
  }
  return std::min(1.0, std::max(0.0, result));
}

/// Minimum RU count under the exact error integral instead of the threshold
/// model. Starts the search two below the threshold-model answer.
inline int min_rus_exact(double distance_m, double interf_factor, const SystemParams& p) {
  const auto ok = [&](int r) {
    return 1.0 - exact_error_prob(p.packet_bits / r, distance_m, interf_factor, p) >
           p.reliability;
  };
  int r = std::max(1, min_rus(distance_m, interf_factor, p) - 2);
  if (ok(r)) {
    while (r > 1 && ok(r - 1)) --r;
    return r;
  }
  const int cap = 10 * p.cycle_slots;
  while (!ok(r)) {
    if (++r > cap) throw std::runtime_error("min_rus_exact found no feasible RU count");
  }
  return r;
}

}  // namespace rualloc
