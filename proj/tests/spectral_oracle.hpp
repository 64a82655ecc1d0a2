// Spectral-representation oracles for the radial oscillator Green's function,
// in natural units (hbar = m = omega = 1). Two routes:
//  - plain partial sums of u_n(r) u_n(r') / (eps_n - eps) with a tail
//    estimate from the last retained terms, and
//  - the same spectral series resummed exactly through its generating
//    function (a one-dimensional integral over an elementary Bessel kernel),
//    which converges to ~1e-9 and carries no truncation issue.
// Both are independent of the Whittaker-function implementation they check.
#pragma once

#include <cmath>
#include <vector>

#include "oracles.hpp"

namespace oracles {

// Orthonormal reduced radial functions u_n(r) for fixed l via the stable
// normalized three-term recurrence, n = 0..n_max.
inline std::vector<double> radial_u_sequence(int n_max, int l, double r) {
  double alpha = l + 0.5;
  double x = r * r;
  std::vector<double> u(n_max + 1);
  double n0 = std::exp(0.5 * (std::log(2.0) - lgamma_ref(alpha + 1.0)));
  u[0] = n0 * std::pow(r, l + 1.0) * std::exp(-0.5 * x);
  if (n_max == 0) return u;
  // u_{n+1} = [(2n+1+alpha-x) u_n rho1 - (n+alpha) u_{n-1} rho2] / (n+1),
  // rho1 = N_{n+1}/N_n, rho2 = N_{n+1}/N_{n-1}
  double rho1_0 = std::sqrt(1.0 / (1.0 + alpha));
  u[1] = (1.0 + alpha - x) * u[0] * rho1_0;
  for (int n = 1; n < n_max; ++n) {
    double rho1 = std::sqrt((n + 1.0) / (n + 1.0 + alpha));
    double rho2 = std::sqrt((n + 1.0) * n / ((n + 1.0 + alpha) * (n + alpha)));
    u[n + 1] = ((2.0 * n + 1.0 + alpha - x) * u[n] * rho1 - (n + alpha) * u[n - 1] * rho2) /
               (n + 1.0);
  }
  return u;
}

struct PlainSumResult {
  double value = 0.0;
  double tail_estimate = 0.0;
};

inline PlainSumResult plain_spectral_sum(int l, double eps, double r, double rp,
                                         int n_terms = 60) {
  auto u = radial_u_sequence(n_terms, l, r);
  auto up = (r == rp) ? u : radial_u_sequence(n_terms, l, rp);
  PlainSumResult out;
  double envelope = 0.0;
  for (int n = 0; n <= n_terms; ++n) {
    double term = u[n] * up[n] / ((2.0 * n + l) - eps);
    out.value += term;
    // individual terms oscillate through nodes, and at small r the phase
    // advances slowly in n, so track the envelope over the whole second
    // half of the series rather than trusting the final terms alone
    if (2 * n >= n_terms) envelope = std::max(envelope, std::abs(term));
  }
  // the term envelope decays like n^{-3/2}; integrating it from n_terms
  // onward gives a tail of order 2 N |term_N|
  out.tail_estimate = envelope * 2.0 * static_cast<double>(n_terms);
  return out;
}

// Scaled modified Bessel function e^{-z} I_alpha(z), z >= 0.
inline double bessel_i_scaled(double alpha, double z) {
  if (z < 30.0) {
    // series sum_k (z/2)^{2k+alpha} / (k! Gamma(k+alpha+1))
    double half = 0.5 * z;
    double term = std::exp(alpha * std::log(half > 0 ? half : 1e-300) -
                           lgamma_ref(alpha + 1.0));
    if (z == 0.0) return (alpha == 0.0) ? 1.0 : 0.0;
    double sum = term;
    for (int k = 0; k < 500; ++k) {
      term *= half * half / ((k + 1.0) * (k + 1.0 + alpha));
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum * std::exp(-z);
  }
  // asymptotic: (2 pi z)^{-1/2} sum_k (-1)^k a_k / z^k, truncated at smallest term
  double mu = 4.0 * alpha * alpha;
  double sum = 1.0, term = 1.0;
  for (int k = 1; k < 40; ++k) {
    double next = -term * (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * z);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * 3.14159265358979323846 * z);
}

// Exact resummation: the spectral series sum_n c_n / (eps_n - eps) with
// c_n = u_n(r) u_n(r') is rewritten as head(n < n0) + integral_0^1
// s^{l-eps-1} [P(s^2) - sum_{n<n0} c_n s^{2n}] ds, where P is the
// generating function of the c_n (Hille-Hardy kernel). The integral is
// split at s0: on [0, s0] it is done term by term through the series tail
// (exactly, avoiding the catastrophic cancellation of P - head near s = 0),
// on [s0, 1] by tanh-sinh quadrature on the kernel itself.
inline double resummed_spectral_greens(int l, double eps, double r, double rp) {
  double alpha = l + 0.5;
  double x = r * r, y = rp * rp;
  int n0 = 0;
  while (2.0 * n0 + l - eps <= 0.5) ++n0;  // keep the s-exponent safely > -1
  const int n_series = n0 + 60;
  auto u = radial_u_sequence(n_series, l, r);
  auto up = (r == rp) ? u : radial_u_sequence(n_series, l, rp);

  double head = 0.0;
  for (int n = 0; n < n0; ++n) head += u[n] * up[n] / ((2.0 * n + l) - eps);

  // series part of the integral on [0, s0]; s0^2 = 0.09 makes 60 terms
  // overkill by far
  const double s0 = 0.3;
  double series = 0.0;
  for (int n = n0; n <= n_series; ++n) {
    double e = 2.0 * n + l - eps;
    series += u[n] * up[n] * std::pow(s0, e) / e;
  }

  double sqxy = std::sqrt(x * y);
  double dsq = (std::sqrt(x) - std::sqrt(y)) * (std::sqrt(x) - std::sqrt(y));
  double pref = 2.0 * std::sqrt(r * rp) * std::exp(-0.5 * (x + y));

  auto integrand = [&](double s) -> double {
    double t = s * s;
    double onemt = (1.0 - s) * (1.0 + s);
    if (onemt <= 0.0) return 0.0;
    double z = 2.0 * std::sqrt(x * y * t) / onemt;
    double expo = -t * dsq / onemt + 2.0 * sqxy * s / (1.0 + s);
    double p = pref * std::pow(t, -0.5 * alpha) / onemt * std::exp(expo) *
               bessel_i_scaled(alpha, z);
    double sub = 0.0;
    double spow = 1.0;
    for (int n = 0; n < n0; ++n) {
      sub += u[n] * up[n] * spow;
      spow *= t;
    }
    return std::pow(s, l - eps - 1.0) * (p - sub);
  };
  return head + series + tanh_sinh(integrand, s0, 1.0, 14);
}

}  // namespace oracles
