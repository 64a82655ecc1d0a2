#pragma once

#include <complex>

namespace kgo::specfun {

/// Gamma function, Lanczos approximation (g = 7, 9 coefficients) with the
/// reflection formula for x < 0.5. Throws std::domain_error at the poles.
double gamma_fn(double x);

/// log Gamma(x) for x > 0; avoids overflow of gamma_fn for large arguments.
double lgamma_fn(double x);

/// 1 / Gamma(x); returns 0 at the poles instead of throwing.
double rgamma_fn(double x);

/// Associated Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
double assoc_laguerre(int n, double alpha, double x);

/// Legendre polynomial P_l(x), |x| <= 1.
double legendre_p(int l, double x);

/// Orthonormal spherical harmonic Y_{l mu}(theta, phi), Condon-Shortley phase.
std::complex<double> spherical_harmonic(int l, int mu, double theta, double phi);

/// Kummer confluent hypergeometric M(a, b, x) by direct series.
/// Terms are summed until below 1e-16 relative, hard cap 10000 terms.
double kummer_m(double a, double b, double x);

struct KummerUStatus {
  bool crossover_checked = false;   // both branches evaluated (x in the band)
  double branch_disagreement = 0.0; // relative difference between them
  bool accuracy_warning = false;    // disagreement beyond 1e-8
};

/// Tricomi confluent hypergeometric U(a, b, x), b non-integer, x > 0.
/// Connection formula below the crossover x = 30, asymptotic series above.
double kummer_u(double a, double b, double x, KummerUStatus* status = nullptr);

struct WhittakerParams {
  double lambda = 0.0;
  double nu = 0.0;
};

/// Whittaker M_{lambda,nu}(x) = e^{-x/2} x^{nu+1/2} M(nu-lambda+1/2, 1+2nu, x).
double whittaker_m(const WhittakerParams& p, double x);

/// Whittaker W_{lambda,nu}(x) = e^{-x/2} x^{nu+1/2} U(nu-lambda+1/2, 1+2nu, x).
double whittaker_w(const WhittakerParams& p, double x);

}  // namespace kgo::specfun
