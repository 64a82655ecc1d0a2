// Independent numerical oracles used by the tests. Everything here is
// deliberately implemented from first principles (direct sums, quadrature,
// ODE/FD discretizations) and must stay decoupled from the library paths it
// is used to check.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

inline double lgamma_ref(double x) { return std::lgamma(x); }

// Minimal double-double arithmetic; the explicit Laguerre sum cancels by up
// to ~1e12 at n = 20, x = 50, which plain doubles cannot survive at the
// 1e-10 comparison level.
struct DD {
  double hi = 0.0, lo = 0.0;
};

inline DD dd_two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD dd_add(DD a, DD b) {
  DD s = dd_two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  DD r = dd_two_sum(s.hi, lo);
  return r;
}

inline DD dd_mul_d(DD a, double b) {
  double p = a.hi * b;
  double e = std::fma(a.hi, b, -p);
  double lo = e + a.lo * b;
  return dd_two_sum(p, lo);
}

inline DD dd_div_d(DD a, double b) {
  double q = a.hi / b;
  double r = std::fma(-q, b, a.hi) + a.lo;
  return dd_two_sum(q, r / b);
}

// Explicit-sum associated Laguerre: sum_k C(n+alpha, n-k) (-x)^k / k!,
// accumulated in double-double via exact term ratios.
inline double laguerre_direct(int n, double alpha, double x) {
  // term_0 = C(n+alpha, n)
  double logc = lgamma_ref(n + alpha + 1.0) - lgamma_ref(alpha + 1.0) - lgamma_ref(n + 1.0);
  DD term{std::exp(logc), 0.0};
  DD sum = term;
  for (int k = 0; k < n; ++k) {
    // term_{k+1} = term_k * (-(n-k) x) / ((alpha+k+1)(k+1))
    term = dd_mul_d(term, -(static_cast<double>(n - k)) * x);
    term = dd_div_d(term, (alpha + k + 1.0) * (k + 1.0));
    sum = dd_add(sum, term);
  }
  return sum.hi;
}

// Kummer M by its defining series, written independently of the library.
inline double kummer_series(double a, double b, double x, int terms = 2000) {
  double sum = 1.0, term = 1.0;
  for (int k = 0; k < terms; ++k) {
    term *= (a + k) * x / ((b + k) * (k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Composite Simpson on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
  if (n % 2 != 0) ++n;
  double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Tanh-sinh (double-exponential) quadrature on (a, b); robust against
// integrable endpoint singularities.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        int levels = 12) {
  const double pi2 = 1.57079632679489661923;
  double h = 1.0;
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  auto eval = [&](double t) -> double {
    double u = pi2 * std::sinh(t);
    double x = std::tanh(u);
    double w = pi2 * std::cosh(t) / (std::cosh(u) * std::cosh(u));
    double xx = mid + half * x;
    if (xx <= a || xx >= b) return 0.0;
    double v = f(xx) * w * half;
    return std::isfinite(v) ? v : 0.0;
  };
  const double t_max = 4.5;
  // trapezoid sum at step h, then refine by halving: T(h/2) = T(h)/2 + h/2 * (odd points)
  double grid_sum = eval(0.0);
  for (double t = h; t < t_max; t += h) grid_sum += eval(t) + eval(-t);
  double integral = h * grid_sum;
  for (int level = 1; level < levels; ++level) {
    h *= 0.5;
    double odd = 0.0;
    for (double t = h; t < t_max; t += 2.0 * h) odd += eval(t) + eval(-t);
    double next = 0.5 * integral + h * odd;
    if (level > 3 && std::abs(next - integral) < 1e-13 * std::abs(next)) {
      integral = next;
      break;
    }
    integral = next;
  }
  return integral;
}

// Thomas algorithm for a symmetric tridiagonal system (diag d, off-diag e).
inline std::vector<double> tridiag_solve(std::vector<double> d, std::vector<double> e,
                                         std::vector<double> rhs) {
  int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) {
    double w = e[i - 1] / d[i - 1];
    d[i] -= w * e[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / d[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = (rhs[i] - e[i] * x[i + 1]) / d[i];
  return x;
}

}  // namespace oracles
