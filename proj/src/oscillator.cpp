#include "kgo/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kgo/specfun.hpp"

namespace kgo::oscillator {

using specfun::WhittakerParams;

double epsilon(const QuantumNumbers& q, const OscillatorParams& p) {
  q.validate();
  p.validate();
  return p.hw() * (2.0 * q.n + q.l);
}

int degeneracy(int N) {
  if (N < 0) throw std::invalid_argument("degeneracy: N must be non-negative");
  return (N + 1) * (N + 2) / 2;
}

double radial_R(int n, int l, const OscillatorParams& p, double r) {
  double s = p.mass * p.omega / p.hbar;  // 1/a0^2
  double x = s * r * r;
  // Note: the printed eigenfunctions carry exp(-m omega r^2 / hbar), but the
  // stated normalization constant belongs to exp(-m omega r^2 / 2 hbar); the
  // 1/2 exponent is what unit-norm quadrature and the finite-difference
  // operator residual confirm, so that is what is implemented.
  double lognorm = 0.5 * (std::log(2.0) + specfun::lgamma_fn(n + 1.0) -
                          specfun::lgamma_fn(n + l + 1.5));
  double norm = std::pow(s, 0.5 * l + 0.75) * std::exp(lognorm);
  return norm * std::pow(r, l) * std::exp(-0.5 * x) * specfun::assoc_laguerre(n, l + 0.5, x);
}

double radial_u(int n, int l, const OscillatorParams& p, double r) {
  return r * radial_R(n, l, p, r);
}

std::complex<double> psi(const QuantumNumbers& q, const OscillatorParams& p,
                         const Eigen::Vector3d& r_vec) {
  q.validate();
  double r = r_vec.norm();
  double theta = (r > 0.0) ? std::acos(std::clamp(r_vec.z() / r, -1.0, 1.0)) : 0.0;
  double phi = std::atan2(r_vec.y(), r_vec.x());
  return radial_R(q.n, q.l, p, r) * specfun::spherical_harmonic(q.l, q.mu, theta, phi);
}

TruncatedChannel::TruncatedChannel(int l_, int n_max_, const OscillatorParams& p)
    : l(l_), n_max(n_max_), params(p) {
  if (l < 0 || n_max < 0) throw std::invalid_argument("TruncatedChannel: l, n_max >= 0");
  p.validate();
  h_nr.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) h_nr[n] = p.hw() * (2.0 * n + l);
}

FdRadialOperator fd_radial_operator(int l, const OscillatorParams& p, const RadialGrid& grid) {
  p.validate();
  int n = grid.n_points;
  double h = grid.spacing();
  double kin = p.hbar * p.hbar / (2.0 * p.mass);
  FdRadialOperator op;
  op.grid = grid;
  op.diag.resize(n);
  op.subdiag.resize(n - 1);
  for (int i = 0; i < n; ++i) {
    double r = grid.point(i);
    double v = kin * l * (l + 1.0) / (r * r) + 0.5 * p.mass * p.omega * p.omega * r * r -
               1.5 * p.hw();
    op.diag[i] = 2.0 * kin / (h * h) + v;
  }
  op.subdiag.setConstant(-kin / (h * h));
  return op;
}

Eigen::VectorXd fd_channel_eigenvalues(int l, const OscillatorParams& p, const RadialGrid& grid,
                                       int k) {
  if (k < 1 || k > grid.n_points) throw std::invalid_argument("fd_channel_eigenvalues: bad k");
  FdRadialOperator op = fd_radial_operator(l, p, grid);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(op.diag, op.subdiag, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("fd_channel_eigenvalues: tridiagonal eigensolver failed");
  return solver.eigenvalues().head(k);
}

double greens_radial(int l, const OscillatorParams& p, double eps, double r, double rp) {
  p.validate();
  if (!(r > 0.0 && rp > 0.0)) throw std::domain_error("greens_radial: r, r' > 0 required");
  double hw = p.hw();
  double a = 0.5 * l - 0.5 * eps / hw;  // Gamma argument; poles at eps = hw(2n+l)
  if (a <= 0.0 && std::abs(a - std::round(a)) < 1e-12) {
    throw std::domain_error("greens_radial: eps on the l-channel spectrum (Gamma pole), eps = " +
                            std::to_string(eps));
  }
  WhittakerParams wp{eps / (2.0 * hw) + 0.75, 0.5 * l + 0.25};
  double s = p.mass * p.omega / p.hbar;
  double rg = std::max(r, rp);
  double rl = std::min(r, rp);
  // The printed closed form lacks the 1/Gamma(l + 3/2) normalization and has
  // the opposite overall sign; the spectral-sum oracle fixes both (measured
  // ratio printed/actual = -Gamma(l + 3/2), see README).
  return specfun::gamma_fn(a) /
         (std::sqrt(r * rp) * hw * specfun::gamma_fn(l + 1.5)) *
         specfun::whittaker_w(wp, rg * rg * s) * specfun::whittaker_m(wp, rl * rl * s);
}

GreensFullResult greens_full(const OscillatorParams& p, double eps, const Eigen::Vector3d& r_vec,
                             const Eigen::Vector3d& rp_vec, int l_max) {
  if (l_max < 0) throw std::invalid_argument("greens_full: l_max >= 0");
  double r = r_vec.norm();
  double rp = rp_vec.norm();
  if (!(r > 0.0 && rp > 0.0)) throw std::domain_error("greens_full: nonzero radii required");
  double cosg = std::clamp(r_vec.dot(rp_vec) / (r * rp), -1.0, 1.0);
  constexpr double kPi = 3.14159265358979323846;

  GreensFullResult out;
  double term = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    term = greens_radial(l, p, eps, r, rp) * (2.0 * l + 1.0) / (4.0 * kPi) *
           specfun::legendre_p(l, cosg);
    out.value += term;
  }
  out.value /= r * rp;
  out.remainder = std::abs(term) / (r * rp);
  out.truncation_warning = out.remainder > 1e-6 * std::abs(out.value);
  return out;
}

}  // namespace kgo::oscillator
