#include "kgo/core.hpp"

#include <cmath>
#include <stdexcept>

namespace kgo::core {

using std::complex;
using namespace std::complex_literals;

Eigen::Matrix2cd pauli_tau(int i) {
  Eigen::Matrix2cd t;
  switch (i) {
    case 1: t << 0, 1, 1, 0; break;
    case 2: t << 0, -1i, 1i, 0; break;
    case 3: t << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_tau: index must be 1, 2 or 3");
  }
  return t;
}

KgoChannelMatrix build_channel(int l, int n_max, const OscillatorParams& p) {
  oscillator::TruncatedChannel ch(l, n_max, p);
  KgoChannelMatrix out;
  out.l = l;
  out.n_max = n_max;
  out.params = p;
  out.a_diag = ch.h_nr;
  out.m_diag = ch.h_nr.array() + p.mc2();
  int n = n_max + 1;
  out.h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  out.h.topLeftCorner(n, n) = out.m_diag.asDiagonal().toDenseMatrix().cast<complex<double>>();
  out.h.topRightCorner(n, n) = out.a_diag.asDiagonal().toDenseMatrix().cast<complex<double>>();
  out.h.bottomLeftCorner(n, n) = -out.h.topRightCorner(n, n);
  out.h.bottomRightCorner(n, n) = -out.h.topLeftCorner(n, n);
  return out;
}

RelativisticLevel relativistic_energy(const QuantumNumbers& q, int sign,
                                      const OscillatorParams& p) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("relativistic_energy: sign is +-1");
  double eps = oscillator::epsilon(q, p);
  double mc2 = p.mc2();
  return RelativisticLevel{q, sign, sign * mc2 * std::sqrt(1.0 + 2.0 * eps / mc2)};
}

Eigen::Vector2d internal_vector(double eps, const OscillatorParams& p, int sign) {
  double mc2 = p.mc2();
  double abs_e = mc2 * std::sqrt(1.0 + 2.0 * eps / mc2);
  double cosh_t = (eps + mc2) / abs_e;
  double ch = std::sqrt(0.5 * (cosh_t + 1.0));
  double sh = std::sqrt(0.5 * (cosh_t - 1.0));
  if (sign == +1) return {ch, -sh};
  if (sign == -1) return {-sh, ch};
  throw std::invalid_argument("internal_vector: sign is +-1");
}

FVSpinor eigenspinor(const QuantumNumbers& q, int sign, const OscillatorParams& p, int n_max) {
  q.validate();
  if (q.n > n_max) throw std::invalid_argument("eigenspinor: n exceeds n_max");
  double eps = oscillator::epsilon(q, p);
  Eigen::Vector2d iv = internal_vector(eps, p, sign);
  FVSpinor s;
  s.rep = FVSpinor::Rep::Basis;
  s.l = q.l;
  s.mu = q.mu;
  s.upper = Eigen::VectorXcd::Zero(n_max + 1);
  s.lower = Eigen::VectorXcd::Zero(n_max + 1);
  s.upper[q.n] = iv[0];
  s.lower[q.n] = iv[1];
  return s;
}

FVSpinor to_grid(const FVSpinor& s, const OscillatorParams& p, const RadialGrid& grid) {
  if (s.rep != FVSpinor::Rep::Basis)
    throw std::invalid_argument("to_grid: expects a basis-representation spinor");
  FVSpinor g;
  g.rep = FVSpinor::Rep::Grid;
  g.l = s.l;
  g.mu = s.mu;
  g.grid = grid;
  g.upper = Eigen::VectorXcd::Zero(grid.n_points);
  g.lower = Eigen::VectorXcd::Zero(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    double r = grid.point(i);
    for (int n = 0; n < s.upper.size(); ++n) {
      if (s.upper[n] == 0.0 && s.lower[n] == 0.0) continue;
      double u = oscillator::radial_u(n, s.l, p, r);
      g.upper[i] += s.upper[n] * u;
      g.lower[i] += s.lower[n] * u;
    }
  }
  return g;
}

std::complex<double> indefinite_inner(const FVSpinor& a, const FVSpinor& b) {
  if (a.rep != b.rep)
    throw std::invalid_argument("indefinite_inner: representation mismatch");
  if (a.l != b.l || a.mu != b.mu) return 0.0;  // angular orthogonality
  if (a.rep == FVSpinor::Rep::Basis) {
    if (a.upper.size() != b.upper.size())
      throw std::invalid_argument("indefinite_inner: basis size mismatch");
    return a.upper.dot(b.upper) - a.lower.dot(b.lower);
  }
  if (a.grid.n_points != b.grid.n_points || a.grid.r_min != b.grid.r_min ||
      a.grid.r_max != b.grid.r_max)
    throw std::invalid_argument("indefinite_inner: grid mismatch");
  // trapezoid rule on the reduced radial components
  std::complex<double> acc = 0.0;
  double h = a.grid.spacing();
  for (int i = 0; i < a.grid.n_points; ++i) {
    double w = (i == 0 || i == a.grid.n_points - 1) ? 0.5 * h : h;
    acc += w * (std::conj(a.upper[i]) * b.upper[i] - std::conj(a.lower[i]) * b.lower[i]);
  }
  return acc;
}

namespace {

Eigen::VectorXcd fd_apply_hnr(const Eigen::VectorXcd& u, int l, const OscillatorParams& p,
                              const RadialGrid& grid) {
  oscillator::FdRadialOperator op = oscillator::fd_radial_operator(l, p, grid);
  int n = grid.n_points;
  Eigen::VectorXcd out(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> v = op.diag[i] * u[i];
    if (i > 0) v += op.subdiag[i - 1] * u[i - 1];
    if (i + 1 < n) v += op.subdiag[i] * u[i + 1];
    out[i] = v;
  }
  return out;
}

}  // namespace

FVSpinor apply_hamiltonian(const FVSpinor& s, const OscillatorParams& p) {
  FVSpinor out = s;
  double mc2 = p.mc2();
  if (s.rep == FVSpinor::Rep::Basis) {
    int nmax = static_cast<int>(s.upper.size()) - 1;
    oscillator::TruncatedChannel ch(s.l, nmax, p);
    for (int n = 0; n <= nmax; ++n) {
      double e = ch.h_nr[n];
      out.upper[n] = (e + mc2) * s.upper[n] + e * s.lower[n];
      out.lower[n] = -e * s.upper[n] - (e + mc2) * s.lower[n];
    }
    return out;
  }
  Eigen::VectorXcd hu = fd_apply_hnr(s.upper, s.l, p, s.grid);
  Eigen::VectorXcd hl = fd_apply_hnr(s.lower, s.l, p, s.grid);
  out.upper = hu + hl + mc2 * s.upper;
  out.lower = -hu - hl - mc2 * s.lower;
  return out;
}

}  // namespace kgo::core
