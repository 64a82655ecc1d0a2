#pragma once

#include <Eigen/Dense>
#include <complex>

#include "kgo/types.hpp"

namespace kgo::oscillator {

/// Non-relativistic eigenvalue hbar omega (2n + l); independent of mu.
double epsilon(const QuantumNumbers& q, const OscillatorParams& p);

/// Number of states (n, l, mu) with 2n + l = N.
int degeneracy(int N);

/// Full radial eigenfunction R_{nl}(r); psi = R * Y_{l mu}.
double radial_R(int n, int l, const OscillatorParams& p, double r);

/// Reduced radial eigenfunction u_{nl}(r) = r R_{nl}(r), unit norm on (0,inf).
double radial_u(int n, int l, const OscillatorParams& p, double r);

/// Normalized 3D eigenfunction psi_{n l mu} at a Cartesian point.
std::complex<double> psi(const QuantumNumbers& q, const OscillatorParams& p,
                         const Eigen::Vector3d& r_vec);

/// Per-l truncated basis; H_NR is diagonal in the radial eigenbasis.
struct TruncatedChannel {
  int l = 0;
  int n_max = 0;
  OscillatorParams params;
  Eigen::VectorXd h_nr;  // diagonal entries hbar omega (2n + l), n = 0..n_max

  TruncatedChannel(int l_, int n_max_, const OscillatorParams& p);
};

/// Tridiagonal finite-difference representation of the reduced radial operator
/// -(hbar^2/2m) u'' + [hbar^2 l(l+1)/(2 m r^2) + (m/2) omega^2 r^2 - (3/2) hbar omega] u
/// on a RadialGrid, Dirichlet at both ends.
struct FdRadialOperator {
  Eigen::VectorXd diag;
  Eigen::VectorXd subdiag;
  RadialGrid grid;
};

FdRadialOperator fd_radial_operator(int l, const OscillatorParams& p, const RadialGrid& grid);

/// Lowest k eigenvalues of the finite-difference radial operator.
Eigen::VectorXd fd_channel_eigenvalues(int l, const OscillatorParams& p, const RadialGrid& grid,
                                       int k);

/// Partial-wave Green's function of H_NR at energy eps off the l-channel
/// spectrum, via the Whittaker closed form. Symmetric in (r, rp).
double greens_radial(int l, const OscillatorParams& p, double eps, double r, double rp);

struct GreensFullResult {
  double value = 0.0;
  double remainder = 0.0;  // magnitude of the last retained l term
  bool truncation_warning = false;
};

/// Full G_NR(r, r', eps) by the partial-wave sum with the Legendre addition
/// theorem, truncated at l_max. Requires r != r'.
GreensFullResult greens_full(const OscillatorParams& p, double eps, const Eigen::Vector3d& r_vec,
                             const Eigen::Vector3d& rp_vec, int l_max = 24);

}  // namespace kgo::oscillator
