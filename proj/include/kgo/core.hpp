#pragma once

#include <Eigen/Dense>
#include <complex>

#include "kgo/oscillator.hpp"
#include "kgo/types.hpp"

namespace kgo::core {

/// Pauli matrix tau_i, i in {1,2,3} (Feshbach-Villars charge space).
Eigen::Matrix2cd pauli_tau(int i);

/// 2(n_max+1)-dimensional representation of the KGO Hamiltonian on one l
/// channel: [[M, A], [-A, -M]] with M = H_NR + mc^2 and A = H_NR, both
/// diagonal in the oscillator eigenbasis.
struct KgoChannelMatrix {
  int l = 0;
  int n_max = 0;
  OscillatorParams params;
  Eigen::VectorXd m_diag;  // H_NR + mc^2
  Eigen::VectorXd a_diag;  // H_NR
  Eigen::MatrixXcd h;      // full 2N x 2N block matrix
};

KgoChannelMatrix build_channel(int l, int n_max, const OscillatorParams& p);

struct RelativisticLevel {
  QuantumNumbers q;
  int sign = +1;
  double energy = 0.0;
};

/// E^{+-}_{nl} = sign * mc^2 sqrt(1 + 2 eps_{nl}/mc^2).
RelativisticLevel relativistic_energy(const QuantumNumbers& q, int sign,
                                      const OscillatorParams& p);

/// Two-component Feshbach-Villars amplitude, either as coefficients in the
/// oscillator basis of one (l, mu) channel or as reduced radial samples on a
/// grid. Conversions between the two are explicit.
struct FVSpinor {
  enum class Rep { Basis, Grid };
  Rep rep = Rep::Basis;
  int l = 0;
  int mu = 0;
  Eigen::VectorXcd upper;
  Eigen::VectorXcd lower;
  RadialGrid grid;  // meaningful only for Rep::Grid
};

/// Internal 2-vector (cosh theta/2, -+ sinh theta/2) of the eigenspinors,
/// with cosh theta = (eps + mc^2)/|E| shared by both signs.
Eigen::Vector2d internal_vector(double eps, const OscillatorParams& p, int sign);

/// Eigenspinor of the channel Hamiltonian in basis representation.
FVSpinor eigenspinor(const QuantumNumbers& q, int sign, const OscillatorParams& p, int n_max);

/// Sample a basis-representation spinor onto a radial grid (reduced radial
/// functions u = r R per component).
FVSpinor to_grid(const FVSpinor& s, const OscillatorParams& p, const RadialGrid& grid);

/// Indefinite scalar product <a|b> = integral conj(a) tau_3 b.
std::complex<double> indefinite_inner(const FVSpinor& a, const FVSpinor& b);

/// Apply the KGO Hamiltonian: tau-structure [[1,1],[-1,-1]] H_NR + mc^2 tau_3.
/// Basis representation is exact; grid representation uses finite differences.
FVSpinor apply_hamiltonian(const FVSpinor& s, const OscillatorParams& p);

}  // namespace kgo::core
