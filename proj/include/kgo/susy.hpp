#pragma once

#include <Eigen/Dense>

#include "kgo/core.hpp"

namespace kgo::susy {

/// Supercharge, its adjoint, the SUSY Hamiltonian and the Witten parity on
/// one truncated channel.
struct SusyOperators {
  Eigen::MatrixXcd q;
  Eigen::MatrixXcd q_dag;
  Eigen::MatrixXcd h_susy;  // (1/2mc^2) H_NR^2 on both parity sectors
  Eigen::MatrixXcd w;       // tau_3 grading
};

SusyOperators build_susy(const core::KgoChannelMatrix& channel);

struct WittenIndexReport {
  int dim_ker_q = 0;      // kernel restricted to the negative-parity sector
  int dim_ker_q_dag = 0;  // kernel restricted to the positive-parity sector
  int index = 0;          // dim_ker_q - dim_ker_q_dag
  bool susy_broken = false;
};

/// Kernel dimensions of Q and Q^dag by counting zero singular values of A
/// per parity sector, aggregated over channels l = 0..l_max with their
/// (2l+1)-fold mu multiplicity. `shift` adds a constant to H_NR (used to
/// exhibit the broken-SUSY case).
WittenIndexReport witten_report(const OscillatorParams& p, int n_max, int l_max,
                                double shift = 0.0);

/// Pseudo-unitary Foldy-Wouthuysen transform of one channel.
struct FwTransform {
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd u_inv;  // tau_3 u^dag tau_3
  Eigen::MatrixXcd h_fw;   // u h u_inv, block-diagonal diag(H_FW, -H_FW)
  double form_disagreement = 0.0;  // max defect between the two printed forms of U
};

FwTransform fw_transform(const core::KgoChannelMatrix& channel);

/// H_FW eigenvalue mc^2 sqrt(1 + 2 eps_{nl}/mc^2) = |E^{+-}_{nl}|.
double h_fw_values(const QuantumNumbers& q, const OscillatorParams& p);

}  // namespace kgo::susy
