#pragma once

#include <Eigen/Dense>
#include <complex>

#include "kgo/core.hpp"

namespace kgo::greens {

/// The z -> eps spectral-parameter map: eps = z^2/(2mc^2) - mc^2/2.
struct EnergyMap {
  std::complex<double> z;
  std::complex<double> eps;
  std::complex<double> z_tilde;  // z / (2 m c^2)
};

/// Throws (with the offending level) when z collides with the KGO spectrum.
EnergyMap energy_map(std::complex<double> z, const OscillatorParams& p);

/// Scalar 2x2 coefficient structure of the closed-form resolvent:
/// G(z) = coeff * G_NR(eps) + contact * 1. The contact matrix is the
/// (1/2mc^2)(tau_3 + i tau_2) identity-proportional term required for
/// (H - z) G = 1; the coefficient matrix alone is the published form.
struct KgoResolvent {
  EnergyMap map;
  Eigen::Matrix2cd coeff;
  Eigen::Matrix2cd contact;
};

KgoResolvent resolvent_matrix(std::complex<double> z, const OscillatorParams& p);

/// Both evaluation routes of G(z) applied to a source on one truncated
/// channel: a dense solve of (h - z) x = source (the oracle) and the closed
/// form built from the diagonal non-relativistic resolvent.
struct ResolventApplyResult {
  core::FVSpinor oracle;
  core::FVSpinor closed;       // includes the contact term
  core::FVSpinor paper_form;   // coefficient matrix only
  double condition_estimate = 0.0;
  bool ill_conditioned = false;
};

ResolventApplyResult resolvent_apply(std::complex<double> z, const OscillatorParams& p,
                                     const core::KgoChannelMatrix& channel,
                                     const core::FVSpinor& source);

/// Hyperbolic parametrization of the coefficient matrix, tanh theta =
/// eps/(eps + mc^2). Defined for real z > 0 with eps(z) > -mc^2/2, where it
/// reproduces resolvent_matrix exactly. Note the prefactor: equality with the
/// coefficient form requires 1/(cosh - sinh)^2, not the printed first power.
Eigen::Matrix2cd hyperbolic_form(std::complex<double> z, const OscillatorParams& p);

struct CoordinateResult {
  Eigen::Matrix2cd g;          // coeff * G_NR(r, r', eps), valid for r != r'
  double g_nr = 0.0;           // the shared scalar kernel
  EnergyMap map;
  double remainder = 0.0;
  bool truncation_warning = false;
};

/// Coordinate representation at r != r' (the contact term carries no
/// off-diagonal part). Requires eps(z) real.
CoordinateResult greens_coordinate(std::complex<double> z, const OscillatorParams& p,
                                   const Eigen::Vector3d& r_vec, const Eigen::Vector3d& rp_vec,
                                   int l_max = 24);

}  // namespace kgo::greens
