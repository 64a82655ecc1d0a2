#include "kgo/susy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kgo::susy {

SusyOperators build_susy(const core::KgoChannelMatrix& channel) {
  int n = channel.n_max + 1;
  double mc2 = channel.params.mc2();
  SusyOperators out;
  out.q = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  out.q.topRightCorner(n, n) =
      (channel.a_diag / std::sqrt(2.0 * mc2)).asDiagonal().toDenseMatrix().cast<std::complex<double>>();
  out.q_dag = out.q.adjoint();
  out.h_susy = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  Eigen::VectorXd hs = channel.a_diag.array().square() / (2.0 * mc2);
  out.h_susy.topLeftCorner(n, n) = hs.asDiagonal().toDenseMatrix().cast<std::complex<double>>();
  out.h_susy.bottomRightCorner(n, n) = out.h_susy.topLeftCorner(n, n);
  out.w = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  out.w.topLeftCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
  out.w.bottomRightCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
  return out;
}

WittenIndexReport witten_report(const OscillatorParams& p, int n_max, int l_max, double shift) {
  if (n_max < 0 || l_max < 0) throw std::invalid_argument("witten_report: n_max, l_max >= 0");
  p.validate();

  // A is diagonal with entries eps_{nl} + shift, so its singular values are
  // the absolute values of those entries; each channel l carries (2l+1)-fold
  // mu multiplicity. Q maps the negative-parity (lower) sector into the
  // positive-parity one, so ker Q and ker Q^dag restricted to their sectors
  // both have the dimension of ker A.
  std::vector<double> sv;
  double max_sv = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    for (int n = 0; n <= n_max; ++n) {
      double s = std::abs(p.hw() * (2.0 * n + l) + shift);
      for (int m = 0; m < 2 * l + 1; ++m) sv.push_back(s);
      max_sv = std::max(max_sv, s);
    }
  }
  double threshold = 1e-10 * max_sv;
  int zeros = 0;
  for (double s : sv) {
    if (s < threshold) {
      ++zeros;
    } else if (s < 10.0 * threshold) {
      throw std::runtime_error(
          "witten_report: singular value within a factor 10 of the kernel threshold");
    }
  }
  WittenIndexReport rep;
  rep.dim_ker_q = zeros;
  rep.dim_ker_q_dag = zeros;
  rep.index = rep.dim_ker_q - rep.dim_ker_q_dag;
  rep.susy_broken = (rep.dim_ker_q + rep.dim_ker_q_dag == 0);
  return rep;
}

FwTransform fw_transform(const core::KgoChannelMatrix& channel) {
  int n = channel.n_max + 1;
  double mc2 = channel.params.mc2();

  Eigen::VectorXd c(n), s(n), c2(n), s2(n), hfw(n);
  for (int i = 0; i < n; ++i) {
    double eps = channel.a_diag[i];
    double m = channel.m_diag[i];
    hfw[i] = std::sqrt(2.0 * mc2 * eps + mc2 * mc2);
    // surd form: sqrt((M/H_FW +- 1)/2)
    c[i] = std::sqrt(0.5 * (m / hfw[i] + 1.0));
    s[i] = std::sqrt(0.5 * (m / hfw[i] - 1.0));
    // hyperbolic half-angle form from tanh Theta = A/M
    double t = eps / m;
    double cosh_t = 1.0 / std::sqrt(1.0 - t * t);
    c2[i] = std::sqrt(0.5 * (cosh_t + 1.0));
    s2[i] = std::sqrt(0.5 * (cosh_t - 1.0));
  }

  FwTransform out;
  out.form_disagreement =
      std::max((c - c2).cwiseAbs().maxCoeff(), (s - s2).cwiseAbs().maxCoeff());
  out.u = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  out.u.topLeftCorner(n, n) = c.asDiagonal().toDenseMatrix().cast<std::complex<double>>();
  out.u.bottomRightCorner(n, n) = out.u.topLeftCorner(n, n);
  out.u.topRightCorner(n, n) = s.asDiagonal().toDenseMatrix().cast<std::complex<double>>();
  out.u.bottomLeftCorner(n, n) = out.u.topRightCorner(n, n);

  Eigen::MatrixXcd tau3 = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  tau3.topLeftCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
  tau3.bottomRightCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
  out.u_inv = tau3 * out.u.adjoint() * tau3;
  out.h_fw = out.u * channel.h * out.u_inv;
  return out;
}

double h_fw_values(const QuantumNumbers& q, const OscillatorParams& p) {
  double eps = oscillator::epsilon(q, p);
  double mc2 = p.mc2();
  return mc2 * std::sqrt(1.0 + 2.0 * eps / mc2);
}

}  // namespace kgo::susy
