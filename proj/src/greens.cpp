#include "kgo/greens.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kgo::greens {

using std::complex;

EnergyMap energy_map(complex<double> z, const OscillatorParams& p) {
  p.validate();
  double mc2 = p.mc2();
  EnergyMap map;
  map.z = z;
  map.z_tilde = z / (2.0 * mc2);
  map.eps = z * z / (2.0 * mc2) - 0.5 * mc2;

  // The KGO spectrum maps onto eps in hw * N0; flag a collision and report
  // the (n, l) shell it belongs to.
  if (std::abs(map.eps.imag()) < 1e-12 * (std::abs(map.eps.real()) + 1.0)) {
    double ratio = map.eps.real() / p.hw();
    double nearest = std::round(ratio);
    if (nearest >= 0.0 && std::abs(ratio - nearest) < 1e-10) {
      std::ostringstream msg;
      msg << "energy_map: z collides with the spectrum, eps = " << map.eps.real()
          << " = hbar omega * " << static_cast<long>(nearest)
          << " (levels 2n+l = " << static_cast<long>(nearest) << ")";
      throw std::domain_error(msg.str());
    }
  }
  return map;
}

KgoResolvent resolvent_matrix(complex<double> z, const OscillatorParams& p) {
  KgoResolvent res;
  res.map = energy_map(z, p);
  complex<double> zt = res.map.z_tilde;
  res.coeff << (0.5 + zt) * (0.5 + zt), (0.5 + zt) * (zt - 0.5),
               (0.5 + zt) * (0.5 - zt), (0.5 - zt) * (zt - 0.5);
  double inv2mc2 = 1.0 / (2.0 * p.mc2());
  res.contact << inv2mc2, inv2mc2, -inv2mc2, -inv2mc2;
  return res;
}

ResolventApplyResult resolvent_apply(complex<double> z, const OscillatorParams& p,
                                     const core::KgoChannelMatrix& channel,
                                     const core::FVSpinor& source) {
  if (source.rep != core::FVSpinor::Rep::Basis)
    throw std::invalid_argument("resolvent_apply: basis-representation source required");
  int n = channel.n_max + 1;
  if (source.upper.size() != n)
    throw std::invalid_argument("resolvent_apply: source size mismatch");

  KgoResolvent res = resolvent_matrix(z, p);

  Eigen::VectorXcd rhs(2 * n);
  rhs.head(n) = source.upper;
  rhs.tail(n) = source.lower;

  Eigen::MatrixXcd a = channel.h - z * Eigen::MatrixXcd::Identity(2 * n, 2 * n);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  Eigen::VectorXcd x = lu.solve(rhs);

  ResolventApplyResult out;
  out.oracle = source;
  out.oracle.upper = x.head(n);
  out.oracle.lower = x.tail(n);

  // crude condition estimate: ||A|| * ||A^{-1} e|| via the solved system
  double anorm = a.cwiseAbs().rowwise().sum().maxCoeff();
  double xnorm = x.norm() / std::max(rhs.norm(), 1e-300);
  out.condition_estimate = anorm * xnorm;
  out.ill_conditioned = out.condition_estimate > 1e12;

  // closed form: per oscillator mode, G_NR(eps) is diagonal 1/(eps_n - eps)
  out.closed = source;
  out.paper_form = source;
  for (int i = 0; i < n; ++i) {
    complex<double> gnr = 1.0 / (channel.a_diag[i] - res.map.eps);
    Eigen::Vector2cd s(source.upper[i], source.lower[i]);
    Eigen::Vector2cd closed = gnr * (res.coeff * s) + res.contact * s;
    Eigen::Vector2cd paper = gnr * (res.coeff * s);
    out.closed.upper[i] = closed[0];
    out.closed.lower[i] = closed[1];
    out.paper_form.upper[i] = paper[0];
    out.paper_form.lower[i] = paper[1];
  }
  return out;
}

Eigen::Matrix2cd hyperbolic_form(complex<double> z, const OscillatorParams& p) {
  EnergyMap map = energy_map(z, p);
  double mc2 = p.mc2();
  if (std::abs(map.eps.imag()) > 1e-12 * (std::abs(map.eps.real()) + 1.0) ||
      std::abs(z.imag()) > 0.0 || z.real() <= 0.0)
    throw std::domain_error("hyperbolic_form: defined for real z > 0 (positive branch)");
  double eps = map.eps.real();
  if (!(eps > -0.5 * mc2))
    throw std::domain_error("hyperbolic_form: requires eps > -mc^2/2");

  double t = eps / (eps + mc2);
  double cosh_t = 1.0 / std::sqrt(1.0 - t * t);
  double ch = std::sqrt(0.5 * (cosh_t + 1.0));
  double sh = (eps >= 0.0 ? 1.0 : -1.0) * std::sqrt(0.5 * (cosh_t - 1.0));
  // Equality with the coefficient matrix needs the squared prefactor
  // 1/(cosh - sinh)^2 = e^{theta}; the printed single power is short by
  // e^{-theta/2}.
  double pref = 1.0 / ((ch - sh) * (ch - sh));
  Eigen::Matrix2cd m;
  m << ch * ch, ch * sh, -ch * sh, -sh * sh;
  return pref * m;
}

CoordinateResult greens_coordinate(complex<double> z, const OscillatorParams& p,
                                   const Eigen::Vector3d& r_vec, const Eigen::Vector3d& rp_vec,
                                   int l_max) {
  CoordinateResult out;
  KgoResolvent res = resolvent_matrix(z, p);
  out.map = res.map;
  if (std::abs(res.map.eps.imag()) > 1e-12 * (std::abs(res.map.eps.real()) + 1.0))
    throw std::domain_error(
        "greens_coordinate: complex eps(z) requires the matrix-oracle path (out of scope here)");
  if ((r_vec - rp_vec).norm() == 0.0)
    throw std::domain_error("greens_coordinate: r != r' required (on-diagonal divergence)");

  oscillator::GreensFullResult gnr =
      oscillator::greens_full(p, res.map.eps.real(), r_vec, rp_vec, l_max);
  out.g_nr = gnr.value;
  out.remainder = gnr.remainder;
  out.truncation_warning = gnr.truncation_warning;
  out.g = res.coeff * gnr.value;
  return out;
}

}  // namespace kgo::greens
