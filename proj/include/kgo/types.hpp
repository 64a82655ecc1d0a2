#pragma once

#include <cmath>
#include <stdexcept>

namespace kgo {

/// Physical constants of the oscillator together with the derived scales.
struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;
  double c = 1.0;
  double hbar = 1.0;

  /// Natural-unit preset: hbar = m = omega = 1, c adjustable.
  static OscillatorParams natural(double c_val = 1.0) {
    OscillatorParams p;
    p.c = c_val;
    return p;
  }

  void validate() const {
    if (!(mass > 0.0 && omega > 0.0 && c > 0.0 && hbar > 0.0))
      throw std::invalid_argument("OscillatorParams: all parameters must be positive");
  }

  /// Oscillator length sqrt(hbar / (m omega)).
  double a0() const { return std::sqrt(hbar / (mass * omega)); }
  /// Rest energy m c^2.
  double mc2() const { return mass * c * c; }
  /// Level spacing hbar omega.
  double hw() const { return hbar * omega; }
  /// Relativistic coupling strength hbar omega / (m c^2).
  double rho() const { return hw() / mc2(); }
};

/// Radial (n), orbital (l) and magnetic (mu) labels of one oscillator mode.
struct QuantumNumbers {
  int n = 0;
  int l = 0;
  int mu = 0;

  void validate() const {
    if (n < 0 || l < 0 || std::abs(mu) > l)
      throw std::invalid_argument("QuantumNumbers: need n,l >= 0 and |mu| <= l");
  }
};

/// Uniform grid for the reduced radial coordinate, Dirichlet at both ends.
struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int n_points = 0;

  RadialGrid() = default;
  RadialGrid(double rmin, double rmax, int n) : r_min(rmin), r_max(rmax), n_points(n) {
    if (!(r_min > 0.0) || !(r_min < r_max) || n_points < 3)
      throw std::invalid_argument("RadialGrid: need 0 < r_min < r_max and n_points >= 3");
  }

  double spacing() const { return (r_max - r_min) / (n_points - 1); }
  double point(int i) const { return r_min + spacing() * i; }
};

}  // namespace kgo
