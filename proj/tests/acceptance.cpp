// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every numeric comparison is against an independent oracle or a
// closed-form reference, with the tolerance printed next to the measurement.
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "kgo/core.hpp"
#include "kgo/greens.hpp"
#include "kgo/oscillator.hpp"
#include "kgo/susy.hpp"
#include "kgo/verify.hpp"
#include "oracles.hpp"
#include "spectral_oracle.hpp"

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, double measured, double tol) {
  std::printf("%s criterion %2d: %s (measured=%.3e, tol=%.3e)\n", pass ? "PASS" : "FAIL",
              criterion, what.c_str(), measured, tol);
  if (!pass) ++g_failures;
}

void report_checks(int criterion, const std::string& what,
                   const std::vector<kgo::verify::Check>& checks) {
  double worst = 0.0, tol = 0.0;
  bool pass = true;
  for (const auto& c : checks) {
    pass = pass && c.pass;
    if (std::abs(c.measured) - c.tolerance > worst - tol) {
      worst = std::abs(c.measured);
      tol = c.tolerance;
    }
  }
  report(criterion, what, pass, worst, tol);
}

kgo::verify::Config default_config() {
  kgo::verify::Config cfg;
  cfg.params = kgo::OscillatorParams::natural();
  cfg.n_max = 30;
  cfg.l_max = 8;
  return cfg;
}

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(KGO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun res;
  if (!pipe) return res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void criterion_1_spectrum(const kgo::verify::Config& cfg) {
  report_checks(1, "closed-form spectrum vs dense channel diagonalization",
                kgo::verify::verify_spectrum(cfg));
}

void criterion_2_fd_oracle(const kgo::verify::Config& cfg) {
  const auto& p = cfg.params;
  auto grid_for = [&](int n_points) {
    double r_max = 12.0 * p.a0();
    return kgo::RadialGrid(r_max / n_points, r_max, n_points);
  };
  double worst = 0.0;
  for (int l = 0; l <= 6; ++l) {
    int k = (6 - l) / 2 + 1;
    auto ev = kgo::oscillator::fd_channel_eigenvalues(l, p, grid_for(4000), k);
    for (int n = 0; n < k; ++n)
      worst = std::max(worst, std::abs(ev[n] - p.hw() * (2.0 * n + l)));
  }
  bool pass = worst <= 1e-4;

  auto coarse = kgo::oscillator::fd_channel_eigenvalues(0, p, grid_for(2000), 4);
  auto fine = kgo::oscillator::fd_channel_eigenvalues(0, p, grid_for(4000), 4);
  double ratio = std::abs(coarse[3] - 6.0 * p.hw()) / std::abs(fine[3] - 6.0 * p.hw());
  bool second_order = ratio > 3.0 && ratio < 5.0;
  report(2, "finite-difference radial eigenvalues, 2n+l <= 6", pass, worst, 1e-4);
  report(2, "second-order grid convergence (error ratio at h vs h/2)", second_order, ratio, 4.0);
}

void criterion_3_algebra(const kgo::verify::Config& cfg) {
  report_checks(3, "supersymmetry algebra and H_SUSY spectrum", kgo::verify::verify_algebra(cfg));
}

void criterion_4_witten(const kgo::verify::Config& cfg) {
  report_checks(4, "Witten report (1, 1, 0, unbroken), stable in n_max",
                kgo::verify::verify_witten(cfg));
}

void criterion_5_fw(const kgo::verify::Config& cfg) {
  report_checks(5, "Foldy-Wouthuysen block diagonalization and pseudo-unitarity",
                kgo::verify::verify_fw(cfg));
}

void criterion_6_orthonormality(const kgo::verify::Config& cfg) {
  report_checks(6, "indefinite quadrature Gram matrix, 2n+l <= 3",
                kgo::verify::verify_orthonormality(cfg));
}

void criterion_7_radial_greens(const kgo::verify::Config& cfg) {
  const auto& p = cfg.params;
  double worst = 0.0;
  double worst_tail = 0.0;
  for (int l : {0, 1, 2}) {
    for (double eps : {-1.0, 0.5, 2.7}) {
      for (double r : {0.5, 1.0, 2.0}) {
        for (double rp : {0.5, 1.0, 2.0}) {
          double g = kgo::oscillator::greens_radial(l, p, eps * p.hw(), r * p.a0(), rp * p.a0());
          double exact = oracles::resummed_spectral_greens(l, eps, r, rp);
          worst = std::max(worst, std::abs(g - exact) / std::abs(exact));
          auto plain = oracles::plain_spectral_sum(l, eps, r, rp);
          double bound = std::max(plain.tail_estimate, 1e-6 * std::abs(g));
          worst_tail = std::max(worst_tail, std::abs(g - plain.value) / bound);
        }
      }
    }
  }
  report(7, "radial Green's closed form vs resummed spectral oracle", worst <= 1e-6, worst, 1e-6);
  report(7, "radial Green's vs 60-term partial sum within its tail estimate", worst_tail <= 1.0,
         worst_tail, 1.0);

  double eps = -1e-6;
  double r = 0.8, rp = 1.3;
  double res = (0.0 - eps) * kgo::oscillator::greens_radial(0, p, eps, r, rp);
  double expect = oracles::radial_u_sequence(0, 0, r)[0] * oracles::radial_u_sequence(0, 0, rp)[0];
  double defect = std::abs(res - expect) / std::abs(expect);
  report(7, "residue at the lowest pole reproduces u00(r) u00(r')", defect <= 1e-4, defect, 1e-4);
}

void criterion_8_resolvent(const kgo::verify::Config& cfg) {
  report_checks(8, "resolvent identity with contact term; published-form defect",
                kgo::verify::verify_resolvent(cfg));
}

void criterion_9_forms(const kgo::verify::Config& cfg) {
  const auto& p = cfg.params;
  double worst = 0.0;
  int count = 0;
  for (double z = 0.11; count < 50; z += 0.173) {
    double eps = z * z / (2.0 * p.mc2()) - 0.5 * p.mc2();
    if (eps > -1e-3 && std::abs(eps - std::round(eps / p.hw()) * p.hw()) < 1e-3) continue;
    auto rm = kgo::greens::resolvent_matrix(std::complex<double>(z, 0.0), p);
    auto hyp = kgo::greens::hyperbolic_form(std::complex<double>(z, 0.0), p);
    worst = std::max(worst, (hyp - rm.coeff).norm() / std::max(1.0, rm.coeff.norm()));
    ++count;
  }
  report(9, "coefficient-matrix and hyperbolic forms agree at 50 sample points", worst <= 1e-12,
         worst, 1e-12);
}

void criterion_10_negation(const kgo::verify::Config& cfg) {
  auto checks = kgo::verify::verify_spectrum(cfg);
  for (const auto& c : checks) {
    if (c.name == "spectrum.negation_symmetry") {
      report(10, "channel eigenvalue multisets symmetric under negation", c.pass,
             std::abs(c.measured), c.tolerance);
      return;
    }
  }
  report(10, "channel eigenvalue multisets symmetric under negation", false, 1.0, 0.0);
}

void criterion_11_determinism() {
  std::string args = "verify --natural --suite all";
  auto first = run_cli(args);
  auto second = run_cli(args);
  bool pass = first.exit_code == 0 && second.exit_code == 0 && !first.out.empty() &&
              first.out == second.out;
  report(11, "verify all: byte-identical JSON on repeat, exit code 0", pass,
         pass ? 0.0 : 1.0, 0.0);
}

}  // namespace

int main() {
  auto cfg = default_config();
  criterion_1_spectrum(cfg);
  criterion_2_fd_oracle(cfg);
  criterion_3_algebra(cfg);
  criterion_4_witten(cfg);
  criterion_5_fw(cfg);
  criterion_6_orthonormality(cfg);
  criterion_7_radial_greens(cfg);
  criterion_8_resolvent(cfg);
  criterion_9_forms(cfg);
  criterion_10_negation(cfg);
  criterion_11_determinism();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) failed\n", g_failures);
  return 1;
}
