#include <CLI11.hpp>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "kgo/core.hpp"
#include "kgo/greens.hpp"
#include "kgo/oscillator.hpp"
#include "kgo/report.hpp"
#include "kgo/susy.hpp"
#include "kgo/verify.hpp"

namespace {

using kgo::report::json;

struct CommonOpts {
  double mass = 1.0, omega = 1.0, c = 1.0, hbar = 1.0;
  bool natural = false;
  int n_max = 30;
  int l_max = 8;
  std::string format = "json";
  std::string out;
  std::string profile = "default";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--mass", o.mass, "particle mass m");
  cmd->add_option("--omega", o.omega, "oscillator frequency omega");
  cmd->add_option("--c", o.c, "speed of light");
  cmd->add_option("--hbar", o.hbar, "Planck constant hbar");
  cmd->add_flag("--natural", o.natural, "natural units hbar = m = omega = 1 (c kept)");
  cmd->add_option("--n-max", o.n_max, "radial basis truncation");
  cmd->add_option("--l-max", o.l_max, "orbital channel truncation");
  cmd->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "write the report to FILE instead of stdout");
  cmd->add_option("--profile", o.profile, "tolerance profile")
      ->check(CLI::IsMember({"default", "strict"}));
}

kgo::OscillatorParams make_params(const CommonOpts& o) {
  kgo::OscillatorParams p;
  if (o.natural) {
    p = kgo::OscillatorParams::natural(o.c);
  } else {
    p.mass = o.mass;
    p.omega = o.omega;
    p.c = o.c;
    p.hbar = o.hbar;
  }
  p.validate();
  return p;
}

kgo::verify::Profile resolve_profile(const CommonOpts& o) {
  std::string name = o.profile;
  if (const char* env = std::getenv("KGO_TOLERANCE_PROFILE")) name = env;
  if (name == "strict") return kgo::verify::Profile::Strict;
  return kgo::verify::Profile::Default;
}

json config_json(const CommonOpts& o, const kgo::OscillatorParams& p) {
  json cfg;
  cfg["units"] = o.natural ? "natural" : "custom";
  cfg["mass"] = p.mass;
  cfg["omega"] = p.omega;
  cfg["c"] = p.c;
  cfg["hbar"] = p.hbar;
  cfg["n_max"] = o.n_max;
  cfg["l_max"] = o.l_max;
  cfg["output_format"] = o.format;
  cfg["tolerance_profile"] =
      resolve_profile(o) == kgo::verify::Profile::Strict ? "strict" : "default";
  return cfg;
}

json checks_json(const std::vector<kgo::verify::Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["measured"] = c.measured;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    arr.push_back(e);
  }
  return arr;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + o.out);
    f << text;
  }
}

std::string csv_escape_free(double v) { return kgo::report::format_double(v); }

void emit_envelope(const CommonOpts& o, const json& envelope, const std::string& csv_table) {
  if (o.format == "csv") {
    emit(o, csv_table);
  } else {
    emit(o, kgo::report::dump_json(envelope));
  }
}

int run_spectrum(const CommonOpts& o, int max_shell) {
  auto p = make_params(o);
  struct Row {
    int n, l;
    double eps, ep;
  };
  std::vector<Row> rows;
  for (int shell = 0; shell <= max_shell; ++shell)
    for (int l = shell % 2; l <= shell; l += 2) {
      int n = (shell - l) / 2;
      rows.push_back({n, l, kgo::oscillator::epsilon({n, l, 0}, p),
                      kgo::core::relativistic_energy({n, l, 0}, +1, p).energy});
    }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.eps != b.eps) return a.eps < b.eps;
    return a.l < b.l;
  });

  json results;
  json table = json::array();
  std::string csv = "n,l,degeneracy,epsilon,e_plus,e_minus\n";
  for (const auto& r : rows) {
    json row;
    row["n"] = r.n;
    row["l"] = r.l;
    row["degeneracy"] = 2 * r.l + 1;
    row["epsilon"] = r.eps;
    row["e_plus"] = r.ep;
    row["e_minus"] = -r.ep;
    table.push_back(row);
    csv += std::to_string(r.n) + "," + std::to_string(r.l) + "," +
           std::to_string(2 * r.l + 1) + "," + csv_escape_free(r.eps) + "," +
           csv_escape_free(r.ep) + "," + csv_escape_free(-r.ep) + "\n";
  }
  results["levels"] = table;
  results["max_shell"] = max_shell;

  json envelope;
  envelope["command"] = "spectrum";
  envelope["config"] = config_json(o, p);
  envelope["results"] = results;
  envelope["checks"] = json::array();
  emit_envelope(o, envelope, csv);
  return 0;
}

int run_state(const CommonOpts& o, int n, int l, int mu, int sign, double r, double theta,
              double phi) {
  auto p = make_params(o);
  kgo::QuantumNumbers q{n, l, mu};
  q.validate();
  Eigen::Vector3d rv(r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi),
                     r * std::cos(theta));
  auto spatial = kgo::oscillator::psi(q, p, rv);
  double eps = kgo::oscillator::epsilon(q, p);
  Eigen::Vector2d iv = kgo::core::internal_vector(eps, p, sign);
  auto level = kgo::core::relativistic_energy(q, sign, p);

  json results;
  results["epsilon"] = eps;
  results["energy"] = level.energy;
  results["internal_vector"] = json::array({iv[0], iv[1]});
  results["psi_spatial"] = json::array({spatial.real(), spatial.imag()});
  results["upper"] = json::array({(spatial * iv[0]).real(), (spatial * iv[0]).imag()});
  results["lower"] = json::array({(spatial * iv[1]).real(), (spatial * iv[1]).imag()});

  std::string csv = "key,value\n";
  csv += "epsilon," + csv_escape_free(eps) + "\n";
  csv += "energy," + csv_escape_free(level.energy) + "\n";
  csv += "upper_re," + csv_escape_free((spatial * iv[0]).real()) + "\n";
  csv += "upper_im," + csv_escape_free((spatial * iv[0]).imag()) + "\n";
  csv += "lower_re," + csv_escape_free((spatial * iv[1]).real()) + "\n";
  csv += "lower_im," + csv_escape_free((spatial * iv[1]).imag()) + "\n";

  json envelope;
  envelope["command"] = "state";
  envelope["config"] = config_json(o, p);
  envelope["results"] = results;
  envelope["checks"] = json::array();
  emit_envelope(o, envelope, csv);
  return 0;
}

int run_greens(const CommonOpts& o, double z, double r, double rp, double angle, int l_max) {
  auto p = make_params(o);
  Eigen::Vector3d rv(0.0, 0.0, r);
  Eigen::Vector3d rpv(rp * std::sin(angle), 0.0, rp * std::cos(angle));
  auto res = kgo::greens::greens_coordinate(z, p, rv, rpv, l_max);

  json results;
  results["z"] = z;
  results["epsilon_of_z"] = res.map.eps.real();
  results["g_nr"] = res.g_nr;
  json mat = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j)
      row.push_back(json::array({res.g(i, j).real(), res.g(i, j).imag()}));
    mat.push_back(row);
  }
  results["g_matrix"] = mat;
  results["truncation_remainder"] = res.remainder;

  std::vector<kgo::verify::Check> checks;
  checks.push_back({"greens.truncation_remainder", res.remainder,
                    1e-6 * std::abs(res.g_nr), !res.truncation_warning});

  std::string csv = "key,value\n";
  csv += "epsilon_of_z," + csv_escape_free(res.map.eps.real()) + "\n";
  csv += "g_nr," + csv_escape_free(res.g_nr) + "\n";
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      csv += "g_" + std::to_string(i + 1) + std::to_string(j + 1) + "_re," +
             csv_escape_free(res.g(i, j).real()) + "\n";
  csv += "truncation_remainder," + csv_escape_free(res.remainder) + "\n";

  json envelope;
  envelope["command"] = "greens";
  envelope["config"] = config_json(o, p);
  envelope["results"] = results;
  envelope["checks"] = checks_json(checks);
  emit_envelope(o, envelope, csv);
  return kgo::verify::all_pass(checks) ? 0 : 1;
}

int run_verify(const CommonOpts& o, const std::string& suite) {
  auto p = make_params(o);
  kgo::verify::Config cfg;
  cfg.params = p;
  cfg.n_max = o.n_max;
  cfg.l_max = o.l_max;
  cfg.profile = resolve_profile(o);
  auto checks = kgo::verify::run_suite(suite, cfg);

  json results;
  results["suite"] = suite;
  results["n_checks"] = static_cast<int>(checks.size());
  results["all_pass"] = kgo::verify::all_pass(checks);

  std::string csv = "name,measured,tolerance,pass\n";
  for (const auto& c : checks)
    csv += c.name + "," + csv_escape_free(c.measured) + "," + csv_escape_free(c.tolerance) + "," +
           (c.pass ? "true" : "false") + "\n";

  json envelope;
  envelope["command"] = "verify";
  envelope["config"] = config_json(o, p);
  envelope["results"] = results;
  envelope["checks"] = checks_json(checks);
  emit_envelope(o, envelope, csv);
  return kgo::verify::all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon oscillator: spectra, spinor states, Green's functions"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* spectrum = app.add_subcommand("spectrum", "relativistic level table");
  int max_shell = 4;
  add_common(spectrum, o);
  spectrum->add_option("--max-shell", max_shell, "include shells 2n+l <= N");

  auto* state = app.add_subcommand("state", "eigenspinor at a point");
  int sn = 0, sl = 0, smu = 0, ssign = 1;
  double sr = 1.0, stheta = 0.0, sphi = 0.0;
  add_common(state, o);
  state->add_option("--n", sn, "radial quantum number");
  state->add_option("--l", sl, "orbital quantum number");
  state->add_option("--mu", smu, "magnetic quantum number");
  state->add_option("--sign", ssign, "energy branch +1 or -1")->check(CLI::IsMember({1, -1}));
  state->add_option("--r", sr, "radius");
  state->add_option("--theta", stheta, "polar angle");
  state->add_option("--phi", sphi, "azimuthal angle");

  auto* greens = app.add_subcommand("greens", "coordinate Green's function");
  double gz = 0.4, gr = 1.0, grp = 2.0, gangle = 0.0;
  int gl_max = 24;
  add_common(greens, o);
  greens->add_option("--z", gz, "spectral parameter (real, off the spectrum)");
  greens->add_option("--r", gr, "first radius");
  greens->add_option("--rp", grp, "second radius");
  greens->add_option("--angle", gangle, "angle between the two directions");
  greens->add_option("--greens-l-max", gl_max, "partial-wave truncation");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  add_common(verify, o);
  verify
      ->add_option("--suite", suite,
                   "algebra | spectrum | orthonormality | resolvent | fw | witten | all")
      ->check(CLI::IsMember(
          {"algebra", "spectrum", "orthonormality", "resolvent", "fw", "witten", "all"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) return run_spectrum(o, max_shell);
    if (state->parsed()) return run_state(o, sn, sl, smu, ssign, sr, stheta, sphi);
    if (greens->parsed()) return run_greens(o, gz, gr, grp, gangle, gl_max);
    if (verify->parsed()) return run_verify(o, suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
