#pragma once

#include <string>
#include <vector>

#include "kgo/types.hpp"

namespace kgo::verify {

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class Profile { Default, Strict };

struct Config {
  OscillatorParams params = OscillatorParams::natural();
  int n_max = 30;
  int l_max = 8;
  Profile profile = Profile::Default;
};

std::vector<Check> verify_algebra(const Config& cfg);
std::vector<Check> verify_spectrum(const Config& cfg);
std::vector<Check> verify_orthonormality(const Config& cfg);
std::vector<Check> verify_fw(const Config& cfg);
std::vector<Check> verify_witten(const Config& cfg);
std::vector<Check> verify_resolvent(const Config& cfg);
std::vector<Check> verify_all(const Config& cfg);

/// Named suite dispatch; throws std::invalid_argument on unknown names.
std::vector<Check> run_suite(const std::string& suite, const Config& cfg);

bool all_pass(const std::vector<Check>& checks);

}  // namespace kgo::verify
