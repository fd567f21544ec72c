#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "colorcode/sectors.hpp"

namespace colorcode {

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int threads = 1;
  std::filesystem::path golden_dir;     // fusion.csv, monodromy.csv, anyons.csv
  std::filesystem::path micro_fixture;  // lattice JSON; empty: the built-in 3x2 relaxed torus
  DetectorOptions detector;
  int braiding_separation = 6;
  int truncation = 3;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kNumChecks = 11;

std::string check_name(int id);
CheckResult run_check(int id, const VerifyOptions& options);
// Independent checks run concurrently on up to options.threads workers; results in id order.
std::vector<CheckResult> run_checks(const std::vector<int>& ids, const VerifyOptions& options);

}  // namespace colorcode
