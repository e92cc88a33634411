#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dyck::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail; // measured values against their thresholds
};

/// Runs criteria 1 to 11 with sampling streams derived from seed.
std::vector<Result> run_all(std::uint64_t seed = 20240611);

/// "PASS  3 hemisphere-separation: ..." style line.
std::string format(const Result& r);

} // namespace dyck::acceptance
