#pragma once

#include <array>
#include <string>
#include <vector>

#include "coderiv/moduli.hpp"

namespace coderiv {

struct VerifyItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int max_degree = 6;   // bound for the cohomology/representative items
  int conjugates = 200; // random base changes per table in the invariance item
  unsigned long long seed = 0x0c0de11aULL;
};

// Runs the full reproduction suite; one item per claim group. All checks
// are exact. Items never throw on mathematical failure (they report it);
// only genuine internal errors propagate.
std::vector<VerifyItem> verify_all(const VerifyOptions &opts = {});

// Golden census values over F_p, frozen from the first enumeration run.
struct CensusGolden {
  int p = 0;
  long long total = 0;
  long long associative_count = 0;
  // representative constants, orbit size, class label
  std::vector<std::tuple<std::array<int, 8>, long long, std::string>> orbits;
};

// Empty until values are frozen; census stability is then checked
// against these in verify_all and in the unit tests.
const std::vector<CensusGolden> &census_goldens();

std::string census_fingerprint(const Census &census);

}  // namespace coderiv
