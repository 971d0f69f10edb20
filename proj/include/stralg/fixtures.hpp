#pragma once

#include <string>
#include <vector>

namespace stralg {

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Checks every worked example the library is pinned against; each entry is
// independent and exceptions are reported as failures.
std::vector<FixtureResult> run_fixtures();

}  // namespace stralg
