#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace drawkit {

struct InvariantTally {
  long long checked = 0;
  long long violations = 0;
  long long skipped = 0;  // preconditions not met
};

struct FuzzSummary {
  long long drawings = 0;
  std::map<std::string, InvariantTally> invariants;
  std::vector<std::string> failures;  // first few, with seed and surface

  long long violations() const;
  std::string text() const;
};

struct FuzzOptions {
  std::uint64_t first_seed = 1;
  std::uint64_t last_seed = 200;
  int n = 8;
  int max_bends = 2;
  int threads = 0;  // 0 picks the hardware concurrency
};

// Checks every invariant the library promises on seeded random geometric
// drawings, on the plane and on the sphere.
FuzzSummary run_fuzz(const FuzzOptions& options);

}  // namespace drawkit
