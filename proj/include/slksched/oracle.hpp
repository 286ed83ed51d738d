#pragma once

#include <stdexcept>

#include "slksched/types.hpp"

namespace slksched {

// Thrown when an instance exceeds the oracle's enumeration cap.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Solution best;
  long long enumerated = 0;  // permutations times maintenance positions
  long long ties = 0;        // candidates within 1e-9 relative of the optimum
};

// Exhaustive search over every permutation, maintenance position, and window
// placement. Intended as an independent check for small n; refuses n > n_cap.
OracleResult brute_force_solve(const Instance& inst, int n_cap = 8);

}  // namespace slksched
