#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "slksched/types.hpp"

namespace slksched {

// Seeded random source with a platform-independent stream: mt19937_64 output
// mapped to doubles by fixed bit arithmetic, no distribution objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  // Uniform over {lo, ..., hi} inclusive.
  int uniform_int(int lo, int hi) {
    const int span = hi - lo + 1;
    const int v = lo + static_cast<int>(unit() * span);
    return v > hi ? hi : v;  // unit()*span can round up to span
  }

 private:
  std::mt19937_64 eng_;
};

struct GenParams {
  int n = 10;
  std::uint64_t seed = 1;
  double a_min = 1.0;
  double a_max = 100.0;
  double b_min = 0.0;
  double b_max = 0.2;
  double mu_min = 1.0;
  double mu_max = 20.0;
  double sigma_min = 0.0;
  double sigma_max = 0.3;
  double cost_min = 1.0;
  double cost_max = 20.0;
  // When false (default) the cost rates are redrawn until gamma < delta < beta
  // holds and the closed-form window positions do not cross; when true the
  // four rates are drawn independently with no constraint.
  bool allow_degenerate = false;
};

// Deterministic in params: the same params always produce the same instance,
// on any platform. Values are rounded to a fixed number of decimals so the
// serialized form is short and stable.
Instance generate_instance(const GenParams& params);

}  // namespace slksched
