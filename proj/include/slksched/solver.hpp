#pragma once

#include "slksched/types.hpp"
#include "slksched/weights.hpp"

namespace slksched {

// Best schedule for one fixed maintenance position.
struct LocalResult {
  int maint_after = 0;
  std::vector<int> order;
  double total_cost = 0.0;  // weighted_cost(profile.W, profile.M, a by order)
  WeightProfile profile;
};

// Minimizes sum_j W_j * a_[j] by matching the largest normal time to the
// smallest weight. Deterministic: ties on a go to the smaller job id, ties
// on W to the smaller position, and jobs with equal normal times keep their
// id order across the positions the group receives.
std::vector<int> assign_by_rearrangement(const std::vector<double>& a,
                                         const std::vector<double>& W);

LocalResult solve_for_position(const Instance& inst, int maint_after, int k,
                               int l);

struct SolveOptions {
  int threads = 1;  // >1 fans the per-position scan out; results identical
};

// Scans every maintenance position, matches jobs to positions by the
// rearrangement inequality, and returns the cheapest schedule found.
// Cost-tied positions resolve to the smallest maint_after. O(n^2 log n).
Solution solve(const Instance& inst, const SolveOptions& options = {});

}  // namespace slksched
