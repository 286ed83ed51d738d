#pragma once

#include "slksched/types.hpp"

namespace slksched {

// Window constants pinned to the completion times of positions k and l
// (0 pins a constant at time zero).
WindowParams windows_from_schedule(const Instance& inst, const Schedule& sched,
                                   int k, int l);

// First-principles evaluation: runs the schedule, derives each job's window
// from its realized processing time, and sums the four cost components.
// Requires windows.q1 <= windows.q2.
CostBreakdown cost_direct(const Instance& inst, const Schedule& sched,
                          const WindowParams& windows);

// Same evaluation on an already built timeline.
CostBreakdown breakdown_from_timeline(const Instance& inst, const Timeline& tl,
                                      double q1, double q2);

struct WindowSearchResult {
  int k = 0;  // candidate index of q1 (0 = time zero, j = completion of j)
  int l = 0;
  double q1 = 0.0;
  double q2 = 0.0;
  double total = 0.0;
};

// Minimizes the direct cost over every ordered pair of window constants
// drawn from {0} and the completion times. Test oracle for the closed-form
// window placement; O(n^3).
WindowSearchResult best_windows_exhaustive(const Instance& inst,
                                           const Schedule& sched);
WindowSearchResult best_windows_on_timeline(const Instance& inst,
                                            const Timeline& tl);

// Assembles a full Solution record for a schedule whose cost is already
// known; earliness/tardiness come from the direct evaluation.
Solution make_solution(const Instance& inst, const Schedule& sched,
                       const WindowParams& windows, double fixed_cost,
                       double total_cost);

}  // namespace slksched
