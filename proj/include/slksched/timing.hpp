#pragma once

#include "slksched/types.hpp"

namespace slksched {

// Realized processing time per position. The deterioration clock is the
// machine age: time accumulated since time zero or since the end of the
// maintenance activity, whichever is later. Maintenance restores the
// machine, so the job right after it runs at its normal time.
std::vector<double> job_processing_times(const Instance& inst,
                                         const Schedule& sched);

// Maintenance lasts mu + sigma * t_start. t_start must be non-negative.
double maintenance_duration(const Instance& inst, double t_start);

// Executes the schedule from time zero with no idle time; maintenance, if
// any, starts at the completion of position maint_after.
Timeline build_timeline(const Instance& inst, const Schedule& sched);

}  // namespace slksched
