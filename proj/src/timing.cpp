#include "slksched/timing.hpp"

#include <stdexcept>

#include "slksched/model.hpp"

namespace slksched {
namespace {

void check_schedule(const Instance& inst, const Schedule& sched) {
  ensure_permutation(sched.order, inst.n);
  if (sched.maint_after < 1 || sched.maint_after > inst.n) {
    throw std::invalid_argument("maint_after " +
                                std::to_string(sched.maint_after) +
                                " out of 1.." + std::to_string(inst.n));
  }
}

}  // namespace

std::vector<double> job_processing_times(const Instance& inst,
                                         const Schedule& sched) {
  check_schedule(inst, sched);
  std::vector<double> p(static_cast<size_t>(inst.n));
  double age = 0.0;
  for (int r = 0; r < inst.n; ++r) {
    const double normal = inst.a[static_cast<size_t>(sched.order[r] - 1)];
    p[static_cast<size_t>(r)] = normal + inst.b * age;
    age += p[static_cast<size_t>(r)];
    if (r + 1 == sched.maint_after) age = 0.0;
  }
  return p;
}

double maintenance_duration(const Instance& inst, double t_start) {
  if (!(t_start >= 0.0)) {
    throw std::invalid_argument("maintenance start time must be >= 0");
  }
  return inst.mu + inst.sigma * t_start;
}

Timeline build_timeline(const Instance& inst, const Schedule& sched) {
  check_schedule(inst, sched);
  Timeline tl;
  tl.start.resize(static_cast<size_t>(inst.n));
  tl.p_actual.resize(static_cast<size_t>(inst.n));
  tl.completion.resize(static_cast<size_t>(inst.n));

  double wall = 0.0;
  double age = 0.0;
  for (int r = 0; r < inst.n; ++r) {
    const size_t idx = static_cast<size_t>(r);
    const double normal = inst.a[static_cast<size_t>(sched.order[r] - 1)];
    tl.start[idx] = wall;
    tl.p_actual[idx] = normal + inst.b * age;
    tl.completion[idx] = tl.start[idx] + tl.p_actual[idx];
    wall = tl.completion[idx];
    age += tl.p_actual[idx];
    if (r + 1 == sched.maint_after && sched.maint_after < inst.n) {
      tl.maint_start = wall;
      wall += maintenance_duration(inst, wall);
      tl.maint_end = wall;
      age = 0.0;
    }
  }
  tl.makespan = tl.completion.back();
  return tl;
}

}  // namespace slksched
