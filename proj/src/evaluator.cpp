#include "slksched/evaluator.hpp"

#include <stdexcept>

#include "slksched/timing.hpp"

namespace slksched {

WindowParams windows_from_schedule(const Instance& inst, const Schedule& sched,
                                   int k, int l) {
  if (k < 0 || l < k || l > inst.n) {
    throw std::invalid_argument("window indices must satisfy 0 <= k <= l <= n");
  }
  const Timeline tl = build_timeline(inst, sched);
  WindowParams w;
  w.k = k;
  w.l = l;
  w.q1 = k == 0 ? 0.0 : tl.completion[static_cast<size_t>(k - 1)];
  w.q2 = l == 0 ? 0.0 : tl.completion[static_cast<size_t>(l - 1)];
  w.D = w.q2 - w.q1;
  return w;
}

CostBreakdown breakdown_from_timeline(const Instance& inst, const Timeline& tl,
                                      double q1, double q2) {
  if (!(q1 <= q2)) throw std::invalid_argument("window requires q1 <= q2");
  const size_t n = tl.completion.size();
  CostBreakdown bd;
  bd.d1.resize(n);
  bd.d2.resize(n);
  bd.earliness.resize(n);
  bd.tardiness.resize(n);

  double sum_e = 0.0;
  double sum_t = 0.0;
  double sum_d1 = 0.0;
  for (size_t j = 0; j < n; ++j) {
    bd.d1[j] = tl.p_actual[j] + q1;
    bd.d2[j] = tl.p_actual[j] + q2;
    bd.earliness[j] = std::max(0.0, bd.d1[j] - tl.completion[j]);
    bd.tardiness[j] = std::max(0.0, tl.completion[j] - bd.d2[j]);
    sum_e += bd.earliness[j];
    sum_t += bd.tardiness[j];
    sum_d1 += bd.d1[j];
  }
  bd.earliness_cost = inst.alpha * sum_e;
  bd.tardiness_cost = inst.beta * sum_t;
  bd.window_location_cost = inst.gamma * sum_d1;
  bd.window_size_cost = static_cast<double>(inst.n) * inst.delta * (q2 - q1);
  bd.total = bd.earliness_cost + bd.tardiness_cost + bd.window_location_cost +
             bd.window_size_cost;
  return bd;
}

CostBreakdown cost_direct(const Instance& inst, const Schedule& sched,
                          const WindowParams& windows) {
  const Timeline tl = build_timeline(inst, sched);
  return breakdown_from_timeline(inst, tl, windows.q1, windows.q2);
}

WindowSearchResult best_windows_on_timeline(const Instance& inst,
                                            const Timeline& tl) {
  const int n = static_cast<int>(tl.completion.size());

  // candidate c: 0 for time zero, j for the completion of position j
  const auto value_of = [&](int c) {
    return c == 0 ? 0.0 : tl.completion[static_cast<size_t>(c - 1)];
  };

  // Totals only; avoids building per-position vectors in the pair loop.
  const auto total_of = [&](double q1, double q2) {
    double sum_e = 0.0;
    double sum_t = 0.0;
    double sum_d1 = 0.0;
    for (size_t j = 0; j < tl.completion.size(); ++j) {
      const double d1 = tl.p_actual[j] + q1;
      const double d2 = tl.p_actual[j] + q2;
      sum_e += std::max(0.0, d1 - tl.completion[j]);
      sum_t += std::max(0.0, tl.completion[j] - d2);
      sum_d1 += d1;
    }
    return inst.alpha * sum_e + inst.beta * sum_t + inst.gamma * sum_d1 +
           static_cast<double>(inst.n) * inst.delta * (q2 - q1);
  };

  WindowSearchResult best;
  bool first = true;
  for (int c1 = 0; c1 <= n; ++c1) {
    for (int c2 = c1; c2 <= n; ++c2) {
      const double q1 = value_of(c1);
      const double q2 = value_of(c2);
      const double z = total_of(q1, q2);
      if (first || z < best.total) {
        best = {c1, c2, q1, q2, z};
        first = false;
      }
    }
  }
  return best;
}

WindowSearchResult best_windows_exhaustive(const Instance& inst,
                                           const Schedule& sched) {
  const Timeline tl = build_timeline(inst, sched);
  return best_windows_on_timeline(inst, tl);
}

Solution make_solution(const Instance& inst, const Schedule& sched,
                       const WindowParams& windows, double fixed_cost,
                       double total_cost) {
  Solution sol;
  sol.schedule = sched;
  sol.windows = windows;
  sol.timeline = build_timeline(inst, sched);
  CostBreakdown bd =
      breakdown_from_timeline(inst, sol.timeline, windows.q1, windows.q2);
  sol.earliness = std::move(bd.earliness);
  sol.tardiness = std::move(bd.tardiness);
  sol.fixed_cost = fixed_cost;
  sol.total_cost = total_cost;
  return sol;
}

}  // namespace slksched
