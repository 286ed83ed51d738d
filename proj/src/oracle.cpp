#include "slksched/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "slksched/evaluator.hpp"
#include "slksched/model.hpp"
#include "slksched/timing.hpp"
#include "slksched/weights.hpp"

namespace slksched {

OracleResult brute_force_solve(const Instance& inst, int n_cap) {
  ensure_valid(inst);
  if (inst.n > n_cap) {
    throw TooLarge("instance has n = " + std::to_string(inst.n) +
                   " jobs, oracle cap is " + std::to_string(n_cap));
  }
  // Rejects the same cost configurations the closed-form path rejects, so the
  // two sides always agree on which instances are solvable.
  const KL kl = compute_kl(inst);

  std::vector<int> perm(static_cast<size_t>(inst.n));
  std::iota(perm.begin(), perm.end(), 1);

  std::vector<double> all_z;
  all_z.reserve(1024);
  bool have_best = false;
  double best_z = 0.0;
  WindowSearchResult best_w;
  Schedule best_sched;

  // Permutations run in lexicographic order with the maintenance position
  // innermost. Exact cost ties resolve to the smallest maintenance position,
  // then to the lexicographically smallest order.
  do {
    for (int i = 1; i <= inst.n; ++i) {
      const Schedule sched{perm, i};
      const Timeline tl = build_timeline(inst, sched);
      const WindowSearchResult w = best_windows_on_timeline(inst, tl);
      all_z.push_back(w.total);
      bool take = false;
      if (!have_best || w.total < best_z) {
        take = true;
      } else if (w.total == best_z && i < best_sched.maint_after) {
        take = true;
      }
      if (take) {
        have_best = true;
        best_z = w.total;
        best_w = w;
        best_sched = sched;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  OracleResult result;
  result.enumerated = static_cast<long long>(all_z.size());
  for (double z : all_z) {
    if (rel_close(z, best_z)) ++result.ties;
  }

  const WindowParams windows{best_w.k, best_w.l, best_w.q1, best_w.q2,
                             best_w.q2 - best_w.q1};
  const double M = fixed_cost(inst, best_sched.maint_after, kl.k, kl.l);
  result.best = make_solution(inst, best_sched, windows, M, best_z);
  return result;
}

}  // namespace slksched
