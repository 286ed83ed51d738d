#include "slksched/solver.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "slksched/evaluator.hpp"
#include "slksched/model.hpp"

namespace slksched {
namespace {

std::vector<int> jobs_by_descending_a(const std::vector<double>& a) {
  std::vector<int> jobs(a.size());
  std::iota(jobs.begin(), jobs.end(), 0);
  std::sort(jobs.begin(), jobs.end(), [&](int x, int y) {
    if (a[static_cast<size_t>(x)] != a[static_cast<size_t>(y)]) {
      return a[static_cast<size_t>(x)] > a[static_cast<size_t>(y)];
    }
    return x < y;
  });
  return jobs;
}

// Core matching on a presorted job list. pos and block are scratch buffers.
void assign_sorted(const std::vector<double>& a,
                   const std::vector<int>& jobs_desc,
                   const std::vector<double>& W, std::vector<int>& pos,
                   std::vector<int>& block, std::vector<int>& order) {
  const int n = static_cast<int>(a.size());
  pos.resize(static_cast<size_t>(n));
  std::iota(pos.begin(), pos.end(), 0);
  std::sort(pos.begin(), pos.end(), [&](int x, int y) {
    if (W[static_cast<size_t>(x)] != W[static_cast<size_t>(y)]) {
      return W[static_cast<size_t>(x)] < W[static_cast<size_t>(y)];
    }
    return x < y;
  });

  order.resize(static_cast<size_t>(n));
  int r = 0;
  while (r < n) {
    const int run_start = r;
    const double run_a = a[static_cast<size_t>(jobs_desc[static_cast<size_t>(r)])];
    while (r < n && a[static_cast<size_t>(jobs_desc[static_cast<size_t>(r)])] == run_a) ++r;
    if (r - run_start == 1) {
      order[static_cast<size_t>(pos[static_cast<size_t>(run_start)])] =
          jobs_desc[static_cast<size_t>(run_start)] + 1;
      continue;
    }
    // Equal normal times: the group's positions are interchangeable, so hand
    // them out in position order against ascending job ids.
    block.assign(pos.begin() + run_start, pos.begin() + r);
    std::sort(block.begin(), block.end());
    for (int t = 0; t < r - run_start; ++t) {
      order[static_cast<size_t>(block[static_cast<size_t>(t)])] =
          jobs_desc[static_cast<size_t>(run_start + t)] + 1;
    }
  }
}

struct Workspace {
  std::vector<double> omega;
  std::vector<double> W;
  std::vector<double> a_by_pos;
  std::vector<int> pos;
  std::vector<int> block;
  std::vector<int> order;
};

// Z and order for one maintenance position, reusing the workspace buffers.
double scan_position(const Instance& inst, const std::vector<int>& jobs_desc,
                     int maint_after, int k, int l, Workspace& ws) {
  omega_into(inst, maint_after, k, l, ws.omega);
  positional_weights_into(inst, maint_after, ws.omega, ws.W);
  assign_sorted(inst.a, jobs_desc, ws.W, ws.pos, ws.block, ws.order);
  ws.a_by_pos.resize(static_cast<size_t>(inst.n));
  for (int r = 0; r < inst.n; ++r) {
    ws.a_by_pos[static_cast<size_t>(r)] =
        inst.a[static_cast<size_t>(ws.order[static_cast<size_t>(r)] - 1)];
  }
  return weighted_cost(ws.W, fixed_cost(inst, maint_after, k, l), ws.a_by_pos);
}

struct RangeBest {
  double z = 0.0;
  int maint_after = 0;
  int win_k = 0;
  int win_l = 0;
  std::vector<int> order;
  bool found = false;
};

RangeBest scan_range(const Instance& inst, const std::vector<int>& jobs_desc,
                     int k, int l, int i_lo, int i_hi) {
  Workspace ws;
  RangeBest best;
  const auto consider = [&](int i, int wk, int wl) {
    const double z = scan_position(inst, jobs_desc, i, wk, wl, ws);
    if (!best.found || z < best.z) {
      best.z = z;
      best.maint_after = i;
      best.win_k = wk;
      best.win_l = wl;
      best.order = ws.order;
      best.found = true;
    }
  };
  for (int i = i_lo; i <= i_hi; ++i) {
    consider(i, k, l);
    // The windows (C_[k], C_[l]) are cost-minimal over completion-time
    // placements except when the break sits exactly at position k or l: the
    // break gap pushes the relevant cost breakpoint past that completion, and
    // the next completion can then price strictly lower.
    if (i == k && k + 1 <= l) consider(i, k + 1, l);
    if (i == l && l + 1 <= inst.n) {
      consider(i, k, l + 1);
      if (i == k) consider(i, k + 1, l + 1);
    }
  }
  return best;
}

}  // namespace

std::vector<int> assign_by_rearrangement(const std::vector<double>& a,
                                         const std::vector<double>& W) {
  if (a.size() != W.size()) {
    throw std::invalid_argument("a and W must have equal length");
  }
  const std::vector<int> jobs_desc = jobs_by_descending_a(a);
  std::vector<int> pos;
  std::vector<int> block;
  std::vector<int> order;
  assign_sorted(a, jobs_desc, W, pos, block, order);
  return order;
}

LocalResult solve_for_position(const Instance& inst, int maint_after, int k,
                               int l) {
  LocalResult result;
  result.maint_after = maint_after;
  result.profile = weight_profile(inst, maint_after, k, l);
  result.order = assign_by_rearrangement(inst.a, result.profile.W);
  std::vector<double> a_by_pos(static_cast<size_t>(inst.n));
  for (int r = 0; r < inst.n; ++r) {
    a_by_pos[static_cast<size_t>(r)] =
        inst.a[static_cast<size_t>(result.order[static_cast<size_t>(r)] - 1)];
  }
  result.total_cost =
      weighted_cost(result.profile.W, result.profile.M, a_by_pos);
  return result;
}

Solution solve(const Instance& inst, const SolveOptions& options) {
  ensure_valid(inst);
  const KL kl = compute_kl(inst);
  const std::vector<int> jobs_desc = jobs_by_descending_a(inst.a);

  RangeBest best;
  const int threads = std::max(1, options.threads);
  if (threads == 1 || inst.n < 2 * threads) {
    best = scan_range(inst, jobs_desc, kl.k, kl.l, 1, inst.n);
  } else {
    std::vector<std::future<RangeBest>> parts;
    const int chunk = (inst.n + threads - 1) / threads;
    for (int lo = 1; lo <= inst.n; lo += chunk) {
      const int hi = std::min(inst.n, lo + chunk - 1);
      parts.push_back(std::async(std::launch::async, [&, lo, hi] {
        return scan_range(inst, jobs_desc, kl.k, kl.l, lo, hi);
      }));
    }
    // Chunks are merged in ascending position order, so strict improvement
    // keeps the smallest maint_after among exact cost ties.
    for (auto& part : parts) {
      RangeBest r = part.get();
      if (!r.found) continue;
      if (!best.found || r.z < best.z) best = std::move(r);
    }
  }

  const Schedule sched{best.order, best.maint_after};
  const WindowParams windows =
      windows_from_schedule(inst, sched, best.win_k, best.win_l);
  const double M = fixed_cost(inst, best.maint_after, best.win_k, best.win_l);
  return make_solution(inst, sched, windows, M, best.z);
}

}  // namespace slksched
