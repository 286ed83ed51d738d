#pragma once

#include "slksched/types.hpp"

namespace slksched {

// Positional cost profile for one maintenance position: the per-position
// coefficients omega on realized processing times, their fold W onto normal
// processing times, and the schedule-independent constant M, so that
// Z = M + sum_j omega_j * p_[j] = M + sum_j W_j * a_[j].
struct WeightProfile {
  int maint_after = 0;
  int k = 0;
  int l = 0;
  std::vector<double> omega;
  std::vector<double> W;
  double M = 0.0;
};

struct KL {
  int k = 0;
  int l = 0;
};

// Closed-form positions whose completion times carry the optimal window
// constants: k = floor(n*(delta-gamma)/alpha), l = floor(n*(beta-delta)/beta),
// both clamped to [0, n]. Throws DegenerateCostConfig when the clamped values
// cross.
KL compute_kl(const Instance& inst);

// Per-position cost coefficients for maintenance position maint_after. The
// formula has three regimes depending on where the maintenance sits relative
// to k and l; within a regime it is a four-case piecewise expression.
std::vector<double> omega_vector(const Instance& inst, int maint_after, int k,
                                 int l);
void omega_into(const Instance& inst, int maint_after, int k, int l,
                std::vector<double>& out);

// Folds omega into weights on normal processing times:
//   W_j = omega_j + b * sum_{t=j+1}^{m} omega_t * (1+b)^(t-j-1)
// where the fold stops at m = maint_after for positions up to the
// maintenance and at m = n beyond it. Computed by a backward running
// product, O(n) for the whole vector.
std::vector<double> positional_weights(const Instance& inst, int maint_after,
                                       const std::vector<double>& omega);
void positional_weights_into(const Instance& inst, int maint_after,
                             const std::vector<double>& omega,
                             std::vector<double>& out);

// The constant cost term M for the given maintenance position.
double fixed_cost(const Instance& inst, int maint_after, int k, int l);

// M + sum_j W_j * a_by_pos[j], summed in position order.
double weighted_cost(const std::vector<double>& W, double M,
                     const std::vector<double>& a_by_pos);

WeightProfile weight_profile(const Instance& inst, int maint_after, int k,
                             int l);

}  // namespace slksched
