#include "slksched/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slksched {
namespace {

void check_indices(const Instance& inst, int maint_after, int k, int l) {
  if (k < 0 || l < k || l > inst.n) {
    throw std::invalid_argument("window indices must satisfy 0 <= k <= l <= n");
  }
  if (maint_after < 1 || maint_after > inst.n) {
    throw std::invalid_argument("maint_after out of 1..n");
  }
}

}  // namespace

KL compute_kl(const Instance& inst) {
  const double n = static_cast<double>(inst.n);
  const double raw_k = n * (inst.delta - inst.gamma) / inst.alpha;
  const double raw_l = n * (inst.beta - inst.delta) / inst.beta;
  const auto clamp = [&](double raw) {
    return static_cast<int>(std::clamp(std::floor(raw), 0.0, n));
  };
  KL kl{clamp(raw_k), clamp(raw_l)};
  if (kl.k > kl.l) throw DegenerateCostConfig(raw_k, raw_l);
  return kl;
}

void omega_into(const Instance& inst, int maint_after, int k, int l,
                std::vector<double>& out) {
  check_indices(inst, maint_after, k, l);
  const int n = inst.n;
  const int i = maint_after;
  const double alpha = inst.alpha;
  const double beta = inst.beta;
  const double gamma = inst.gamma;
  const double delta = inst.delta;
  const double sigma = inst.sigma;
  out.resize(static_cast<size_t>(n));

  if (i < k) {
    // Maintenance inside the early prefix.
    for (int j = 1; j <= n; ++j) {
      double w;
      if (j <= i) {
        w = alpha * j + alpha * i * sigma + gamma * n * sigma +
            (n + 1) * gamma;
      } else if (j <= k) {
        w = alpha * j + (n + 1) * gamma;
      } else if (j <= l) {
        w = gamma + n * delta;
      } else {
        w = beta * (n - j) + gamma;
      }
      out[static_cast<size_t>(j - 1)] = w;
    }
  } else if (i < l) {
    // Maintenance inside the window span.
    for (int j = 1; j <= n; ++j) {
      double w;
      if (j <= k) {
        w = alpha * j + gamma * (n + 1) + n * delta * sigma;
      } else if (j <= i) {
        w = gamma + n * delta * sigma + n * delta;
      } else if (j <= l) {
        w = gamma + n * delta;
      } else {
        w = beta * (n - j) + gamma;
      }
      out[static_cast<size_t>(j - 1)] = w;
    }
  } else {
    // Maintenance inside the tardy suffix (or absent, i == n).
    for (int j = 1; j <= n; ++j) {
      double w;
      if (j <= k) {
        w = alpha * j + beta * (n - i) * sigma + gamma * (n + 1);
      } else if (j <= l) {
        w = beta * (n - i) * sigma + gamma + n * delta;
      } else if (j <= i) {
        w = beta * (n - j) + beta * (n - i) * sigma + gamma;
      } else {
        w = beta * (n - j) + gamma;
      }
      out[static_cast<size_t>(j - 1)] = w;
    }
  }
}

std::vector<double> omega_vector(const Instance& inst, int maint_after, int k,
                                 int l) {
  std::vector<double> out;
  omega_into(inst, maint_after, k, l, out);
  return out;
}

void positional_weights_into(const Instance& inst, int maint_after,
                             const std::vector<double>& omega,
                             std::vector<double>& out) {
  const int n = inst.n;
  if (static_cast<int>(omega.size()) != n) {
    throw std::invalid_argument("omega must have n entries");
  }
  const double b = inst.b;
  out.resize(static_cast<size_t>(n));

  // Fold each segment backward: W_j = omega_j + b*s with
  // s = sum_{t>j} omega_t (1+b)^(t-j-1), updated by one multiply per step.
  const auto fold = [&](int lo, int hi) {
    double s = 0.0;
    for (int j = hi; j >= lo; --j) {
      out[static_cast<size_t>(j - 1)] = omega[static_cast<size_t>(j - 1)] + b * s;
      s = omega[static_cast<size_t>(j - 1)] + (1.0 + b) * s;
    }
  };
  fold(1, maint_after);
  fold(maint_after + 1, n);
}

std::vector<double> positional_weights(const Instance& inst, int maint_after,
                                       const std::vector<double>& omega) {
  std::vector<double> out;
  positional_weights_into(inst, maint_after, omega, out);
  return out;
}

double fixed_cost(const Instance& inst, int maint_after, int k, int l) {
  check_indices(inst, maint_after, k, l);
  const double n = static_cast<double>(inst.n);
  const double i = static_cast<double>(maint_after);
  if (maint_after < k) return n * inst.mu * inst.gamma + inst.alpha * i * inst.mu;
  if (maint_after < l) return n * inst.delta * inst.mu;
  return (n - i) * inst.beta * inst.mu;
}

double weighted_cost(const std::vector<double>& W, double M,
                     const std::vector<double>& a_by_pos) {
  if (W.size() != a_by_pos.size()) {
    throw std::invalid_argument("W and assignment must have equal length");
  }
  double z = M;
  for (size_t j = 0; j < W.size(); ++j) z += W[j] * a_by_pos[j];
  return z;
}

WeightProfile weight_profile(const Instance& inst, int maint_after, int k,
                             int l) {
  WeightProfile profile;
  profile.maint_after = maint_after;
  profile.k = k;
  profile.l = l;
  omega_into(inst, maint_after, k, l, profile.omega);
  positional_weights_into(inst, maint_after, profile.omega, profile.W);
  profile.M = fixed_cost(inst, maint_after, k, l);
  return profile;
}

}  // namespace slksched
