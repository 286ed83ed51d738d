#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core data model for the single-machine scheduling problem solved by this
// library: n jobs with linearly deteriorating processing times, at most one
// deteriorating maintenance activity, and slack due-windows. Positions, job
// ids and the maintenance position are 1-based everywhere in the public
// surface; vectors indexed by position use the usual 0-based storage.

namespace slksched {

struct Instance {
  int n = 0;              // job count; must equal a.size()
  std::vector<double> a;  // normal processing times a_j, one per job
  double b = 0.0;         // common deterioration rate: p = a + b * machine_age
  double alpha = 1.0;     // earliness cost per unit time
  double beta = 1.0;      // tardiness cost per unit time
  double gamma = 1.0;     // window-start cost per unit time
  double delta = 1.0;     // window-size cost per unit time
  double mu = 1.0;        // basic maintenance duration
  double sigma = 0.0;     // maintenance deterioration rate: f(t) = mu + sigma*t

  static Instance make(std::vector<double> a, double b, double alpha,
                       double beta, double gamma, double delta, double mu,
                       double sigma) {
    Instance inst;
    inst.n = static_cast<int>(a.size());
    inst.a = std::move(a);
    inst.b = b;
    inst.alpha = alpha;
    inst.beta = beta;
    inst.gamma = gamma;
    inst.delta = delta;
    inst.mu = mu;
    inst.sigma = sigma;
    return inst;
  }
};

struct Schedule {
  std::vector<int> order;  // order[r] = 1-based job id placed in position r+1
  int maint_after = 0;     // 1..n; maintenance runs right after this position,
                           // maint_after == n means no maintenance at all
};

// Slack constants defining each job's due-window [p+q1, p+q2]. When derived
// from completion times, k and l are the defining 1-based positions (0 means
// the constant is pinned at time zero); -1 marks windows given explicitly.
struct WindowParams {
  int k = -1;
  int l = -1;
  double q1 = 0.0;
  double q2 = 0.0;
  double D = 0.0;  // q2 - q1
};

struct Timeline {
  std::vector<double> start;       // wall-clock start per position
  std::vector<double> p_actual;    // realized processing time per position
  std::vector<double> completion;  // start + p_actual, exactly
  std::optional<double> maint_start;  // absent iff maint_after == n
  std::optional<double> maint_end;
  double makespan = 0.0;  // completion of the last position
};

struct Solution {
  Schedule schedule;
  WindowParams windows;
  Timeline timeline;
  std::vector<double> earliness;  // per position; earliness*tardiness == 0
  std::vector<double> tardiness;
  double fixed_cost = 0.0;  // schedule-independent constant M of the cost
  double total_cost = 0.0;  // Z
};

// Full per-position evaluation of a (schedule, windows) pair.
struct CostBreakdown {
  std::vector<double> d1;  // window open, p_actual + q1
  std::vector<double> d2;  // window close, p_actual + q2
  std::vector<double> earliness;
  std::vector<double> tardiness;
  double earliness_cost = 0.0;
  double tardiness_cost = 0.0;
  double window_location_cost = 0.0;
  double window_size_cost = 0.0;
  double total = 0.0;
};

enum class ValidationCode {
  NonPositiveCost,
  NegativeTime,
  EmptyJobSet,
  LengthMismatch,
};

inline const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::NonPositiveCost: return "NonPositiveCost";
    case ValidationCode::NegativeTime: return "NegativeTime";
    case ValidationCode::EmptyJobSet: return "EmptyJobSet";
    case ValidationCode::LengthMismatch: return "LengthMismatch";
  }
  return "?";
}

struct ValidationIssue {
  ValidationCode code;
  std::string detail;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<ValidationIssue>& issues) {
    std::string msg = "invalid instance:";
    for (const auto& issue : issues) {
      msg += "\n  ";
      msg += to_string(issue.code);
      msg += ": ";
      msg += issue.detail;
    }
    return msg;
  }

  std::vector<ValidationIssue> issues_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the closed-form window indices cross (k > l after clamping);
// the optimality machinery does not cover that cost configuration.
class DegenerateCostConfig : public std::runtime_error {
 public:
  DegenerateCostConfig(double raw_k, double raw_l)
      : std::runtime_error("degenerate cost configuration: raw k = " +
                           std::to_string(raw_k) + ", raw l = " +
                           std::to_string(raw_l) +
                           " clamp to k > l; no interior window optimum"),
        raw_k_(raw_k),
        raw_l_(raw_l) {}

  double raw_k() const { return raw_k_; }
  double raw_l() const { return raw_l_; }

 private:
  double raw_k_;
  double raw_l_;
};

inline bool rel_close(double x, double y, double tol = 1e-9) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol * scale;
}

}  // namespace slksched
