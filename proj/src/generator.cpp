#include "slksched/generator.hpp"

#include <cmath>
#include <stdexcept>

#include "slksched/model.hpp"
#include "slksched/weights.hpp"

namespace slksched {
namespace {

double round_to(double x, int decimals) {
  const double p = std::pow(10.0, decimals);
  return std::round(x * p) / p;
}

}  // namespace

Instance generate_instance(const GenParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be at least 1");
  Rng rng(params.seed);

  Instance inst;
  inst.n = params.n;
  inst.a.resize(static_cast<size_t>(params.n));
  for (double& a : inst.a) a = round_to(rng.uniform(params.a_min, params.a_max), 2);
  inst.b = round_to(rng.uniform(params.b_min, params.b_max), 3);
  inst.mu = round_to(rng.uniform(params.mu_min, params.mu_max), 2);
  inst.sigma = round_to(rng.uniform(params.sigma_min, params.sigma_max), 3);

  if (params.allow_degenerate) {
    inst.alpha = round_to(rng.uniform(params.cost_min, params.cost_max), 2);
    inst.beta = round_to(rng.uniform(params.cost_min, params.cost_max), 2);
    inst.gamma = round_to(rng.uniform(params.cost_min, params.cost_max), 2);
    inst.delta = round_to(rng.uniform(params.cost_min, params.cost_max), 2);
    ensure_valid(inst);
    return inst;
  }

  for (int attempt = 0; attempt < 10000; ++attempt) {
    inst.alpha = round_to(rng.uniform(params.cost_min, params.cost_max), 2);
    double v0 = round_to(rng.uniform(params.cost_min, params.cost_max), 2);
    double v1 = round_to(rng.uniform(params.cost_min, params.cost_max), 2);
    double v2 = round_to(rng.uniform(params.cost_min, params.cost_max), 2);
    if (v0 > v1) std::swap(v0, v1);
    if (v1 > v2) std::swap(v1, v2);
    if (v0 > v1) std::swap(v0, v1);
    if (v0 == v1 || v1 == v2) continue;  // need strict gamma < delta < beta
    inst.gamma = v0;
    inst.delta = v1;
    inst.beta = v2;
    try {
      compute_kl(inst);
    } catch (const DegenerateCostConfig&) {
      continue;
    }
    ensure_valid(inst);
    return inst;
  }
  throw std::runtime_error(
      "could not draw a non-degenerate cost configuration in 10000 attempts");
}

}  // namespace slksched
