#include "slksched/model.hpp"

#include <fstream>
#include <sstream>

namespace slksched {
namespace {

using nlohmann::json;

std::string positions_of(const std::vector<double>& v,
                         bool (*bad)(double x)) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (bad(v[i])) {
      if (!out.empty()) out += ", ";
      out += std::to_string(i + 1);
    }
  }
  return out;
}

// Comparisons are written so NaN counts as a violation.
bool neg(double x) { return !(x >= 0.0); }

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1;
  int col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing field '" + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) throw ParseError("field '" + key + "': expected a number");
  return v.get<double>();
}

}  // namespace

std::vector<ValidationIssue> validate_instance(const Instance& inst) {
  std::vector<ValidationIssue> issues;
  if (inst.n == 0) {
    issues.push_back({ValidationCode::EmptyJobSet, "n = 0"});
  }
  if (inst.n < 0) {
    issues.push_back({ValidationCode::EmptyJobSet,
                      "n = " + std::to_string(inst.n) + " is negative"});
  }
  if (static_cast<size_t>(std::max(inst.n, 0)) != inst.a.size()) {
    issues.push_back({ValidationCode::LengthMismatch,
                      "n = " + std::to_string(inst.n) + " but a has " +
                          std::to_string(inst.a.size()) + " entries"});
  }

  const std::string bad_a = positions_of(inst.a, neg);
  if (!bad_a.empty()) {
    issues.push_back(
        {ValidationCode::NegativeTime, "a < 0 at job(s) " + bad_a});
  }
  if (neg(inst.b)) {
    issues.push_back({ValidationCode::NegativeTime, "b < 0"});
  }
  if (neg(inst.sigma)) {
    issues.push_back({ValidationCode::NegativeTime, "sigma < 0"});
  }
  if (!(inst.mu > 0.0)) {
    issues.push_back({ValidationCode::NegativeTime, "mu <= 0"});
  }

  const std::pair<const char*, double> rates[] = {{"alpha", inst.alpha},
                                                  {"beta", inst.beta},
                                                  {"gamma", inst.gamma},
                                                  {"delta", inst.delta}};
  for (const auto& [name, value] : rates) {
    if (!(value > 0.0)) {
      issues.push_back(
          {ValidationCode::NonPositiveCost, std::string(name) + " <= 0"});
    }
  }
  return issues;
}

void ensure_valid(const Instance& inst) {
  auto issues = validate_instance(inst);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

void ensure_permutation(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw InvalidPermutation("invalid permutation: expected " +
                             std::to_string(n) + " entries, got " +
                             std::to_string(order.size()));
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int id : order) {
    if (id < 1 || id > n) {
      throw InvalidPermutation("invalid permutation: job id " +
                               std::to_string(id) + " out of 1.." +
                               std::to_string(n));
    }
    if (seen[static_cast<size_t>(id - 1)]) {
      throw InvalidPermutation("invalid permutation: job id " +
                               std::to_string(id) + " repeated");
    }
    seen[static_cast<size_t>(id - 1)] = 1;
  }
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a top-level object");

  static const char* known[] = {"a",     "b",     "alpha", "beta",
                                "gamma", "delta", "mu",    "sigma"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* key : known) ok = ok || it.key() == key;
    if (!ok) throw ParseError("unknown field '" + it.key() + "'");
  }

  if (!j.contains("a")) throw ParseError("missing field 'a'");
  const json& a = j.at("a");
  if (!a.is_array()) throw ParseError("field 'a': expected an array of numbers");
  std::vector<double> normal_times;
  normal_times.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number()) {
      throw ParseError("field 'a', entry " + std::to_string(i + 1) +
                       ": expected a number");
    }
    normal_times.push_back(a[i].get<double>());
  }

  Instance inst = Instance::make(
      std::move(normal_times), require_number(j, "b"),
      require_number(j, "alpha"), require_number(j, "beta"),
      require_number(j, "gamma"), require_number(j, "delta"),
      require_number(j, "mu"), require_number(j, "sigma"));
  ensure_valid(inst);
  return inst;
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("line " + std::to_string(line) + ", col " +
                     std::to_string(col) + ": " + e.what());
  }
  return instance_from_json(j);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

json instance_to_json(const Instance& inst) {
  json j;
  j["a"] = inst.a;
  j["b"] = inst.b;
  j["alpha"] = inst.alpha;
  j["beta"] = inst.beta;
  j["gamma"] = inst.gamma;
  j["delta"] = inst.delta;
  j["mu"] = inst.mu;
  j["sigma"] = inst.sigma;
  return j;
}

std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

json solution_to_json(const Solution& sol) {
  json j;
  j["order"] = sol.schedule.order;
  j["maint_after"] = sol.schedule.maint_after;
  j["windows"] = {{"k", sol.windows.k},
                  {"l", sol.windows.l},
                  {"q1", sol.windows.q1},
                  {"q2", sol.windows.q2},
                  {"D", sol.windows.D}};
  if (sol.timeline.maint_start.has_value()) {
    j["maintenance"] = {{"start", *sol.timeline.maint_start},
                        {"end", *sol.timeline.maint_end}};
  } else {
    j["maintenance"] = nullptr;
  }
  j["timeline"] = {{"start", sol.timeline.start},
                   {"p_actual", sol.timeline.p_actual},
                   {"completion", sol.timeline.completion},
                   {"makespan", sol.timeline.makespan}};
  j["earliness"] = sol.earliness;
  j["tardiness"] = sol.tardiness;
  j["fixed_cost"] = sol.fixed_cost;
  j["total_cost"] = sol.total_cost;
  return j;
}

Solution solution_from_json(const json& j) {
  Solution sol;
  sol.schedule.order = j.at("order").get<std::vector<int>>();
  sol.schedule.maint_after = j.at("maint_after").get<int>();
  const json& w = j.at("windows");
  sol.windows.k = w.at("k").get<int>();
  sol.windows.l = w.at("l").get<int>();
  sol.windows.q1 = w.at("q1").get<double>();
  sol.windows.q2 = w.at("q2").get<double>();
  sol.windows.D = w.at("D").get<double>();
  const json& m = j.at("maintenance");
  if (!m.is_null()) {
    sol.timeline.maint_start = m.at("start").get<double>();
    sol.timeline.maint_end = m.at("end").get<double>();
  }
  const json& t = j.at("timeline");
  sol.timeline.start = t.at("start").get<std::vector<double>>();
  sol.timeline.p_actual = t.at("p_actual").get<std::vector<double>>();
  sol.timeline.completion = t.at("completion").get<std::vector<double>>();
  sol.timeline.makespan = t.at("makespan").get<double>();
  sol.earliness = j.at("earliness").get<std::vector<double>>();
  sol.tardiness = j.at("tardiness").get<std::vector<double>>();
  sol.fixed_cost = j.at("fixed_cost").get<double>();
  sol.total_cost = j.at("total_cost").get<double>();
  return sol;
}

std::string serialize_solution(const Solution& sol) {
  return solution_to_json(sol).dump(2) + "\n";
}

Solution parse_solution(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    return solution_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed solution: ") + e.what());
  }
}

}  // namespace slksched
