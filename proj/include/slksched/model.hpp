#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "slksched/types.hpp"

namespace slksched {

// Checks every constraint and returns the complete list of violations;
// an empty list means the instance is valid.
std::vector<ValidationIssue> validate_instance(const Instance& inst);

// Throws ValidationError carrying all violations at once.
void ensure_valid(const Instance& inst);

// Throws InvalidPermutation unless order is a permutation of 1..n.
void ensure_permutation(const std::vector<int>& order, int n);

// Instance files are JSON objects with exactly the keys
//   a (array of numbers), b, alpha, beta, gamma, delta, mu, sigma.
// n is implicit as the length of a; unknown keys are rejected.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::filesystem::path& path);
std::string serialize_instance(const Instance& inst);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& j);
std::string serialize_solution(const Solution& sol);
Solution parse_solution(const std::string& text);

}  // namespace slksched
