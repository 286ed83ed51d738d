#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace slksched {

struct BenchRecord {
  int n = 0;
  int repeat = 0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  double total_cost = 0.0;
};

struct BenchSummary {
  std::vector<BenchRecord> records;
  // Least-squares slope of log(seconds) over log(n), fitted on the fastest
  // repeat per size.
  double exponent = 0.0;
};

BenchSummary run_bench(const std::vector<int>& sizes, int repeats,
                       std::uint64_t seed, int threads = 1);

// Full command-line front end, callable in process. args excludes the program
// name. Exit codes: 0 success, 1 usage/input errors, 2 degenerate cost
// configuration, 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace slksched
