#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "slksched/cli.hpp"
#include "slksched/model.hpp"

using namespace slksched;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TempFile reference_file(const std::string& name) {
  return TempFile(name, serialize_instance(reference_instance()));
}

}  // namespace

TEST_CASE("help lists the subcommands") {
  const CliRun r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("solve") != std::string::npos);
  CHECK(r.out.find("evaluate") != std::string::npos);
  CHECK(r.out.find("oracle") != std::string::npos);
  CHECK(r.out.find("gen") != std::string::npos);
  CHECK(r.out.find("bench") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"solve"}).code == 1);
  CHECK(run({"solve", "x.json", "--format", "yaml"}).code == 1);
  CHECK(run({"gen"}).code == 1);  // --n is required
}

TEST_CASE("missing and malformed files exit with 1") {
  CHECK(run({"solve", "/no/such/file.json"}).code == 1);
  const TempFile bad("slksched-bad.json", "{\"a\": [1,");
  const CliRun r = run({"solve", bad.str()});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("degenerate cost configurations exit with 2") {
  const TempFile f("slksched-degenerate.json",
                   serialize_instance(
                       Instance::make({1, 2}, 0, 1, 1, 1, 1.5, 1, 0)));
  CHECK(run({"solve", f.str()}).code == 2);
  CHECK(run({"oracle", f.str()}).code == 2);
}

TEST_CASE("solve prints the reference optimum") {
  const TempFile f = reference_file("slksched-ref-1.json");
  const CliRun r = run({"solve", f.str()});
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 7 8 6 3 5 1 2 4 9") != std::string::npos);
  CHECK(r.out.find("maintenance: after position 1, [55.00, 70.50]") !=
        std::string::npos);
  CHECK(r.out.find("total cost: 17476.37") != std::string::npos);
}

TEST_CASE("solve --format json round trips through the solution schema") {
  const TempFile f = reference_file("slksched-ref-2.json");
  const CliRun r = run({"solve", f.str(), "--format", "json"});
  CHECK(r.code == 0);
  const Solution sol = parse_solution(r.out);
  CHECK(sol.schedule.order == std::vector<int>{7, 8, 6, 3, 5, 1, 2, 4, 9});
  CHECK(sol.schedule.maint_after == 1);
  CHECK(sol.windows.k == 2);
  CHECK(sol.windows.l == 5);
}

TEST_CASE("solve --trace reports one row per maintenance position") {
  const TempFile f = reference_file("slksched-ref-3.json");
  const CliRun r = run({"solve", f.str(), "--trace", "--format", "json"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("trace"));
  REQUIRE(j["trace"].size() == 9);
  CHECK(j["trace"][0]["maint_after"] == 1);
  CHECK(j["trace"][8]["maint_after"] == 9);
  const double first = j["trace"][0]["total_cost"].get<double>();
  CHECK(first == j["solution"]["total_cost"].get<double>());
}

TEST_CASE("solve runs identically across invocations") {
  const TempFile f = reference_file("slksched-ref-4.json");
  const CliRun r1 = run({"solve", f.str(), "--format", "json"});
  const CliRun r2 = run({"solve", f.str(), "--format", "json"});
  CHECK(r1.out == r2.out);
}

TEST_CASE("evaluate prices explicit windows") {
  const TempFile f("slksched-eval.json",
                   serialize_instance(
                       Instance::make({10, 20}, 0, 1, 4, 1, 1.2, 1, 0)));
  const CliRun r = run({"evaluate", f.str(), "--order", "1,2", "--maint-after",
                        "2", "--q1", "5", "--q2", "12", "--format", "json"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["total_cost"].get<double>() == doctest::Approx(61.8));
  CHECK(j["earliness_cost"].get<double>() == doctest::Approx(5.0));

  const CliRun d = run({"evaluate", f.str(), "--order", "1,2",
                        "--maint-after", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("54.00") != std::string::npos);
}

TEST_CASE("evaluate rejects half a window") {
  const TempFile f = reference_file("slksched-ref-5.json");
  CHECK(run({"evaluate", f.str(), "--order", "1,2,3,4,5,6,7,8,9",
             "--maint-after", "9", "--q1", "5"})
            .code == 1);
}

TEST_CASE("evaluate rejects a broken order") {
  const TempFile f = reference_file("slksched-ref-6.json");
  CHECK(run({"evaluate", f.str(), "--order", "1,1,3,4,5,6,7,8,9",
             "--maint-after", "9"})
            .code == 1);
  CHECK(run({"evaluate", f.str(), "--order", "1,2,3", "--maint-after", "3"})
            .code == 1);
}

TEST_CASE("oracle reports its enumeration") {
  const TempFile f("slksched-oracle.json",
                   serialize_instance(
                       Instance::make({3, 1, 4, 1}, 0.1, 2, 10, 1, 2, 1, 0.1)));
  const CliRun r = run({"oracle", f.str(), "--format", "json"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["enumerated"] == 24 * 4);
  CHECK(j["ties"].get<long long>() >= 1);
  CHECK(j["solution"]["total_cost"].get<double>() > 0.0);
}

TEST_CASE("oracle refuses large instances") {
  const TempFile f = reference_file("slksched-ref-7.json");
  CHECK(run({"oracle", f.str()}).code == 1);
}

TEST_CASE("gen is deterministic per seed and writes valid instances") {
  const std::vector<std::string> args = {"gen", "--n", "6", "--seed", "123"};
  const CliRun r1 = run(args);
  const CliRun r2 = run(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  const Instance inst = parse_instance(r1.out);
  CHECK(inst.n == 6);
  CHECK(inst.gamma < inst.delta);
  CHECK(inst.delta < inst.beta);

  const CliRun other = run({"gen", "--n", "6", "--seed", "124"});
  CHECK(other.out != r1.out);
}

TEST_CASE("gen writes to a file on request") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "slksched-gen-out.json")
          .string();
  const CliRun r = run({"gen", "--n", "4", "--seed", "5", "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const Instance inst = load_instance(path);
  CHECK(inst.n == 4);
  std::filesystem::remove(path);
}

TEST_CASE("gen --unconstrained draws free cost rates") {
  const CliRun r = run({"gen", "--n", "5", "--seed", "9", "--unconstrained"});
  CHECK(r.code == 0);
  CHECK_NOTHROW(parse_instance(r.out));
}

TEST_CASE("bench runs and reports a fit") {
  const CliRun r = run({"bench", "--sizes", "6,12", "--repeats", "1", "--seed",
                        "3", "--format", "json"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["records"].size() == 2);
  CHECK(j["records"][0]["n"] == 6);
  CHECK(j["records"][1]["n"] == 12);
  for (const auto& rec : j["records"]) {
    CHECK(rec["seconds"].get<double>() >= 0.0);
    CHECK(rec["total_cost"].get<double>() > 0.0);
  }
  CHECK(std::isfinite(j["exponent"].get<double>()));
}
