#include "slksched/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "slksched/evaluator.hpp"
#include "slksched/generator.hpp"
#include "slksched/model.hpp"
#include "slksched/oracle.hpp"
#include "slksched/solver.hpp"
#include "slksched/weights.hpp"

namespace slksched {
namespace {

std::string fmt2(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  return os.str();
}

void print_order(std::ostream& os, const std::vector<int>& order) {
  for (size_t r = 0; r < order.size(); ++r) {
    if (r) os << ' ';
    os << order[r];
  }
}

void print_solution_text(std::ostream& out, const Solution& sol) {
  out << "order: ";
  print_order(out, sol.schedule.order);
  out << "\n";
  if (sol.timeline.maint_start.has_value()) {
    out << "maintenance: after position " << sol.schedule.maint_after << ", ["
        << fmt2(*sol.timeline.maint_start) << ", "
        << fmt2(*sol.timeline.maint_end) << "]\n";
  } else {
    out << "maintenance: none\n";
  }
  out << "windows: q1 = " << fmt2(sol.windows.q1)
      << ", q2 = " << fmt2(sol.windows.q2) << ", D = " << fmt2(sol.windows.D);
  if (sol.windows.k >= 0) {
    out << " (k = " << sol.windows.k << ", l = " << sol.windows.l << ")";
  }
  out << "\n";
  out << "makespan: " << fmt2(sol.timeline.makespan) << "\n";
  out << "total cost: " << fmt2(sol.total_cost) << "\n";
}

int cmd_solve(const std::string& file, bool trace, const std::string& format,
              int threads, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(file);
  const Solution sol = solve(inst, SolveOptions{threads});

  // The solver's cost comes out of the positional-weight algebra; recompute it
  // from scratch off the realized timeline before reporting anything.
  const CostBreakdown check =
      breakdown_from_timeline(inst, sol.timeline, sol.windows.q1, sol.windows.q2);
  if (!rel_close(check.total, sol.total_cost)) {
    err << "internal error: weight algebra cost " << sol.total_cost
        << " disagrees with direct evaluation " << check.total << "\n";
    return 3;
  }

  std::vector<LocalResult> rows;
  if (trace) {
    const KL kl = compute_kl(inst);
    rows.reserve(static_cast<size_t>(inst.n));
    for (int i = 1; i <= inst.n; ++i) {
      rows.push_back(solve_for_position(inst, i, kl.k, kl.l));
    }
  }

  if (format == "json") {
    if (trace) {
      nlohmann::json j;
      j["solution"] = solution_to_json(sol);
      j["trace"] = nlohmann::json::array();
      for (const LocalResult& row : rows) {
        j["trace"].push_back({{"maint_after", row.maint_after},
                              {"order", row.order},
                              {"total_cost", row.total_cost}});
      }
      out << j.dump(2) << "\n";
    } else {
      out << serialize_solution(sol);
    }
    return 0;
  }

  print_solution_text(out, sol);
  if (trace) {
    out << "\nbest cost per maintenance position:\n";
    for (const LocalResult& row : rows) {
      out << std::setw(3) << row.maint_after << "  " << std::setw(12)
          << fmt2(row.total_cost) << "  ";
      print_order(out, row.order);
      out << "\n";
    }
  }
  return 0;
}

int cmd_evaluate(const std::string& file, const std::vector<int>& order,
                 int maint_after, bool have_q, double q1, double q2,
                 const std::string& format, std::ostream& out) {
  const Instance inst = load_instance(file);
  const Schedule sched{order, maint_after};
  WindowParams windows;
  if (have_q) {
    windows.q1 = q1;
    windows.q2 = q2;
    windows.D = q2 - q1;
  } else {
    const KL kl = compute_kl(inst);
    windows = windows_from_schedule(inst, sched, kl.k, kl.l);
  }
  const CostBreakdown bd = cost_direct(inst, sched, windows);

  if (format == "json") {
    nlohmann::json j;
    j["q1"] = windows.q1;
    j["q2"] = windows.q2;
    j["d1"] = bd.d1;
    j["d2"] = bd.d2;
    j["earliness"] = bd.earliness;
    j["tardiness"] = bd.tardiness;
    j["earliness_cost"] = bd.earliness_cost;
    j["tardiness_cost"] = bd.tardiness_cost;
    j["window_location_cost"] = bd.window_location_cost;
    j["window_size_cost"] = bd.window_size_cost;
    j["total_cost"] = bd.total;
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "q1 = " << fmt2(windows.q1) << ", q2 = " << fmt2(windows.q2) << "\n";
  out << "earliness cost:        " << fmt2(bd.earliness_cost) << "\n";
  out << "tardiness cost:        " << fmt2(bd.tardiness_cost) << "\n";
  out << "window location cost:  " << fmt2(bd.window_location_cost) << "\n";
  out << "window size cost:      " << fmt2(bd.window_size_cost) << "\n";
  out << "total cost:            " << fmt2(bd.total) << "\n";
  return 0;
}

int cmd_oracle(const std::string& file, int cap, const std::string& format,
               std::ostream& out) {
  const Instance inst = load_instance(file);
  const OracleResult r = brute_force_solve(inst, cap);

  if (format == "json") {
    nlohmann::json j;
    j["enumerated"] = r.enumerated;
    j["ties"] = r.ties;
    j["solution"] = solution_to_json(r.best);
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "enumerated: " << r.enumerated << " (order, maintenance) candidates\n";
  out << "ties within 1e-9 of the optimum: " << r.ties << "\n";
  print_solution_text(out, r.best);
  return 0;
}

int cmd_gen(const GenParams& params, const std::string& outfile,
            std::ostream& out) {
  const Instance inst = generate_instance(params);
  const std::string text = serialize_instance(inst);
  if (outfile.empty()) {
    out << text;
  } else {
    std::ofstream f(outfile, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + outfile + " for writing");
    f << text;
  }
  return 0;
}

int cmd_bench(const std::vector<int>& sizes, int repeats, std::uint64_t seed,
              int threads, const std::string& format, std::ostream& out) {
  const BenchSummary s = run_bench(sizes, repeats, seed, threads);

  if (format == "json") {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const BenchRecord& r : s.records) {
      j["records"].push_back({{"n", r.n},
                              {"repeat", r.repeat},
                              {"seed", r.seed},
                              {"seconds", r.seconds},
                              {"total_cost", r.total_cost}});
    }
    j["exponent"] = s.exponent;
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "    n  repeat      seconds          cost\n";
  for (const BenchRecord& r : s.records) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(6) << r.seconds;
    out << std::setw(5) << r.n << "  " << std::setw(6) << r.repeat << "  "
        << std::setw(11) << secs.str() << "  " << std::setw(12)
        << fmt2(r.total_cost) << "\n";
  }
  std::ostringstream exp;
  exp << std::fixed << std::setprecision(3) << s.exponent;
  out << "fitted exponent: " << exp.str() << "\n";
  return 0;
}

}  // namespace

BenchSummary run_bench(const std::vector<int>& sizes, int repeats,
                       std::uint64_t seed, int threads) {
  if (sizes.empty()) throw std::invalid_argument("bench needs at least one size");
  if (repeats < 1) throw std::invalid_argument("bench needs at least one repeat");
  for (int n : sizes) {
    if (n < 1) throw std::invalid_argument("bench sizes must be positive");
  }

  const SolveOptions opts{threads};
  {
    // Warm-up run so the first timed record does not pay one-time costs.
    GenParams warm;
    warm.n = std::min(sizes.front(), 64);
    warm.seed = seed;
    warm.b_max = std::min(0.2, 1.0 / warm.n);
    solve(generate_instance(warm), opts);
  }

  BenchSummary summary;
  for (int n : sizes) {
    for (int rep = 1; rep <= repeats; ++rep) {
      GenParams p;
      p.n = n;
      p.seed = seed + 0x9e3779b9ULL * static_cast<std::uint64_t>(n) +
               static_cast<std::uint64_t>(rep);
      // Deterioration compounds as (1+b)^n; keep n*b bounded so large sizes
      // stay in a realistic numeric range.
      p.b_max = std::min(0.2, 1.0 / n);
      const Instance inst = generate_instance(p);
      const auto t0 = std::chrono::steady_clock::now();
      const Solution sol = solve(inst, opts);
      const auto t1 = std::chrono::steady_clock::now();
      BenchRecord r;
      r.n = n;
      r.repeat = rep;
      r.seed = p.seed;
      r.seconds = std::chrono::duration<double>(t1 - t0).count();
      r.total_cost = sol.total_cost;
      summary.records.push_back(r);
    }
  }

  std::map<int, double> fastest;
  for (const BenchRecord& r : summary.records) {
    auto it = fastest.find(r.n);
    if (it == fastest.end() || r.seconds < it->second) fastest[r.n] = r.seconds;
  }
  if (fastest.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(fastest.size());
    for (const auto& [n, t] : fastest) {
      const double x = std::log(static_cast<double>(n));
      const double y = std::log(std::max(t, 1e-9));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    summary.exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return summary;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Single-machine scheduling with linear deterioration, one optional "
      "maintenance activity, and slack due-window assignment"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand(
      "solve", "Find a minimum-cost schedule, maintenance position, and windows");
  std::string solve_file;
  bool solve_trace = false;
  std::string solve_format = "text";
  int solve_threads = 1;
  solve_cmd->add_option("file", solve_file, "instance JSON file")->required();
  solve_cmd->add_flag("--trace", solve_trace,
                      "also report the best schedule for every maintenance position");
  solve_cmd->add_option("--format", solve_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_option("--threads", solve_threads, "worker threads")
      ->check(CLI::PositiveNumber);

  auto* eval_cmd = app.add_subcommand(
      "evaluate", "Price a given schedule, with derived or explicit windows");
  std::string eval_file;
  std::vector<int> eval_order;
  int eval_maint = 0;
  double eval_q1 = 0.0, eval_q2 = 0.0;
  std::string eval_format = "text";
  eval_cmd->add_option("file", eval_file, "instance JSON file")->required();
  eval_cmd->add_option("--order", eval_order, "job ids in processing order")
      ->required()
      ->delimiter(',');
  eval_cmd
      ->add_option("--maint-after", eval_maint,
                   "maintenance position (n means no maintenance)")
      ->required();
  auto* q1_opt = eval_cmd->add_option("--q1", eval_q1, "window start constant");
  auto* q2_opt = eval_cmd->add_option("--q2", eval_q2, "window close constant");
  q1_opt->needs(q2_opt);
  q2_opt->needs(q1_opt);
  eval_cmd->add_option("--format", eval_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Exhaustive reference search over all orders and positions");
  std::string oracle_file;
  int oracle_cap = 8;
  std::string oracle_format = "text";
  oracle_cmd->add_option("file", oracle_file, "instance JSON file")->required();
  oracle_cmd->add_option("--cap", oracle_cap, "largest n the oracle accepts")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--format", oracle_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* gen_cmd =
      app.add_subcommand("gen", "Generate a random instance deterministically");
  GenParams gp;
  std::string gen_outfile;
  gen_cmd->add_option("--n", gp.n, "job count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gp.seed, "random seed");
  gen_cmd->add_option("--a-min", gp.a_min, "normal time lower bound");
  gen_cmd->add_option("--a-max", gp.a_max, "normal time upper bound");
  gen_cmd->add_option("--b-min", gp.b_min, "deterioration rate lower bound");
  gen_cmd->add_option("--b-max", gp.b_max, "deterioration rate upper bound");
  gen_cmd->add_option("--mu-min", gp.mu_min, "basic maintenance time lower bound");
  gen_cmd->add_option("--mu-max", gp.mu_max, "basic maintenance time upper bound");
  gen_cmd->add_option("--sigma-min", gp.sigma_min,
                      "maintenance deterioration lower bound");
  gen_cmd->add_option("--sigma-max", gp.sigma_max,
                      "maintenance deterioration upper bound");
  gen_cmd->add_option("--cost-min", gp.cost_min, "cost rate lower bound");
  gen_cmd->add_option("--cost-max", gp.cost_max, "cost rate upper bound");
  gen_cmd->add_flag("--unconstrained", gp.allow_degenerate,
                    "draw cost rates independently, allowing configurations "
                    "the solver rejects");
  gen_cmd->add_option("-o,--output", gen_outfile, "write to file instead of stdout");

  auto* bench_cmd = app.add_subcommand(
      "bench", "Time the solver on generated instances of growing size");
  std::vector<int> bench_sizes = {500, 1000, 2000, 4000};
  int bench_repeats = 3;
  std::uint64_t bench_seed = 1;
  int bench_threads = 1;
  std::string bench_format = "text";
  bench_cmd->add_option("--sizes", bench_sizes, "instance sizes")->delimiter(',');
  bench_cmd->add_option("--repeats", bench_repeats, "runs per size")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "random seed");
  bench_cmd->add_option("--threads", bench_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", bench_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("slksched");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (solve_cmd->parsed()) {
      return cmd_solve(solve_file, solve_trace, solve_format, solve_threads,
                       out, err);
    }
    if (eval_cmd->parsed()) {
      const bool have_q = q1_opt->count() > 0;
      return cmd_evaluate(eval_file, eval_order, eval_maint, have_q, eval_q1,
                          eval_q2, eval_format, out);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle(oracle_file, oracle_cap, oracle_format, out);
    }
    if (gen_cmd->parsed()) {
      return cmd_gen(gp, gen_outfile, out);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench_sizes, bench_repeats, bench_seed, bench_threads,
                       bench_format, out);
    }
    err << "error: no subcommand\n";
    return 1;
  } catch (const DegenerateCostConfig& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace slksched
