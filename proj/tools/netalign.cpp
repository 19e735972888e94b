#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "netalign/bp.hpp"
#include "netalign/gen.hpp"
#include "netalign/io.hpp"
#include "netalign/isorank.hpp"
#include "netalign/mr.hpp"

namespace {

using namespace netalign;

constexpr int kExitInvalidInput = 2;
constexpr int kExitSolverFailure = 3;
constexpr int kExitInfeasible = 4;

int env_threads() {
  const char* raw = std::getenv("NETALIGN_THREADS");
  if (!raw) return 1;
  const int n = std::atoi(raw);
  return n > 0 ? n : 1;
}

struct SolverFlags {
  std::string solver = "bp";
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = -1.0;  // negative: per-solver default
  int iters = -1;       // negative: per-solver default
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::string damping = "power";
  std::string mr_schedule = "constant";
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f, bool lists,
                      std::string* alpha_list, std::string* beta_list,
                      std::string* gamma_list) {
  cmd->add_option("--solver", f.solver, "bp, mr, or isorank")
      ->check(CLI::IsMember({"bp", "mr", "isorank"}));
  if (lists) {
    cmd->add_option("--alpha", *alpha_list, "comma-separated weight coefficients");
    cmd->add_option("--beta", *beta_list, "comma-separated overlap coefficients");
    cmd->add_option("--gamma", *gamma_list,
                    "comma-separated damping/step parameters");
  } else {
    cmd->add_option("--alpha", f.alpha, "weight coefficient");
    cmd->add_option("--beta", f.beta, "overlap coefficient");
    cmd->add_option("--gamma", f.gamma, "damping/step parameter");
  }
  cmd->add_option("--iters", f.iters, "iteration budget");
  cmd->add_option("--tol", f.tol, "convergence tolerance");
  cmd->add_option("--seed", f.seed, "seed recorded in the run configuration");
  cmd->add_option("--damping", f.damping, "bp damping mode")
      ->check(CLI::IsMember({"power", "constant"}));
  cmd->add_option("--mr-step-schedule", f.mr_schedule, "mr step-size schedule")
      ->check(CLI::IsMember({"constant", "halving"}));
}

double default_gamma(const std::string& solver) {
  if (solver == "bp") return 0.999;
  if (solver == "isorank") return 0.95;
  return 0.4;
}

int default_iters(const std::string& solver) { return solver == "mr" ? 1000 : 100; }

SolverConfig base_config(const SolverFlags& f) {
  SolverConfig cfg;
  cfg.alpha = f.alpha;
  cfg.beta = f.beta;
  cfg.gamma = f.gamma >= 0.0 ? f.gamma : default_gamma(f.solver);
  cfg.max_iters = f.iters > 0 ? f.iters : default_iters(f.solver);
  cfg.tolerance = f.tol;
  cfg.seed = f.seed;
  return cfg;
}

SolveReport run_one(const ProblemInstance& inst, const SolverFlags& f,
                    const std::vector<int>* truth) {
  const SolverConfig base = base_config(f);
  if (f.solver == "bp") {
    BpConfig cfg;
    cfg.base = base;
    cfg.damping =
        f.damping == "constant" ? DampingMode::kConstant : DampingMode::kPower;
    cfg.validate();
    return run_bp(inst, cfg, truth);
  }
  if (f.solver == "mr") {
    MrConfig cfg;
    cfg.base = base;
    cfg.schedule = f.mr_schedule == "halving" ? StepSchedule::kHalving
                                              : StepSchedule::kConstant;
    cfg.threads = env_threads();
    cfg.validate();
    return run_mr(inst, cfg, truth);
  }
  IsoRankConfig cfg;
  cfg.base = base;
  cfg.validate();
  return run_spaisorank(inst, cfg, truth);
}

std::vector<double> parse_list(const std::string& raw, const char* name) {
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) {
      throw InvalidInstanceError(std::string("bad value in --") + name + " list: " + item);
    }
  }
  if (out.empty()) {
    throw InvalidInstanceError(std::string("--") + name + " list is empty");
  }
  return out;
}

std::optional<std::vector<int>> load_truth(const InstanceBundle& bundle,
                                           const std::string& truth_flag) {
  if (!truth_flag.empty()) {
    auto t = read_edge_index_file(truth_flag);
    for (int e : t) {
      if (e < 0 || e >= bundle.instance.edge_count()) {
        throw ParseError("truth edge index out of range: " + std::to_string(e));
      }
    }
    return t;
  }
  return bundle.truth;
}

std::string summary_line(const SolveReport& report, double alpha, double beta,
                         double wall_seconds) {
  std::ostringstream os;
  os << "solver=" << report.solver
     << " best_objective=" << format_double(report.best.objective(alpha, beta))
     << " weight=" << format_double(report.best.weight)
     << " overlap=" << report.best.overlaps;
  if (report.has_upper()) {
    os << " best_upper=" << format_double(report.best_upper);
  }
  os << " iterations=" << report.iterations.size()
     << " termination=" << report.termination
     << " wall_time_s=" << format_double(wall_seconds);
  return os.str();
}

int cmd_generate(const std::string& type, const GridGenConfig& grid,
                 const PowerLawGenConfig& pl, const std::string& out_dir) {
  GeneratedInstance gen =
      type == "powerlaw" ? gen_powerlaw(pl) : gen_grid(grid);
  write_bundle(out_dir, gen.instance, &gen.truth);
  std::cout << "bundle=" << out_dir << "/bundle.json"
            << " edges=" << gen.instance.edge_count()
            << " squares=" << gen.instance.squares.square_count()
            << " truth=" << gen.truth.size() << "\n";
  return 0;
}

int cmd_solve(const std::string& bundle_path, const SolverFlags& flags,
              const std::string& truth_flag, const std::string& out_prefix) {
  InstanceBundle bundle = read_bundle(bundle_path);
  auto truth = load_truth(bundle, truth_flag);

  const auto start = std::chrono::steady_clock::now();
  SolveReport report =
      run_one(bundle.instance, flags, truth ? &*truth : nullptr);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (!out_prefix.empty()) {
    write_trace_csv(report, out_prefix + ".trace.csv");
    write_edge_index_file(out_prefix + ".solution.txt", report.best.selected);
  }
  std::cout << summary_line(report, flags.alpha, flags.beta, wall) << "\n";
  return 0;
}

int cmd_sweep(const std::string& bundle_path, SolverFlags flags,
              const std::string& alpha_list, const std::string& beta_list,
              const std::string& gamma_list, const std::string& truth_flag,
              const std::string& out_prefix) {
  InstanceBundle bundle = read_bundle(bundle_path);
  auto truth = load_truth(bundle, truth_flag);

  const auto alphas = parse_list(alpha_list, "alpha");
  const auto betas = parse_list(beta_list, "beta");
  const auto gammas = gamma_list.empty()
                          ? std::vector<double>{default_gamma(flags.solver)}
                          : parse_list(gamma_list, "gamma");

  struct Combo {
    SolverFlags flags;
    std::string trace_file;
    SolveReport report;
    bool failed = false;
    std::string error;
  };
  std::vector<Combo> combos;
  for (double a : alphas) {
    for (double b : betas) {
      for (double g : gammas) {
        Combo c;
        c.flags = flags;
        c.flags.alpha = a;
        c.flags.beta = b;
        c.flags.gamma = g;
        char idx[16];
        std::snprintf(idx, sizeof(idx), "%04zu", combos.size());
        c.trace_file = out_prefix + ".comb" + idx + ".trace.csv";
        combos.push_back(std::move(c));
      }
    }
  }
  // Validate every combination before any solver runs.
  for (const Combo& c : combos) base_config(c.flags).validate();

  const int workers =
      std::min<int>(env_threads(), static_cast<int>(combos.size()));
  std::mutex next_mutex;
  size_t next = 0;
  auto worker = [&]() {
    while (true) {
      size_t mine;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= combos.size()) return;
        mine = next++;
      }
      Combo& c = combos[mine];
      try {
        c.report = run_one(bundle.instance, c.flags, truth ? &*truth : nullptr);
        write_trace_csv(c.report, c.trace_file);
      } catch (const std::exception& e) {
        c.failed = true;
        c.error = e.what();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const Combo& c : combos) {
    if (c.failed) throw std::runtime_error("sweep combination failed: " + c.error);
  }

  std::ofstream out(out_prefix + ".summary.csv");
  if (!out) throw ParseError("cannot write " + out_prefix + ".summary.csv");
  out << "solver,alpha,beta,gamma,iters,damping,best_weight,best_overlap,"
         "best_objective,best_upper,best_recovery,trace_file\n";
  for (const Combo& c : combos) {
    const SolverConfig cfg = base_config(c.flags);
    out << c.flags.solver << ',' << format_double(cfg.alpha) << ','
        << format_double(cfg.beta) << ',' << format_double(cfg.gamma) << ','
        << cfg.max_iters << ',' << c.flags.damping << ','
        << format_double(c.report.best.weight) << ','
        << c.report.best.overlaps << ','
        << format_double(c.report.best.objective(cfg.alpha, cfg.beta)) << ','
        << (c.report.has_upper() ? format_double(c.report.best_upper)
                                 : std::string())
        << ','
        << (truth ? format_double(
                        recovery_fraction(c.report.best.selected, *truth))
                  : std::string())
        << ',' << c.trace_file << '\n';
  }
  std::cout << "combinations=" << combos.size() << " summary=" << out_prefix
            << ".summary.csv\n";
  return 0;
}

int cmd_eval(const std::string& bundle_path, const std::string& solution_path,
             double alpha, double beta, const std::string& truth_flag) {
  InstanceBundle bundle = read_bundle(bundle_path);
  auto truth = load_truth(bundle, truth_flag);
  auto selected = read_edge_index_file(solution_path);
  for (int e : selected) {
    if (e < 0 || e >= bundle.instance.edge_count()) {
      throw ParseError("solution edge index out of range: " + std::to_string(e));
    }
  }

  auto violations = feasibility_violations(bundle.instance.l, selected);
  if (!violations.empty()) {
    std::cout << "feasible=false\n";
    for (const auto& v : violations) {
      std::cout << "violation side=" << (v.a_side ? "A" : "B")
                << " vertex=" << v.vertex << " edges=";
      for (size_t i = 0; i < v.edges.size(); ++i) {
        std::cout << (i ? ";" : "") << v.edges[i];
      }
      std::cout << "\n";
    }
    return kExitInfeasible;
  }

  auto sol = evaluate_solution(bundle.instance, selected, {"eval", 0, ""});
  std::cout << "feasible=true weight=" << format_double(sol.weight)
            << " overlap=" << sol.overlaps
            << " objective=" << format_double(sol.objective(alpha, beta));
  if (truth && !truth->empty()) {
    auto truth_sol = evaluate_solution(bundle.instance, *truth, {"truth", 0, ""});
    const double ratio =
        sol.objective(alpha, beta) / truth_sol.objective(alpha, beta);
    std::cout << " recovery=" << format_double(
                     recovery_fraction(sol.selected, *truth))
              << " objective_ratio=" << format_double(ratio);
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse network alignment: BP, matching relaxation, and "
               "IsoRank solvers over candidate-match bundles"};
  app.require_subcommand(1);

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic instance bundle");
  std::string gen_type = "grid";
  GridGenConfig grid;
  PowerLawGenConfig pl;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  double gen_noise = 0.0, gen_q = 0.0;
  gen_cmd->add_option("--type", gen_type, "grid or powerlaw")
      ->check(CLI::IsMember({"grid", "powerlaw"}));
  gen_cmd->add_option("--k", grid.k, "grid side");
  gen_cmd->add_option("--n", pl.n, "power-law vertex count");
  gen_cmd->add_option("--theta", pl.theta, "power-law exponent");
  gen_cmd->add_option("--mean-degree", pl.mean_degree, "power-law mean degree");
  gen_cmd->add_option("--noise", gen_noise, "expected uniform noise degree");
  gen_cmd->add_option("--q", gen_q, "graph perturbation strength");
  gen_cmd->add_option("--d", grid.d, "grid locality radius for local noise");
  gen_cmd->add_option("--local-noise-p", grid.local_noise_p,
                      "probability per local candidate edge");
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--out", gen_out, "output bundle directory")->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run one solver on a bundle");
  SolverFlags solve_flags;
  std::string solve_bundle, solve_truth, solve_out;
  solve_cmd->add_option("--bundle", solve_bundle, "bundle manifest path")
      ->required();
  add_solver_flags(solve_cmd, solve_flags, false, nullptr, nullptr, nullptr);
  solve_cmd->add_option("--truth", solve_truth, "truth file overriding the bundle");
  solve_cmd->add_option("--out", solve_out, "output prefix for trace and solution");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "cartesian parameter sweep");
  SolverFlags sweep_flags;
  std::string sweep_bundle, sweep_truth, sweep_out;
  std::string sweep_alpha = "1", sweep_beta = "1", sweep_gamma;
  sweep_cmd->add_option("--bundle", sweep_bundle, "bundle manifest path")
      ->required();
  add_solver_flags(sweep_cmd, sweep_flags, true, &sweep_alpha, &sweep_beta,
                   &sweep_gamma);
  sweep_cmd->add_option("--truth", sweep_truth, "truth file overriding the bundle");
  sweep_cmd->add_option("--out", sweep_out, "output prefix")->required();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "score a solution file");
  std::string eval_bundle, eval_solution, eval_truth;
  double eval_alpha = 1.0, eval_beta = 1.0;
  eval_cmd->add_option("--bundle", eval_bundle, "bundle manifest path")
      ->required();
  eval_cmd->add_option("--solution", eval_solution, "solution file")->required();
  eval_cmd->add_option("--alpha", eval_alpha, "weight coefficient");
  eval_cmd->add_option("--beta", eval_beta, "overlap coefficient");
  eval_cmd->add_option("--truth", eval_truth, "truth file overriding the bundle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (gen_cmd->parsed()) {
      grid.noise_expected_degree = gen_noise;
      grid.q = gen_q;
      grid.seed = gen_seed;
      pl.noise_expected_degree = gen_noise;
      pl.q = gen_q;
      pl.seed = gen_seed;
      (gen_type == "powerlaw" ? pl.validate() : grid.validate());
      return cmd_generate(gen_type, grid, pl, gen_out);
    }
    if (solve_cmd->parsed()) {
      base_config(solve_flags).validate();
      try {
        return cmd_solve(solve_bundle, solve_flags, solve_truth, solve_out);
      } catch (const ParseError&) {
        throw;
      } catch (const InvalidInstanceError&) {
        throw;
      } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
      }
    }
    if (sweep_cmd->parsed()) {
      try {
        return cmd_sweep(sweep_bundle, sweep_flags, sweep_alpha, sweep_beta,
                         sweep_gamma, sweep_truth, sweep_out);
      } catch (const ParseError&) {
        throw;
      } catch (const InvalidInstanceError&) {
        throw;
      } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
      }
    }
    if (eval_cmd->parsed()) {
      return cmd_eval(eval_bundle, eval_solution, eval_alpha, eval_beta,
                      eval_truth);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return 0;
}
