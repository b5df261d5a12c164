#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "branchmc.h"

namespace {

struct RunConfig {
  std::string problem;
  int dim = 1;
  double t = 1.0;
  double beta = 1.0;
  double x0_start = 0.0, x0_end = 0.0;
  int x0_steps = 0;
  std::vector<double> xs;
  long long paths = 1 << 20;
  uint64_t seed = 1;
  int threads = 1;
  long long node_cap = 1000000;
  std::string out_path;
  bool strict_moment = false;
  double p_order = 2.0;
  double x0_single = 0.0;
};

void apply_env(RunConfig& cfg) {
  if (const char* s = std::getenv("BRANCHMC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v > 0)
      cfg.threads = static_cast<int>(v);
    else
      std::fprintf(stderr, "warning: ignoring BRANCHMC_THREADS=%s\n", s);
  }
  if (const char* s = std::getenv("BRANCHMC_NODE_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0)
      cfg.node_cap = v;
    else
      std::fprintf(stderr, "warning: ignoring BRANCHMC_NODE_CAP=%s\n", s);
  }
}

std::vector<double> grid_points(const RunConfig& cfg) {
  if (!cfg.xs.empty()) return cfg.xs;
  std::vector<double> pts;
  if (cfg.x0_steps == 1) {
    pts.push_back(cfg.x0_start);
    return pts;
  }
  for (int i = 0; i < cfg.x0_steps; ++i)
    pts.push_back(cfg.x0_start + i * (cfg.x0_end - cfg.x0_start) / (cfg.x0_steps - 1));
  return pts;
}

bmc_problem* open_problem(const RunConfig& cfg) {
  bmc_problem* p = nullptr;
  if (bmc_problem_create(cfg.problem.c_str(), cfg.dim, &p) != BMC_OK) {
    std::fprintf(stderr, "error: %s\n", bmc_last_error());
    return nullptr;
  }
  if (bmc_problem_set_beta(p, cfg.beta) != BMC_OK) {
    std::fprintf(stderr, "error: %s\n", bmc_last_error());
    bmc_problem_destroy(p);
    return nullptr;
  }
  return p;
}

int cmd_solve(const RunConfig& cfg) {
  bmc_problem* p = open_problem(cfg);
  if (!p) return 2;

  bool moment_ok = true;
  bmc_moment_report rep{};
  if (bmc_moment_check(p, cfg.t, cfg.p_order, &rep) == BMC_OK && rep.has_bound && !rep.pass) {
    moment_ok = false;
    std::fprintf(stderr,
                 "%s: moment bound certifies horizons up to t = %g only (requested t = %g)\n",
                 cfg.strict_moment ? "error" : "warning", rep.t_max, cfg.t);
    if (cfg.strict_moment) {
      bmc_problem_destroy(p);
      return 3;
    }
  }

  std::FILE* out = stdout;
  if (!cfg.out_path.empty()) {
    out = std::fopen(cfg.out_path.c_str(), "w");
    if (!out) {
      std::fprintf(stderr, "error: cannot open %s\n", cfg.out_path.c_str());
      bmc_problem_destroy(p);
      return 2;
    }
  }

  std::fprintf(out, "x0,t,mean_re,mean_im,stderr_re,stderr_im,exact_re,exact_im,n_paths,n_blowups\n");
  bool any_flagged = false;
  int rc = 0;
  std::vector<double> coords(static_cast<size_t>(cfg.dim));
  for (double x0 : grid_points(cfg)) {
    for (auto& c : coords) c = x0;
    bmc_estimate est{};
    if (bmc_solve(p, cfg.t, coords.data(), cfg.paths, cfg.seed, cfg.threads,
                  cfg.node_cap, &est) != BMC_OK) {
      std::fprintf(stderr, "error: %s\n", bmc_last_error());
      rc = 2;
      break;
    }
    char exact_re[32] = "", exact_im[32] = "";
    if (bmc_problem_has_exact(p)) {
      double er = 0.0, ei = 0.0;
      if (bmc_problem_exact(p, cfg.t, coords.data(), &er, &ei) == BMC_OK) {
        std::snprintf(exact_re, sizeof(exact_re), "%.17g", er);
        std::snprintf(exact_im, sizeof(exact_im), "%.17g", ei);
      }
    }
    std::fprintf(out, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%s,%lld,%lld\n",
                 x0, cfg.t, est.mean_re, est.mean_im, est.stderr_re, est.stderr_im,
                 exact_re, exact_im, est.n_paths, est.n_blowups);
    if (est.n_blowups > 0) any_flagged = true;
  }

  if (out != stdout) std::fclose(out);
  bmc_problem_destroy(p);
  if (rc != 0) return rc;
  if (any_flagged) return 1;
  if (cfg.strict_moment && !moment_ok) return 3;
  return 0;
}

int cmd_check_moment(const RunConfig& cfg) {
  bmc_problem* p = open_problem(cfg);
  if (!p) return 2;
  bmc_moment_report rep{};
  if (bmc_moment_check(p, cfg.t, cfg.p_order, &rep) != BMC_OK) {
    std::fprintf(stderr, "error: %s\n", bmc_last_error());
    bmc_problem_destroy(p);
    return 2;
  }
  bmc_problem_destroy(p);
  if (!rep.has_bound) {
    std::printf("problem %s carries no growth bound: any horizon is admissible\n",
                cfg.problem.c_str());
    return 0;
  }
  std::printf("problem      %s (dim %d)\n", cfg.problem.c_str(), cfg.dim);
  std::printf("moment order %g\n", cfg.p_order);
  std::printf("r_p          %.17g\n", rep.r_p);
  std::printf("alpha_p      %.17g\n", rep.alpha_p);
  std::printf("t_max        %.17g\n", rep.t_max);
  std::printf("requested t  %.17g -> %s\n", cfg.t, rep.pass ? "PASS" : "FAIL");
  return rep.pass ? 0 : 1;
}

int cmd_tree_dump(const RunConfig& cfg) {
  bmc_problem* p = open_problem(cfg);
  if (!p) return 2;
  std::vector<double> coords(static_cast<size_t>(cfg.dim), cfg.x0_single);
  std::vector<char> buf(1 << 20);
  size_t need = 0;
  int rc = bmc_tree_dump(p, cfg.t, coords.data(), cfg.seed, cfg.node_cap,
                         buf.data(), buf.size(), &need);
  if (rc == BMC_ERR_BUFFER) {
    buf.resize(need + 1);
    rc = bmc_tree_dump(p, cfg.t, coords.data(), cfg.seed, cfg.node_cap,
                       buf.data(), buf.size(), &need);
  }
  bmc_problem_destroy(p);
  if (rc != BMC_OK) {
    std::fprintf(stderr, "error: %s\n", bmc_last_error());
    return 2;
  }
  std::fputs(buf.data(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo solver for semilinear Cauchy problems via branching walks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub, bool with_beta = true) {
    sub->add_option("--problem", cfg.problem, "problem name")->required();
    sub->add_option("--dim", cfg.dim, "spatial dimension");
    sub->add_option("--t", cfg.t, "time horizon")->required();
    if (with_beta) sub->add_option("--beta", cfg.beta, "branching rate");
  };

  CLI::App* solve = app.add_subcommand("solve", "estimate the solution on a grid of points");
  add_common(solve);
  solve->add_option("--x0-start", cfg.x0_start, "first grid point (all coordinates equal)");
  solve->add_option("--x0-end", cfg.x0_end, "last grid point");
  solve->add_option("--x0-steps", cfg.x0_steps, "number of grid points");
  solve->add_option("--x", cfg.xs, "explicit grid point, repeatable");
  solve->add_option("--paths", cfg.paths, "Monte-Carlo paths per point");
  solve->add_option("--seed", cfg.seed, "RNG seed");
  solve->add_option("--threads", cfg.threads, "worker threads (BRANCHMC_THREADS overrides)");
  solve->add_option("--node-cap", cfg.node_cap, "tree size cap (BRANCHMC_NODE_CAP overrides)");
  solve->add_option("--out", cfg.out_path, "CSV output path (default stdout)");
  solve->add_flag("--strict-moment-check", cfg.strict_moment,
                  "fail instead of warning when the growth bound does not cover t");

  CLI::App* check = app.add_subcommand("check-moment", "report the certified horizon t_max");
  add_common(check);
  check->add_option("--p", cfg.p_order, "moment order (default 2)");

  CLI::App* dump = app.add_subcommand("tree-dump", "grow one tree and print it");
  add_common(dump);
  dump->add_option("--x0", cfg.x0_single, "evaluation point (all coordinates equal)");
  dump->add_option("--seed", cfg.seed, "RNG seed");
  dump->add_option("--node-cap", cfg.node_cap, "tree size cap (BRANCHMC_NODE_CAP overrides)");

  CLI11_PARSE(app, argc, argv);
  apply_env(cfg);

  if (solve->parsed()) {
    bool grid = cfg.x0_steps > 0;
    bool pts = !cfg.xs.empty();
    if (grid == pts) {
      std::fprintf(stderr, "error: give either --x0-start/--x0-end/--x0-steps or --x\n");
      return 2;
    }
    return cmd_solve(cfg);
  }
  if (check->parsed()) return cmd_check_moment(cfg);
  if (dump->parsed()) return cmd_tree_dump(cfg);
  return 2;
}
