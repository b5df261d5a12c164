#include "branchmc.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "problems.hpp"

struct bmc_problem {
  bmc::ProblemSpec spec;
};

namespace {

thread_local std::string g_error;

int fail(int code, const std::string& msg) {
  g_error = msg;
  return code;
}

bmc::Point make_point(const bmc_problem* p, const double* x) {
  bmc::Point pt(p->spec.dim);
  for (int i = 0; i < p->spec.dim; ++i) pt[i] = x[i];
  return pt;
}

void append_cplx(std::string& out, bmc::cplx v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), " %.17g %.17g", v.real(), v.imag());
  out += buf;
}

}  // namespace

extern "C" {

int bmc_problem_create(const char* name, int dim, bmc_problem** out) {
  if (!name || !out) return fail(BMC_ERR_INVALID, "null argument");
  *out = nullptr;
  try {
    auto* p = new bmc_problem{bmc::make_problem(name, dim)};
    *out = p;
    return BMC_OK;
  } catch (const std::exception& e) {
    return fail(BMC_ERR_INVALID, e.what());
  }
}

void bmc_problem_destroy(bmc_problem* p) { delete p; }

int bmc_problem_set_beta(bmc_problem* p, double beta) {
  if (!p) return fail(BMC_ERR_INVALID, "null problem");
  if (!(beta > 0.0)) return fail(BMC_ERR_INVALID, "beta must be positive");
  p->spec.law.beta = beta;
  return BMC_OK;
}

int bmc_problem_dim(const bmc_problem* p) { return p ? p->spec.dim : 0; }

int bmc_problem_has_exact(const bmc_problem* p) {
  return p && p->spec.exact ? 1 : 0;
}

int bmc_problem_exact(const bmc_problem* p, double t, const double* x,
                      double* out_re, double* out_im) {
  if (!p || !x || !out_re || !out_im) return fail(BMC_ERR_INVALID, "null argument");
  if (!p->spec.exact) return fail(BMC_ERR_INVALID, "problem has no closed form");
  bmc::cplx v = p->spec.exact(t, make_point(p, x));
  *out_re = v.real();
  *out_im = v.imag();
  return BMC_OK;
}

int bmc_solve(const bmc_problem* p, double t, const double* x, long long n_paths,
              uint64_t seed, int threads, long long node_cap, bmc_estimate* out) {
  if (!p || !x || !out) return fail(BMC_ERR_INVALID, "null argument");
  try {
    bmc::Estimate est = bmc::estimate(p->spec, t, make_point(p, x), n_paths, seed,
                                      threads, node_cap);
    out->mean_re = est.mean.real();
    out->mean_im = est.mean.imag();
    out->stderr_re = est.stderr_c.real();
    out->stderr_im = est.stderr_c.imag();
    out->n_paths = est.n_paths;
    out->n_blowups = est.n_blowups;
    out->max_tree_size = est.max_tree_size;
    return BMC_OK;
  } catch (const std::invalid_argument& e) {
    return fail(BMC_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(BMC_ERR_NUMERIC, e.what());
  }
}

int bmc_moment_check(const bmc_problem* p, double t, double p_order,
                     bmc_moment_report* out) {
  if (!p || !out) return fail(BMC_ERR_INVALID, "null argument");
  if (!(t > 0.0) || !(p_order > 1.0))
    return fail(BMC_ERR_INVALID, "need t > 0 and moment order > 1");
  out->t_max = 0.0;
  out->r_p = 0.0;
  out->alpha_p = 0.0;
  out->pass = 0;
  out->has_bound = 0;
  if (!p->spec.moment_input) {
    // no growth bound declared: nothing can blow up
    out->t_max = HUGE_VAL;
    out->pass = 1;
    return BMC_OK;
  }
  try {
    bmc::MomentCheckInput in = p->spec.moment_input(t, p->spec.law.beta, p_order);
    out->t_max = bmc::blowup_horizon(in);
    out->r_p = in.r_p;
    out->alpha_p = in.alpha_p;
    out->pass = t <= out->t_max ? 1 : 0;
    out->has_bound = 1;
    return BMC_OK;
  } catch (const std::exception& e) {
    return fail(BMC_ERR_INTERNAL, e.what());
  }
}

int bmc_tree_dump(const bmc_problem* p, double t, const double* x, uint64_t seed,
                  long long node_cap, char* buf, size_t cap, size_t* n_written) {
  if (!p || !x || !buf || !n_written || cap == 0)
    return fail(BMC_ERR_INVALID, "null argument");
  try {
    const bmc::ProblemSpec& spec = p->spec;
    bmc::RngStream rng(seed, 0);
    bmc::BranchingTree tree = bmc::grow_tree(spec.law, spec.kernel, t,
                                             make_point(p, x), rng, node_cap,
                                             spec.root_species);
    if (tree.capped)
      return fail(BMC_ERR_BLOWUP, "node cap hit after " +
                                      std::to_string(tree.size()) + " particles");
    std::string out;
    out += "# problem " + spec.name + " dim " + std::to_string(spec.dim);
    {
      char head[128];
      std::snprintf(head, sizeof(head), " t %.17g seed %llu\n", t,
                    static_cast<unsigned long long>(seed));
      out += head;
    }
    out += "# id parent species theta level birth death leaf gamma position\n";
    for (const auto& rec : tree.particles) {
      char line[160];
      std::snprintf(line, sizeof(line), "%d %d %d %d %d %.17g %.17g %d",
                    rec.id, rec.parent, rec.species, rec.theta, rec.kernel_index,
                    rec.birth_time, rec.death_time, rec.is_leaf ? 1 : 0);
      out += line;
      append_cplx(out, rec.increment.gamma);
      for (int i = 0; i < spec.dim; ++i) append_cplx(out, rec.position[i]);
      out += '\n';
    }
    bmc::cplx xi = bmc::evaluate_xi(tree, spec.nl, spec.bd, spec.law);
    out += "# nodes " + std::to_string(tree.size()) +
           " max_depth " + std::to_string(tree.max_depth) + "\n";
    out += "xi";
    append_cplx(out, xi);
    out += '\n';

    *n_written = out.size();
    if (out.size() + 1 > cap) return fail(BMC_ERR_BUFFER, "dump needs a larger buffer");
    std::memcpy(buf, out.data(), out.size() + 1);
    return BMC_OK;
  } catch (const std::invalid_argument& e) {
    return fail(BMC_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(BMC_ERR_NUMERIC, e.what());
  }
}

const char* bmc_last_error(void) { return g_error.c_str(); }

int bmc_problem_count(void) {
  return static_cast<int>(bmc::problem_names().size());
}

const char* bmc_problem_name(int index) {
  static thread_local std::string keep;
  auto names = bmc::problem_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return "";
  keep = names[static_cast<size_t>(index)];
  return keep.c_str();
}

}  // extern "C"
