#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "point.hpp"

namespace bmc {

struct ProblemSpec;

struct Estimate {
  cplx mean{};       // includes the problem's substitution shift when one is active
  cplx stderr_c{};   // componentwise standard error of the mean
  long long n_paths = 0;
  long long n_blowups = 0;   // paths whose tree hit the node cap
  long long max_tree_size = 0;

  bool flagged() const { return n_blowups > 0; }
};

// Monte-Carlo mean over n_paths independent tree functionals. Path i draws
// from RngStream(seed, i); paths are grouped in fixed-size blocks reduced in
// block order, so the result is bit-identical for every thread count.
Estimate estimate(const ProblemSpec& problem, double horizon, const Point& x,
                  long long n_paths, uint64_t seed, int threads,
                  long long node_cap = 1000000);

// Inputs of the p-th moment growth bound: H_p(s) = sum_j weight_j^p s^power_j.
struct MomentTerm {
  int power = 0;
  double weight = 0.0;  // q_j * ||c_j||_inf
};

struct MomentCheckInput {
  std::vector<MomentTerm> h_terms;
  double r_p = 0.0;      // max_n ||f_n||^p ||gamma_n rhobar^((1-p)/p)||^p
  double alpha_p = 1.0;  // ||gamma_N rho^((1-p)/p)||^p
  double p = 2.0;
  double radius = std::numeric_limits<double>::infinity();  // domain edge R_p
};

// Largest horizon with a finite p-th moment bound:
// T_max = (1/alpha_p) * integral_{r_p}^{R_p} ds / H_p(s).
// +inf when H_p grows at most linearly, 0 when r_p >= R_p.
double blowup_horizon(const MomentCheckInput& in);

}  // namespace bmc
