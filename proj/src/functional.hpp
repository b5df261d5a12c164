#pragma once

#include <functional>
#include <vector>

#include "branching.hpp"

namespace bmc {

// Coefficient of one nonlinear term, evaluated at (s, x) where s is the time
// REMAINING to the horizon at the branch point (Duhamel time reversal).
using CoefFn = std::function<cplx(double s, const Point& x)>;
using BoundaryFn = std::function<cplx(const Point& x)>;

struct NonlinearityTerm {
  CoefFn c0;
  // c_{j,h} for gradient blocks h = 1..H (scalar, one-dimensional support)
  std::vector<CoefFn> directions;
};

// terms[s][j] pairs with BranchingLaw::offspring[s][j].
struct NonlinearitySpec {
  int H = 0;
  std::vector<std::vector<NonlinearityTerm>> terms;
};

// f[n-1]: payoff at boundary level n, already divided by p_n where the
// representation calls for it. grad_f is informational (Lipschitz checks).
struct BoundaryData {
  std::vector<BoundaryFn> f;
  std::vector<BoundaryFn> grad_f;
};

// The tree functional whose expectation is the solution at (horizon, root).
// Interior node k: death_weight * W_k * c_{J_k,0}(t - T_k, X_k).
// Leaf k at level I: survival_weight * W_k * payoff, where the payoff is
// f_I(X_t) for a plain leaf and f_I(X_t) - f_I(X_birth) for a gradient one.
// W_k is gamma_k for theta = 0; for theta != 0 it is gamma^1_k times the
// parent's direction coefficient c_{J_parent, theta}(t - T_parent, X_parent).
// Throws std::runtime_error on non-finite factors (outside declared domains).
cplx evaluate_xi(const BranchingTree& tree, const NonlinearitySpec& nl,
                 const BoundaryData& bd, const BranchingLaw& law);

// Linear Cauchy problem sum_n p_n g_n(t) * f_n + source term, one draw of the
// two-branch (survive / die once) representation.
struct LinearProblem {
  KernelFamily kernel;
  std::vector<double> p_levels{1.0};
  std::vector<BoundaryFn> f;
  std::function<cplx(double s, const Point& x)> source;  // F(s, x), may be null
  cplx source_prefactor{1.0, 0.0};
};

cplx evaluate_linear(const LinearProblem& lp, double beta, double horizon,
                     const Point& x, RngStream& rng);

}  // namespace bmc
