#pragma once

#include <string>
#include <vector>

#include "estimator.hpp"
#include "functional.hpp"

namespace bmc {

// A sup-norm claim the moment checker builds on; tests verify each one on a
// dense sample of [0, t_hi] x [x_lo, x_hi]^d.
struct DeclaredBound {
  std::string label;
  double bound = 0.0;
  std::function<double(double s, const Point& x)> magnitude;
  double x_lo = -6.0, x_hi = 6.0;
  double t_hi = 2.0;
};

struct ProblemSpec {
  std::string name;
  int dim = 1;
  KernelFamily kernel;
  BranchingLaw law;
  NonlinearitySpec nl;
  BoundaryData bd;
  int root_species = 0;

  // Linear problems bypass the branching machinery in the estimator (the
  // tree form below stays valid and is used by the tree dumper).
  bool linear = false;
  LinearProblem lin;

  // Data shift u = U + substitution(x) when the level-1 data was folded into
  // the coefficients; the estimator adds it back to the mean.
  std::function<cplx(const Point& x)> substitution;

  // Closed-form solution when known, for CSV reference columns and tests.
  std::function<cplx(double t, const Point& x)> exact;

  // Inputs for blowup_horizon at a given run configuration; null when the
  // problem carries no growth bound (linear problems).
  std::function<MomentCheckInput(double t, double beta, double p)> moment_input;

  std::vector<DeclaredBound> declared_bounds;
};

ProblemSpec klein_gordon(int dim);         // wave, dim 1..3
ProblemSpec yang_mills_toy();              // wave d=1 with gradient term
ProblemSpec nonlinear_beam();              // fourth-order, d=1
ProblemSpec gross_pitaevskii(int dim);     // Schrodinger system (u, conj u)
ProblemSpec linear_heat(int dim);
ProblemSpec linear_wave();
ProblemSpec linear_schrodinger(int dim);

// Names: klein-gordon, yang-mills, beam, gross-pitaevskii, linear-heat,
// linear-wave, linear-schrodinger. Throws std::invalid_argument for unknown
// names or unsupported dimensions.
ProblemSpec make_problem(const std::string& name, int dim);
std::vector<std::string> problem_names();

}  // namespace bmc
