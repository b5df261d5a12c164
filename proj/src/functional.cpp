#include "functional.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bmc {
namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

[[noreturn]] void fault(const char* what, int32_t id) {
  throw std::runtime_error(std::string(what) + " at particle " + std::to_string(id));
}

cplx particle_factor(const BranchingTree& tree, const NonlinearitySpec& nl,
                     const BoundaryData& bd, const BranchingLaw& law,
                     const ParticleRecord& rec) {
  const double t = tree.horizon;

  cplx w = rec.increment.gamma;
  if (rec.theta != 0) {
    if (rec.parent < 0) fault("gradient block on root", rec.id);
    const ParticleRecord& par = tree.particles[rec.parent];
    const NonlinearityTerm& term = nl.terms[par.species][par.offspring_choice];
    w *= term.directions[rec.theta - 1](t - par.death_time, par.position);
  }

  cplx f;
  if (rec.is_leaf) {
    const BoundaryFn& pay = bd.f[rec.kernel_index - 1];
    f = pay(rec.position);
    if (rec.theta != 0) f -= pay(rec.parent_position);
    f *= survival_weight(rec, law, t);
  } else {
    const NonlinearityTerm& term = nl.terms[rec.species][rec.offspring_choice];
    f = term.c0(t - rec.death_time, rec.position);
    f *= death_weight(rec, law);
  }
  cplx out = w * f;
  if (!finite(out)) fault("non-finite factor", rec.id);
  return out;
}

}  // namespace

cplx evaluate_xi(const BranchingTree& tree, const NonlinearitySpec& nl,
                 const BoundaryData& bd, const BranchingLaw& law) {
  if (tree.capped) throw std::invalid_argument("capped tree has no functional value");

  if (tree.particles.size() <= 64) {
    cplx prod = 1.0;
    for (const auto& rec : tree.particles) prod *= particle_factor(tree, nl, bd, law, rec);
    if (finite(prod)) return prod;
    // fall through: magnitudes overflowed even though every factor is finite
  }

  // log-magnitude + unit-phase accumulation for deep trees
  double logmag = 0.0;
  cplx phase = 1.0;
  for (const auto& rec : tree.particles) {
    cplx w = particle_factor(tree, nl, bd, law, rec);
    double a = std::abs(w);
    if (a == 0.0) return 0.0;
    logmag += std::log(a);
    phase *= w / a;
  }
  return std::exp(logmag) * phase;
}

cplx evaluate_linear(const LinearProblem& lp, double beta, double horizon,
                     const Point& x, RngStream& rng) {
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  double tau = rng.exponential(beta);
  if (tau >= horizon) {
    int level = 0;
    if (lp.p_levels.size() > 1) {
      double u = rng.uniform();
      double acc = 0.0;
      for (size_t i = 0; i < lp.p_levels.size(); ++i) {
        if (lp.p_levels[i] <= 0.0) continue;
        acc += lp.p_levels[i];
        level = static_cast<int>(i);
        if (u < acc) break;
      }
    }
    SampledIncrement inc = lp.kernel.sample(level + 1, 0, horizon, false, rng);
    Point at = x;
    at += inc.z;
    cplx v = std::exp(beta * horizon) * inc.gamma * lp.f[level](at);
    if (!finite(v)) throw std::runtime_error("non-finite linear payoff");
    return v;
  }
  if (!lp.source) return 0.0;
  SampledIncrement inc = lp.kernel.sample(lp.kernel.n_levels, 0, tau, false, rng);
  Point at = x;
  at += inc.z;
  cplx v = (std::exp(beta * tau) / beta) * lp.source_prefactor * inc.gamma *
           lp.source(horizon - tau, at);
  if (!finite(v)) throw std::runtime_error("non-finite linear source");
  return v;
}

}  // namespace bmc
