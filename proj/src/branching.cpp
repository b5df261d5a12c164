#include "branching.hpp"

#include <cmath>
#include <stdexcept>

namespace bmc {
namespace {

int draw_index(const std::vector<double>& probs, RngStream& rng) {
  if (probs.size() == 1) return 0;
  double u = rng.uniform();
  double acc = 0.0;
  int last = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    acc += probs[i];
    last = static_cast<int>(i);
    if (u < acc) return last;
  }
  return last;  // u landed in rounding slack past the final positive entry
}

int draw_event(const std::vector<OffspringEvent>& events, RngStream& rng) {
  if (events.size() == 1) return 0;
  double u = rng.uniform();
  double acc = 0.0;
  int last = 0;
  for (size_t i = 0; i < events.size(); ++i) {
    if (events[i].q <= 0.0) continue;
    acc += events[i].q;
    last = static_cast<int>(i);
    if (u < acc) return last;
  }
  return last;
}

}  // namespace

void grow_tree_into(BranchingTree& tree, const BranchingLaw& law,
                    const KernelFamily& kernel, double horizon, const Point& root,
                    RngStream& rng, long long node_cap, int root_species) {
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (law.offspring.empty()) throw std::invalid_argument("branching law has no offspring table");
  if (root_species < 0 || root_species >= static_cast<int>(law.offspring.size()))
    throw std::invalid_argument("root species out of range");

  tree.particles.clear();
  tree.horizon = horizon;
  tree.root = root;
  tree.max_depth = 0;
  tree.capped = false;
  if (node_cap < 1) {
    tree.capped = true;
    return;
  }

  {
    ParticleRecord r;
    r.id = 0;
    r.parent = -1;
    r.birth_time = 0.0;
    r.species = static_cast<int16_t>(root_species);
    r.parent_position = root;
    tree.particles.push_back(r);
  }

  for (size_t cursor = 0; cursor < tree.particles.size(); ++cursor) {
    // Fields other than increment/position/death are settled at append time;
    // read them before taking a reference that appends could invalidate.
    double birth = tree.particles[cursor].birth_time;
    int16_t theta = tree.particles[cursor].theta;
    int16_t species = tree.particles[cursor].species;
    int16_t depth = tree.particles[cursor].depth;
    Point from = tree.particles[cursor].parent_position;
    bool conj = !law.conjugate.empty() && law.conjugate[species] != 0;

    double tau = rng.exponential(law.beta);
    if (birth + tau >= horizon) {
      int level = draw_index(law.p_levels, rng) + 1;
      SampledIncrement inc = kernel.sample(level, theta, horizon - birth, conj, rng);
      ParticleRecord& rec = tree.particles[cursor];
      rec.death_time = horizon;
      rec.is_leaf = true;
      rec.kernel_index = static_cast<int16_t>(level);
      rec.offspring_choice = -1;
      rec.increment = inc;
      rec.position = from;
      rec.position += inc.z;
      continue;
    }

    const auto& events = law.offspring[species];
    int j = draw_event(events, rng);
    SampledIncrement inc = kernel.sample(kernel.n_levels, theta, tau, conj, rng);
    Point at = from;
    at += inc.z;
    double death = birth + tau;
    {
      ParticleRecord& rec = tree.particles[cursor];
      rec.death_time = death;
      rec.is_leaf = false;
      rec.kernel_index = static_cast<int16_t>(kernel.n_levels);
      rec.offspring_choice = j;
      rec.increment = inc;
      rec.position = at;
    }

    const OffspringEvent& ev = events[j];
    int child_slot = 0;
    for (int h = 0; h < static_cast<int>(ev.ell.size()); ++h) {
      for (int c = 0; c < ev.ell[h]; ++c, ++child_slot) {
        if (static_cast<long long>(tree.particles.size()) >= node_cap) {
          tree.capped = true;
          return;
        }
        ParticleRecord child;
        child.id = static_cast<int32_t>(tree.particles.size());
        child.parent = static_cast<int32_t>(cursor);
        child.birth_time = death;
        child.theta = static_cast<int16_t>(h);
        child.species = ev.child_species.empty()
                            ? species
                            : static_cast<int16_t>(ev.child_species[child_slot]);
        child.depth = static_cast<int16_t>(depth + 1);
        child.parent_position = at;
        tree.particles.push_back(child);
        if (child.depth > tree.max_depth) tree.max_depth = child.depth;
      }
    }
  }
}

BranchingTree grow_tree(const BranchingLaw& law, const KernelFamily& kernel,
                        double horizon, const Point& root, RngStream& rng,
                        long long node_cap, int root_species) {
  BranchingTree tree;
  grow_tree_into(tree, law, kernel, horizon, root, rng, node_cap, root_species);
  return tree;
}

double survival_weight(const ParticleRecord& rec, const BranchingLaw& law, double horizon) {
  return std::exp(law.beta * (horizon - rec.birth_time));
}

double death_weight(const ParticleRecord& rec, const BranchingLaw& law) {
  return std::exp(law.beta * (rec.death_time - rec.birth_time)) / law.beta;
}

}  // namespace bmc
