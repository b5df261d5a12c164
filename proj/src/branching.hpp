#pragma once

#include <cstdint>
#include <vector>

#include "kernels.hpp"

namespace bmc {

// One reproduction event: probability q, ell[h] children inheriting gradient
// block h (h = 0 plain, h >= 1 directional), and optionally an explicit
// species per child (flattened in block order) for PDE systems; children
// inherit the parent's species when child_species is empty.
struct OffspringEvent {
  double q = 1.0;
  std::vector<int> ell{0};
  std::vector<int> child_species;

  int total() const {
    int n = 0;
    for (int c : ell) n += c;
    return n;
  }
};

struct BranchingLaw {
  double beta = 1.0;
  // offspring[s]: events available to a particle of species s
  std::vector<std::vector<OffspringEvent>> offspring;
  // p_levels[n-1]: probability a leaf pays out at boundary level n; entries
  // nonnegative, sum 1; zero entries are legal and simply never drawn
  std::vector<double> p_levels{1.0};
  // conjugate[s] != 0: species s samples the conjugate kernel (Schrodinger)
  std::vector<uint8_t> conjugate;
};

struct ParticleRecord {
  int32_t id = 0;
  int32_t parent = -1;
  double birth_time = 0.0;
  double death_time = 0.0;   // horizon for leaves
  int16_t theta = 0;          // gradient block inherited at birth
  int16_t species = 0;
  int16_t depth = 0;
  int16_t kernel_index = 1;   // boundary level I for leaves, n_levels inside
  int32_t offspring_choice = -1;  // event index for interior nodes
  bool is_leaf = false;
  SampledIncrement increment;  // spans lifetime (interior) or time to horizon (leaf)
  Point position;              // birth position + increment
  Point parent_position;       // position at birth (parent's death position)
};

struct BranchingTree {
  std::vector<ParticleRecord> particles;  // append-only, breadth-first order
  double horizon = 0.0;
  Point root;
  int max_depth = 0;
  bool capped = false;  // node_cap was hit; particle list is partial

  size_t size() const { return particles.size(); }
};

// Grows a Galton-Watson tree under exponential(beta) lifetimes up to the
// horizon. Particles draw, in order: lifetime, then level (leaf, if several)
// or event (interior, if several), then the spatial increment. If the node
// count would exceed node_cap the tree is returned with capped = true and the
// partial particle list.
BranchingTree grow_tree(const BranchingLaw& law, const KernelFamily& kernel,
                        double horizon, const Point& root, RngStream& rng,
                        long long node_cap, int root_species = 0);

// Same, reusing the tree's particle buffer.
void grow_tree_into(BranchingTree& tree, const BranchingLaw& law,
                    const KernelFamily& kernel, double horizon, const Point& root,
                    RngStream& rng, long long node_cap, int root_species = 0);

// 1 / survival probability over the leaf span: exp(beta * (horizon - birth)).
double survival_weight(const ParticleRecord& rec, const BranchingLaw& law, double horizon);

// 1 / lifetime density at the realized lifetime: exp(beta * dt) / beta.
double death_weight(const ParticleRecord& rec, const BranchingLaw& law);

}  // namespace bmc
