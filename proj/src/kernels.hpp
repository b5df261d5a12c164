#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "point.hpp"
#include "rng.hpp"

namespace bmc {

enum class KernelKind { Heat, Wave, Beam, Schrodinger };

// One draw from a propagator measure mu(dt, dz): the spatial increment z, the
// complex weight gamma (total mass times sign/phase of the signed density),
// and for the one-dimensional wave gradient kernel the light-cone side.
struct SampledIncrement {
  Point z;
  cplx gamma{1.0, 0.0};
  int cone_sign = 0;  // +1 / -1 for wave-gradient draws, else 0
};

// Tabulated scaling profile G for the fourth-order (beam) kernel
// g2(t, z) = sqrt(t) G(z / sqrt(t)), with G(0) = 1/sqrt(2 pi) and
// 2 G'(x) = Fs(x / sqrt(2 pi)) - Fc(x / sqrt(2 pi)). G oscillates and changes
// sign, so draws follow |G| / ||G||_1 and the weight carries sgn(G).
struct BeamTable {
  double window = 10.0;  // tabulated on [-window, window]
  int resolution = 100000;
  std::vector<double> x;    // knots, size resolution + 1
  std::vector<double> g;    // G at knots
  std::vector<double> cdf;  // normalized cumulative |G|
  double l1_norm = 0.0;     // integral of |G| over the window

  double g_at(double xv) const;    // linear interpolation, 0 outside window
  double sample(double u) const;   // inverse CDF, u in [0,1)
};

BeamTable beam_density_table(double window, int resolution);

SampledIncrement sample_heat(int dim, double dt, RngStream& rng);
SampledIncrement sample_wave(int dim, double dt, RngStream& rng);
SampledIncrement sample_wave_gradient(double dt, RngStream& rng);
SampledIncrement sample_beam(const BeamTable& table, double dt, RngStream& rng);
SampledIncrement sample_schrodinger(int dim, double dt, bool conjugate, RngStream& rng);

struct KernelFamily {
  KernelKind kind = KernelKind::Heat;
  int dim = 1;
  int n_levels = 1;
  bool has_gradient = false;  // wave d=1 exposes the spatial-derivative kernel
  std::shared_ptr<const BeamTable> beam_table;

  static KernelFamily heat(int dim);
  static KernelFamily wave(int dim);  // dim in {1,2,3}
  static KernelFamily beam(double window = 10.0, int resolution = 100000);
  static KernelFamily schrodinger(int dim);

  // level is 1-based (boundary level for leaves, n_levels for interior
  // nodes). theta != 0 requests the gradient kernel. conjugate applies the
  // Schrodinger conjugate rotation. Throws std::invalid_argument for
  // unsupported combinations or dt < 0.
  SampledIncrement sample(int level, int theta, double dt, bool conjugate,
                          RngStream& rng) const;
};

}  // namespace bmc
