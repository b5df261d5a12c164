#include "kernels.hpp"

#include <algorithm>
#include <cmath>

#include "fresnel.hpp"

namespace bmc {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kSqrtHalf = 0.70710678118654752440;

double beam_g_prime(double x) {
  double u = x * kInvSqrt2Pi;  // x / sqrt(2 pi)
  return 0.5 * (fresnel_s(u) - fresnel_c(u));
}

void check_dt(double dt) {
  if (!(dt >= 0.0)) throw std::invalid_argument("increment span dt must be >= 0");
}

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
}

}  // namespace

double BeamTable::g_at(double xv) const {
  if (xv <= -window || xv >= window) return 0.0;
  double h = 2.0 * window / resolution;
  double s = (xv + window) / h;
  int i = std::min(static_cast<int>(s), resolution - 1);
  double w = s - i;
  return g[i] * (1.0 - w) + g[i + 1] * w;
}

double BeamTable::sample(double u) const {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  int i = static_cast<int>(it - cdf.begin());
  if (i <= 0) return x.front();
  if (i > resolution) return x.back();
  double lo = cdf[i - 1], hi = cdf[i];
  double w = hi > lo ? (u - lo) / (hi - lo) : 0.0;
  return x[i - 1] + w * (x[i] - x[i - 1]);
}

BeamTable beam_density_table(double window, int resolution) {
  if (window <= 0.0 || resolution < 2) throw std::invalid_argument("bad beam table shape");
  BeamTable t;
  t.window = window;
  t.resolution = resolution;
  t.x.resize(resolution + 1);
  t.g.resize(resolution + 1);
  t.cdf.resize(resolution + 1);
  double h = 2.0 * window / resolution;
  for (int i = 0; i <= resolution; ++i) t.x[i] = -window + i * h;

  // Integrate G' outward from 0 with per-interval Simpson; G(0) = 1/sqrt(2 pi).
  int mid = resolution / 2;  // x = 0 when resolution is even
  int lo_anchor = mid;
  if (t.x[mid] != 0.0) {
    // odd resolution: start both sweeps from the value at the knot nearest 0
    double x0 = t.x[mid];
    t.g[mid] = kInvSqrt2Pi + (x0 / 6.0) * (beam_g_prime(0.0) + 4.0 * beam_g_prime(0.5 * x0) + beam_g_prime(x0));
  } else {
    t.g[mid] = kInvSqrt2Pi;
  }
  for (int i = mid; i < resolution; ++i) {
    double a = t.x[i], b = t.x[i + 1];
    t.g[i + 1] = t.g[i] + ((b - a) / 6.0) *
        (beam_g_prime(a) + 4.0 * beam_g_prime(0.5 * (a + b)) + beam_g_prime(b));
  }
  for (int i = lo_anchor; i > 0; --i) {
    double a = t.x[i - 1], b = t.x[i];
    t.g[i - 1] = t.g[i] - ((b - a) / 6.0) *
        (beam_g_prime(a) + 4.0 * beam_g_prime(0.5 * (a + b)) + beam_g_prime(b));
  }

  t.cdf[0] = 0.0;
  for (int i = 0; i < resolution; ++i)
    t.cdf[i + 1] = t.cdf[i] + 0.5 * h * (std::fabs(t.g[i]) + std::fabs(t.g[i + 1]));
  t.l1_norm = t.cdf[resolution];
  for (auto& c : t.cdf) c /= t.l1_norm;
  return t;
}

SampledIncrement sample_heat(int dim, double dt, RngStream& rng) {
  check_dim(dim);
  check_dt(dt);
  SampledIncrement s;
  s.z = Point(dim);
  double scale = std::sqrt(2.0 * dt);
  for (int i = 0; i < dim; ++i) s.z[i] = scale * rng.normal();
  s.gamma = 1.0;
  return s;
}

SampledIncrement sample_wave(int dim, double dt, RngStream& rng) {
  check_dt(dt);
  SampledIncrement s;
  s.z = Point(dim);
  s.gamma = dt;  // ||g2(dt, .)||_1 = dt in d = 1, 2, 3
  switch (dim) {
    case 1:
      s.z[0] = dt * (2.0 * rng.uniform() - 1.0);
      break;
    case 2: {
      // |Z| has density rho / sqrt(1 - rho^2) on [0,1]: Z = sqrt(1-U^2) * angle
      double u = rng.uniform();
      double r = std::sqrt(std::max(0.0, 1.0 - u * u));
      double a = kTwoPi * rng.uniform();
      s.z[0] = dt * r * std::cos(a);
      s.z[1] = dt * r * std::sin(a);
      break;
    }
    case 3: {
      // uniform on the unit sphere (Archimedes: height uniform, azimuth uniform)
      double a = kTwoPi * rng.uniform();
      double h = 2.0 * rng.uniform() - 1.0;
      double r = std::sqrt(std::max(0.0, 1.0 - h * h));
      s.z[0] = dt * r * std::cos(a);
      s.z[1] = dt * r * std::sin(a);
      s.z[2] = dt * h;
      break;
    }
    default:
      throw std::invalid_argument("wave kernel supports dim 1, 2, 3");
  }
  return s;
}

SampledIncrement sample_wave_gradient(double dt, RngStream& rng) {
  check_dt(dt);
  // d/dx g2(t, .) = (delta_{-t} - delta_{+t}) / 2; reflected into the x + Z
  // convention the draw jumps to either light-cone edge and the weight is
  // +1 on the forward edge, -1 on the backward one, matching
  // d/dx (g2 * f)(x) = (f(x + t) - f(x - t)) / 2.
  SampledIncrement s;
  s.z = Point(1);
  if (rng.uniform() < 0.5) {
    s.z[0] = dt;
    s.gamma = 1.0;
    s.cone_sign = 1;
  } else {
    s.z[0] = -dt;
    s.gamma = -1.0;
    s.cone_sign = -1;
  }
  return s;
}

SampledIncrement sample_beam(const BeamTable& table, double dt, RngStream& rng) {
  check_dt(dt);
  SampledIncrement s;
  s.z = Point(1);
  double y = table.sample(rng.uniform());
  s.z[0] = std::sqrt(dt) * y;
  double gv = table.g_at(y);
  s.gamma = dt * (gv >= 0.0 ? 1.0 : -1.0) * table.l1_norm;
  return s;
}

SampledIncrement sample_schrodinger(int dim, double dt, bool conjugate, RngStream& rng) {
  check_dim(dim);
  check_dt(dt);
  // exp(+- i pi/4) sqrt(dt) Z with Z standard normal; the conjugate rotation
  // is the exact complex conjugate so conjugate trees mirror bit for bit.
  cplx rot = conjugate ? cplx(kSqrtHalf, -kSqrtHalf) : cplx(kSqrtHalf, kSqrtHalf);
  double scale = std::sqrt(dt);
  SampledIncrement s;
  s.z = Point(dim);
  for (int i = 0; i < dim; ++i) s.z[i] = rot * (scale * rng.normal());
  s.gamma = 1.0;
  return s;
}

KernelFamily KernelFamily::heat(int dim) {
  check_dim(dim);
  KernelFamily k;
  k.kind = KernelKind::Heat;
  k.dim = dim;
  k.n_levels = 1;
  return k;
}

KernelFamily KernelFamily::wave(int dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("wave kernel supports dim 1, 2, 3");
  KernelFamily k;
  k.kind = KernelKind::Wave;
  k.dim = dim;
  k.n_levels = 2;
  k.has_gradient = (dim == 1);
  return k;
}

KernelFamily KernelFamily::beam(double window, int resolution) {
  KernelFamily k;
  k.kind = KernelKind::Beam;
  k.dim = 1;
  k.n_levels = 2;
  k.beam_table = std::make_shared<BeamTable>(beam_density_table(window, resolution));
  return k;
}

KernelFamily KernelFamily::schrodinger(int dim) {
  check_dim(dim);
  KernelFamily k;
  k.kind = KernelKind::Schrodinger;
  k.dim = dim;
  k.n_levels = 1;
  return k;
}

SampledIncrement KernelFamily::sample(int level, int theta, double dt, bool conjugate,
                                      RngStream& rng) const {
  if (level < 1 || level > n_levels) throw std::invalid_argument("kernel level out of range");
  if (theta != 0) {
    if (kind != KernelKind::Wave || dim != 1 || level != 2)
      throw std::invalid_argument("gradient kernel unavailable for this family");
    return sample_wave_gradient(dt, rng);
  }
  switch (kind) {
    case KernelKind::Heat:
      return sample_heat(dim, dt, rng);
    case KernelKind::Wave:
      if (level != 2) throw std::invalid_argument("wave level-1 kernel not sampled");
      return sample_wave(dim, dt, rng);
    case KernelKind::Beam:
      if (level != 2) throw std::invalid_argument("beam level-1 kernel not sampled");
      return sample_beam(*beam_table, dt, rng);
    case KernelKind::Schrodinger:
      return sample_schrodinger(dim, dt, conjugate, rng);
  }
  throw std::logic_error("unreachable");
}

}  // namespace bmc
