#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace bmc {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 8;

// Spatial point with complex coordinates. Schrodinger increments rotate real
// Gaussians into the complex plane, so positions are complex throughout; for
// the other kernels the imaginary parts stay exactly zero.
struct Point {
  int d = 1;
  std::array<cplx, kMaxDim> v{};

  Point() = default;
  explicit Point(int dim) : d(dim) {}

  static Point fill(int dim, double x0) {
    Point p(dim);
    for (int i = 0; i < dim; ++i) p.v[i] = x0;
    return p;
  }

  cplx& operator[](int i) { return v[i]; }
  const cplx& operator[](int i) const { return v[i]; }

  Point& operator+=(const Point& o) {
    for (int i = 0; i < d; ++i) v[i] += o.v[i];
    return *this;
  }

  // Coordinate sum, the only reduction the built-in boundary data uses.
  cplx sum() const {
    cplx s = 0.0;
    for (int i = 0; i < d; ++i) s += v[i];
    return s;
  }

  bool finite() const {
    for (int i = 0; i < d; ++i)
      if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
    return true;
  }
};

}  // namespace bmc
