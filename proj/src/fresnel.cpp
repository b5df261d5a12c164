#include "fresnel.hpp"

#include <cmath>

namespace bmc {
namespace {

constexpr double kHalfPi = 1.57079632679489661923;

const double fn[12] = {
    0.318309844,  9.34626e-8,   -0.09676631,  0.000606222,
    0.325539361,  0.325206461,  -7.450551455, 32.20380908,
    -78.8035274,  118.5343352,  -102.4339798, 39.06207702};

const double gn[12] = {
    0.0,          0.101321519,  -4.07292e-5,  -0.152068115,
    -0.046292605, 1.622793598,  -5.199186089, 7.477942354,
    -0.695291507, -15.10996796, 22.28401942,  -10.89968491};

const double cn[12] = {
    1.0,
    -0.24674011002723,
    0.02818550087789,
    -0.00160488313564,
    5.407413381408390e-05,
    -1.200097255860028e-06,
    1.884349911527268e-08,
    -2.202276925445466e-10,
    1.989685792418021e-12,
    -1.430918973171519e-14,
    8.384729705118549e-17,
    -4.079981449233875e-19};

const double sn[12] = {
    0.52359877559830,
    -0.09228058535804,
    0.00724478420420,
    -3.121169423545791e-04,
    8.444272883545251e-06,
    -1.564714450092211e-07,
    2.108212193321454e-09,
    -2.157430680584343e-11,
    1.733410208887483e-13,
    -1.122324478798395e-15,
    5.980053239210401e-18,
    -2.667871362841397e-20};

void eval(double x0, double* fs, double* fc) {
  double x = std::fabs(x0);
  double x2 = x * x;
  if (x <= 1.6) {
    // series in powers of x^4: FS = x^3 sum sn[n] x^(4n), FC = x sum cn[n] x^(4n)
    double x4 = x2 * x2;
    double s = sn[11];
    double c = cn[11];
    for (int n = 10; n >= 0; --n) {
      s = s * x4 + sn[n];
      c = c * x4 + cn[n];
    }
    *fs = s * x2 * x;
    *fc = c * x;
  } else {
    double fx = 0.0, gx = 0.0;
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double xpow = inv;
    for (int n = 0; n < 12; ++n) {
      fx += fn[n] * xpow;
      gx += gn[n] * xpow;
      xpow *= inv2;
    }
    double sa = std::sin(kHalfPi * x2);
    double ca = std::cos(kHalfPi * x2);
    *fc = 0.5 + fx * sa - gx * ca;
    *fs = 0.5 - gx * sa - fx * ca;
  }
  if (x0 < 0.0) {
    *fc = -*fc;
    *fs = -*fs;
  }
}

}  // namespace

double fresnel_s(double x) {
  double fs, fc;
  eval(x, &fs, &fc);
  return fs;
}

double fresnel_c(double x) {
  double fs, fc;
  eval(x, &fs, &fc);
  return fc;
}

}  // namespace bmc
