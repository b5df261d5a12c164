#pragma once

namespace bmc {

// Fresnel integrals in the normalized convention
//   fresnel_s(x) = int_0^x sin(pi t^2 / 2) dt
//   fresnel_c(x) = int_0^x cos(pi t^2 / 2) dt
// Mielenz, J. Res. NIST 105, 589 (2000): power series for |x| <= 1.6,
// rational auxiliary functions beyond. Absolute error below 1e-9.
double fresnel_s(double x);
double fresnel_c(double x);

}  // namespace bmc
