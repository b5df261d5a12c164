#include "problems.hpp"

#include <cmath>
#include <stdexcept>

namespace bmc {
namespace {

const cplx kI(0.0, 1.0);

cplx zero_pay(const Point&) { return cplx(0.0); }
cplx zero_coef(double, const Point&) { return cplx(0.0); }

// ---------------------------------------------------------------- Klein-Gordon
// u_tt - Lap u + u^3 + u^2 = 0 on R^d, traveling-wave data in s = sum_i x_i:
//   u(0) = f1,  du/dt(0) = f2,  u(t, x) = -12 / (9 + 2 (sqrt(d+1) t - s)^2).
// Simulated after the shift U = u - f1, which zeroes the level-1 data:
//   U_tt - Lap U = -U^3 - (3f1+1) U^2 - (3f1^2+2f1) U - (f1^3 + f1^2 - Lap f1).

cplx kg_f1(cplx s) { return -12.0 / (9.0 + 2.0 * s * s); }

cplx kg_f2(int d, cplx s) {
  cplx den = 9.0 + 2.0 * s * s;
  return -48.0 * std::sqrt(d + 1.0) * s / (den * den);
}

cplx kg_lap_f1(int d, cplx s) {
  cplx den = 9.0 + 2.0 * s * s;
  return 48.0 * static_cast<double>(d) * (9.0 - 6.0 * s * s) / (den * den * den);
}

// ------------------------------------------------------------ toy Yang-Mills
// u_tt - u_xx + u^3 + u u_x = 0,  u(t, x) = -1 / (1 + t - x); shifted by
// f1(x) = -1/(1 - x). Events carry one gradient block (H = 1).

cplx ym_f1(cplx x) { return -1.0 / (1.0 - x); }
cplx ym_dx_f1(cplx x) { cplx d = 1.0 - x; return -1.0 / (d * d); }
cplx ym_lap_f1(cplx x) { cplx d = 1.0 - x; return -2.0 / (d * d * d); }
cplx ym_f2(cplx x) { cplx d = 1.0 - x; return 1.0 / (d * d); }

// ------------------------------------------------------------------- beam
// u_tt + u_xxxx + u^2 + h = 0 with u(t, x) = tanh(x + t); in T = tanh(theta):
//   d^4/dtheta^4 tanh = 8 T (1 - T^2)(2 - 3 T^2)
//   h = -(u_tt + u_xxxx + u^2) = -14 T - T^2 + 38 T^3 - 24 T^5.

cplx beam_d4_tanh(cplx T) { return 8.0 * T * (1.0 - T * T) * (2.0 - 3.0 * T * T); }

cplx beam_forcing(cplx T) {
  cplx T2 = T * T;
  return T * (-14.0 + T2 * (38.0 - 24.0 * T2)) - T2;
}

double mag(cplx v) { return std::abs(v); }

}  // namespace

ProblemSpec klein_gordon(int dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("klein-gordon supports dim 1..3");
  ProblemSpec ps;
  ps.name = "klein-gordon";
  ps.dim = dim;
  ps.kernel = KernelFamily::wave(dim);
  ps.law.beta = 1.0;
  ps.law.p_levels = {0.0, 1.0};
  ps.law.offspring = {{
      {0.25, {0}, {}},
      {0.25, {1}, {}},
      {0.25, {2}, {}},
      {0.25, {3}, {}},
  }};
  ps.nl.H = 0;
  ps.nl.terms = {{
      {[dim](double, const Point& x) {
         cplx f = kg_f1(x.sum());
         return -4.0 * (f * f * f + f * f - kg_lap_f1(dim, x.sum()));
       },
       {}},
      {[](double, const Point& x) {
         cplx f = kg_f1(x.sum());
         return -4.0 * (3.0 * f * f + 2.0 * f);
       },
       {}},
      {[](double, const Point& x) { return -4.0 * (3.0 * kg_f1(x.sum()) + 1.0); }, {}},
      {[](double, const Point&) { return cplx(-4.0); }, {}},
  }};
  ps.bd.f = {zero_pay, [dim](const Point& x) { return kg_f2(dim, x.sum()); }};
  ps.substitution = [](const Point& x) { return kg_f1(x.sum()); };
  ps.exact = [dim](double t, const Point& x) {
    cplx th = std::sqrt(dim + 1.0) * t - x.sum();
    return -12.0 / (9.0 + 2.0 * th * th);
  };
  // Growth bound of the unshifted cubic+quadratic nonlinearity.
  ps.moment_input = [dim](double t, double beta, double p) {
    MomentCheckInput in;
    in.h_terms = {{2, 1.0}, {3, 1.0}};
    in.r_p = std::pow((1.0 + dim) / 6.0, p) * std::pow(t, p);
    in.alpha_p = std::pow(t, p) * std::pow(beta, 1.0 - p);
    in.p = p;
    return in;
  };
  ps.declared_bounds = {
      {"f1", 4.0 / 3.0, [](double, const Point& x) { return mag(kg_f1(x.sum())); }},
      {"f2", std::sqrt((dim + 1.0) / 6.0),
       [dim](double, const Point& x) { return mag(kg_f2(dim, x.sum())); }},
      {"quadratic coefficient 3 f1 + 1", 3.0,
       [](double, const Point& x) { return mag(3.0 * kg_f1(x.sum()) + 1.0); }},
      {"linear coefficient 3 f1^2 + 2 f1", 8.0 / 3.0,
       [](double, const Point& x) {
         cplx f = kg_f1(x.sum());
         return mag(3.0 * f * f + 2.0 * f);
       }},
      {"constant term f1^3 + f1^2 - lap f1", (16.0 / 27.0) * (1 + dim),
       [dim](double, const Point& x) {
         cplx f = kg_f1(x.sum());
         return mag(f * f * f + f * f - kg_lap_f1(dim, x.sum()));
       }},
  };
  return ps;
}

ProblemSpec yang_mills_toy() {
  ProblemSpec ps;
  ps.name = "yang-mills";
  ps.dim = 1;
  ps.kernel = KernelFamily::wave(1);
  ps.law.beta = 1.0;
  ps.law.p_levels = {0.0, 1.0};
  const double q = 1.0 / 6.0;
  ps.law.offspring = {{
      {q, {0, 0}, {}},
      {q, {1, 0}, {}},
      {q, {0, 1}, {}},
      {q, {2, 0}, {}},
      {q, {1, 1}, {}},
      {q, {3, 0}, {}},
  }};
  auto unit_dir = [](double, const Point&) { return cplx(1.0); };
  ps.nl.H = 1;
  ps.nl.terms = {{
      {[](double, const Point& x) {
         cplx f = ym_f1(x[0]);
         return -6.0 * (f * f * f + f * ym_dx_f1(x[0]) - ym_lap_f1(x[0]));
       },
       {unit_dir}},
      {[](double, const Point& x) {
         cplx f = ym_f1(x[0]);
         return -6.0 * (3.0 * f * f + ym_dx_f1(x[0]));
       },
       {unit_dir}},
      {[](double, const Point& x) { return -6.0 * ym_f1(x[0]); }, {unit_dir}},
      {[](double, const Point& x) { return -18.0 * ym_f1(x[0]); }, {unit_dir}},
      {[](double, const Point&) { return cplx(-6.0); }, {unit_dir}},
      {[](double, const Point&) { return cplx(-6.0); }, {unit_dir}},
  }};
  ps.bd.f = {zero_pay, [](const Point& x) { return ym_f2(x[0]); }};
  ps.bd.grad_f = {zero_pay, [](const Point& x) {
                    cplx d = 1.0 - x[0];
                    return 2.0 / (d * d * d);
                  }};
  ps.substitution = [](const Point& x) { return ym_f1(x[0]); };
  ps.exact = [](double t, const Point& x) { return -1.0 / (1.0 + t - x[0]); };
  ps.moment_input = [](double t, double beta, double p) {
    MomentCheckInput in;
    in.h_terms = {{0, 2.0}, {1, 2.0}, {1, 1.0}, {2, 3.0}, {2, 1.0}, {3, 1.0}};
    double e = std::exp(beta * t * (p - 1.0));
    in.r_p = std::max(std::pow(t, p), 1.0) * e;
    in.alpha_p = std::max(std::pow(t, p), 1.0) * std::pow(beta, 1.0 - p) * e;
    in.p = p;
    return in;
  };
  // Domain of the acceptance runs plus the unit light cone: x in [2, 6].
  auto dom = [](DeclaredBound b) {
    b.x_lo = 2.0;
    b.x_hi = 6.0;
    return b;
  };
  ps.declared_bounds = {
      dom({"f1", 1.0, [](double, const Point& x) { return mag(ym_f1(x[0])); }}),
      dom({"f2", 1.0, [](double, const Point& x) { return mag(ym_f2(x[0])); }}),
      dom({"empty event coefficient", 12.0,
           [](double, const Point& x) {
             cplx f = ym_f1(x[0]);
             return mag(-6.0 * (f * f * f + f * ym_dx_f1(x[0]) - ym_lap_f1(x[0])));
           }}),
      dom({"linear coefficient", 12.0,
           [](double, const Point& x) {
             cplx f = ym_f1(x[0]);
             return mag(-6.0 * (3.0 * f * f + ym_dx_f1(x[0])));
           }}),
      dom({"gradient coefficient", 6.0,
           [](double, const Point& x) { return mag(-6.0 * ym_f1(x[0])); }}),
      dom({"quadratic coefficient", 18.0,
           [](double, const Point& x) { return mag(-18.0 * ym_f1(x[0])); }}),
  };
  return ps;
}

ProblemSpec nonlinear_beam() {
  ProblemSpec ps;
  ps.name = "beam";
  ps.dim = 1;
  ps.kernel = KernelFamily::beam();
  ps.law.beta = 1.0;
  ps.law.p_levels = {0.0, 1.0};
  const double q = 1.0 / 3.0;
  ps.law.offspring = {{
      {q, {0}, {}},
      {q, {1}, {}},
      {q, {2}, {}},
  }};
  ps.nl.H = 0;
  ps.nl.terms = {{
      {[](double s, const Point& x) {
         cplx f = std::tanh(x[0]);
         return -3.0 * (f * f + beam_d4_tanh(f) + beam_forcing(std::tanh(x[0] + s)));
       },
       {}},
      {[](double, const Point& x) { return -6.0 * std::tanh(x[0]); }, {}},
      {[](double, const Point&) { return cplx(-3.0); }, {}},
  }};
  ps.bd.f = {zero_pay, [](const Point& x) {
               cplx t = std::tanh(x[0]);
               return 1.0 - t * t;
             }};
  ps.substitution = [](const Point& x) { return std::tanh(x[0]); };
  ps.exact = [](double t, const Point& x) { return std::tanh(x[0] + t); };
  auto table = ps.kernel.beam_table;
  ps.moment_input = [table](double t, double beta, double p) {
    MomentCheckInput in;
    in.h_terms = {{0, 22.53 / 3.0}, {1, 2.0}, {2, 1.0}};
    double e = std::exp(beta * t * (p - 1.0));
    double g = t * table->l1_norm;  // sup of the kernel mass over spans <= t
    in.r_p = std::pow(g, p) * e;
    in.alpha_p = std::pow(g, p) * std::pow(beta, 1.0 - p) * e;
    in.p = p;
    return in;
  };
  ps.declared_bounds = {
      {"f1", 1.0, [](double, const Point& x) { return mag(std::tanh(x[0])); }},
      {"f2", 1.0,
       [](double, const Point& x) {
         cplx t = std::tanh(x[0]);
         return mag(1.0 - t * t);
       }},
      {"fourth derivative of f1", 4.086,
       [](double, const Point& x) { return mag(beam_d4_tanh(std::tanh(x[0]))); }},
      {"forcing", 3.575,
       [](double s, const Point& x) { return mag(beam_forcing(std::tanh(x[0] + s))); }},
      {"empty event coefficient", 22.53,
       [](double s, const Point& x) {
         cplx f = std::tanh(x[0]);
         return mag(-3.0 * (f * f + beam_d4_tanh(f) + beam_forcing(std::tanh(x[0] + s))));
       }},
  };
  return ps;
}

ProblemSpec gross_pitaevskii(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("gross-pitaevskii dim out of range");
  ProblemSpec ps;
  ps.name = "gross-pitaevskii";
  ps.dim = dim;
  ps.kernel = KernelFamily::schrodinger(dim);
  ps.law.beta = 1.0;
  ps.law.p_levels = {1.0};
  ps.law.conjugate = {0, 1};
  // i u_t + (1/2) Lap u + |u|^2 u = 0 as the system (u, conj u):
  // u branches into (u, u, conj u) with weight +i, conj u into (conj u,
  // conj u, u) with weight -i.
  ps.law.offspring = {
      {{1.0, {3}, {0, 0, 1}}},
      {{1.0, {3}, {1, 1, 0}}},
  };
  ps.nl.H = 0;
  ps.nl.terms = {
      {{[](double, const Point&) { return kI; }, {}}},
      {{[](double, const Point&) { return -kI; }, {}}},
  };
  double a = std::sqrt(static_cast<double>(dim));
  ps.bd.f = {[a](const Point& x) { return a / std::cosh(x.sum()); }};
  ps.exact = [dim, a](double t, const Point& x) {
    return std::exp(kI * (0.5 * dim * t)) * a / std::cosh(x.sum());
  };
  ps.moment_input = [dim](double t, double beta, double p) {
    MomentCheckInput in;
    in.h_terms = {{3, 1.0}};
    double e = std::exp(beta * t * (p - 1.0));
    in.r_p = std::pow(static_cast<double>(dim), 0.5 * p) * e;
    in.alpha_p = std::pow(beta, 1.0 - p) * e;
    in.p = p;
    return in;
  };
  ps.declared_bounds = {
      {"f1", a, [a](double, const Point& x) { return mag(a / std::cosh(x.sum())); }},
  };
  return ps;
}

namespace {

ProblemSpec linear_base(const std::string& name, int dim, KernelFamily kernel) {
  ProblemSpec ps;
  ps.name = name;
  ps.dim = dim;
  ps.kernel = kernel;
  ps.law.beta = 1.0;
  ps.law.offspring = {{{1.0, {0}, {}}}};
  ps.nl.H = 0;
  ps.nl.terms = {{{zero_coef, {}}}};
  ps.linear = true;
  ps.lin.kernel = ps.kernel;
  return ps;
}

}  // namespace

ProblemSpec linear_heat(int dim) {
  ProblemSpec ps = linear_base("linear-heat", dim, KernelFamily::heat(dim));
  ps.law.p_levels = {1.0};
  ps.bd.f = {[](const Point&) { return cplx(1.0); }};
  ps.lin.p_levels = ps.law.p_levels;
  ps.lin.f = ps.bd.f;
  ps.exact = [](double, const Point&) { return cplx(1.0); };
  return ps;
}

ProblemSpec linear_wave() {
  ProblemSpec ps = linear_base("linear-wave", 1, KernelFamily::wave(1));
  ps.law.p_levels = {0.0, 1.0};
  ps.bd.f = {zero_pay, [](const Point& x) { return std::sin(x[0]); }};
  ps.lin.p_levels = ps.law.p_levels;
  ps.lin.f = ps.bd.f;
  ps.exact = [](double t, const Point& x) { return std::sin(x[0]) * std::sin(cplx(t)); };
  return ps;
}

ProblemSpec linear_schrodinger(int dim) {
  ProblemSpec ps = linear_base("linear-schrodinger", dim, KernelFamily::schrodinger(dim));
  ps.law.p_levels = {1.0};
  auto gauss = [](const Point& x) {
    cplx q = 0.0;
    for (int i = 0; i < x.d; ++i) q += x[i] * x[i];
    return std::exp(-0.5 * q);
  };
  ps.bd.f = {gauss};
  ps.lin.p_levels = ps.law.p_levels;
  ps.lin.f = ps.bd.f;
  ps.exact = [dim](double t, const Point& x) {
    cplx A(1.0, t);
    cplx q = 0.0;
    for (int i = 0; i < x.d; ++i) q += x[i] * x[i];
    return std::pow(A, cplx(-0.5 * dim)) * std::exp(-0.5 * q / A);
  };
  return ps;
}

ProblemSpec make_problem(const std::string& name, int dim) {
  if (name == "klein-gordon") return klein_gordon(dim);
  if (name == "yang-mills") {
    if (dim != 1) throw std::invalid_argument("yang-mills is one-dimensional");
    return yang_mills_toy();
  }
  if (name == "beam") {
    if (dim != 1) throw std::invalid_argument("beam is one-dimensional");
    return nonlinear_beam();
  }
  if (name == "gross-pitaevskii") return gross_pitaevskii(dim);
  if (name == "linear-heat") {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dim out of range");
    return linear_heat(dim);
  }
  if (name == "linear-wave") {
    if (dim != 1) throw std::invalid_argument("linear-wave is one-dimensional");
    return linear_wave();
  }
  if (name == "linear-schrodinger") {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dim out of range");
    return linear_schrodinger(dim);
  }
  throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> problem_names() {
  return {"klein-gordon", "yang-mills",  "beam",
          "gross-pitaevskii", "linear-heat", "linear-wave", "linear-schrodinger"};
}

}  // namespace bmc
