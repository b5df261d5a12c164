#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "estimator.hpp"
#include "oracles.hpp"
#include "problems.hpp"

using namespace bmc;

namespace {

Point pt1(double x) { return Point::fill(1, x); }

cplx exact_at(const ProblemSpec& ps, double t, double x_diag) {
  return ps.exact(t, Point::fill(ps.dim, x_diag));
}

}  // namespace

TEST_CASE("registry lists every family and validates dimensions") {
  auto names = problem_names();
  REQUIRE(names.size() == 7);
  for (const auto& n : names) {
    int dim = (n == "klein-gordon" || n == "gross-pitaevskii" ||
               n == "linear-heat" || n == "linear-schrodinger")
                  ? 2
                  : 1;
    ProblemSpec ps = make_problem(n, dim);
    CHECK(ps.name == n);
    CHECK(ps.dim == dim);
  }
  CHECK_THROWS_AS(make_problem("unknown", 1), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("klein-gordon", 4), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("yang-mills", 2), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("beam", 3), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("linear-wave", 2), std::invalid_argument);
}

TEST_CASE("closed-form solutions hit frozen spot values") {
  ProblemSpec kg = make_problem("klein-gordon", 1);
  CHECK(exact_at(kg, 1.0, 0.0).real() == doctest::Approx(-12.0 / 13.0).epsilon(1e-15));

  ProblemSpec ym = make_problem("yang-mills", 1);
  CHECK(ym.exact(1.0, pt1(4.0)).real() == doctest::Approx(0.5).epsilon(1e-15));

  ProblemSpec beam = make_problem("beam", 1);
  CHECK(beam.exact(0.5, pt1(0.0)).real() ==
        doctest::Approx(std::tanh(0.5)).epsilon(1e-15));

  ProblemSpec gp = make_problem("gross-pitaevskii", 1);
  cplx g = gp.exact(0.1, pt1(0.0));
  CHECK(g.real() == doctest::Approx(std::cos(0.05)).epsilon(1e-15));
  CHECK(g.imag() == doctest::Approx(std::sin(0.05)).epsilon(1e-15));
}

TEST_CASE("initial data lines up with the registered payoffs") {
  // shifted families: exact(0) equals the substitution, velocity equals f2
  for (const char* name : {"klein-gordon", "yang-mills", "beam"}) {
    int dim = std::string(name) == "klein-gordon" ? 2 : 1;
    ProblemSpec ps = make_problem(name, dim);
    double xa = std::string(name) == "yang-mills" ? 3.0 : 0.0;
    for (double dx : {0.0, 0.4, 0.9}) {
      Point x = Point::fill(dim, xa + dx);
      CHECK(std::abs(ps.exact(0.0, x) - ps.substitution(x)) < 1e-14);
      cplx vel = oracle::fd1(
          [&](double tt) { return ps.exact(tt, x); }, 0.0, 1e-3);
      CHECK(std::abs(vel - ps.bd.f[1](x)) < 1e-9);
    }
  }

  ProblemSpec gp = make_problem("gross-pitaevskii", 3);
  ProblemSpec ls = make_problem("linear-schrodinger", 2);
  ProblemSpec lw = make_problem("linear-wave", 1);
  for (double dx : {-0.3, 0.2, 1.1}) {
    CHECK(std::abs(gp.exact(0.0, Point::fill(3, dx)) -
                   gp.bd.f[0](Point::fill(3, dx))) < 1e-15);
    CHECK(std::abs(ls.exact(0.0, Point::fill(2, dx)) -
                   ls.bd.f[0](Point::fill(2, dx))) < 1e-15);
    CHECK(std::abs(lw.exact(0.0, pt1(dx))) < 1e-15);
    cplx vel = oracle::fd1([&](double tt) { return lw.exact(tt, pt1(dx)); },
                           0.0, 1e-3);
    CHECK(std::abs(vel - lw.bd.f[1](pt1(dx))) < 1e-9);
  }
}

TEST_CASE("klein-gordon solution satisfies its field equation") {
  for (int dim : {1, 2, 3}) {
    ProblemSpec kg = make_problem("klein-gordon", dim);
    for (double t : {0.3, 1.0}) {
      for (double xd : {-0.4, 0.0, 0.7}) {
        Point x = Point::fill(dim, xd);
        const double h = 1e-2;
        cplx utt = oracle::fd2([&](double s) { return kg.exact(s, x); }, t, h);
        cplx lap = 0.0;
        for (int k = 0; k < dim; ++k) {
          lap += oracle::fd2(
              [&](double y) {
                Point q = x;
                q.v[k] = y;
                return kg.exact(t, q);
              },
              xd, h);
        }
        cplx u = kg.exact(t, x);
        cplx resid = utt - lap + u * u * u + u * u;
        CHECK(std::abs(resid) < 1e-6);
      }
    }
  }
}

TEST_CASE("klein-gordon branching coefficients close the shifted equation") {
  for (int dim : {1, 3}) {
    ProblemSpec kg = make_problem("klein-gordon", dim);
    for (double t : {0.4, 0.9}) {
      for (double xd : {-0.3, 0.2}) {
        Point x = Point::fill(dim, xd);
        const double h = 1e-2;
        auto U = [&](double s, const Point& q) {
          return kg.exact(s, q) - kg.substitution(q);
        };
        cplx utt = oracle::fd2([&](double s) { return U(s, x); }, t, h);
        cplx lap = 0.0;
        for (int k = 0; k < dim; ++k)
          lap += oracle::fd2(
              [&](double y) {
                Point q = x;
                q.v[k] = y;
                return U(t, q);
              },
              xd, h);
        cplx u = U(t, x);
        cplx rhs = 0.0;
        cplx upow(1.0);
        for (int j = 0; j < 4; ++j) {
          rhs += kg.law.offspring[0][j].q * kg.nl.terms[0][j].c0(t, x) * upow;
          upow *= u;
        }
        CHECK(std::abs(utt - lap - rhs) < 1e-6);
      }
    }
  }
}

TEST_CASE("yang-mills coefficients close the shifted equation with gradient") {
  ProblemSpec ym = make_problem("yang-mills", 1);
  auto U = [&](double s, double y) {
    return ym.exact(s, pt1(y)) - ym.substitution(pt1(y));
  };
  for (double t : {0.4, 1.0}) {
    for (double xv : {3.2, 4.0, 4.8}) {
      const double h = 1e-2;
      cplx utt = oracle::fd2([&](double s) { return U(s, xv); }, t, h);
      cplx uxx = oracle::fd2([&](double y) { return U(t, y); }, xv, h);
      cplx u = U(t, xv);
      cplx ux = oracle::fd1([&](double y) { return U(t, y); }, xv, h);
      Point x = pt1(xv);
      auto c = [&](int j) { return ym.nl.terms[0][j].c0(t, x); };
      // events: {}, {u}, {ux}, {u^2}, {u ux}, {u^3}, each with q = 1/6
      cplx rhs = (c(0) + c(1) * u + c(2) * ux + c(3) * u * u +
                  c(4) * u * ux + c(5) * u * u * u) /
                 6.0;
      CHECK(std::abs(utt - uxx - rhs) < 1e-6);
    }
  }
}

TEST_CASE("beam forcing and coefficients close the shifted equation exactly") {
  // everything is polynomial in T = tanh, so check coefficients symbolically
  oracle::TPoly T = oracle::TPoly::var();
  oracle::TPoly d4 = T.deriv().deriv().deriv().deriv();
  oracle::TPoly d4_claim{{0.0, 16.0, 0.0, -40.0, 0.0, 24.0}};  // 8T(1-T^2)(2-3T^2)
  REQUIRE(d4.c.size() <= 6);
  for (size_t k = 0; k < d4.c.size(); ++k)
    CHECK(d4.c[k] == doctest::Approx(d4_claim.c[k]).epsilon(1e-14));

  // u = tanh(x + t): u_tt + u_xxxx + u^2 = -h with h as registered
  oracle::TPoly utt = T.deriv().deriv();
  oracle::TPoly lhs = tpoly_add(tpoly_add(utt, d4), tpoly_mul(T, T));
  oracle::TPoly h_claim{{0.0, -14.0, -1.0, 38.0, 0.0, -24.0}};
  oracle::TPoly zero = tpoly_add(lhs, h_claim);
  for (double v : zero.c) CHECK(std::fabs(v) < 1e-13);

  // shifted equation with the registered q_j and c_j at sampled points
  ProblemSpec beam = make_problem("beam", 1);
  auto d4v = [&](double th) { return d4.eval(std::tanh(th)); };
  auto uttv = [&](double th) { return utt.eval(std::tanh(th)); };
  for (double t : {0.2, 0.5}) {
    for (double xv : {-0.4, 0.0, 0.6}) {
      double Uval = std::tanh(xv + t) - std::tanh(xv);
      double lhsv = uttv(xv + t) + d4v(xv + t) - d4v(xv);
      Point x = pt1(xv);
      cplx rhsv = (beam.nl.terms[0][0].c0(t, x) +
                   beam.nl.terms[0][1].c0(t, x) * Uval +
                   beam.nl.terms[0][2].c0(t, x) * Uval * Uval) /
                  3.0;
      CHECK(std::fabs(lhsv - rhsv.real()) < 1e-12);
      CHECK(rhsv.imag() == 0.0);
    }
  }
}

TEST_CASE("gross-pitaevskii solution satisfies the focusing equation") {
  for (int dim : {1, 2, 3}) {
    ProblemSpec gp = make_problem("gross-pitaevskii", dim);
    for (double t : {0.05, 0.1}) {
      for (double xd : {-0.2, 0.0, 0.3}) {
        Point x = Point::fill(dim, xd);
        const double h = 1e-3;
        cplx ut = oracle::fd1([&](double s) { return gp.exact(s, x); }, t, h);
        cplx lap = 0.0;
        for (int k = 0; k < dim; ++k)
          lap += oracle::fd2(
              [&](double y) {
                Point q = x;
                q.v[k] = y;
                return gp.exact(t, q);
              },
              xd, 1e-2);
        cplx u = gp.exact(t, x);
        cplx resid = cplx(0.0, 1.0) * ut + 0.5 * lap + std::norm(u) * u;
        CHECK(std::abs(resid) < 1e-6);
      }
    }
    // constant modulus in time
    CHECK(std::abs(gp.exact(0.7, Point::fill(dim, 0.4))) ==
          doctest::Approx(std::abs(gp.exact(0.0, Point::fill(dim, 0.4)))).epsilon(1e-14));
  }
}

TEST_CASE("declared sup-norm bounds hold on a dense sample") {
  std::vector<ProblemSpec> specs;
  specs.push_back(make_problem("klein-gordon", 1));
  specs.push_back(make_problem("klein-gordon", 2));
  specs.push_back(make_problem("klein-gordon", 3));
  specs.push_back(make_problem("yang-mills", 1));
  specs.push_back(make_problem("beam", 1));
  specs.push_back(make_problem("gross-pitaevskii", 3));

  for (const auto& ps : specs) {
    for (const auto& b : ps.declared_bounds) {
      double worst = 0.0;
      for (int it = 0; it <= 40; ++it) {
        double s = b.t_hi * it / 40.0;
        for (int ix = 0; ix <= 800; ++ix) {
          double xd = b.x_lo + (b.x_hi - b.x_lo) * ix / 800.0;
          worst = std::max(worst, b.magnitude(s, Point::fill(ps.dim, xd)));
        }
      }
      // random interior points (non-diagonal) for the multivariate cases
      RngStream rng(3141, 0);
      for (int it = 0; it < 4000; ++it) {
        double s = b.t_hi * rng.uniform();
        Point x;
        x.d = ps.dim;
        for (int k = 0; k < ps.dim; ++k)
          x.v[k] = b.x_lo + (b.x_hi - b.x_lo) * rng.uniform();
        worst = std::max(worst, b.magnitude(s, x));
      }
      INFO(ps.name, " / ", b.label);
      CHECK(worst <= b.bound + 1e-9);
      CHECK(worst > 0.05 * b.bound);  // the bound is not vacuous padding
    }
  }
}

TEST_CASE("moment horizons separate the safe runs from the flagged ones") {
  ProblemSpec kg3 = make_problem("klein-gordon", 3);
  CHECK(blowup_horizon(kg3.moment_input(1.0, 1.0, 2.0)) > 1.0);

  ProblemSpec kg1 = make_problem("klein-gordon", 1);
  double t1 = blowup_horizon(kg1.moment_input(1.0, 1.0, 2.0));
  CHECK(t1 > 1.0);

  ProblemSpec gp1 = make_problem("gross-pitaevskii", 1);
  CHECK(blowup_horizon(gp1.moment_input(0.1, 1.0, 2.0)) > 0.1);

  ProblemSpec gp3 = make_problem("gross-pitaevskii", 3);
  double tgp3 = blowup_horizon(gp3.moment_input(0.1, 1.0, 2.0));
  CHECK(tgp3 > 0.0);
  CHECK(tgp3 < 0.1);  // the second-moment certificate does not reach t = 0.1
  CHECK(tgp3 == doctest::Approx(0.0412).epsilon(0.02));

  ProblemSpec beam = make_problem("beam", 1);
  double tb = blowup_horizon(beam.moment_input(0.5, 1.0, 2.0));
  CHECK(tb > 0.0);
  CHECK(tb < 0.5);

  ProblemSpec ym = make_problem("yang-mills", 1);
  double ty = blowup_horizon(ym.moment_input(1.0, 1.0, 2.0));
  CHECK(ty > 0.0);
  CHECK(std::isfinite(ty));

  // linear problems carry no growth bound
  CHECK_FALSE(static_cast<bool>(make_problem("linear-heat", 1).moment_input));
}

TEST_CASE("small-sample estimates land on the closed forms") {
  struct Run {
    const char* name;
    int dim;
    double t, x0;
    long long paths;
  };
  const Run runs[] = {
      {"klein-gordon", 1, 1.0, 0.3, 40960},
      {"yang-mills", 1, 1.0, 4.0, 40960},
      {"beam", 1, 0.5, 0.2, 20480},
      {"gross-pitaevskii", 1, 0.1, 0.0, 20480},
      {"linear-schrodinger", 2, 0.5, 0.2, 20480},
      {"linear-wave", 1, 0.9, 0.6, 20480},
  };
  for (const Run& r : runs) {
    ProblemSpec ps = make_problem(r.name, r.dim);
    Point x = Point::fill(r.dim, r.x0);
    Estimate est = estimate(ps, r.t, x, r.paths, 2024, 1);
    cplx ref = ps.exact(r.t, x);
    INFO(r.name);
    CHECK(est.n_blowups == 0);
    CHECK(std::fabs(est.mean.real() - ref.real()) <
          5.0 * std::max(est.stderr_c.real(), 1e-4));
    CHECK(std::fabs(est.mean.imag() - ref.imag()) <
          5.0 * std::max(est.stderr_c.imag(), 1e-4));
  }
}
