#include "estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "problems.hpp"

namespace bmc {
namespace {

constexpr long long kBlockPaths = 1024;

struct Accum {
  long long n = 0;
  double mr = 0.0, mi = 0.0;
  double m2r = 0.0, m2i = 0.0;
  long long blowups = 0;
  long long max_nodes = 0;

  void add(cplx v) {
    ++n;
    double dr = v.real() - mr;
    mr += dr / n;
    m2r += dr * (v.real() - mr);
    double di = v.imag() - mi;
    mi += di / n;
    m2i += di * (v.imag() - mi);
  }

  void merge(const Accum& o) {
    blowups += o.blowups;
    max_nodes = std::max(max_nodes, o.max_nodes);
    if (o.n == 0) return;
    if (n == 0) {
      n = o.n;
      mr = o.mr; mi = o.mi;
      m2r = o.m2r; m2i = o.m2i;
      return;
    }
    long long nn = n + o.n;
    double w = static_cast<double>(o.n) / nn;
    double cross = static_cast<double>(n) * w;
    double dr = o.mr - mr;
    mr += dr * w;
    m2r += o.m2r + dr * dr * cross;
    double di = o.mi - mi;
    mi += di * w;
    m2i += o.m2i + di * di * cross;
    n = nn;
  }
};

void run_block(const ProblemSpec& problem, double horizon, const Point& x,
               long long first, long long last, uint64_t seed, long long node_cap,
               BranchingTree& scratch, Accum& out) {
  for (long long path = first; path < last; ++path) {
    RngStream rng(seed, static_cast<uint64_t>(path));
    if (problem.linear) {
      out.add(evaluate_linear(problem.lin, problem.law.beta, horizon, x, rng));
      out.max_nodes = std::max(out.max_nodes, 1ll);
      continue;
    }
    grow_tree_into(scratch, problem.law, problem.kernel, horizon, x, rng, node_cap,
                   problem.root_species);
    out.max_nodes = std::max(out.max_nodes, static_cast<long long>(scratch.size()));
    if (scratch.capped) {
      ++out.blowups;
      continue;
    }
    out.add(evaluate_xi(scratch, problem.nl, problem.bd, problem.law));
  }
}

}  // namespace

Estimate estimate(const ProblemSpec& problem, double horizon, const Point& x,
                  long long n_paths, uint64_t seed, int threads, long long node_cap) {
  if (n_paths < 1) throw std::invalid_argument("n_paths must be positive");
  long long n_blocks = (n_paths + kBlockPaths - 1) / kBlockPaths;
  int n_threads = threads > 0 ? threads : 1;
  n_threads = static_cast<int>(std::min<long long>(n_threads, n_blocks));
  n_threads = std::min(n_threads, 256);

  std::vector<Accum> blocks(static_cast<size_t>(n_blocks));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(n_blocks));
  std::atomic<long long> cursor{0};

  auto worker = [&]() {
    BranchingTree scratch;
    scratch.particles.reserve(256);
    for (;;) {
      long long b = cursor.fetch_add(1);
      if (b >= n_blocks) return;
      long long first = b * kBlockPaths;
      long long last = std::min(n_paths, first + kBlockPaths);
      try {
        run_block(problem, horizon, x, first, last, seed, node_cap,
                  scratch, blocks[static_cast<size_t>(b)]);
      } catch (...) {
        errors[static_cast<size_t>(b)] = std::current_exception();
      }
    }
  };

  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Accum total;
  for (const auto& b : blocks) total.merge(b);

  Estimate est;
  est.n_paths = n_paths;
  est.n_blowups = total.blowups;
  est.max_tree_size = total.max_nodes;
  est.mean = cplx(total.mr, total.mi);
  if (total.n > 1) {
    double scale = 1.0 / (static_cast<double>(total.n - 1) * total.n);
    est.stderr_c = cplx(std::sqrt(total.m2r * scale), std::sqrt(total.m2i * scale));
  }
  if (problem.substitution) est.mean += problem.substitution(x);
  return est;
}

namespace {

double h_value(const MomentCheckInput& in, double s) {
  double h = 0.0;
  for (const auto& t : in.h_terms) h += std::pow(t.weight, in.p) * std::pow(s, t.power);
  return h;
}

double simpson(const MomentCheckInput& in, bool inverted, double a, double b,
               double fa, double fm, double fb, double whole, int depth) {
  double m = 0.5 * (a + b);
  auto f = [&](double s) {
    if (inverted) {
      // substituted tail: integrand du / (u^2 H(1/u)) on u in (0, 1/S]
      double h = 0.0;
      for (const auto& t : in.h_terms)
        h += std::pow(t.weight, in.p) * std::pow(s, -(t.power - 2));
      return 1.0 / h;
    }
    return 1.0 / h_value(in, s);
  };
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 1e-13 * (std::fabs(left + right) + 1e-300))
    return left + right + (left + right - whole) / 15.0;
  return simpson(in, inverted, a, m, fa, flm, fm, left, depth - 1) +
         simpson(in, inverted, m, b, fm, frm, fb, right, depth - 1);
}

double integrate(const MomentCheckInput& in, bool inverted, double a, double b) {
  if (b <= a) return 0.0;
  auto f = [&](double s) {
    if (inverted) {
      double h = 0.0;
      for (const auto& t : in.h_terms)
        h += std::pow(t.weight, in.p) * std::pow(s, -(t.power - 2));
      return 1.0 / h;
    }
    return 1.0 / h_value(in, s);
  };
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(in, inverted, a, b, fa, fm, fb, whole, 48);
}

}  // namespace

double blowup_horizon(const MomentCheckInput& in) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  int max_deg = 0;
  int min_deg = 1 << 20;
  bool any = false;
  for (const auto& t : in.h_terms) {
    if (t.weight <= 0.0) continue;
    any = true;
    max_deg = std::max(max_deg, t.power);
    min_deg = std::min(min_deg, t.power);
  }
  if (!any) return inf;
  double r = std::max(in.r_p, 0.0);
  if (r >= in.radius) return 0.0;
  if (r == 0.0 && min_deg >= 1) return inf;  // 1/H nonintegrable at 0
  if (std::isfinite(in.radius)) return integrate(in, false, r, in.radius) / in.alpha_p;
  if (max_deg <= 1) return inf;  // integral of 1/H diverges
  // split at S: direct quadrature on [r, S], u = 1/s on the tail
  double S = std::max(r, 1.0) * 8.0;
  double body = integrate(in, false, r, S);
  double tail = integrate(in, true, 0.0, 1.0 / S);
  return (body + tail) / in.alpha_p;
}

}  // namespace bmc
