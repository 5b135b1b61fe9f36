#include "heavytail/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "heavytail/errors.hpp"

namespace heavytail {

namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1], positive abscissae.
// Even indices are the Kronrod extension points, odd ones the Gauss nodes.
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};

constexpr double kWeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};

constexpr double kWeightsG[4] = {0.129484966168870, 0.279705391489277,
                                 0.381830050505119, 0.417959183673469};

struct Segment {
  double lo, hi;
  double value;
  double error;
  bool operator<(const Segment& o) const {
    if (error != o.error) return error > o.error;  // largest error first
    return lo < o.lo;
  }
};

Segment evaluate_segment(const std::function<double(double)>& f, double lo,
                         double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double kron = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fsum;
    if (i == 7) {
      fsum = f(mid);
    } else {
      fsum = f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]);
    }
    if (!std::isfinite(fsum)) {
      throw DivergenceError("integrand produced a non-finite value");
    }
    kron += kWeightsK[i] * fsum;
    if (i % 2 == 1) gauss += kWeightsG[i / 2] * fsum;
  }
  kron *= half;
  gauss *= half;
  return Segment{lo, hi, kron, std::abs(kron - gauss)};
}

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double lo, double hi, double tol,
                                  std::uint64_t max_evaluations) {
  if (lo == hi) return QuadratureResult{0.0, 0.0, 1};
  std::multiset<Segment> segments;
  segments.insert(evaluate_segment(f, lo, hi));
  std::uint64_t evals = 15;

  double total = segments.begin()->value;
  double total_err = segments.begin()->error;
  while (evals + 30 <= max_evaluations) {
    // Stop on the requested tolerance, or once the estimate is at the
    // rounding floor of the accumulated value.
    const double floor_err =
        64.0 * std::numeric_limits<double>::epsilon() * std::abs(total);
    if (total_err <= std::max(tol, floor_err)) break;

    const Segment worst = *segments.begin();
    segments.erase(segments.begin());
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Segment is at double resolution; keep its estimate as-is.
      Segment pinned = worst;
      pinned.error = 0.0;
      segments.insert(pinned);
      continue;
    }
    const Segment left = evaluate_segment(f, worst.lo, mid);
    const Segment right = evaluate_segment(f, mid, worst.hi);
    evals += 30;
    segments.insert(left);
    segments.insert(right);

    total = 0.0;
    total_err = 0.0;
    for (const Segment& s : segments) {
      total += s.value;
      total_err += s.error;
    }
  }

  const double floor_err =
      64.0 * std::numeric_limits<double>::epsilon() * std::abs(total);
  if (total_err > std::max(tol, floor_err)) {
    throw NonConvergenceError("quadrature error estimate above tolerance "
                              "after evaluation budget");
  }
  return QuadratureResult{total, total_err, evals};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol,
                           std::uint64_t max_evaluations) {
  if (tol <= 0.0) throw DomainError("integration tolerance must be positive");
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw DomainError("bad integration range");
  }
  if (std::isinf(hi)) {
    // u = t / (1 + t) maps [lo, inf) to [0, 1); monotone, so adaptivity
    // carries over unchanged.
    auto mapped = [&f, lo](double u) {
      const double om = 1.0 - u;
      const double t = lo + u / om;
      return f(t) / (om * om);
    };
    return integrate_finite(mapped, 0.0, 1.0, tol, max_evaluations);
  }
  return integrate_finite(f, lo, hi, tol, max_evaluations);
}

RootResult find_root(const std::function<double(double)>& g, double lo,
                     double hi, double tol, int max_iterations) {
  if (!(lo <= hi)) throw DomainError("find_root: bad bracket order");
  double a = lo, b = hi;
  double fa = g(a), fb = g(b);
  if (fa == 0.0) return RootResult{a, a, a, 0, true};
  if (fb == 0.0) return RootResult{b, b, b, 0, true};
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketError("find_root: no sign change over the bracket");
  }

  auto width_ok = [tol](double x, double y) {
    const double w = y - x;
    const double scale = std::max(std::abs(x), std::abs(y));
    return w <= std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(scale, 1e-300));
  };

  int iter = 0;
  for (; iter < max_iterations; ++iter) {
    if (width_ok(a, b)) {
      const double root = std::abs(fa) <= std::abs(fb) ? a : b;
      return RootResult{root, a, b, iter, true};
    }
    // Secant proposal, safeguarded: fall back to bisection whenever the
    // proposal leaves the middle half of the bracket.
    double m = 0.5 * (a + b);
    const double denom = fb - fa;
    if (denom != 0.0) {
      const double s = b - fb * (b - a) / denom;
      const double lo_guard = a + 0.25 * (b - a);
      const double hi_guard = b - 0.25 * (b - a);
      if (s > lo_guard && s < hi_guard) m = s;
    }
    const double fm = g(m);
    if (fm == 0.0) return RootResult{m, m, m, iter + 1, true};
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  throw NonConvergenceError("find_root: iteration limit reached");
}

}  // namespace heavytail
