#pragma once

#include <cstdint>
#include <functional>
#include <limits>

namespace heavytail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

struct RootResult {
  double root = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod integration of f over (lo, hi).  hi may be +inf,
// in which case the tail is folded onto [0, 1) with u = t / (1 + t).
// Throws NonConvergenceError if the error estimate still exceeds tol after
// max_evaluations, DivergenceError if f produces a non-finite value.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol = 1e-9,
                           std::uint64_t max_evaluations = 1'000'000);

// Bracketed root finding: bisection with a safeguarded secant step.  The
// returned root never leaves [lo, hi].  Throws BracketError when
// g(lo) * g(hi) > 0 and NonConvergenceError after max_iterations.
// Convergence: bracket width <= max(tol, a few ulp of the endpoints).
RootResult find_root(const std::function<double(double)>& g, double lo,
                     double hi, double tol = 1e-12, int max_iterations = 200);

}  // namespace heavytail
