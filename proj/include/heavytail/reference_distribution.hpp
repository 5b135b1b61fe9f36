#pragma once

#include <string>

#include "heavytail/tail_function.hpp"

namespace heavytail {

enum class DistributionKind { Exponential, Weibull, Pareto };

// The simulation-side counterpart of a tail function: a distribution whose
// survival function equals exp(-I(t)) exactly on t >= support floor, so the
// matched tail function captures it both pointwise and in the limit.
//
//   Exponential(k):     P(X > t) = exp(-k t),            t >= 0
//   Weibull(alpha, c):  P(X > t) = exp(-c t^(1/alpha)),  t >= 0
//   Pareto(gamma):      P(X > t) = t^(-gamma),           t >= 1
//
// Distributions are kept uncentred; downstream code centers with mean().
// All moments are closed form except the one-sided second moment, which is
// evaluated once by quadrature and cached at construction.
class ReferenceDistribution {
 public:
  static ReferenceDistribution exponential(double rate);
  static ReferenceDistribution weibull(double alpha, double c_alpha);
  static ReferenceDistribution pareto(double gamma);  // floor fixed at 1

  DistributionKind kind() const { return kind_; }
  std::string name() const;

  double mean() const { return mean_; }
  double variance() const { return variance_; }
  // E[(X - EX)^2 ; X <= EX], finite for every supported family.
  double neg_second_moment() const { return neg_second_moment_; }
  double support_floor() const { return floor_; }

  double survival(double t) const;  // 1 below the support floor
  double density(double t) const;   // 0 outside the support

  // -log P(X > t); the tightest capture of the right tail.
  // Throws DomainError below the support floor.
  double basic_rate(double t) const;

  // Inverse survival: the x with P(X > x) = w, for w in (0, 1].
  // Feeding a fresh uniform here (rather than 1 - u) keeps full double
  // resolution deep in the right tail.
  double quantile_from_survival(double w) const;

  TailFunction matched_tail() const;

  // Family parameters (meaningful subset depends on kind()).
  double rate() const { return rate_; }
  double alpha() const { return alpha_; }
  double c_alpha() const { return c_alpha_; }
  double gamma() const { return gamma_; }

 private:
  ReferenceDistribution() = default;
  void finalize_moments();

  DistributionKind kind_ = DistributionKind::Exponential;
  double rate_ = 0.0;
  double alpha_ = 0.0;
  double c_alpha_ = 0.0;
  double gamma_ = 0.0;
  double floor_ = 0.0;
  double mean_ = 0.0;
  double variance_ = 0.0;
  double neg_second_moment_ = 0.0;
};

}  // namespace heavytail
