#include "heavytail/reference_distribution.hpp"

#include <cmath>

#include "heavytail/errors.hpp"
#include "heavytail/numerics.hpp"

namespace heavytail {

ReferenceDistribution ReferenceDistribution::exponential(double rate) {
  if (!(rate > 0.0)) throw DomainError("exponential: rate must be > 0");
  ReferenceDistribution d;
  d.kind_ = DistributionKind::Exponential;
  d.rate_ = rate;
  d.floor_ = 0.0;
  d.mean_ = 1.0 / rate;
  d.variance_ = 1.0 / (rate * rate);
  d.finalize_moments();
  return d;
}

ReferenceDistribution ReferenceDistribution::weibull(double alpha,
                                                     double c_alpha) {
  if (!(alpha >= 1.0)) throw DomainError("weibull: alpha must be >= 1");
  if (!(c_alpha > 0.0)) throw DomainError("weibull: c_alpha must be > 0");
  ReferenceDistribution d;
  d.kind_ = DistributionKind::Weibull;
  d.alpha_ = alpha;
  d.c_alpha_ = c_alpha;
  d.floor_ = 0.0;
  // E X^p = Gamma(p*alpha + 1) / c^(p*alpha) from the survival integral.
  const double m1 = std::tgamma(alpha + 1.0) / std::pow(c_alpha, alpha);
  const double m2 =
      std::tgamma(2.0 * alpha + 1.0) / std::pow(c_alpha, 2.0 * alpha);
  d.mean_ = m1;
  d.variance_ = m2 - m1 * m1;
  d.finalize_moments();
  return d;
}

ReferenceDistribution ReferenceDistribution::pareto(double gamma) {
  if (!(gamma > 2.0)) {
    throw DomainError("pareto: gamma must be > 2 for a finite variance");
  }
  ReferenceDistribution d;
  d.kind_ = DistributionKind::Pareto;
  d.gamma_ = gamma;
  d.floor_ = 1.0;
  d.mean_ = gamma / (gamma - 1.0);
  d.variance_ = gamma / (gamma - 2.0) - d.mean_ * d.mean_;
  d.finalize_moments();
  return d;
}

void ReferenceDistribution::finalize_moments() {
  const double mu = mean_;
  neg_second_moment_ =
      integrate([this, mu](double x) { return (x - mu) * (x - mu) * density(x); },
                floor_, mu, 1e-12)
          .value;
}

std::string ReferenceDistribution::name() const {
  switch (kind_) {
    case DistributionKind::Exponential:
      return "exponential";
    case DistributionKind::Weibull:
      return "weibull";
    case DistributionKind::Pareto:
      return "pareto";
  }
  return "unknown";
}

double ReferenceDistribution::survival(double t) const {
  if (std::isnan(t)) throw DomainError("survival: NaN argument");
  if (t < floor_) return 1.0;
  switch (kind_) {
    case DistributionKind::Exponential:
      return std::exp(-rate_ * t);
    case DistributionKind::Weibull:
      return std::exp(-c_alpha_ * std::pow(t, 1.0 / alpha_));
    case DistributionKind::Pareto:
      return std::pow(t, -gamma_);
  }
  return 0.0;
}

double ReferenceDistribution::density(double t) const {
  if (std::isnan(t)) throw DomainError("density: NaN argument");
  if (t < floor_) return 0.0;
  switch (kind_) {
    case DistributionKind::Exponential:
      return rate_ * std::exp(-rate_ * t);
    case DistributionKind::Weibull: {
      if (t == 0.0) return alpha_ == 1.0 ? c_alpha_ : kInf;
      const double u = std::pow(t, 1.0 / alpha_);
      return c_alpha_ / alpha_ * u / t * std::exp(-c_alpha_ * u);
    }
    case DistributionKind::Pareto:
      return gamma_ * std::pow(t, -gamma_ - 1.0);
  }
  return 0.0;
}

double ReferenceDistribution::basic_rate(double t) const {
  if (std::isnan(t) || t < floor_) {
    throw DomainError("basic_rate: t below the support floor");
  }
  switch (kind_) {
    case DistributionKind::Exponential:
      return rate_ * t;
    case DistributionKind::Weibull:
      return c_alpha_ * std::pow(t, 1.0 / alpha_);
    case DistributionKind::Pareto:
      return gamma_ * std::log(t);
  }
  return 0.0;
}

double ReferenceDistribution::quantile_from_survival(double w) const {
  if (!(w > 0.0) || w > 1.0) {
    throw DomainError("quantile_from_survival: w must lie in (0, 1]");
  }
  switch (kind_) {
    case DistributionKind::Exponential:
      return -std::log(w) / rate_;
    case DistributionKind::Weibull:
      return std::pow(-std::log(w) / c_alpha_, alpha_);
    case DistributionKind::Pareto:
      return std::pow(w, -1.0 / gamma_);
  }
  return 0.0;
}

TailFunction ReferenceDistribution::matched_tail() const {
  switch (kind_) {
    case DistributionKind::Exponential:
      return TailFunction::sub_exponential(rate_);
    case DistributionKind::Weibull:
      return TailFunction::sub_weibull(alpha_, c_alpha_);
    case DistributionKind::Pareto:
      return TailFunction::polynomial(gamma_);
  }
  throw DomainError("matched_tail: unknown kind");
}

}  // namespace heavytail
