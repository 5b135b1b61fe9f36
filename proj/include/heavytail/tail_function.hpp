#pragma once

#include <string>
#include <utility>
#include <vector>

namespace heavytail {

enum class TailFamily { SubExponential, SubWeibull, Polynomial, Tabulated };

enum class GrowthClass { LinearOrder, SubLinear };

// A nondecreasing rate function I(t) with P(X > t) <= exp(-I(t)) on its
// domain.  Families:
//   SubExponential(k):        I(t) = k * t                  (t >= 0)
//   SubWeibull(alpha, c):     I(t) = c * t^(1/alpha)        (t >= 0)
//   Polynomial(gamma):        I(t) = gamma * log(t)         (t >= 1)
//   Tabulated(grid):          piecewise-linear in the (t, I) samples
class TailFunction {
 public:
  static TailFunction sub_exponential(double rate);
  static TailFunction sub_weibull(double alpha, double c_alpha);
  static TailFunction polynomial(double gamma);
  static TailFunction tabulated(std::vector<std::pair<double, double>> grid);

  // Loads a tabulated tail from a two-column CSV with header "t,I".
  // Parse errors carry the offending line number.
  static TailFunction from_csv(const std::string& path);

  double operator()(double t) const { return eval(t); }
  double eval(double t) const;

  GrowthClass growth() const;

  TailFamily family() const { return family_; }
  double domain_floor() const { return domain_floor_; }

  // Family parameters; only the ones matching family() are meaningful.
  double rate() const { return rate_; }
  double alpha() const { return alpha_; }
  double c_alpha() const { return c_alpha_; }
  double gamma() const { return gamma_; }
  const std::vector<std::pair<double, double>>& grid() const { return grid_; }

  std::string family_name() const;

  // Human-readable description of how growth() was decided; interesting
  // for tabulated data where the classification is a heuristic.
  std::string growth_heuristic_note() const;

 private:
  TailFunction() = default;

  TailFamily family_ = TailFamily::SubExponential;
  double domain_floor_ = 0.0;
  double rate_ = 0.0;
  double alpha_ = 0.0;
  double c_alpha_ = 0.0;
  double gamma_ = 0.0;
  std::vector<std::pair<double, double>> grid_;
};

}  // namespace heavytail
