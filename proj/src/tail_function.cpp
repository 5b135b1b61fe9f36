#include "heavytail/tail_function.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "heavytail/errors.hpp"

namespace heavytail {

TailFunction TailFunction::sub_exponential(double rate) {
  if (!(rate > 0.0)) throw DomainError("sub_exponential: rate must be > 0");
  TailFunction f;
  f.family_ = TailFamily::SubExponential;
  f.rate_ = rate;
  return f;
}

TailFunction TailFunction::sub_weibull(double alpha, double c_alpha) {
  if (!(alpha >= 1.0)) throw DomainError("sub_weibull: alpha must be >= 1");
  if (!(c_alpha > 0.0)) throw DomainError("sub_weibull: c_alpha must be > 0");
  TailFunction f;
  f.family_ = TailFamily::SubWeibull;
  f.alpha_ = alpha;
  f.c_alpha_ = c_alpha;
  return f;
}

TailFunction TailFunction::polynomial(double gamma) {
  if (!(gamma > 2.0)) throw DomainError("polynomial: gamma must be > 2");
  TailFunction f;
  f.family_ = TailFamily::Polynomial;
  f.gamma_ = gamma;
  f.domain_floor_ = 1.0;  // gamma*log(t) is nonnegative from t = 1 on
  return f;
}

TailFunction TailFunction::tabulated(
    std::vector<std::pair<double, double>> grid) {
  if (grid.size() < 2) {
    throw DomainError("tabulated: need at least two grid points");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i].first) || !std::isfinite(grid[i].second)) {
      throw DomainError("tabulated: non-finite grid entry");
    }
    if (grid[i].second < 0.0) {
      throw DomainError("tabulated: I values must be nonnegative");
    }
    if (i > 0) {
      if (!(grid[i].first > grid[i - 1].first)) {
        throw DomainError("tabulated: t values must be strictly increasing");
      }
      if (grid[i].second < grid[i - 1].second) {
        throw DomainError("tabulated: I values must be nondecreasing");
      }
    }
  }
  TailFunction f;
  f.family_ = TailFamily::Tabulated;
  f.domain_floor_ = grid.front().first;
  f.grid_ = std::move(grid);
  return f;
}

TailFunction TailFunction::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open tail CSV: " + path);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::pair<double, double>> grid;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "t,I") {
        throw DomainError(path + ":1: expected header \"t,I\"");
      }
      continue;
    }
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw DomainError(path + ":" + std::to_string(line_no) +
                        ": expected two comma-separated columns");
    }
    try {
      std::size_t used = 0;
      const double t = std::stod(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("trailing junk");
      const std::string rest = line.substr(comma + 1);
      const double v = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing junk");
      grid.emplace_back(t, v);
    } catch (const std::logic_error&) {
      throw DomainError(path + ":" + std::to_string(line_no) +
                        ": cannot parse numeric value");
    }
  }
  try {
    return tabulated(std::move(grid));
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

double TailFunction::eval(double t) const {
  if (std::isnan(t) || t < domain_floor_) {
    throw DomainError("eval: t below the tail function's domain floor");
  }
  switch (family_) {
    case TailFamily::SubExponential:
      return rate_ * t;
    case TailFamily::SubWeibull:
      return c_alpha_ * std::pow(t, 1.0 / alpha_);
    case TailFamily::Polynomial:
      return gamma_ * std::log(t);
    case TailFamily::Tabulated: {
      if (t > grid_.back().first) {
        throw DomainError("eval: t beyond the tabulated range");
      }
      auto it = std::lower_bound(
          grid_.begin(), grid_.end(), t,
          [](const std::pair<double, double>& p, double x) {
            return p.first < x;
          });
      if (it->first == t) return it->second;
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double w = (t - lo.first) / (hi.first - lo.first);
      return lo.second + w * (hi.second - lo.second);
    }
  }
  throw DomainError("eval: unknown family");
}

GrowthClass TailFunction::growth() const {
  switch (family_) {
    case TailFamily::SubExponential:
      return GrowthClass::LinearOrder;
    case TailFamily::SubWeibull:
      return alpha_ > 1.0 ? GrowthClass::SubLinear : GrowthClass::LinearOrder;
    case TailFamily::Polynomial:
      return GrowthClass::SubLinear;
    case TailFamily::Tabulated: {
      // Heuristic: compare I(t)/t at the last two grid points; a relative
      // drop of more than 1% counts as sublinear growth.
      const auto& a = grid_[grid_.size() - 2];
      const auto& b = grid_.back();
      if (a.first <= 0.0) return GrowthClass::LinearOrder;
      const double ra = a.second / a.first;
      const double rb = b.second / b.first;
      if (ra > 0.0 && rb < 0.99 * ra) return GrowthClass::SubLinear;
      return GrowthClass::LinearOrder;
    }
  }
  return GrowthClass::LinearOrder;
}

std::string TailFunction::family_name() const {
  switch (family_) {
    case TailFamily::SubExponential:
      return "sub_exponential";
    case TailFamily::SubWeibull:
      return "sub_weibull";
    case TailFamily::Polynomial:
      return "polynomial";
    case TailFamily::Tabulated:
      return "tabulated";
  }
  return "unknown";
}

std::string TailFunction::growth_heuristic_note() const {
  if (family_ != TailFamily::Tabulated) {
    return "growth decided by closed-form family";
  }
  std::ostringstream os;
  os << "growth decided heuristically: I(t)/t compared at the last two "
        "grid points, sublinear iff the ratio drops by more than 1%";
  return os.str();
}

}  // namespace heavytail
